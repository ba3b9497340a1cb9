#include "bathlab/thermo.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bathlab/numerics.hpp"
#include "bathlab/specfun.hpp"
#include "support/oracles.hpp"

namespace bathlab::thermo {
namespace {

constexpr double kPi = std::numbers::pi;
using bath::SpectralDensity;
using modeshift::characteristic_frequencies;

// Reference values below were evaluated independently at 30 digits
// (mpmath polygamma/loggamma applied to the same closed forms).

TEST(OscillatorHeat, Examples) {
  EXPECT_NEAR(c_ho(1e-9, 1.0), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(c_ho(0.0, 1.0), 1.0);
  EXPECT_NEAR(c_ho(1.0, 1.0), 0.92067359420779232, 1e-15);
  EXPECT_NEAR(c_ho(3.0, 1.0), std::pow(1.5 / std::sinh(1.5), 2), 1e-15);
  EXPECT_EQ(c_ho(1.0, 1e-4), 0.0);
  EXPECT_EQ(c_ho(1.0, 0.0), 0.0);
  EXPECT_EQ(c_ho(800.0, 1.0), 0.0);
}

TEST(SpecificHeatClosed, ReferenceValues) {
  const auto low = characteristic_frequencies(1.0, 0.1);
  const auto mid = characteristic_frequencies(1.0, 1.0);
  const auto high = characteristic_frequencies(1.0, 5.0);
  EXPECT_NEAR(specific_heat_closed(low, 0.01), -0.087322329528350982, 1e-12);
  EXPECT_NEAR(specific_heat_closed(low, 1.0), 0.49198876846483238, 1e-12);
  EXPECT_NEAR(specific_heat_closed(low, 1e-3), -0.0094162929212819013, 1e-12);
  EXPECT_NEAR(specific_heat_closed(mid, 1.0), 0.44165441016868100, 1e-12);
  EXPECT_NEAR(specific_heat_closed(high, 1.0), 0.38220129070019835, 1e-12);
  EXPECT_NEAR(specific_heat_closed(high, 1e-3), 0.00083775479981437811, 1e-12);
}

TEST(SpecificHeatClosed, ClassicalAndQuantumLimits) {
  for (const double wd : {0.1, 1.0, 5.0}) {
    const auto f = characteristic_frequencies(1.0, wd);
    EXPECT_NEAR(specific_heat_closed(f, 1e6), 0.5, 1e-6) << wd;
    EXPECT_NEAR(specific_heat_closed(f, 1e-7), 0.0, 1e-5) << wd;
    EXPECT_NEAR(specific_heat_closed(f, 1e3), 0.5, 1e-3) << wd;
    EXPECT_LE(std::abs(specific_heat_closed(f, 1e-4)), 0.01) << wd;
  }
}

TEST(SpecificHeatClosed, RejectsNonPositiveTemperature) {
  const auto f = characteristic_frequencies(1.0, 1.0);
  EXPECT_THROW(specific_heat_closed(f, 0.0), std::invalid_argument);
  EXPECT_THROW(specific_heat_closed(f, -1.0), std::invalid_argument);
}

TEST(SpecificHeatClosed, ImaginaryPartsCancel) {
  const auto f = characteristic_frequencies(1.0, 0.1);
  for (const double tau : {0.01, 1.0, 100.0}) {
    const std::complex<double> v1 = f.omega1 / (2.0 * kPi * tau);
    const std::complex<double> v2 = f.omega2 / (2.0 * kPi * tau);
    const auto sum = v1 * v1 * specfun::trigamma(v1) + v2 * v2 * specfun::trigamma(v2);
    EXPECT_LE(std::abs(sum.imag()), 1e-12) << tau;
  }
}

TEST(SpecificHeatQuadrature, Examples) {
  EXPECT_NEAR(specific_heat_quadrature(SpectralDensity::drude(1.0, 5.0), 100.0), 0.5,
              0.01);
  const double low = specific_heat_quadrature(SpectralDensity::drude(1.0, 0.1), 1e-3);
  EXPECT_NEAR(low, -3.0 * kPi * 1e-3, 0.02 * 3.0 * kPi * 1e-3);
  EXPECT_NEAR(low, -0.0094162929212819013, 1e-9);
  const auto sd = SpectralDensity::drude(1.0, 5.0);
  EXPECT_NEAR(specific_heat_quadrature(sd, 1.0),
              specific_heat_closed(characteristic_frequencies(sd), 1.0), 1e-6);
}

TEST(SpecificHeatQuadrature, AgreesWithClosedFormOnCoarseGrid) {
  for (const double wd : {0.1, 1.0, 5.0}) {
    const auto sd = SpectralDensity::drude(1.0, wd);
    const auto f = characteristic_frequencies(sd);
    for (const double tau : testing::log_grid(1e-2, 1e2, 9)) {
      EXPECT_NEAR(specific_heat_quadrature(sd, tau), specific_heat_closed(f, tau), 1e-6)
          << "wd = " << wd << " tau = " << tau;
    }
  }
}

TEST(SpecificHeatQuadrature, StrictOhmicEquipartition) {
  EXPECT_NEAR(specific_heat_quadrature(SpectralDensity::strict_ohmic(1.0), 1e3), 0.5,
              1e-3);
}

TEST(LowTemperature, AsymptoteExamples) {
  EXPECT_NEAR(low_t_asymptote(SpectralDensity::drude(1.0, 5.0)).slope,
              kPi / 3.0 * 0.8, 1e-8);
  EXPECT_NEAR(low_t_asymptote(SpectralDensity::drude(1.0, 5.0)).slope, 0.8377580410,
              1e-9);
  EXPECT_NEAR(low_t_asymptote(SpectralDensity::drude(1.0, 0.1)).slope, -3.0 * kPi,
              1e-7);
  EXPECT_NEAR(low_t_asymptote(SpectralDensity::drude(1.0, 1.0)).slope, 0.0, 1e-8);
}

TEST(LowTemperature, LinearLawAtMilliKelvinScale) {
  for (const double wd : {0.1, 5.0}) {
    const auto sd = SpectralDensity::drude(1.0, wd);
    const double slope = low_t_asymptote(sd).slope;
    const double c = specific_heat_closed(characteristic_frequencies(sd), 1e-3);
    EXPECT_LE(std::abs(c / 1e-3 - slope), 0.005 * std::abs(slope)) << wd;
  }
}

TEST(LowTemperature, AnomalySign) {
  const auto low = characteristic_frequencies(1.0, 0.1);
  const auto high = characteristic_frequencies(1.0, 5.0);
  for (const double tau : testing::log_grid(1e-6, 0.02, 60)) {
    EXPECT_LT(specific_heat_closed(low, tau), 0.0) << tau;
    EXPECT_GT(specific_heat_closed(high, tau), 0.0) << tau;
  }
}

TEST(InternalEnergy, ReferenceValues) {
  const auto high = characteristic_frequencies(1.0, 5.0);
  const auto low = characteristic_frequencies(1.0, 0.1);
  EXPECT_NEAR(internal_energy(high, 0.1), 0.47323498488608377, 1e-12);
  EXPECT_NEAR(internal_energy(high, 1.0), 0.72187080341585822, 1e-12);
  EXPECT_NEAR(internal_energy(high, 10.0), 5.0383202203888381, 1e-11);
  EXPECT_NEAR(internal_energy(low, 0.1), 0.11297845897314273, 1e-12);
  EXPECT_NEAR(internal_energy(low, 1.0), 0.50817733572799084, 1e-12);
}

TEST(InternalEnergy, ApproachesZeroPointEnergy) {
  const auto f = characteristic_frequencies(1.0, 5.0);
  EXPECT_NEAR(internal_energy(f, 1e-3), zero_point_energy(f), 1e-3);
  EXPECT_NEAR(internal_energy(f, 1e-3), 0.46912114102325789, 1e-12);
}

TEST(InternalEnergy, TemperatureDerivativeIsSpecificHeat) {
  for (const double wd : {0.1, 1.0, 5.0}) {
    const auto f = characteristic_frequencies(1.0, wd);
    for (const double tau : {0.05, 0.1, 1.0, 10.0}) {
      const double slope = numerics::derivative(
          [&f](double t) { return internal_energy(f, t); }, tau, 1e-3 * tau);
      EXPECT_NEAR(slope, specific_heat_closed(f, tau), 1e-6)
          << "wd = " << wd << " tau = " << tau;
    }
  }
}

TEST(InternalEnergy, ClassicalSlope) {
  const auto f = characteristic_frequencies(1.0, 5.0);
  const double slope = numerics::derivative(
      [&f](double t) { return internal_energy(f, t); }, 100.0, 0.1);
  EXPECT_NEAR(slope, 0.5, 1e-2);
}

TEST(ZeroPointEnergy, Examples) {
  EXPECT_NEAR(zero_point_energy(characteristic_frequencies(1.0, 5.0)),
              0.46912072214504770, 1e-12);
  EXPECT_LT(zero_point_energy(characteristic_frequencies(1e-4, 5.0)), 1e-3);
  EXPECT_NEAR(zero_point_energy(characteristic_frequencies(1.0, 0.1)),
              0.12202004035787525, 1e-12);
}

TEST(ZeroPointEnergy, ConjugatePairIsReal) {
  const auto f = characteristic_frequencies(1.0, 0.1);
  const auto term = [&f](std::complex<double> w) {
    return w / (2.0 * kPi) * std::log(f.omega_d / w);
  };
  EXPECT_LE(std::abs((term(f.omega1) + term(f.omega2)).imag()), 1e-13);
}

TEST(PartitionRatio, TemperatureDependence) {
  // ln Z is defined up to a constant; compare differences only.
  const auto high = characteristic_frequencies(1.0, 5.0);
  const auto low = characteristic_frequencies(1.0, 0.1);
  const auto diff = [](const auto& f, double tau) {
    return ln_partition_ratio(f, tau) - ln_partition_ratio(f, 1.0);
  };
  EXPECT_NEAR(diff(high, 0.1), -4.5155818320375979, 1e-11);
  EXPECT_NEAR(diff(high, 10.0), 1.2833170127679034, 1e-11);
  EXPECT_NEAR(diff(low, 0.1), -1.4982982535733465, 1e-11);
  EXPECT_NEAR(diff(low, 10.0), 1.1553664555142929, 1e-11);
}

TEST(PartitionRatio, BetaDerivativeIsInternalEnergy) {
  const auto f = characteristic_frequencies(1.0, 5.0);
  for (const double tau : {0.1, 1.0, 10.0}) {
    const double beta = 1.0 / tau;
    const double u = -numerics::derivative(
        [&f](double b) { return ln_partition_ratio(f, 1.0 / b); }, beta, 1e-3 * beta);
    const double expected = internal_energy(f, tau);
    EXPECT_LE(std::abs(u - expected), 1e-6 * std::abs(expected)) << tau;
  }
}

TEST(PartitionRatio, FreeParticleScalingAtHighTemperature) {
  const auto f = characteristic_frequencies(1.0, 5.0);
  const double slope = numerics::derivative(
      [&f](double log_tau) {
        const double tau = std::exp(log_tau);
        return ln_partition_ratio(f, tau) - 0.5 * log_tau;
      },
      std::log(1e3), 1e-2);
  EXPECT_LE(std::abs(slope), 1e-3);
}

TEST(PartitionRatio, ConjugatePairIsReal) {
  const auto f = characteristic_frequencies(1.0, 0.1);
  const double scale = 1.0 / (2.0 * kPi);
  const auto sum = specfun::log_gamma(1.0 + f.omega1 * scale) +
                   specfun::log_gamma(1.0 + f.omega2 * scale);
  EXPECT_LE(std::abs(sum.imag()), 1e-12);
}

TEST(Sweep, MatchesPointwiseEvaluationInOrder) {
  const auto f = characteristic_frequencies(1.0, 0.1);
  const auto taus = testing::log_grid(1e-3, 1e3, 300);
  const auto points = sweep(f, taus);
  ASSERT_EQ(points.size(), taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const auto p = thermo_point(f, taus[i]);
    EXPECT_EQ(points[i].temperature, taus[i]);
    EXPECT_EQ(points[i].specific_heat, p.specific_heat);
    EXPECT_EQ(points[i].internal_energy, p.internal_energy);
    EXPECT_EQ(points[i].ln_partition_ratio, p.ln_partition_ratio);
  }
}

}  // namespace
}  // namespace bathlab::thermo
