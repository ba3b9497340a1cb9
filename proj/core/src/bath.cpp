#include "bathlab/bath.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bathlab::bath {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool positive(double x) { return x > 0.0 && std::isfinite(x); }

// Quadrature anchors at the scales where the integrands change shape.
std::array<double, 2> anchors(const SpectralDensity& sd) {
  return std::visit(
      Overloaded{[](const Drude& d) {
                   return std::array<double, 2>{d.omega_d, d.gamma};
                 },
                 [](const StrictOhmic& o) {
                   return std::array<double, 2>{o.gamma, o.gamma};
                 }},
      sd.model());
}

}  // namespace

SpectralDensity::SpectralDensity(Model model, double system_mass)
    : model_(model), system_mass_(system_mass) {}

SpectralDensity SpectralDensity::drude(double gamma, double omega_d,
                                       double system_mass) {
  if (!positive(gamma) || !positive(omega_d) || !positive(system_mass)) {
    throw std::invalid_argument(
        "Drude bath needs gamma, omega_d and system mass > 0");
  }
  return SpectralDensity(Drude{gamma, omega_d}, system_mass);
}

SpectralDensity SpectralDensity::strict_ohmic(double gamma,
                                              double system_mass) {
  if (!positive(gamma) || !positive(system_mass)) {
    throw std::invalid_argument("Ohmic bath needs gamma and system mass > 0");
  }
  return SpectralDensity(StrictOhmic{gamma}, system_mass);
}

double SpectralDensity::gamma() const {
  return std::visit([](const auto& m) { return m.gamma; }, model_);
}

double j(const SpectralDensity& sd, double omega) {
  if (omega < 0.0) throw std::invalid_argument("j: omega must be >= 0");
  const double mass = sd.system_mass();
  return std::visit(
      Overloaded{[&](const Drude& d) {
                   const double wd2 = d.omega_d * d.omega_d;
                   return mass * d.gamma * omega * wd2 / (omega * omega + wd2);
                 },
                 [&](const StrictOhmic& o) { return mass * o.gamma * omega; }},
      sd.model());
}

double gamma_hat(const SpectralDensity& sd, double z) {
  if (z < 0.0) throw std::invalid_argument("gamma_hat: z must be >= 0");
  return gamma_hat(sd, std::complex<double>(z, 0.0)).real();
}

std::complex<double> gamma_hat(const SpectralDensity& sd,
                               std::complex<double> z) {
  return std::visit(
      Overloaded{[&](const Drude& d) -> std::complex<double> {
                   return d.gamma * d.omega_d / (z + d.omega_d);
                 },
                 [](const StrictOhmic& o) -> std::complex<double> {
                   return o.gamma;
                 }},
      sd.model());
}

double gamma_hat_quadrature(const SpectralDensity& sd, double z,
                            const numerics::QuadratureSpec& spec) {
  if (!(z > 0.0)) {
    throw std::invalid_argument("gamma_hat_quadrature: z must be > 0");
  }
  const double mass = sd.system_mass();
  const auto integrand = [&](double w) {
    return j(sd, w) / w * z / (w * w + z * z);
  };
  const auto a = anchors(sd);
  const std::array<double, 3> edges{z, a[0], a[1]};
  std::array<double, 3> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  return 2.0 / (kPi * mass) *
         numerics::integrate_semi_infinite(integrand, spec, sorted, z);
}

double gamma_hat_prime_zero(const SpectralDensity& sd,
                            const numerics::QuadratureSpec& spec) {
  const double mass = sd.system_mass();
  const double g0 = gamma_hat(sd, 0.0);
  const auto integrand = [&](double w) {
    return (j(sd, w) / (mass * w) - g0) / (w * w);
  };
  const auto a = anchors(sd);
  return 2.0 / kPi * numerics::integrate_semi_infinite(integrand, spec, {}, a[0]);
}

double missing_mass(const SpectralDensity& sd,
                    const numerics::QuadratureSpec& spec) {
  const double mass = sd.system_mass();
  const double g0 = gamma_hat(sd, 0.0);
  const auto integrand = [&](double w) {
    return (mass * g0 * w - j(sd, w)) / (w * w * w);
  };
  const auto a = anchors(sd);
  const std::array<double, 1> edges{a[0]};
  return 2.0 / kPi * numerics::integrate_semi_infinite(integrand, spec, edges);
}

AnomalyReport anomaly(const SpectralDensity& sd,
                      const numerics::QuadratureSpec& spec) {
  AnomalyReport report{};
  report.gamma_hat_zero = gamma_hat(sd, 0.0);
  report.gamma_hat_prime_zero = gamma_hat_prime_zero(sd, spec);
  report.missing_mass_ratio = missing_mass(sd, spec) / sd.system_mass();
  report.low_t_specific_heat_negative = report.gamma_hat_prime_zero < -1.0;
  return report;
}

}  // namespace bathlab::bath
