#include "bathlab/thermo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "bathlab/specfun.hpp"
#include "parallel.hpp"

namespace bathlab::thermo {
namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

void check_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("temperature must be positive and finite");
  }
}

// Oscillator heat as a function of x = hbar beta omega.
double c_ho_reduced(double x) {
  if (x == 0.0) return 1.0;
  if (x > 700.0) return 0.0;
  if (x < 2.0) {
    const double r = 0.5 * x / std::sinh(0.5 * x);
    return r * r;
  }
  const double e = std::exp(-x);
  const double r = x / (1.0 - e);
  return r * r * e;
}

// Real part of f(w1) + f(w2); the pair is real or complex conjugate.
template <class F>
double pair_sum(const modeshift::DampedSystemFrequencies& freqs, F f) {
  if (freqs.is_real()) {
    return f(freqs.omega1).real() + f(freqs.omega2).real();
  }
  return 2.0 * f(freqs.omega1).real();
}

}  // namespace

double c_ho(double omega, double tau) {
  if (omega < 0.0) throw std::invalid_argument("c_ho: omega must be >= 0");
  if (tau < 0.0) throw std::invalid_argument("c_ho: tau must be >= 0");
  if (tau == 0.0) return omega == 0.0 ? 1.0 : 0.0;
  return c_ho_reduced(omega / tau);
}

double specific_heat_quadrature(const bath::SpectralDensity& sd, double tau,
                                const numerics::QuadratureSpec& spec) {
  check_tau(tau);
  const auto integrand = [&](double x) {
    return modeshift::delta_rho(sd, tau * x) * c_ho_reduced(x);
  };
  std::vector<double> anchors{1.0, 10.0, 50.0};
  // Resolve the bath's own frequency scales when they sit below x = 1.
  for (const double w : {sd.gamma(), sd.is_drude()
                                         ? std::get<bath::Drude>(sd.model()).omega_d
                                         : sd.gamma()}) {
    if (w / tau < 1.0) anchors.push_back(w / tau);
  }
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  return tau * numerics::integrate_semi_infinite(integrand, spec, anchors);
}

double specific_heat_closed(const modeshift::DampedSystemFrequencies& freqs,
                            double tau) {
  check_tau(tau);
  const double scale = 1.0 / (2.0 * kPi * tau);
  const auto term = [scale](Complex w) {
    const Complex v = w * scale;
    return v * v * specfun::trigamma(v);
  };
  const double vd = freqs.omega_d * scale;
  return pair_sum(freqs, term) - vd * vd * specfun::trigamma(vd).real() - 0.5;
}

LowTAsymptote low_t_asymptote(const bath::SpectralDensity& sd) {
  return {kPi / 3.0 * (1.0 + bath::gamma_hat_prime_zero(sd)) /
          bath::gamma_hat(sd, 0.0)};
}

double internal_energy(const modeshift::DampedSystemFrequencies& freqs,
                       double tau) {
  check_tau(tau);
  const double scale = 1.0 / (2.0 * kPi * tau);
  const auto term = [scale](Complex w) {
    return w / (2.0 * kPi) * specfun::digamma(w * scale);
  };
  const double wd = freqs.omega_d;
  return -pair_sum(freqs, term) +
         wd / (2.0 * kPi) * specfun::digamma(wd * scale).real() - 0.5 * tau;
}

double zero_point_energy(const modeshift::DampedSystemFrequencies& freqs) {
  const double wd = freqs.omega_d;
  return pair_sum(freqs, [wd](Complex w) {
    return w / (2.0 * kPi) * std::log(wd / w);
  });
}

double ln_partition_ratio(const modeshift::DampedSystemFrequencies& freqs,
                          double tau) {
  check_tau(tau);
  const double scale = 1.0 / (2.0 * kPi * tau);
  const auto term = [scale](Complex w) {
    return specfun::log_gamma(1.0 + w * scale);
  };
  return 0.5 * std::log(tau) + pair_sum(freqs, term) -
         specfun::log_gamma(1.0 + freqs.omega_d * scale).real();
}

ThermoPoint thermo_point(const modeshift::DampedSystemFrequencies& freqs,
                         double tau) {
  return {tau, specific_heat_closed(freqs, tau), internal_energy(freqs, tau),
          ln_partition_ratio(freqs, tau)};
}

std::vector<ThermoPoint> sweep(const modeshift::DampedSystemFrequencies& freqs,
                               std::span<const double> taus) {
  std::vector<ThermoPoint> out(taus.size());
  detail::parallel_for(taus.size(), 64,
                       [&](std::size_t i) { out[i] = thermo_point(freqs, taus[i]); });
  return out;
}

}  // namespace bathlab::thermo
