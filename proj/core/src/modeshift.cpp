#include "bathlab/modeshift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bathlab/errors.hpp"

namespace bathlab::modeshift {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kImagGuard = 1e-13;

using Complex = std::complex<double>;

Complex lorentzian(Complex center, double omega) {
  return center / (omega * omega + center * center);
}

double real_checked(Complex z) {
  if (std::abs(z.imag()) > kImagGuard * std::max(1.0, std::abs(z.real()))) {
    throw std::logic_error("conjugate Lorentzian pair left an imaginary part");
  }
  return z.real();
}

}  // namespace

DampedSystemFrequencies characteristic_frequencies(double gamma,
                                                   double omega_d) {
  if (!(gamma > 0.0) || !(omega_d > 0.0)) {
    throw std::invalid_argument("characteristic_frequencies: need gamma, wd > 0");
  }
  const double disc = 1.0 - 4.0 * gamma / omega_d;
  const double half = 0.5 * omega_d;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    const double w1 = half * (1.0 + root);
    // w2 = gamma wd / w1 avoids cancellation when 4 gamma << wd
    const double w2 = gamma * omega_d / w1;
    return {Complex(w1, 0.0), Complex(w2, 0.0), omega_d};
  }
  const Complex w1(half, half * std::sqrt(-disc));
  return {w1, std::conj(w1), omega_d};
}

DampedSystemFrequencies characteristic_frequencies(
    const bath::SpectralDensity& sd) {
  const auto* drude = std::get_if<bath::Drude>(&sd.model());
  if (drude == nullptr) {
    throw std::invalid_argument("characteristic frequencies need a Drude bath");
  }
  return characteristic_frequencies(drude->gamma, drude->omega_d);
}

double g(const bath::SpectralDensity& sd, double omega) {
  if (!(omega > 0.0)) throw DomainError("g: omega must be > 0");
  const double weight = bath::j(sd, omega);
  if (!(weight > 0.0)) throw DomainError("g: J(omega) vanishes");
  const double im = bath::gamma_hat(sd, Complex(0.0, omega)).imag();
  return sd.system_mass() * omega / weight * (omega + im);
}

double g_reduced(const bath::Drude& drude, double omega) {
  const double wd = drude.omega_d;
  return omega * (omega * omega + wd * wd - drude.gamma * wd) /
         (drude.gamma * wd * wd);
}

double g_prime(const bath::SpectralDensity& sd, double omega) {
  if (const auto* d = std::get_if<bath::Drude>(&sd.model())) {
    const double wd = d->omega_d;
    return (3.0 * omega * omega + wd * wd - d->gamma * wd) /
           (d->gamma * wd * wd);
  }
  if (!(omega > 0.0)) throw DomainError("g_prime: omega must be > 0");
  const double h = std::min(std::max(1e-6 * sd.gamma(), 1e-6 * omega),
                            0.5 * omega);
  return numerics::derivative([&sd](double w) { return g(sd, w); }, omega, h);
}

double delta_rho(const bath::SpectralDensity& sd, double omega) {
  if (omega < 0.0) throw DomainError("delta_rho: omega must be >= 0");
  if (omega == 0.0) {
    if (sd.is_drude()) return g_prime(sd, 0.0) / kPi;
    return (1.0 + bath::gamma_hat_prime_zero(sd)) /
           (kPi * bath::gamma_hat(sd, 0.0));
  }
  const double gv = sd.is_drude()
                        ? g_reduced(std::get<bath::Drude>(sd.model()), omega)
                        : g(sd, omega);
  return g_prime(sd, omega) / (kPi * (1.0 + gv * gv));
}

double delta_rho_lorentzian(const DampedSystemFrequencies& freqs,
                            double omega) {
  return lorentzian_components(freqs, omega).sum();
}

LorentzianComponents lorentzian_components(const DampedSystemFrequencies& freqs,
                                           double omega) {
  if (omega < 0.0) throw DomainError("lorentzian: omega must be >= 0");
  const double third =
      -freqs.omega_d / (omega * omega + freqs.omega_d * freqs.omega_d) / kPi;
  if (freqs.is_real()) {
    return {lorentzian(freqs.omega1, omega).real() / kPi,
            lorentzian(freqs.omega2, omega).real() / kPi, third};
  }
  const Complex pair =
      lorentzian(freqs.omega1, omega) + lorentzian(freqs.omega2, omega);
  return {real_checked(pair) / kPi, 0.0, third};
}

}  // namespace bathlab::modeshift
