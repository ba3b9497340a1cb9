#pragma once

#include <complex>

#include "bathlab/bath.hpp"

namespace bathlab::modeshift {

/// Eigenfrequencies of the deterministic Drude-damped free particle:
/// omega1,2 = (wd / 2)(1 +- sqrt(1 - 4 gamma / wd)) together with wd itself.
/// omega1 + omega2 = wd and omega1 * omega2 = gamma * wd. For wd < 4 gamma the
/// pair is complex conjugate with real part wd / 2; omega2 is then stored as
/// the exact conjugate of omega1.
struct DampedSystemFrequencies {
  std::complex<double> omega1;
  std::complex<double> omega2;
  double omega_d;

  bool is_real() const { return omega1.imag() == 0.0; }
};

struct LorentzianComponents {
  double first;
  double second;
  double third;

  double sum() const { return first + second + third; }
};

DampedSystemFrequencies characteristic_frequencies(double gamma,
                                                   double omega_d);

// Frequencies for a Drude bath; std::invalid_argument for other models.
DampedSystemFrequencies characteristic_frequencies(
    const bath::SpectralDensity& sd);

/// g(W) = (M W / J(W)) (W + Im gamma_hat(iW)), W > 0.
/// Throws DomainError when W <= 0 or J(W) = 0.
double g(const bath::SpectralDensity& sd, double omega);

// Drude g in reduced polynomial form W (W^2 + wd^2 - gamma wd) / (gamma wd^2).
double g_reduced(const bath::Drude& drude, double omega);

// dg/dW: exact for Drude, Richardson difference otherwise.
double g_prime(const bath::SpectralDensity& sd, double omega);

/// Change of the eigenmode density, rho_S+B - rho_B = g' / (pi (1 + g^2)).
/// At W = 0 returns the analytic limit (1 + gamma_hat'(0)) / (pi gamma_hat(0)).
double delta_rho(const bath::SpectralDensity& sd, double omega);

// Same quantity for a Drude bath as three zero-centred Lorentzians.
double delta_rho_lorentzian(const DampedSystemFrequencies& freqs, double omega);

/// The three Lorentzians separately. With complex omega1,2 the conjugate pair
/// is only real as a sum: `first` carries the pair, `second` is zero.
LorentzianComponents lorentzian_components(const DampedSystemFrequencies& freqs,
                                           double omega);

}  // namespace bathlab::modeshift
