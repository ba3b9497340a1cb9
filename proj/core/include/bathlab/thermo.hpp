#pragma once

#include <span>
#include <vector>

#include "bathlab/bath.hpp"
#include "bathlab/modeshift.hpp"
#include "bathlab/numerics.hpp"

// Thermodynamics of the coupling: every quantity is the coupled system plus
// bath minus the bath alone, in reduced units hbar = k_B = M = gamma = 1
// (tau = k_B T / hbar gamma, frequencies in gamma, energies in hbar gamma).
namespace bathlab::thermo {

struct ThermoPoint {
  double temperature;
  double specific_heat;
  double internal_energy;
  double ln_partition_ratio;  // up to a temperature-independent constant
};

struct LowTAsymptote {
  double slope;  // C ~ slope * tau + O(tau^3)
};

// Specific heat of one oscillator, (x / 2 sinh(x/2))^2 with x = omega / tau.
double c_ho(double omega, double tau);

/// C = int_0^inf delta_rho(w) c_ho(w, tau) dw, integrated in x = w / tau
/// with initial panels at x = 1, 10, 50 so the integrand stays resolved at
/// low temperature.
double specific_heat_quadrature(const bath::SpectralDensity& sd, double tau,
                                const numerics::QuadratureSpec& spec = {});

/// Drude closed form
///   C = sum_{w1, w2} v^2 psi'(v) - vd^2 psi'(vd) - 1/2,  v = w / (2 pi tau).
double specific_heat_closed(const modeshift::DampedSystemFrequencies& freqs,
                            double tau);

// slope = (pi / 3)(1 + gamma_hat'(0)) / gamma_hat(0); negative iff anomalous.
LowTAsymptote low_t_asymptote(const bath::SpectralDensity& sd);

/// U = -sum_{w1, w2} (w / 2 pi) psi(v) + (wd / 2 pi) psi(vd) - tau / 2.
/// The integration constant relative to C = dU/dtau is zero.
double internal_energy(const modeshift::DampedSystemFrequencies& freqs,
                       double tau);

// U at tau = 0: (w1 / 2 pi) ln(wd / w1) + (w2 / 2 pi) ln(wd / w2).
double zero_point_energy(const modeshift::DampedSystemFrequencies& freqs);

/// ln Z = (1/2) ln tau + ln Gamma(1 + v1) + ln Gamma(1 + v2) - ln Gamma(1 + vd).
/// The prefactor of Z is not determined, so only temperature derivatives are
/// meaningful.
double ln_partition_ratio(const modeshift::DampedSystemFrequencies& freqs,
                          double tau);

ThermoPoint thermo_point(const modeshift::DampedSystemFrequencies& freqs,
                         double tau);

// Closed-form points over a temperature grid, evaluated concurrently; the
// result is in grid order and independent of scheduling.
std::vector<ThermoPoint> sweep(const modeshift::DampedSystemFrequencies& freqs,
                               std::span<const double> taus);

}  // namespace bathlab::thermo
