#pragma once

#include <complex>
#include <variant>

#include "bathlab/numerics.hpp"

namespace bathlab::bath {

// J(w) = M gamma w wd^2 / (w^2 + wd^2)
struct Drude {
  double gamma;
  double omega_d;
};

// J(w) = M gamma w at all frequencies; the reference for the missing mass.
struct StrictOhmic {
  double gamma;
};

/// Spectral density of bath oscillators for an Ohmic bath coupled to a
/// particle of mass `system_mass`. Immutable; parameters are validated on
/// construction (std::invalid_argument).
class SpectralDensity {
 public:
  using Model = std::variant<Drude, StrictOhmic>;

  static SpectralDensity drude(double gamma, double omega_d,
                               double system_mass = 1.0);
  static SpectralDensity strict_ohmic(double gamma, double system_mass = 1.0);

  const Model& model() const { return model_; }
  double gamma() const;
  double system_mass() const { return system_mass_; }
  bool is_drude() const { return std::holds_alternative<Drude>(model_); }

 private:
  SpectralDensity(Model model, double system_mass);

  Model model_;
  double system_mass_;
};

struct AnomalyReport {
  double gamma_hat_zero;
  double gamma_hat_prime_zero;
  double missing_mass_ratio;  // missing bath mass over system mass
  bool low_t_specific_heat_negative;
};

// Spectral weight at omega >= 0.
double j(const SpectralDensity& sd, double omega);

// Laplace transform of the damping kernel, closed form. z = 0 is the limit.
double gamma_hat(const SpectralDensity& sd, double z);

// Closed form continued to complex argument; used on the imaginary axis.
std::complex<double> gamma_hat(const SpectralDensity& sd,
                               std::complex<double> z);

/// gamma_hat(z) from its defining integral
///   (2 / pi M) int_0^inf J(w)/w * z / (w^2 + z^2) dw,  z > 0.
/// Independent of the closed forms; used to validate them.
double gamma_hat_quadrature(const SpectralDensity& sd, double z,
                            const numerics::QuadratureSpec& spec = {});

/// Slope of gamma_hat at zero from the infrared-safe subtracted integral
///   (2 / pi) int_0^inf [J(w)/(M w) - gamma_hat(0)] / w^2 dw.
/// Differentiating the unsubtracted integral under the sign diverges for
/// Ohmic baths.
double gamma_hat_prime_zero(const SpectralDensity& sd,
                            const numerics::QuadratureSpec& spec = {});

/// Mass missing relative to the strictly Ohmic reference bath,
///   (2 / pi) int_0^inf [M gamma_hat(0) w - J(w)] / w^3 dw.
/// Finite even though both total masses diverge.
double missing_mass(const SpectralDensity& sd,
                    const numerics::QuadratureSpec& spec = {});

// The low-temperature specific heat is negative iff gamma_hat'(0) < -1,
// i.e. iff more than one system mass is missing from the bath.
AnomalyReport anomaly(const SpectralDensity& sd,
                      const numerics::QuadratureSpec& spec = {});

}  // namespace bathlab::bath
