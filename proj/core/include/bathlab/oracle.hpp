#pragma once

#include <cstddef>
#include <vector>

#include "bathlab/bath.hpp"

// Brute-force check of the continuum results: a finite bath of N oscillators
// on the grid w_n = n * delta, coupled to the free particle, diagonalised
// exactly.
namespace bathlab::oracle {

/// N oscillators at w_n = n * spacing (n = 1..N) with Riemann-sum masses
/// m_n = (2 / pi) J(w_n) / w_n^3 * spacing. Index i in the vectors is n - 1.
struct DiscreteBath {
  double spacing;
  std::vector<double> masses;
  std::vector<double> frequencies;
  double system_mass;
  bath::SpectralDensity source;

  std::size_t size() const { return frequencies.size(); }
};

/// Non-zero eigenfrequencies of particle plus bath, ascending, one per bath
/// mode. Root k was solved as Omega_k^2 = w_a^2 + offset_k, a = anchor_k,
/// relative to whichever bath frequency it sits closest to; that form keeps
/// full precision when Omega_k hugs a bath frequency.
struct CoupledSpectrum {
  std::vector<double> frequencies;
  std::vector<std::size_t> anchors;
  std::vector<double> offsets;
  bool has_zero_mode = true;  // translation invariance, always present
};

// Throws std::invalid_argument for spacing <= 0 or n = 0.
DiscreteBath build_bath(const bath::SpectralDensity& sd, double spacing,
                        std::size_t n);

/// Roots of the secular equation sum_n m_n w_n^2 / (W^2 - w_n^2) = M, one in
/// each interlacing interval (w_k, w_k+1) and one above w_N. Intervals are
/// solved independently and in parallel. Throws RootNotBracketed when an
/// interval shows no sign change (numerically degenerate masses).
CoupledSpectrum coupled_spectrum(const DiscreteBath& bath);

/// All N + 1 eigenfrequencies, zero mode included, from cyclic Jacobi
/// rotations on the mass-weighted dynamical matrix
///   D_00 = sum m_n w_n^2 / M,  D_nn = w_n^2,  D_0n = -w_n^2 sqrt(m_n / M).
/// O(N^3): a cross-check for small N, not a production path.
std::vector<double> dense_spectrum(const DiscreteBath& bath);

// |sum_n m_n w_n^2 / (W_k^2 - w_n^2) - M| / M per root.
std::vector<double> secular_equation_residuals(const DiscreteBath& bath,
                                               const CoupledSpectrum& spectrum);

// w_k < W_k < w_k+1 for every k, and W_N > w_N.
bool interlaces(const DiscreteBath& bath, const CoupledSpectrum& spectrum);

/// Per-root residual of the continuum cot form
///   |cot(pi W / delta) - delta / (pi W) - g(W)|.
/// Empty for baths with fewer than three modes.
std::vector<double> secular_residual(const DiscreteBath& bath,
                                     const CoupledSpectrum& spectrum);

/// Exact finite-bath C = 1/2 + sum_k [c_ho(W_k) - c_ho(w_k)]; the 1/2 is the
/// zero mode's free translation. Valid as a continuum estimate for tau >> delta.
double discrete_specific_heat(const DiscreteBath& bath,
                              const CoupledSpectrum& spectrum, double tau);

/// #{W_k <= W} - #{w_n <= W}. Interlacing pins it to {-1, 0}; its local mean
/// tracks the integrated density shift. Throws DomainError for W < 0 or
/// W >= (N - 2) * delta.
long counting_difference(const DiscreteBath& bath,
                         const CoupledSpectrum& spectrum, double omega);

}  // namespace bathlab::oracle
