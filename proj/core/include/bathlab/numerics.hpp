#pragma once

#include <functional>
#include <span>

namespace bathlab::numerics {

using RealFunction = std::function<double(double)>;

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  // Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

// Integral of f over the finite interval [a, b], a < b.
double integrate(const RealFunction& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// Integral of f over (0, inf).
///
/// The half line is mapped to (0, 1) by w = scale * t / (1 - t) and integrated
/// with a globally adaptive 15-point Gauss-Legendre rule; each panel's error is
/// estimated by comparing it against the sum over its two halves. `anchors`
/// (in units of w, strictly increasing, positive) seed the initial panels so
/// that features at known locations are resolved from the start.
///
/// Throws NonConvergence when `spec.max_subdivisions` is exhausted while the
/// error estimate still exceeds max(abs_tol, rel_tol * |I|).
double integrate_semi_infinite(const RealFunction& f,
                               const QuadratureSpec& spec = {},
                               std::span<const double> anchors = {},
                               double scale = 1.0);

struct RootBracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

// Evaluates f at both ends; throws InvalidBracket unless lo < hi and the
// values have strictly opposite signs.
RootBracket make_bracket(const RealFunction& f, double lo, double hi);

/// Root of f inside `bracket`.
///
/// Illinois-modified regula falsi, falling back to bisection whenever a step
/// fails to halve the bracket. Stops when the bracket is narrower than `tol`,
/// when f vanishes exactly, or when the endpoints are adjacent doubles, so
/// tol = 0 means "to machine precision". The result always lies in
/// [bracket.lo, bracket.hi].
double find_root(const RealFunction& f, const RootBracket& bracket, double tol);

// Central difference with one Richardson step (h0 and h0/2); error O(h0^4).
// Samples f on [x - h0, x + h0].
double derivative(const RealFunction& f, double x, double h0);

}  // namespace bathlab::numerics
