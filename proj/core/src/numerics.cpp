#include "bathlab/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "bathlab/errors.hpp"

namespace bathlab::numerics {
namespace {

constexpr int kGaussOrder = 15;

struct GaussRule {
  std::array<double, kGaussOrder> nodes{};
  std::array<double, kGaussOrder> weights{};
};

// Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
GaussRule make_gauss_rule() {
  GaussRule rule;
  constexpr int n = kGaussOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

double gauss(const RealFunction& f, double a, double b) {
  const GaussRule& rule = gauss_rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < kGaussOrder; ++i) {
    const double v = f(mid + half * rule.nodes[i]);
    if (!std::isfinite(v)) {
      throw NonConvergence("quadrature: integrand is not finite");
    }
    sum += rule.weights[i] * v;
  }
  return sum * half;
}

struct Panel {
  double a;
  double b;
  double left;   // rule applied to [a, mid]
  double right;  // rule applied to [mid, b]
  double error;

  double value() const { return left + right; }
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel make_panel(const RealFunction& f, double a, double b, double whole) {
  const double mid = 0.5 * (a + b);
  Panel p{a, b, gauss(f, a, mid), gauss(f, mid, b), 0.0};
  p.error = std::abs(whole - p.value());
  return p;
}

// Globally adaptive: always split the panel with the largest error estimate.
double adaptive(const RealFunction& f, std::span<const double> edges,
                const QuadratureSpec& spec) {
  spec.validate();
  std::priority_queue<Panel> queue;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    queue.push(make_panel(f, edges[i], edges[i + 1],
                          gauss(f, edges[i], edges[i + 1])));
  }

  auto totals = [&queue]() {
    // priority_queue hides its container; copy is cheap relative to f calls.
    auto copy = queue;
    double value = 0.0;
    double error = 0.0;
    while (!copy.empty()) {
      value += copy.top().value();
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value, error};
  };

  double value = 0.0;
  double error = 0.0;
  std::tie(value, error) = totals();
  int subdivisions = 0;
  while (true) {
    if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
      std::tie(value, error) = totals();
      if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        return value;
      }
    }
    if (subdivisions >= spec.max_subdivisions) {
      throw NonConvergence("quadrature: subdivision limit reached with error " +
                           std::to_string(error));
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel lo = make_panel(f, worst.a, mid, worst.left);
    const Panel hi = make_panel(f, mid, worst.b, worst.right);
    value += lo.value() + hi.value() - worst.value();
    error += lo.error + hi.error - worst.error;
    queue.push(lo);
    queue.push(hi);
    ++subdivisions;
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_subdivisions < 1) {
    throw std::invalid_argument("QuadratureSpec: invalid tolerances");
  }
}

double integrate(const RealFunction& f, double a, double b,
                 const QuadratureSpec& spec) {
  if (!(a < b)) throw std::invalid_argument("integrate: need a < b");
  const std::array<double, 2> edges{a, b};
  return adaptive(f, edges, spec);
}

double integrate_semi_infinite(const RealFunction& f, const QuadratureSpec& spec,
                               std::span<const double> anchors, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("integrate_semi_infinite: scale must be > 0");
  }
  std::vector<double> edges{0.0};
  for (const double w : anchors) {
    if (!(w > 0.0) || !std::isfinite(w)) continue;
    const double t = w / (scale + w);
    if (t > edges.back() && t < 1.0) edges.push_back(t);
  }
  edges.push_back(1.0);

  const RealFunction mapped = [&f, scale](double t) {
    const double u = 1.0 - t;
    return f(scale * t / u) * scale / (u * u);
  };
  return adaptive(mapped, edges, spec);
}

RootBracket make_bracket(const RealFunction& f, double lo, double hi) {
  if (!(lo < hi)) throw InvalidBracket("bracket: need lo < hi");
  const RootBracket b{lo, hi, f(lo), f(hi)};
  if (!(b.f_lo * b.f_hi < 0.0)) {
    throw InvalidBracket("bracket: no sign change on [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
  }
  return b;
}

double find_root(const RealFunction& f, const RootBracket& bracket,
                 double tol) {
  if (!(bracket.lo < bracket.hi) || !(bracket.f_lo * bracket.f_hi < 0.0)) {
    throw InvalidBracket("find_root: invalid bracket");
  }
  double a = bracket.lo;
  double b = bracket.hi;
  double fa = bracket.f_lo;  // true values
  double fb = bracket.f_hi;
  double wa = fa;  // Illinois-weighted values
  double wb = fb;
  int last_side = 0;
  double width_before = b - a;
  int steps_since_check = 0;
  bool bisect = false;

  for (int iter = 0; iter < 500; ++iter) {
    const double mid = a + 0.5 * (b - a);
    if (b - a <= tol || mid <= a || mid >= b) break;

    double x = mid;
    if (!bisect) {
      x = (a * wb - b * wa) / (wb - wa);
      if (!(x > a && x < b)) x = mid;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = wa = fx;
      if (last_side == -1) wb *= 0.5;
      last_side = -1;
    } else {
      b = x;
      fb = wb = fx;
      if (last_side == 1) wa *= 0.5;
      last_side = 1;
    }

    // Guarantee at least a halving every three steps.
    if (bisect) {
      bisect = false;
      width_before = b - a;
      steps_since_check = 0;
    } else if (++steps_since_check == 3) {
      bisect = (b - a) > 0.5 * width_before;
      width_before = b - a;
      steps_since_check = 0;
    }
  }
  return std::abs(fa) <= std::abs(fb) ? a : b;
}

double derivative(const RealFunction& f, double x, double h0) {
  if (!(h0 > 0.0)) throw std::invalid_argument("derivative: h0 must be > 0");
  const auto central = [&](double h) { return (f(x + h) - f(x - h)) / (2.0 * h); };
  const double coarse = central(h0);
  const double fine = central(0.5 * h0);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace bathlab::numerics
