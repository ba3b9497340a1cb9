#include "bathlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "bathlab/errors.hpp"
#include "bathlab/modeshift.hpp"
#include "bathlab/numerics.hpp"
#include "bathlab/thermo.hpp"
#include "parallel.hpp"

namespace bathlab::oracle {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleGap = 1e-12;  // bracket ends stay this far (relative) off a pole

// Secular function in the offset variable around bath frequency `anchor`:
// s = w_a^2 + delta. w_a^2 - w_n^2 = spacing^2 (a - n)(a + n + 2) for
// 0-based indices is formed from exact integers, so the pole term keeps the
// full relative precision of delta.
class Secular {
 public:
  explicit Secular(const DiscreteBath& bath)
      : bath_(bath), spacing2_(bath.spacing * bath.spacing) {
    weights_.reserve(bath.size());
    for (std::size_t n = 0; n < bath.size(); ++n) {
      const double w = bath.frequencies[n];
      weights_.push_back(bath.masses[n] * w * w);
    }
  }

  double gap_below(std::size_t anchor, std::size_t n) const {
    const auto a = static_cast<std::int64_t>(anchor);
    const auto m = static_cast<std::int64_t>(n);
    return spacing2_ * static_cast<double>((a - m) * (a + m + 2));
  }

  // sum over n != anchor of m_n w_n^2 / (s - w_n^2)
  double rest(std::size_t anchor, double delta) const {
    double sum = 0.0;
    for (std::size_t n = 0; n < weights_.size(); ++n) {
      if (n == anchor) continue;
      sum += weights_[n] / (gap_below(anchor, n) + delta);
    }
    return sum;
  }

  // F(s) = sum - M
  double value(std::size_t anchor, double delta) const {
    return weights_[anchor] / delta + rest(anchor, delta) - bath_.system_mass;
  }

  // delta * F: same roots, pole removed, so the secant steps converge fast.
  double regularised(std::size_t anchor, double delta) const {
    return weights_[anchor] + delta * (rest(anchor, delta) - bath_.system_mass);
  }

  double weight(std::size_t n) const { return weights_[n]; }

  double weight_sum() const {
    double s = 0.0;
    for (const double w : weights_) s += w;
    return s;
  }

 private:
  const DiscreteBath& bath_;
  double spacing2_;
  std::vector<double> weights_;
};

double solve(const Secular& secular, std::size_t anchor, double lo, double hi) {
  const auto f = [&](double delta) { return secular.regularised(anchor, delta); };
  numerics::RootBracket bracket{};
  try {
    bracket = numerics::make_bracket(f, lo, hi);
  } catch (const InvalidBracket&) {
    throw RootNotBracketed("secular equation: no sign change next to bath mode " +
                           std::to_string(anchor + 1));
  }
  return numerics::find_root(f, bracket, 0.0);
}

double frequency_from(const DiscreteBath& bath, std::size_t anchor,
                      double offset) {
  const double w = bath.frequencies[anchor];
  return w + offset / (w + std::sqrt(w * w + offset));
}

}  // namespace

DiscreteBath build_bath(const bath::SpectralDensity& sd, double spacing,
                        std::size_t n) {
  if (!(spacing > 0.0) || n == 0) {
    throw std::invalid_argument("build_bath: need spacing > 0 and n >= 1");
  }
  DiscreteBath out{spacing, {}, {}, sd.system_mass(), sd};
  out.masses.reserve(n);
  out.frequencies.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = static_cast<double>(i + 1) * spacing;
    out.frequencies.push_back(w);
    out.masses.push_back(2.0 / kPi * bath::j(sd, w) / (w * w * w) * spacing);
  }
  return out;
}

CoupledSpectrum coupled_spectrum(const DiscreteBath& bath) {
  const std::size_t n = bath.size();
  const Secular secular(bath);
  CoupledSpectrum out;
  out.frequencies.resize(n);
  out.anchors.resize(n);
  out.offsets.resize(n);

  detail::parallel_for(n, 32, [&](std::size_t k) {
    std::size_t anchor = k;
    double offset = 0.0;
    if (k + 1 < n) {
      // Solve from whichever end of (w_k^2, w_k+1^2) the root is nearer.
      const double gap = secular.gap_below(k + 1, k);
      const double upper2 = bath.frequencies[k + 1] * bath.frequencies[k + 1];
      const double eta = kPoleGap * upper2;
      const double mid = 0.5 * gap;
      const double f_mid = secular.value(k, mid);
      if (f_mid == 0.0) {
        offset = mid;
      } else if (f_mid < 0.0) {
        offset = solve(secular, k, eta, mid);
      } else {
        anchor = k + 1;
        offset = solve(secular, k + 1, -mid, -eta);
      }
    } else {
      // F decays from +inf to -M above w_N; doubling the sum bound puts
      // F(hi) <= -M / 2 strictly. The root offset is at least m_N w_N^2 / M.
      const double w2 = bath.frequencies[k] * bath.frequencies[k];
      const double hi = 2.0 * secular.weight_sum() / bath.system_mass;
      const double lo = 0.5 * secular.weight(k) / bath.system_mass;
      offset = solve(secular, k, std::min(kPoleGap * w2, lo), hi);
    }
    out.anchors[k] = anchor;
    out.offsets[k] = offset;
    out.frequencies[k] = frequency_from(bath, anchor, offset);
  });
  return out;
}

std::vector<double> dense_spectrum(const DiscreteBath& bath) {
  const std::size_t n = bath.size() + 1;
  std::vector<double> a(n * n, 0.0);
  const auto at = [&a, n](std::size_t i, std::size_t j) -> double& {
    return a[i * n + j];
  };
  const double mass = bath.system_mass;
  for (std::size_t i = 0; i < bath.size(); ++i) {
    const double w2 = bath.frequencies[i] * bath.frequencies[i];
    at(0, 0) += bath.masses[i] * w2 / mass;
    at(i + 1, i + 1) = w2;
    at(0, i + 1) = at(i + 1, 0) = -w2 * std::sqrt(bath.masses[i] / mass);
  }

  double scale = 0.0;
  for (const double x : a) scale += x * x;
  scale = std::sqrt(scale);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    }
    if (std::sqrt(off) <= 1e-17 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
          at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::sqrt(std::max(at(i, i), 0.0));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> secular_equation_residuals(const DiscreteBath& bath,
                                               const CoupledSpectrum& spectrum) {
  const Secular secular(bath);
  std::vector<double> out(spectrum.frequencies.size());
  detail::parallel_for(out.size(), 32, [&](std::size_t k) {
    out[k] = std::abs(secular.value(spectrum.anchors[k], spectrum.offsets[k])) /
             bath.system_mass;
  });
  return out;
}

bool interlaces(const DiscreteBath& bath, const CoupledSpectrum& spectrum) {
  const std::size_t n = bath.size();
  if (spectrum.frequencies.size() != n) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = spectrum.frequencies[k];
    if (!(w > bath.frequencies[k])) return false;
    if (k + 1 < n && !(w < bath.frequencies[k + 1])) return false;
  }
  return true;
}

std::vector<double> secular_residual(const DiscreteBath& bath,
                                     const CoupledSpectrum& spectrum) {
  if (bath.size() < 3) return {};
  std::vector<double> out(spectrum.frequencies.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double w = spectrum.frequencies[k];
    const std::size_t a = spectrum.anchors[k];
    const double w_a = bath.frequencies[a];
    // cot has period pi and w_a / delta is an integer.
    const double shift = spectrum.offsets[k] / (w_a + w);
    const double phase = kPi * shift / bath.spacing;
    const double lhs = 1.0 / std::tan(phase) - bath.spacing / (kPi * w);
    out[k] = std::abs(lhs - modeshift::g(bath.source, w));
  }
  return out;
}

double discrete_specific_heat(const DiscreteBath& bath,
                              const CoupledSpectrum& spectrum, double tau) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("discrete_specific_heat: tau must be > 0");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < bath.size(); ++k) {
    sum += thermo::c_ho(spectrum.frequencies[k], tau) -
           thermo::c_ho(bath.frequencies[k], tau);
  }
  return 0.5 + sum;
}

long counting_difference(const DiscreteBath& bath,
                         const CoupledSpectrum& spectrum, double omega) {
  const double top = (static_cast<double>(bath.size()) - 2.0) * bath.spacing;
  if (!(omega >= 0.0) || !(omega < top)) {
    throw DomainError("counting_difference: omega outside [0, (N - 2) delta)");
  }
  const auto count = [omega](const std::vector<double>& v) {
    return static_cast<long>(std::upper_bound(v.begin(), v.end(), omega) - v.begin());
  };
  return count(spectrum.frequencies) - count(bath.frequencies);
}

}  // namespace bathlab::oracle
