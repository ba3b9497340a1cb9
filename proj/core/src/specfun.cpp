#include "bathlab/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "bathlab/errors.hpp"

namespace bathlab::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRecurrenceThreshold = 10.0;

// B_2, B_4, ..., B_14
constexpr std::array<double, 7> kBernoulli{
    1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0};

void check_pole(Complex z, const char* name) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real()) {
    throw PoleError(std::string(name) + ": pole at non-positive integer " +
                    std::to_string(z.real()));
  }
}

Complex digamma_asymptotic(Complex z) {
  const Complex inv2 = 1.0 / (z * z);
  Complex power = inv2;
  Complex series = 0.0;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double two_k = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / two_k * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 / z - series;
}

Complex trigamma_asymptotic(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv2 * inv;  // z^-(2k+1), k = 1
  Complex series = 0.0;
  for (const double b : kBernoulli) {
    series += b * power;
    power *= inv2;
  }
  return inv + 0.5 * inv2 + series;
}

Complex log_gamma_asymptotic(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv;  // z^-(2k-1), k = 1
  Complex series = 0.0;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double two_k = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / (two_k * (two_k - 1.0)) * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

}  // namespace

Complex digamma(Complex z) {
  check_pole(z, "digamma");
  if (z.real() < 0.0) {
    const Complex pz = kPi * z;
    return digamma(1.0 - z) - kPi * std::cos(pz) / std::sin(pz);
  }
  Complex shift = 0.0;
  while (z.real() < kRecurrenceThreshold) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  return digamma_asymptotic(z) + shift;
}

Complex trigamma(Complex z) {
  check_pole(z, "trigamma");
  if (z.real() < 0.0) {
    const Complex s = std::sin(kPi * z);
    return kPi * kPi / (s * s) - trigamma(1.0 - z);
  }
  Complex shift = 0.0;
  while (z.real() < kRecurrenceThreshold) {
    shift += 1.0 / (z * z);
    z += 1.0;
  }
  return trigamma_asymptotic(z) + shift;
}

Complex log_gamma(Complex z) {
  check_pole(z, "log_gamma");
  Complex shift = 0.0;
  while (z.real() < kRecurrenceThreshold) {
    shift -= std::log(z);
    z += 1.0;
  }
  return log_gamma_asymptotic(z) + shift;
}

}  // namespace bathlab::specfun
