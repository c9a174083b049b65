#include "hypersurf/random.hpp"

#include <cmath>
#include <numbers>

namespace hypersurf {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ull + 1)));
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

std::vector<double> random_unit_vector(Rng& rng, std::size_t dim) {
  std::vector<double> v(dim);
  for (;;) {
    for (auto& x : v) x = rng.normal();
    const double n = norm(v);
    if (n > 1e-12) {
      for (auto& x : v) x /= n;
      return v;
    }
  }
}

std::vector<double> random_in_box(Rng& rng, std::size_t dim, double half_width) {
  std::vector<double> v(dim);
  for (auto& x : v) x = rng.uniform(-half_width, half_width);
  return v;
}

double halton(std::uint64_t index, std::uint32_t base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

std::uint32_t nth_prime(std::size_t n) {
  std::uint32_t candidate = 1;
  std::size_t found = 0;
  while (found <= n) {
    ++candidate;
    bool prime = candidate >= 2;
    for (std::uint32_t d = 2; d * d <= candidate; ++d) {
      if (candidate % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ++found;
  }
  return candidate;
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace hypersurf
