#ifndef HYPERSURF_RANDOM_HPP
#define HYPERSURF_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace hypersurf {

/// Seeded generator whose output is identical on every platform: the engine
/// is std::mt19937_64 and the distributions are implemented here rather than
/// taken from <random>, whose distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream `stream` of a base seed (splitmix64 mixing).
  static Rng derive(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::vector<double> random_unit_vector(Rng& rng, std::size_t dim);
std::vector<double> random_in_box(Rng& rng, std::size_t dim, double half_width);

/// Radical inverse of index in the given prime base (Halton coordinate).
double halton(std::uint64_t index, std::uint32_t base);
std::uint32_t nth_prime(std::size_t n);

double norm(const std::vector<double>& v);
double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace hypersurf

#endif  // HYPERSURF_RANDOM_HPP
