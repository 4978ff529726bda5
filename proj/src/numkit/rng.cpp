#include "gencls/numkit/rng.hpp"

#include <cmath>

namespace gencls::num {
namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// Stafford mix13 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_pair(std::uint64_t key, std::uint64_t counter) {
  return mix64(key + counter * kGamma);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : key_(mix64(seed + kGamma)), counter_(0) {}

std::uint64_t Rng::next_u64() { return hash_pair(key_, ++counter_); }

double Rng::uniform() {
  // 53 high bits -> double in [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Rng::uniform_int(std::uint64_t n) {
  // Lemire reduction; bias is < 2^-64 per draw, irrelevant at this scale.
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

double Rng::gaussian() {
  // u1 in (0, 1] keeps the log finite.
  double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Rng Rng::fork(std::uint64_t stream) const {
  return Rng(mix64(key_ ^ hash_pair(~key_, stream)), 0);
}

Rng Rng::split() { return fork(next_u64()); }

}  // namespace gencls::num
