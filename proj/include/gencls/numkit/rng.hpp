#pragma once

#include <cstdint>
#include <vector>

namespace gencls::num {

// Counter-based pseudo-random generator: every output is a 64-bit hash of
// (key, counter), so equal seeds give bit-identical streams everywhere and
// independent streams are cheap to derive. fork(id) yields a child stream
// keyed off this one without consuming any state, which is what lets
// per-class and per-example work run in parallel yet stay reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  // Uniform in [0, n).
  std::uint64_t uniform_int(std::uint64_t n);
  // Standard normal via Box-Muller (consumes two uniforms).
  double gaussian();

  // Independent child stream; does not advance this generator.
  Rng fork(std::uint64_t stream) const;
  // Independent child stream; advances this generator by one draw.
  Rng split();

 private:
  Rng(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_;
};

// Deterministic Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.uniform_int(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace gencls::num
