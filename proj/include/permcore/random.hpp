#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "permcore/perm.hpp"

namespace permcore {

// splitmix64 — used to derive independent sub-seeds from a single user seed so
// that every randomized stage of a run has its own deterministic stream.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream_id) {
  std::uint64_t s = base ^ (0x6a09e667f3bcc909ULL * (stream_id + 1));
  return splitmix64(s);
}

// Product-replacement ("rattle") sampler: a fixed-size slot vector seeded with
// the generators plus an accumulator.  Each step multiplies a random slot by
// another random slot (or its inverse) on a random side, then folds the result
// into the accumulator.  After a burn-in this produces well-mixed elements of
// the generated group; the distribution is not uniform in any certified sense,
// which is fine because every use here feeds either a randomized *search*
// (with the result verified deterministically afterwards) or the stabilizer
// chain's seeding phase (whose outcome is certified by the deterministic
// Schreier sweep).
class ProductReplacementSampler {
 public:
  ProductReplacementSampler(const std::vector<Perm>& generators, std::uint64_t seed,
                            int slots = 10, int burn_in = 60)
      : rng_(seed) {
    if (generators.empty()) throw std::invalid_argument("sampler needs at least one generator");
    degree_ = generators[0].degree();
    slots_.reserve(static_cast<std::size_t>(slots));
    for (int i = 0; i < slots; ++i)
      slots_.push_back(generators[static_cast<std::size_t>(i) % generators.size()]);
    acc_ = identity_perm(degree_);
    for (int i = 0; i < burn_in; ++i) step();
  }

  const Perm& next() {
    step();
    return acc_;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  void step() {
    const std::size_t n = slots_.size();
    std::size_t i = rng_() % n;
    std::size_t j = rng_() % (n - 1);
    if (j >= i) ++j;  // j != i
    const Perm& other = slots_[j];
    const bool inv = rng_() & 1;
    const bool left = rng_() & 1;
    const Perm rhs = inv ? inverse(other) : other;
    slots_[i] = left ? compose(rhs, slots_[i]) : compose(slots_[i], rhs);
    acc_ = compose(acc_, slots_[i]);
  }

  std::size_t degree_ = 0;
  std::vector<Perm> slots_;
  Perm acc_;
  std::mt19937_64 rng_;
};

}  // namespace permcore
