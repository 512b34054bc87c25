#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace permcore {

using Pt = std::uint32_t;

// A permutation of {0, ..., n-1}, stored as its image array: img[x] is the
// image of x.  Degree is fixed at construction; all permutations that interact
// must share a degree.
//
// Composition convention (used *everywhere* in this codebase): products act
// left-to-right, i.e. compose(p, q) applies p first and then q.  Powers,
// conjugation, commutators and the stabilizer-chain machinery all follow this
// convention, so "pq" in a comment always means "p, then q".
struct Perm {
  std::vector<Pt> img;

  Perm() = default;
  explicit Perm(std::size_t n) : img(n) {
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Pt>(i);
  }
  explicit Perm(std::vector<Pt> images) : img(std::move(images)) {}

  std::size_t degree() const { return img.size(); }
  Pt operator()(Pt x) const { return img[x]; }
  bool operator==(const Perm&) const = default;
};

// True iff `images` is a bijection on {0, ..., n-1}.
bool is_valid_image_vector(const std::vector<Pt>& images);

Perm identity_perm(std::size_t n);
bool is_identity(const Perm& p);

// Left-to-right composition: (compose(p, q))(x) = q(p(x)).
Perm compose(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

// Conjugate p^g = g^{-1} p g (a left-to-right product), computed in one pass
// without forming g^{-1}: the result r satisfies r(g(x)) = g(p(x)).
Perm conjugate(const Perm& p, const Perm& g);

// Commutator [a, b] = a^{-1} b^{-1} a b.
Perm commutator(const Perm& a, const Perm& b);

Perm power(const Perm& p, std::uint64_t k);

// Order of p as the lcm of its cycle lengths.  Throws std::overflow_error if
// the lcm does not fit in 64 bits (cannot happen for any group in this
// project, but the contract should not silently lie).
std::uint64_t element_order(const Perm& p);

bool is_involution(const Perm& p);  // order exactly 2

std::vector<Pt> fixed_points(const Perm& p);
std::size_t fixed_point_count(const Perm& p);

// 64-bit mixing hash of the image vector.  Used for hash buckets; containers
// that need exactness must also compare for equality (std::unordered_set<Perm>
// with PermHash does this automatically).
std::uint64_t perm_hash(const Perm& p);

// Two independent 64-bit hashes, for the one place (the q = 27 involution
// class orbit) where half a million permutations of degree 19684 cannot be
// stored verbatim and a fingerprint set is used instead.
std::array<std::uint64_t, 2> perm_hash128(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return perm_hash(p); }
};

// Cycle notation for small-degree diagnostics, e.g. "(0 2 1)" or "id".
std::string cycle_string(const Perm& p);

}  // namespace permcore
