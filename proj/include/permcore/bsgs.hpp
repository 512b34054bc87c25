#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "permcore/perm.hpp"

namespace permcore {

struct BsgsOptions {
  // Seed for the internal randomized phases (chain seeding and the
  // post-completion verification sifts).  Fixed default so that identical
  // inputs give identical chains.
  std::uint64_t rng_seed = 0x5eedba5e5eedba5eULL;

  // Consecutive clean random sifts required before the seeding phase hands
  // over to the deterministic Schreier sweep.
  int stabilize_rounds = 48;

  // Random elements sifted as a final sanity pass after the sweep.
  int verify_rounds = 24;

  // Early exit: if set, the seeding phase stops as soon as the chain's orbit
  // product equals this value, and the Schreier sweep is skipped.
  //
  // SOUNDNESS: the orbit product of a partial chain is always a *lower* bound
  // for |G| once the sweep would certify it, but on its own it only proves
  // |G| >= product.  The early exit is therefore valid ONLY when the caller
  // independently knows G is contained in a group of order exactly this value
  // (e.g. a subgroup of an already-certified ambient group).  Never use it
  // when the claimed order comes from the same model being tested — the
  // deterministic sweep exists precisely to catch an under-generating model.
  std::optional<mpz_class> order_hint;
};

// A base-and-strong-generating-set representation of a permutation group,
// built by Schreier–Sims.  The construction path is: (1) randomized seeding
// with a product-replacement sampler until the chain looks stable, (2) a full
// deterministic Schreier-generator sweep — every Schreier generator of every
// level is sifted; when all reduce to the identity, the orbit product equals
// the group order by Schreier's lemma, which is an exact certificate — and
// (3) a short randomized re-verification.  Phase 1 only accelerates phase 2;
// correctness never depends on the random bits.
class StabChain {
 public:
  struct Level {
    Pt beta = 0;
    // Strong generators usable at this level (indices into the master list):
    // exactly those fixing every earlier base point.
    std::vector<std::uint32_t> gen_idx;
    // Schreier vector for the orbit of beta: via[p] is the master index of the
    // generator whose edge reached p (VIA_ROOT at beta, VIA_NONE off-orbit),
    // parent[p] the preceding point.
    std::vector<std::int32_t> via;
    std::vector<Pt> parent;
    std::vector<Pt> orbit;  // in BFS discovery order
  };

  static constexpr std::int32_t VIA_NONE = -1;
  static constexpr std::int32_t VIA_ROOT = -2;

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return original_gens_; }
  const std::vector<Perm>& strong_generators() const { return sgens_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<Pt> base() const;
  const mpz_class& order() const { return order_; }

  // Order as a uint64; throws std::overflow_error if it does not fit.
  std::uint64_t order_u64() const;

  // True when the chain was certified by the deterministic Schreier sweep;
  // false when the order_hint early exit was taken instead.
  bool certified_by_sweep() const { return certified_by_sweep_; }

  bool contains(const Perm& g) const;

  // Sift g through levels [start_level, end); returns the residue.  If
  // drop_level is given it receives the level at which reduction stopped
  // (levels_.size() for a full reduction).
  Perm sift(const Perm& g, std::size_t start_level = 0,
            std::size_t* drop_level = nullptr) const;

  // The transversal element u_p at `level`, satisfying u_p(beta) = p.
  // Precondition: p lies in that level's orbit.
  Perm transversal_element(std::size_t level, Pt p) const;

  // Uniformly random element (exact, via one uniform transversal choice per
  // level).
  Perm random_element(std::mt19937_64& rng) const;

  // Visit every element exactly once, as products of transversal elements,
  // deepest level first.  Requires the order to fit in 64 bits; enforce a
  // caller-side bound via order_u64() before calling on anything big.
  template <class F>
  void for_each_element(F&& f) const {
    if (levels_.empty()) {
      f(identity_perm(degree_));
      return;
    }
    std::vector<std::vector<Perm>> trans(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      trans[l].reserve(levels_[l].orbit.size());
      for (Pt p : levels_[l].orbit) trans[l].push_back(transversal_element(l, p));
    }
    // elems(l) = elems(l+1) * T_l, so a full element is t_{L-1} ... t_1 t_0
    // (left-to-right).  Depth-first over the choice vector.
    enumerate_rec(trans, levels_.size(), identity_perm(degree_), f);
  }

  std::vector<Perm> elements(std::uint64_t bound) const;

 private:
  template <class F>
  void enumerate_rec(const std::vector<std::vector<Perm>>& trans, std::size_t l,
                     const Perm& acc, F&& f) const {
    if (l == 0) {
      f(acc);
      return;
    }
    for (const Perm& t : trans[l - 1]) enumerate_rec(trans, l - 1, compose(acc, t), f);
  }

  friend StabChain build_bsgs(const std::vector<Perm>& gens, const BsgsOptions& opt);
  friend struct BsgsBuilder;  // the construction driver in bsgs.cpp

  std::size_t degree_ = 0;
  std::vector<Perm> original_gens_;
  std::vector<Perm> sgens_;   // master strong generator list
  std::vector<Perm> sinvs_;   // inverses, parallel to sgens_
  std::vector<Level> levels_;
  mpz_class order_ = 1;
  bool certified_by_sweep_ = false;
};

using PermutationGroup = StabChain;

StabChain build_bsgs(const std::vector<Perm>& gens, const BsgsOptions& opt = {});

// Group generated by an element list (same machinery; named to match its role
// at call sites that pass arbitrary elements rather than a curated set).
inline StabChain subgroup_generated(const std::vector<Perm>& elems,
                                    const BsgsOptions& opt = {}) {
  return build_bsgs(elems, opt);
}

}  // namespace permcore
