#pragma once

#include <functional>
#include <vector>

#include "permcore/bsgs.hpp"

namespace permcore {

// Every involution of G, in element-enumeration order (deterministic for a
// fixed chain).  Guard: throws std::length_error if |G| > bound.
std::vector<Perm> involutions_enumerate(const StabChain& G, std::uint64_t bound = 100000);

struct ClassOrbitStats {
  std::uint64_t count = 0;   // distinct conjugates found (exact when complete)
  bool complete = false;     // false if a budget cut the walk short
  bool fixed_set_keyed = false;  // which dedup strategy ran
};

// Conjugacy-class orbit of an involution rho under G, streamed to `visit`
// without ever materializing the whole class.
//
// Two strategies, picked automatically:
//  - If |G| fits under `small_bound`, walk conjugates directly with exact
//    whole-permutation dedup (handles fixed-point-free involutions too).
//  - Otherwise rho must have a nonempty fixed-point set, and the walk runs on
//    fixed sets: conjugation maps fix(p) to its image set, so the class maps
//    onto the orbit of fix(rho), and nodes are deduplicated by exact sorted
//    point sets (28 points instead of 19684 entries per node at q = 27).  The
//    reported count is the number of distinct fixed sets, which equals the
//    class size whenever distinct class members have distinct fixed sets.
//    That injectivity is not assumed silently here: callers that rely on the
//    count (the q = 27 battery) cross-certify it against |G| / |C_G(rho)| with
//    a sweep-certified centralizer, which also proves the bijection.
//    Permutations handed to `visit` are reconstructed by replaying the BFS
//    path, and each is checked to be a genuine conjugate shape (involution,
//    same fixed-set size).
ClassOrbitStats involution_class_orbit(
    const StabChain& G, const Perm& rho,
    const std::function<void(const Perm&)>& visit = {},
    std::uint64_t max_class = 2000000, std::uint64_t small_bound = 100000);

struct CentralizerResult {
  StabChain group;
  std::uint64_t draws = 0;       // random elements consumed
  bool reached_target = false;
};

// Centralizer of an involution by the dihedral trick.  Draw random g in G and
// form x = rho * rho^g.  If |x| = m is odd, g * x^((m-1)/2) centralizes rho;
// if m is even, x^(m/2) is a central involution of the dihedral group
// <rho, rho^g> and also centralizes rho.  Collected elements are each verified
// to commute with rho (defensive, O(n)), so the generated group is always a
// subgroup of C_G(rho).  The chain is grown with target_order as its order
// hint and the search stops once the hint is reached.
//
// Soundness of the equality claim: reaching an orbit product equal to
// target_order proves |<collected>| >= target_order.  When target_order is the
// true centralizer order — certified independently, e.g. once per group via a
// fully swept chain or an orbit-stabilizer count — containment in C_G(rho)
// turns that into equality, and a chain whose orbit product equals the true
// group order is automatically complete.  reached_target reports whether the
// run converged within max_draws.
CentralizerResult centralizer_of_involution(const StabChain& G, const Perm& rho,
                                            const mpz_class& target_order,
                                            std::uint64_t seed,
                                            std::uint64_t max_draws = 4000,
                                            bool sweep_certify = false);

// Brute-force centralizer for enumerable G (|G| <= bound).
StabChain centralizer_bruteforce(const StabChain& G, const Perm& rho,
                                 std::uint64_t bound = 100000);

// Brute-force normalizer N_G(H) for enumerable G (|G| <= bound).
StabChain normalizer_bruteforce(const StabChain& G, const StabChain& H,
                                std::uint64_t bound = 1000000);

// Derived subgroup G' as the normal closure of the generator commutators.
// Each closure iteration rebuilds a fully certified chain, so the final order
// is exact.
StabChain derived_subgroup(const StabChain& G);

// Elements of the center Z(G) (an element is central iff it commutes with
// every generator).  Streams |G| elements; |G| <= bound enforced.
std::vector<Perm> center_elements(const StabChain& G, std::uint64_t bound = 100000);

}  // namespace permcore
