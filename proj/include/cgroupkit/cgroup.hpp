#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permcore/bsgs.hpp"

namespace cgk {

struct StringCheckResult {
  bool involutions_ok = false;  // every generator has order exactly 2
  bool string_ok = false;       // non-adjacent generators commute
  bool degenerate = false;      // some adjacent product has order 2
  std::vector<std::uint64_t> schlafli;  // orders of adjacent products
  bool ok() const { return involutions_ok && string_ok; }
};

// String condition for an ordered involution tuple (rho_0, ..., rho_{n-1}):
// |rho_i rho_j| = 2 whenever |i - j| >= 2.  Reports the Schlafli symbol
// {|rho_0 rho_1|, ..., |rho_{n-2} rho_{n-1}|} and flags degenerate entries.
StringCheckResult check_string(const std::vector<permcore::Perm>& gens);

struct IntersectionCheckResult {
  bool ok = false;
  bool refused = false;  // a needed parabolic exceeded the bound
  std::string detail;    // failing subset pair, or refusal reason
};

// Intersection property: <rho_j : j in J> ∩ <rho_j : j in K> = <rho_j : j in
// J ∩ K> for all subsets.  Pairs where one subset contains the other hold
// trivially and are skipped; every incomparable pair is checked exactly, by
// enumerating the two parabolic subgroups and comparing the actual
// element-set intersection against the parabolic of J ∩ K.  For rank 3 every
// participating parabolic is dihedral or smaller, so the exact check always
// runs; a parabolic larger than `parabolic_bound` causes an explicit refusal
// rather than a silent partial answer.
IntersectionCheckResult check_intersection(const std::vector<permcore::Perm>& gens,
                                           std::uint64_t parabolic_bound = 1000000);

// N^0_G(H): the subgroup of N_G(H) generated by its involutions (trivial if
// the normalizer has none).  Brute force over G; |G| <= bound enforced.
permcore::StabChain n_zero(const permcore::StabChain& G, const permcore::StabChain& H,
                           std::uint64_t bound = 1000000);

struct CosetGeometry {
  std::vector<mpz_class> face_counts;  // one per type: |G| / |<gens minus i>|
  mpz_class flag_count;                // |G| once the parabolics intersect trivially
  bool thin = false;                   // every corank-1 intersection is <rho_i>, order 2
  bool thin_checked = false;
  bool materialized = false;
  // Incidence counts between face types, only filled when materialized.
  std::map<std::pair<int, int>, std::uint64_t> incidences;
};

// Coset geometry of a verified string tuple over the group it generates.
// `group` must be a certified chain for <gens> — generation is the caller's
// certificate (this function asserts membership of the generators, not
// generation).  Faces of type i are cosets of G_i = <gens minus rho_i>; face
// counts are exact mpz quotients.  When |G| <= materialize_bound the cosets
// are actually listed and pairwise incidences counted, and the flag count is
// verified to equal |G| by counting distinct maximal flags; otherwise the
// geometry stays counts-only.  Thinness is checked whenever every maximal
// parabolic fits under parabolic_bound.
CosetGeometry build_coset_geometry(const std::vector<permcore::Perm>& gens,
                                   const permcore::StabChain& group,
                                   std::uint64_t materialize_bound = 100000,
                                   std::uint64_t parabolic_bound = 1000000);

// The involution-normalizer condition rank-3 representations inherit from the
// ambient geometry: rho_0 normalizes <rho_2> but does not normalize
// <rho_1, rho_2>.  Exact at any degree (the second part only needs membership
// tests against the dihedral <rho_1, rho_2>).
bool tail_normalizer_condition(const std::vector<permcore::Perm>& gens);

}  // namespace cgk
