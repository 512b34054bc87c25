#pragma once

// Rank-3 string C-group representations of the small Ree groups.
//
// Two constructions live here: a randomized one for R(27), which finds a
// representation of type {37, n} by searching inside an involution
// centralizer, and an exhaustive classifier for PSL(2,8) = R(3)', which
// enumerates all rank-3 representations up to conjugacy in PGammaL(2,8).
// R(3) itself has none: its involutions generate only the derived subgroup,
// and ree3_involution_closure certifies that.

#include <array>
#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "permcore/bsgs.hpp"
#include "permcore/perm.hpp"
#include "reegroups/ree.hpp"

namespace rank3 {

using permcore::Perm;
using permcore::StabChain;

// ---------------------------------------------------------------------------
// Randomized construction for R(27).
//
// Recipe: find an involution rho_0 and a second involution rho_1 with
// |rho_0 rho_1| = 37; inside C(rho_0) (order 19656, found by the dihedral
// trick) scan the 703 involutions, in the deterministic order of their fixed
// 28-point blocks, for rho_2 whose block misses the block of rho_0 entirely
// and meets the block of rho_1 in exactly one point, with |rho_1 rho_2| a
// power of 3.  Membership in the centralizer makes (rho_0, rho_2) commute, so
// the string condition is automatic; generation and the intersection
// property are then verified outright.

struct ConstructBudgets {
  std::uint64_t element_draws = 3000;      // random elements for the rho_0 / rho_1 search
  std::uint64_t centralizer_draws = 4000;  // dihedral-trick draws inside C(rho_0)
  std::uint64_t generation_attempts = 40;  // candidate rho_2 full generation checks
};

struct ConstructCertificate {
  bool ok = false;
  std::uint64_t seed = 0;
  std::string failure_stage;  // empty on success: rho0 / rho1 / centralizer / rho2 / generation
  std::vector<std::uint64_t> schlafli;  // {37, n} with n in {3, 9, 27}
  mpz_class generated_order;            // order of <rho_0, rho_1, rho_2>
  std::uint64_t draws = 0;              // random elements consumed in total
  std::size_t b0_b2_meet = 0;           // |B_0 ∩ B_2|, required 0
  std::size_t b1_b2_meet = 1;           // |B_1 ∩ B_2|, required 1
  bool intersection_ok = false;
  bool tail_condition_ok = false;  // rho_0 normalizes <rho_2> but not <rho_1, rho_2>
  Perm rho0, rho1, rho2;
};

ConstructCertificate lemma_rank3_construct(const ree::ReeGroup& R, std::uint64_t seed,
                                           const ConstructBudgets& budgets = {});

// ---------------------------------------------------------------------------
// R(3): the subgroup generated by all involutions is proper (it is the
// derived subgroup, of index 3), so no involution tuple can generate R(3).

struct InvolutionClosureReport {
  mpz_class group_order;
  mpz_class closure_order;
  mpz_class derived_order;
  mpz_class index;               // |G| / |<involutions>|
  bool closure_is_derived = false;
  bool proper = false;
};

InvolutionClosureReport ree3_involution_closure(const ree::ReeGroup& R3);

// ---------------------------------------------------------------------------
// Exhaustive classifier for PSL(2,8).
//
// Runs over all ordered triples of involutions satisfying the string
// condition with Schlafli entries >= 3, keeps the generating triples with
// the intersection property, and groups them into orbits under conjugation
// by PGammaL(2,8) = Aut(PSL(2,8)).  Orbits are also paired with the orbit of
// the reversed triple (duality).
//
// A generating triple has trivial stabilizer in Aut, so every orbit has size
// exactly 1512 and the orbit count is forced: 21168 certified triples fall
// into 14 orbits, which duality pairs into exactly 7 classes (none
// self-dual), with Schlafli symbols {3,7}, {3,9}, {7,7} (x2 as ordered
// orbits), {7,9} (x3) and {9,9} (x2).  Catalogues of polyhedra list each
// dual pair once, which is the "seven examples" headline count; both numbers
// are reported.

struct Rank3Class {
  std::array<std::uint64_t, 2> schlafli;
  std::uint64_t orbit_size = 0;      // ordered triples in the orbit
  std::array<std::uint32_t, 3> rep;  // involution-list positions of the lex-min triple
  bool dual_is_distinct = false;     // reversal lies in a different orbit
  bool verified = false;             // representative re-checked through cgroupkit
  bool tail_ok = false;  // rho_0 normalizes <rho_2> but not <rho_1, rho_2>
};

struct ClassifyReport {
  std::uint64_t involutions = 0;
  std::uint64_t string_triples = 0;      // ordered, string condition, entries >= 3
  std::uint64_t generating_triples = 0;  // ... that generate the whole group
  std::uint64_t cgroup_triples = 0;      // ... with the intersection property too
  std::vector<Rank3Class> classes;       // sorted by representative
  std::uint64_t class_count = 0;
  std::uint64_t class_count_up_to_duality = 0;
  bool all_verified = false;
};

ClassifyReport classify_rank3_psl28();

}  // namespace rank3
