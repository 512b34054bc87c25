#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <set>

#include "permcore/perm.hpp"
#include "rank3build/rank3.hpp"
#include "reegroups/ree.hpp"

TEST_CASE("R(3) involutions generate only the derived subgroup") {
  auto R3 = ree::build_ree3();
  auto rep = rank3::ree3_involution_closure(R3);
  CHECK(rep.group_order == 1512);
  CHECK(rep.closure_order == 504);
  CHECK(rep.derived_order == 504);
  CHECK(rep.index == 3);
  CHECK(rep.closure_is_derived);
  CHECK(rep.proper);
}

TEST_CASE("exhaustive rank-3 classification of PSL(2,8)") {
  auto rep = rank3::classify_rank3_psl28();
  CHECK(rep.involutions == 63);
  CHECK(rep.class_count == 14);
  CHECK(rep.classes.size() == 14);
  CHECK(rep.class_count_up_to_duality == 7);
  CHECK(rep.all_verified);

  // The realized Schlafli types of the ordered-triple orbits, with
  // multiplicity; duality pairs them into 7 classes, none self-dual.
  std::multiset<std::array<std::uint64_t, 2>> types;
  for (const auto& c : rep.classes) types.insert(c.schlafli);
  std::multiset<std::array<std::uint64_t, 2>> expected{
      {3, 7}, {7, 3}, {3, 9}, {9, 3}, {7, 7}, {7, 7}, {7, 9},
      {7, 9}, {7, 9}, {9, 7}, {9, 7}, {9, 7}, {9, 9}, {9, 9}};
  CHECK(types == expected);

  // Bookkeeping: every orbit has the size a free Aut-action forces, the
  // orbits partition the certified triples, every class representative
  // passes the tail normalizer condition, and no class is self-dual.
  std::uint64_t total = 0;
  for (const auto& c : rep.classes) {
    total += c.orbit_size;
    CHECK(c.orbit_size == 1512);
    CHECK(c.verified);
    CHECK(c.tail_ok);
    CHECK(c.dual_is_distinct);
  }
  CHECK(total == rep.cgroup_triples);
  CHECK(rep.cgroup_triples == 21168);
  CHECK(rep.cgroup_triples <= rep.generating_triples);
  CHECK(rep.generating_triples <= rep.string_triples);
}

TEST_CASE("randomized construction finds a {37, 3^k} representation of R(27)") {
  auto R27 = ree::build_ree27();
  auto cert = rank3::lemma_rank3_construct(R27, 12345);
  REQUIRE(cert.ok);
  CHECK(cert.failure_stage.empty());
  REQUIRE(cert.schlafli.size() == 2);
  CHECK(cert.schlafli[0] == 37);
  const auto n = cert.schlafli[1];
  CHECK((n == 3 || n == 9 || n == 27));
  CHECK(cert.generated_order == R27.params.order);
  CHECK(cert.b0_b2_meet == 0);
  CHECK(cert.b1_b2_meet == 1);
  CHECK(cert.intersection_ok);
  CHECK(cert.tail_condition_ok);
  // The three generators really are involutions of the group.
  for (const permcore::Perm* p : {&cert.rho0, &cert.rho1, &cert.rho2}) {
    CHECK(permcore::element_order(*p) == 2);
    CHECK(R27.group.contains(*p));
  }
}
