#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "cgroupkit/cgroup.hpp"
#include "permcore/bsgs.hpp"
#include "permcore/perm.hpp"
#include "reegroups/companions.hpp"

using permcore::Perm;
using permcore::Pt;

namespace {

Perm from_images(std::initializer_list<Pt> imgs) {
  Perm p;
  p.img.assign(imgs);
  REQUIRE(permcore::is_valid_image_vector(p.img));
  return p;
}

// The Coxeter generators of S4: adjacent transpositions.
std::vector<Perm> s4_coxeter() {
  return {from_images({1, 0, 2, 3}), from_images({0, 2, 1, 3}), from_images({0, 1, 3, 2})};
}

}  // namespace

TEST_CASE("string condition on the S4 Coxeter system") {
  auto gens = s4_coxeter();
  auto res = cgk::check_string(gens);
  CHECK(res.involutions_ok);
  CHECK(res.string_ok);
  CHECK_FALSE(res.degenerate);
  CHECK(res.schlafli == std::vector<std::uint64_t>{3, 3});
  CHECK(res.ok());
}

TEST_CASE("string condition failures") {
  // A non-involution in the tuple.
  auto bad = cgk::check_string({from_images({1, 2, 0}), from_images({0, 2, 1})});
  CHECK_FALSE(bad.involutions_ok);
  CHECK_FALSE(bad.ok());
  // Non-adjacent generators that do not commute: (0 1), (1 2), (0 1) shifted.
  auto noncomm = cgk::check_string(
      {from_images({1, 0, 2, 3}), from_images({0, 2, 1, 3}), from_images({1, 0, 2, 3})});
  CHECK(noncomm.involutions_ok);
  CHECK_FALSE(noncomm.string_ok);  // rho_0 rho_2 is the identity, order 1
  // Degenerate but legal: adjacent commuting pair.
  auto degen = cgk::check_string({from_images({1, 0, 2, 3}), from_images({0, 1, 3, 2})});
  CHECK(degen.ok());
  CHECK(degen.degenerate);
  CHECK(degen.schlafli == std::vector<std::uint64_t>{2});
}

TEST_CASE("rank-2 dihedral tuple of order 74") {
  const unsigned n = 37;
  Perm s0 = permcore::identity_perm(n), s1 = permcore::identity_perm(n);
  for (unsigned i = 0; i < n; ++i) {
    s0.img[i] = (n - i) % n;        // i -> -i
    s1.img[i] = (n + 1 - i) % n;    // i -> 1-i
  }
  auto res = cgk::check_string({s0, s1});
  CHECK(res.ok());
  CHECK(res.schlafli == std::vector<std::uint64_t>{37});
  auto inter = cgk::check_intersection({s0, s1});
  CHECK(inter.ok);
}

TEST_CASE("intersection property holds for the S4 Coxeter system") {
  auto res = cgk::check_intersection(s4_coxeter());
  CHECK(res.ok);
  CHECK_FALSE(res.refused);
}

TEST_CASE("intersection property fails inside the Klein four group") {
  // rho_0 = (0 1), rho_1 = (2 3), rho_2 = (0 1)(2 3): a string tuple whose
  // parabolics <rho_0, rho_1> and <rho_1, rho_2> coincide (the whole V4), so
  // their intersection strictly exceeds <rho_1>.
  auto res = cgk::check_intersection(
      {from_images({1, 0, 2, 3}), from_images({0, 1, 3, 2}), from_images({1, 0, 3, 2})});
  CHECK_FALSE(res.ok);
  CHECK_FALSE(res.refused);
  CHECK_FALSE(res.detail.empty());
}

TEST_CASE("coset geometry of the S4 Coxeter system is the tetrahedron") {
  auto gens = s4_coxeter();
  auto G = permcore::build_bsgs(gens);
  REQUIRE(G.order() == 24);
  auto geo = cgk::build_coset_geometry(gens, G);
  REQUIRE(geo.face_counts.size() == 3);
  CHECK(geo.face_counts[0] == 4);  // vertices
  CHECK(geo.face_counts[1] == 6);  // edges
  CHECK(geo.face_counts[2] == 4);  // triangles
  CHECK(geo.flag_count == 24);
  CHECK(geo.thin_checked);
  CHECK(geo.thin);
  CHECK(geo.materialized);
  // Incident (vertex, edge) pairs: |G| / |G_0 ∩ G_1| = 24 / 2.
  CHECK(geo.incidences.at({0, 1}) == 12);
  CHECK(geo.incidences.at({0, 2}) == 12);
  CHECK(geo.incidences.at({1, 2}) == 12);
}

TEST_CASE("N0 of a dihedral subgroup of PSL(2,8)") {
  auto G = ree::build_psl28();
  // A D14: an involution together with one of its order-7 partners.
  std::vector<Perm> els = G.elements(600);
  Perm invol, partner;
  bool found = false;
  for (const Perm& a : els) {
    if (!permcore::is_involution(a)) continue;
    for (const Perm& b : els) {
      if (!permcore::is_involution(b)) continue;
      if (permcore::element_order(permcore::compose(a, b)) == 7) {
        invol = a;
        partner = b;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  REQUIRE(found);
  auto D = permcore::build_bsgs({invol, partner});
  REQUIRE(D.order() == 14);
  auto N0 = cgk::n_zero(G, D);
  CHECK(N0.order() == 14);
  for (const Perm& g : N0.generators()) CHECK(D.contains(g));
}

TEST_CASE("tail normalizer condition") {
  // S4 Coxeter triple: rho_0 commutes with rho_2 but moves <rho_1, rho_2>.
  CHECK(cgk::tail_normalizer_condition(s4_coxeter()));
  // Degenerate counterexample: all three in one Klein four group, where
  // rho_0 normalizes everything.
  CHECK_FALSE(cgk::tail_normalizer_condition(
      {from_images({1, 0, 2, 3}), from_images({0, 1, 3, 2}), from_images({1, 0, 3, 2})}));
}
