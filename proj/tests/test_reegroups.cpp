#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "permcore/perm.hpp"
#include "permcore/smallgroup.hpp"
#include "reegroups/companions.hpp"
#include "reegroups/params.hpp"
#include "reegroups/ree.hpp"

using permcore::Perm;
using permcore::Pt;

TEST_CASE("Ree parameters at e = 0") {
  const auto P = ree::ree_parameters(0);
  CHECK(P.q == 3);
  CHECK(P.theta_exp == 3);
  CHECK(P.alpha == 1);
  CHECK(P.beta == 7);
  CHECK(P.block_size == 4);
  CHECK(P.degree == 28);
  CHECK(P.order == 1512);
  CHECK(P.involution_count == 63);
  CHECK(P.centralizer_order == 24);
  CHECK(P.block_count == 63);
}

TEST_CASE("Ree parameters at e = 1") {
  const auto P = ree::ree_parameters(1);
  CHECK(P.q == 27);
  CHECK(P.theta_exp == 9);
  CHECK(P.alpha == 19);
  CHECK(P.beta == 37);
  CHECK(P.alpha * P.beta == P.q * P.q - P.q + 1);
  CHECK(P.block_size == 28);
  CHECK(P.degree == 19684);
  CHECK(P.order == mpz_class("10073444472"));
  CHECK(P.involution_count == 512487);
  CHECK(P.centralizer_order == 19656);
  CHECK(P.block_count == 512487);
}

TEST_CASE("class size times centralizer order is the group order") {
  for (int e = 0; e <= 5; ++e) {
    const auto P = ree::ree_parameters(e);
    CHECK(P.involution_count * P.centralizer_order == P.order);
    CHECK(P.involution_count == P.block_count);
  }
}

TEST_CASE("PSL(2,8) companion") {
  auto G = ree::build_psl28();
  CHECK(G.degree() == 9);
  CHECK(G.order() == 504);
  // 2-transitivity: top orbit 9, next orbit 8.
  CHECK(G.levels().size() >= 2);
  CHECK(G.levels()[0].orbit.size() == 9);
  CHECK(G.levels()[1].orbit.size() == 8);
  CHECK(permcore::involutions_enumerate(G).size() == 63);
}

TEST_CASE("PGammaL(2,8) companion contains PSL(2,8)") {
  auto A = ree::build_pgammal28();
  CHECK(A.order() == 1512);
  auto G = ree::build_psl28();
  for (const Perm& g : G.generators()) CHECK(A.contains(g));
  CHECK(permcore::derived_subgroup(A).order() == 504);
  // Involutions do not leave the simple subgroup: same count as PSL(2,8).
  CHECK(permcore::involutions_enumerate(A).size() == 63);
}

TEST_CASE("PSL(2,q) companions over GF(3) and GF(27)") {
  auto small = ree::build_psl2(gf3::Field::gf3());
  CHECK(small.degree() == 4);
  CHECK(small.order() == 12);  // PSL(2,3) = A4
  auto big = ree::build_psl2(gf3::Field::gf27());
  CHECK(big.degree() == 28);
  CHECK(big.order() == 9828);
  // q = 27 is 3 mod 4: involutions of PSL(2,27) are fixed-point-free on the
  // projective line.
  auto invols = permcore::involutions_enumerate(big, 10000);
  CHECK(invols.size() == 351);
  for (const auto& t : invols) CHECK(permcore::fixed_point_count(t) == 0);
}

TEST_CASE("C2 x PSL(2,27) companion") {
  auto C = ree::build_c2_x_psl2_27();
  CHECK(C.degree() == 30);
  CHECK(C.order() == 19656);
  const Perm z = ree::c2_x_psl2_27_central_involution();
  CHECK(C.contains(z));
  for (const Perm& g : C.generators()) {
    CHECK(permcore::compose(z, g).img == permcore::compose(g, z).img);
  }
  // 351 involutions from the simple factor, each paired with z, plus z.
  CHECK(permcore::involutions_enumerate(C, 20000).size() == 703);
}

TEST_CASE("R(3) construction") {
  ree::ReeGroup R = ree::build_ree3();
  CHECK(R.params.e == 0);
  CHECK(R.group.degree() == 28);
  CHECK(R.group.order() == 1512);
  CHECK(R.group.certified_by_sweep());
  CHECK(R.group.levels()[0].orbit.size() == 28);
  CHECK(R.group.levels()[1].orbit.size() == 27);
  CHECK(permcore::is_involution(R.involution));
  CHECK(permcore::fixed_point_count(R.involution) == 4);
  // The involution class has the parameter-pinned size.
  auto stats = permcore::involution_class_orbit(R.group, R.involution, [](const Perm&) {});
  CHECK(stats.complete);
  CHECK(stats.count == 63);
}

TEST_CASE("twisted-coordinate model at e = 0 matches the coset construction") {
  ree::ReeGroup M = ree::build_ree_model(0);
  CHECK(M.group.degree() == 28);
  CHECK(M.group.order() == 1512);
  CHECK(M.group.certified_by_sweep());
  ree::ReeGroup R = ree::build_ree3();
  CHECK(M.group.order() == R.group.order());
}

TEST_CASE("model pieces at e = 1 without the full chain") {
  ree::ReeModel M(1);
  const auto& F = M.field();
  CHECK(M.point_count() == 19684);
  CHECK(M.infinity() == 19683);

  // Translations form a group of exponent 9: t(1,0,0) has order 9, central
  // translations t(0,0,c) have order 3.
  const Perm t100 = M.translation(1, 0, 0);
  CHECK(permcore::element_order(t100) == 9);
  const Perm t001 = M.translation(0, 0, 1);
  CHECK(permcore::element_order(t001) == 3);

  // The torus normalizes the translation with the weight-1 scaling law:
  // h^{ -1} t(a,0,0) h = t(l a, 0, 0).
  const gf3::El l = F.generator();
  const Perm h = M.torus(l);
  const Perm lhs = permcore::conjugate(t100, h);
  const Perm rhs = M.translation(F.mul(l, 1), 0, 0);
  CHECK(lhs.img == rhs.img);

  // Weyl flip: an involution swapping the origin and infinity.
  const Perm J = M.weyl();
  CHECK(permcore::is_involution(J));
  CHECK(J.img[M.infinity()] == M.point_index(0, 0, 0));
  CHECK(J.img[M.point_index(0, 0, 0)] == M.infinity());
  CHECK(permcore::fixed_point_count(J) == 28);

  // Torus order q - 1 at the generator.
  CHECK(permcore::element_order(h) == 26);
}

TEST_CASE("chart round trip at e = 1") {
  ree::ReeModel M(1);
  // The chart starts with 1 for affine points, 0 only at infinity, and the
  // first four coordinates determine the point.
  const auto c0 = M.chart(M.point_index(2, 5, 7));
  CHECK(c0[0] == 1);
  CHECK(c0[1] == 2);
  CHECK(c0[2] == 5);
  CHECK(c0[3] == 7);
  CHECK(M.chart(M.infinity())[0] == 0);
  CHECK(M.chart(M.infinity())[6] == 1);
}
