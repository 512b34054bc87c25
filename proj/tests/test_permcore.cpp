#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "permcore/bsgs.hpp"
#include "permcore/perm.hpp"
#include "permcore/random.hpp"
#include "permcore/smallgroup.hpp"

using namespace permcore;

namespace {

Perm from_images(std::initializer_list<Pt> imgs) {
  Perm p;
  p.img.assign(imgs);
  REQUIRE(is_valid_image_vector(p.img));
  return p;
}

Perm cycle_n(std::size_t n) {
  Perm p = identity_perm(n);
  for (std::size_t i = 0; i < n; ++i) p.img[i] = static_cast<Pt>((i + 1) % n);
  return p;
}

Perm reflect_n(std::size_t n) {
  Perm p = identity_perm(n);
  for (std::size_t i = 0; i < n; ++i) p.img[i] = static_cast<Pt>((n - i) % n);
  return p;
}

}  // namespace

TEST_CASE("compose is left-to-right") {
  // (0 1) then (1 2): 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1.
  const Perm s = from_images({1, 0, 2});
  const Perm t = from_images({0, 2, 1});
  const Perm st = compose(s, t);
  CHECK(st.img == std::vector<Pt>{2, 0, 1});
  CHECK(cycle_string(st) == "(0 2 1)");
  // The other order gives the other 3-cycle.
  CHECK(compose(t, s).img == std::vector<Pt>{1, 2, 0});
}

TEST_CASE("inverse, conjugate, commutator") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    Perm p = identity_perm(11), g = identity_perm(11);
    std::shuffle(p.img.begin(), p.img.end(), rng);
    std::shuffle(g.img.begin(), g.img.end(), rng);
    CHECK(is_identity(compose(p, inverse(p))));
    CHECK(is_identity(compose(inverse(p), p)));
    // conjugate(p, g) = g^{-1} p g
    CHECK(conjugate(p, g).img == compose(compose(inverse(g), p), g).img);
    // [p, g] = p^{-1} g^{-1} p g
    CHECK(commutator(p, g).img ==
          compose(compose(inverse(p), inverse(g)), compose(p, g)).img);
  }
  // Commuting elements have trivial commutator.
  const Perm a = from_images({1, 0, 2, 3});
  const Perm b = from_images({0, 1, 3, 2});
  CHECK(is_identity(commutator(a, b)));
}

TEST_CASE("element order, power, involutions") {
  CHECK(element_order(cycle_n(6)) == 6);
  CHECK(element_order(identity_perm(5)) == 1);
  // 2-cycle plus 3-cycle: order 6.
  const Perm mixed = from_images({1, 0, 3, 4, 2});
  CHECK(element_order(mixed) == 6);
  CHECK(is_identity(power(mixed, 6)));
  CHECK(element_order(power(mixed, 3)) == 2);
  CHECK(is_involution(power(mixed, 3)));
  CHECK_FALSE(is_involution(identity_perm(4)));
  CHECK(is_involution(from_images({1, 0})));
}

TEST_CASE("fixed points") {
  const Perm p = from_images({0, 2, 1, 3, 4});
  CHECK(fixed_points(p) == std::vector<Pt>{0, 3, 4});
  CHECK(fixed_point_count(p) == 3);
}

TEST_CASE("BSGS on S4") {
  const Perm t = from_images({1, 0, 2, 3});
  const Perm c = from_images({1, 2, 3, 0});
  StabChain G = build_bsgs({t, c});
  CHECK(G.order() == 24);
  CHECK(G.certified_by_sweep());
  // Membership: every product of generators is inside, a 5-point perm throws.
  CHECK(G.contains(compose(t, c)));
  CHECK(G.contains(identity_perm(4)));
  std::vector<Perm> els = G.elements(30);
  CHECK(els.size() == 24);
  std::set<std::vector<Pt>> distinct;
  for (const Perm& g : els) distinct.insert(g.img);
  CHECK(distinct.size() == 24);
  // Random elements are members.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) CHECK(G.contains(G.random_element(rng)));
  // Sifting a member leaves the identity.
  CHECK(is_identity(G.sift(compose(c, t))));
}

TEST_CASE("BSGS on the dihedral group of order 74") {
  StabChain D = build_bsgs({cycle_n(37), reflect_n(37)});
  CHECK(D.order() == 74);
  CHECK(D.certified_by_sweep());
  auto invols = involutions_enumerate(D);
  CHECK(invols.size() == 37);  // the 37 reflections; the rotation half has odd order
}

TEST_CASE("order hint early exit is consistent") {
  const Perm t = from_images({1, 0, 2, 3});
  const Perm c = from_images({1, 2, 3, 0});
  BsgsOptions opt;
  opt.order_hint = 24;
  StabChain G = build_bsgs({t, c}, opt);
  CHECK(G.order() == 24);
  std::uint64_t seen = 0;
  G.for_each_element([&](const Perm&) { ++seen; });
  CHECK(seen == 24);
}

TEST_CASE("elements bound is enforced") {
  const Perm t = from_images({1, 0, 2, 3});
  const Perm c = from_images({1, 2, 3, 0});
  StabChain G = build_bsgs({t, c});
  CHECK_THROWS_AS((void)G.elements(23), std::length_error);
}

TEST_CASE("derived subgroup chain of S4") {
  const Perm t = from_images({1, 0, 2, 3});
  const Perm c = from_images({1, 2, 3, 0});
  StabChain S4 = build_bsgs({t, c});
  StabChain A4 = derived_subgroup(S4);
  CHECK(A4.order() == 12);
  StabChain V = derived_subgroup(A4);
  CHECK(V.order() == 4);
  StabChain one = derived_subgroup(V);
  CHECK(one.order() == 1);
}

TEST_CASE("center of the dihedral group of order 8") {
  StabChain D8 = build_bsgs({cycle_n(4), reflect_n(4)});
  CHECK(D8.order() == 8);
  CHECK(center_elements(D8).size() == 2);
}

TEST_CASE("centralizer of an involution in S4, brute force vs dihedral trick") {
  const Perm t = from_images({1, 0, 2, 3});
  const Perm c = from_images({1, 2, 3, 0});
  StabChain S4 = build_bsgs({t, c});
  const Perm rho = from_images({1, 0, 3, 2});  // (0 1)(2 3)
  StabChain brute = centralizer_bruteforce(S4, rho);
  CHECK(brute.order() == 8);
  auto res = centralizer_of_involution(S4, rho, mpz_class(8), 99);
  CHECK(res.reached_target);
  CHECK(res.group.order() == 8);
  // Same subgroup, element by element.
  for (const Perm& g : res.group.elements(10)) CHECK(brute.contains(g));
}

TEST_CASE("involution class orbit, exact and fixed-set keyed") {
  const Perm t = from_images({1, 0, 2, 3});
  const Perm c = from_images({1, 2, 3, 0});
  StabChain S4 = build_bsgs({t, c});
  const Perm rho = from_images({1, 0, 2, 3});  // a transposition
  std::uint64_t visited = 0;
  auto stats = involution_class_orbit(S4, rho, [&](const Perm& g) {
    ++visited;
    CHECK(is_involution(g));
  });
  CHECK(stats.complete);
  CHECK(stats.count == 6);   // six transpositions
  CHECK(visited == 6);
  CHECK_FALSE(stats.fixed_set_keyed);
  // Force the large-group strategy: transpositions of S4 have distinct fixed
  // pairs, so the fixed-set keyed walk sees all six as well.
  auto big = involution_class_orbit(S4, rho, [](const Perm&) {}, 2000000, 1);
  CHECK(big.fixed_set_keyed);
  CHECK(big.complete);
  CHECK(big.count == 6);
}

TEST_CASE("normalizer brute force") {
  const Perm t = from_images({1, 0, 2, 3});
  const Perm c = from_images({1, 2, 3, 0});
  StabChain S4 = build_bsgs({t, c});
  // V4 is normal: its normalizer is everything.
  StabChain V = build_bsgs({from_images({1, 0, 3, 2}), from_images({2, 3, 0, 1})});
  CHECK(V.order() == 4);
  CHECK(normalizer_bruteforce(S4, V).order() == 24);
  // A 3-cycle generates one of four Sylow 3-subgroups; its normalizer is S3-sized.
  StabChain C3 = build_bsgs({from_images({1, 2, 0, 3})});
  CHECK(C3.order() == 3);
  CHECK(normalizer_bruteforce(S4, C3).order() == 6);
}

TEST_CASE("product replacement sampler stays inside the group") {
  const Perm t = from_images({1, 0, 2, 3});
  const Perm c = from_images({1, 2, 3, 0});
  StabChain S4 = build_bsgs({t, c});
  ProductReplacementSampler smp({t, c}, 1234);
  for (int i = 0; i < 50; ++i) CHECK(S4.contains(smp.next()));
}

TEST_CASE("derive_seed separates streams") {
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
  CHECK(derive_seed(5, 9) == derive_seed(5, 9));
}
