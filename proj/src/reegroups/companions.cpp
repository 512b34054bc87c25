#include "reegroups/companions.hpp"

#include <stdexcept>

namespace ree {

using permcore::Perm;
using permcore::Pt;
using permcore::StabChain;

namespace {

// ---- GF(8), local to this translation unit ---------------------------------
// Elements are bit masks b0 + b1*x + b2*x^2 with x^3 = x + 1.
struct GF8 {
  std::uint8_t mul[8][8];
  std::uint8_t inv[8];
  GF8() {
    auto reduce = [](unsigned v) {
      // reduce a degree-<=4 polynomial mod x^3 + x + 1 (bits over F_2)
      for (int d = 4; d >= 3; --d)
        if (v & (1u << d)) v ^= (0b1011u << (d - 3));
      return static_cast<std::uint8_t>(v & 7u);
    };
    for (unsigned a = 0; a < 8; ++a)
      for (unsigned b = 0; b < 8; ++b) {
        unsigned acc = 0;
        for (int i = 0; i < 3; ++i)
          if (a & (1u << i)) acc ^= b << i;
        mul[a][b] = reduce(acc);
      }
    inv[0] = 0;
    for (unsigned a = 1; a < 8; ++a)
      for (unsigned b = 1; b < 8; ++b)
        if (mul[a][b] == 1) inv[a] = static_cast<std::uint8_t>(b);
  }
};

const GF8& gf8() {
  static const GF8 f;
  return f;
}

Perm mobius_gf8(std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d) {
  const GF8& F = gf8();
  // det must be nonzero
  const std::uint8_t det = static_cast<std::uint8_t>(F.mul[a][d] ^ F.mul[b][c]);
  if (det == 0) throw std::invalid_argument("mobius_gf8: singular matrix");
  Perm p(9);  // 0..7 field elements, 8 = infinity
  for (Pt x = 0; x < 8; ++x) {
    const std::uint8_t den = static_cast<std::uint8_t>(F.mul[c][x] ^ d);
    if (den == 0)
      p.img[x] = 8;
    else {
      const std::uint8_t num = static_cast<std::uint8_t>(F.mul[a][x] ^ b);
      p.img[x] = F.mul[num][F.inv[den]];
    }
  }
  p.img[8] = (c == 0) ? 8 : F.mul[a][F.inv[c]];
  return p;
}

}  // namespace

StabChain build_psl2(const gf3::Field& F) {
  const std::uint32_t q = F.q();
  const Pt inf = q;
  // T: x -> x + 1
  Perm T(q + 1);
  for (Pt x = 0; x < q; ++x) T.img[x] = F.add(static_cast<gf3::El>(x), 1);
  T.img[inf] = inf;
  // D: x -> g^2 x for a multiplicative generator g (the image of the diagonal
  // torus in PSL).  T alone only yields translations by the prime field; the
  // D-conjugates of T give translations by every nonzero square, whose
  // additive span is the whole field, so <T, D, S> is the full group.
  const gf3::El g2 = F.mul(F.generator(), F.generator());
  Perm D(q + 1);
  for (Pt x = 0; x < q; ++x) D.img[x] = F.mul(g2, static_cast<gf3::El>(x));
  D.img[inf] = inf;
  // S: x -> -1/x
  Perm S(q + 1);
  for (Pt x = 1; x < q; ++x) S.img[x] = F.neg(F.inv(static_cast<gf3::El>(x)));
  S.img[0] = inf;
  S.img[inf] = 0;
  StabChain G = permcore::build_bsgs({T, D, S});
  // |PSL(2,q)| = q(q^2-1)/gcd(2, q-1); char 3 here, so q is odd and the gcd is 2.
  const mpz_class expect = mpz_class(q) * (mpz_class(q) * q - 1) / 2;
  if (G.order() != expect) throw std::logic_error("build_psl2: wrong order");
  return G;
}

// x -> x + 1, x -> zx (z the class of x, a multiplicative generator), and
// x -> 1/x.  In char 2 every scalar is a square, so all three lie in
// PSL(2, 8) = PGL(2, 8); the scaling is needed because x -> x + 1 and
// x -> 1/x alone only generate a PGL(2, 2) over the prime field.
static std::vector<Perm> psl28_generators() {
  return {mobius_gf8(1, 1, 0, 1), mobius_gf8(2, 0, 0, 1), mobius_gf8(0, 1, 1, 0)};
}

StabChain build_psl28() {
  StabChain G = permcore::build_bsgs(psl28_generators());
  if (G.order() != 504) throw std::logic_error("build_psl28: wrong order");
  return G;
}

StabChain build_pgammal28() {
  std::vector<Perm> gens = psl28_generators();
  Perm frob(9);
  for (Pt x = 0; x < 8; ++x) frob.img[x] = gf8().mul[x][x];
  frob.img[8] = 8;
  gens.push_back(frob);
  StabChain G = permcore::build_bsgs(gens);
  if (G.order() != 1512) throw std::logic_error("build_pgammal28: wrong order");
  return G;
}

StabChain build_c2_x_psl2_27() {
  const gf3::Field& F = gf3::Field::gf27();
  const std::uint32_t q = F.q();
  const std::size_t n = q + 3;  // 28 projective points + the pair {28, 29}
  auto extend = [&](const Perm& p) {
    Perm r(n);
    for (Pt x = 0; x < q + 1; ++x) r.img[x] = p.img[x];
    r.img[q + 1] = q + 1;
    r.img[q + 2] = q + 2;
    return r;
  };
  Perm T(q + 1), D(q + 1), S(q + 1);
  for (Pt x = 0; x < q; ++x) T.img[x] = F.add(static_cast<gf3::El>(x), 1);
  T.img[q] = q;
  const gf3::El g2 = F.mul(F.generator(), F.generator());
  for (Pt x = 0; x < q; ++x) D.img[x] = F.mul(g2, static_cast<gf3::El>(x));
  D.img[q] = q;
  for (Pt x = 1; x < q; ++x) S.img[x] = F.neg(F.inv(static_cast<gf3::El>(x)));
  S.img[0] = q;
  S.img[q] = 0;
  Perm z(n);
  z.img[q + 1] = q + 2;
  z.img[q + 2] = q + 1;
  StabChain G = permcore::build_bsgs({extend(T), extend(D), extend(S), z});
  if (G.order() != 2 * 9828) throw std::logic_error("build_c2_x_psl2_27: wrong order");
  return G;
}

permcore::Perm c2_x_psl2_27_central_involution() {
  Perm z(30);
  z.img[28] = 29;
  z.img[29] = 28;
  return z;
}

}  // namespace ree
