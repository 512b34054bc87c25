#include "gf3field/gf.hpp"

#include <stdexcept>

namespace gf3 {

namespace {

// Polynomials over F_3, little-endian coefficient vectors, arithmetic done
// directly on small ints.  Only used at table-build time.
using Poly = std::vector<int>;

Poly poly_from_index(std::uint32_t idx, int len) {
  Poly p(len);
  for (int i = 0; i < len; ++i) {
    p[i] = static_cast<int>(idx % 3);
    idx /= 3;
  }
  return p;
}

int poly_deg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 3;
  return r;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m) {
  const int dm = poly_deg(m);
  for (int d = poly_deg(a); d >= dm; d = poly_deg(a)) {
    const int c = a[d];  // leading coefficient to cancel (m is monic)
    for (int i = 0; i <= dm; ++i) {
      int k = d - dm + i;
      a[k] = ((a[k] - c * m[i]) % 3 + 3) % 3;
    }
  }
  a.resize(dm);
  return a;
}

bool poly_is_zero(const Poly& p) { return poly_deg(p) < 0; }

// Irreducibility by trial division: a polynomial of degree d <= 5 with no
// monic divisor of degree 1 .. d/2 is irreducible.
bool irreducible(const Poly& m) {
  const int d = poly_deg(m);
  for (int dd = 1; dd <= d / 2; ++dd) {
    std::uint32_t count = 1;
    for (int i = 0; i < dd; ++i) count *= 3;
    for (std::uint32_t idx = 0; idx < count; ++idx) {
      Poly f = poly_from_index(idx, dd + 1);
      f[dd] = 1;  // monic of degree dd
      if (poly_is_zero(poly_mod(m, f))) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(int twist_e) : e_(twist_e) {
  if (twist_e < 0 || twist_e > 2) throw std::invalid_argument("gf3::Field: need 0 <= e <= 2 (q <= 243)");
  deg_ = 2 * twist_e + 1;
  q_ = 1;
  for (int i = 0; i < deg_; ++i) q_ *= 3;

  // Choose the modulus.
  Poly m;
  if (deg_ == 1) {
    m = {0, 1};  // plain F_3; modulus is just x
  } else if (deg_ == 3) {
    m = {1, 2, 0, 1};  // x^3 - x + 1  (pinned)
  } else {
    // Smallest monic irreducible of this degree in index order.
    std::uint32_t count = 1;
    for (int i = 0; i < deg_; ++i) count *= 3;
    for (std::uint32_t idx = 0; idx < count; ++idx) {
      Poly cand = poly_from_index(idx, deg_ + 1);
      cand[deg_] = 1;
      if (irreducible(cand)) {
        m = cand;
        break;
      }
    }
    if (m.empty()) throw std::logic_error("gf3::Field: no irreducible modulus found");
  }
  mod_.assign(m.begin(), m.end());

  // Operation tables.
  addt_.resize(static_cast<std::size_t>(q_) * q_);
  mult_.resize(static_cast<std::size_t>(q_) * q_);
  negt_.resize(q_);
  invt_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const Poly pa = poly_from_index(a, deg_);
    Poly na(deg_);
    for (int i = 0; i < deg_; ++i) na[i] = (3 - pa[i]) % 3;
    std::uint32_t nidx = 0, mult3 = 1;
    for (int i = 0; i < deg_; ++i) {
      nidx += static_cast<std::uint32_t>(na[i]) * mult3;
      mult3 *= 3;
    }
    negt_[a] = static_cast<El>(nidx);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const Poly pb = poly_from_index(b, deg_);
      Poly s(deg_);
      for (int i = 0; i < deg_; ++i) s[i] = (pa[i] + pb[i]) % 3;
      std::uint32_t sidx = 0;
      mult3 = 1;
      for (int i = 0; i < deg_; ++i) {
        sidx += static_cast<std::uint32_t>(s[i]) * mult3;
        mult3 *= 3;
      }
      addt_[a * q_ + b] = static_cast<El>(sidx);

      Poly prod = (deg_ == 1) ? Poly{(pa[0] * pb[0]) % 3} : poly_mod(poly_mul(pa, pb), m);
      prod.resize(deg_);
      std::uint32_t pidx = 0;
      mult3 = 1;
      for (int i = 0; i < deg_; ++i) {
        pidx += static_cast<std::uint32_t>(prod[i]) * mult3;
        mult3 *= 3;
      }
      mult_[a * q_ + b] = static_cast<El>(pidx);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mult_[a * q_ + b] == 1) invt_[a] = static_cast<El>(b);

  // Frobenius and the twist t -> t^(3^(e+1)).
  frobt_.resize(q_);
  twistt_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    El f = static_cast<El>(a);
    f = mul(mul(f, f), static_cast<El>(a));  // a^3
    frobt_[a] = f;
  }
  for (std::uint32_t a = 0; a < q_; ++a) {
    El t = static_cast<El>(a);
    for (int i = 0; i < e_ + 1; ++i) t = frobt_[t];
    twistt_[a] = t;
  }

  // Multiplicative generator: smallest index of full order q-1.
  gen_ = 0;
  for (std::uint32_t a = 2; a < q_; ++a) {
    std::uint32_t ord = 1;
    El t = static_cast<El>(a);
    while (t != 1) {
      t = mul(t, static_cast<El>(a));
      ++ord;
    }
    if (ord == q_ - 1) {
      gen_ = static_cast<El>(a);
      break;
    }
  }
  if (gen_ == 0 && q_ > 2) {
    if (q_ == 3) gen_ = 2;  // the loop above starts at 2 and finds it; defensive
    else throw std::logic_error("gf3::Field: no multiplicative generator found");
  }
}

El Field::inv(El a) const {
  if (a == 0) throw std::domain_error("gf3::Field::inv: zero has no inverse");
  return invt_[a];
}

El Field::pow(El a, std::uint64_t k) const {
  El acc = 1, sq = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, sq);
    sq = mul(sq, sq);
    k >>= 1;
  }
  return acc;
}

std::vector<int> Field::coeffs(El a) const {
  std::vector<int> c(deg_);
  std::uint32_t v = a;
  for (int i = 0; i < deg_; ++i) {
    c[i] = static_cast<int>(v % 3);
    v /= 3;
  }
  return c;
}

El Field::from_coeffs(const std::vector<int>& c) const {
  std::uint32_t idx = 0, mult3 = 1;
  for (int i = 0; i < deg_; ++i) {
    const int v = i < static_cast<int>(c.size()) ? ((c[i] % 3) + 3) % 3 : 0;
    idx += static_cast<std::uint32_t>(v) * mult3;
    mult3 *= 3;
  }
  return static_cast<El>(idx);
}

const Field& Field::gf3() {
  static const Field f(0);
  return f;
}

const Field& Field::gf27() {
  static const Field f(1);
  return f;
}

Field Field::make(int twist_e) { return Field(twist_e); }

}  // namespace gf3
