#pragma once

#include <cstdint>
#include <vector>

namespace gf3 {

using El = std::uint8_t;  // element index, 0 .. q-1

// Small finite field of characteristic 3 with full operation tables, built for
// GF(3^(2e+1)) with 2e+1 <= 5 (q <= 243) — plenty for the groups here, which
// only ever use e = 0 and e = 1.
//
// Elements are indexed by their coordinate vector in the power basis
// {1, x, x^2, ...}, read little-endian in base 3: the element
// c0 + c1*x + c2*x^2 has index c0 + 3*c1 + 9*c2.  Index 0 is zero, index 1 is
// one.
//
// The degree-3 modulus is pinned to x^3 - x + 1 (so x^3 = x - 1 = x + 2).
// Other degrees take the lexicographically smallest monic irreducible found by
// trial division, making every table reproducible from the degree alone.
class Field {
 public:
  // twist_e = e: builds GF(3^(2e+1)) with the twist map t -> t^(3^(e+1)),
  // the square root of Frobenius in the sense twist(twist(t)) = t^3.
  static const Field& gf3();   // e = 0, cached
  static const Field& gf27();  // e = 1, cached
  static Field make(int twist_e);

  int e() const { return e_; }
  int degree() const { return deg_; }
  std::uint32_t q() const { return q_; }
  El generator() const { return gen_; }
  const std::vector<El>& modulus_coeffs() const { return mod_; }  // low to high, length deg+1

  El add(El a, El b) const { return addt_[a * q_ + b]; }
  El sub(El a, El b) const { return addt_[a * q_ + negt_[b]]; }
  El neg(El a) const { return negt_[a]; }
  El mul(El a, El b) const { return mult_[a * q_ + b]; }
  El inv(El a) const;  // throws on zero
  El pow(El a, std::uint64_t k) const;
  El twist(El a) const { return twistt_[a]; }     // t -> t^(3^(e+1))
  El frobenius(El a) const { return frobt_[a]; }  // t -> t^3

  // Coordinate vector (little-endian, length = degree).
  std::vector<int> coeffs(El a) const;
  El from_coeffs(const std::vector<int>& c) const;

 private:
  explicit Field(int twist_e);
  int e_, deg_;
  std::uint32_t q_;
  El gen_;
  std::vector<El> mod_;
  std::vector<El> addt_, mult_, negt_, invt_, twistt_, frobt_;
};

}  // namespace gf3
