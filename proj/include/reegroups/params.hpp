#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace ree {

// Numerical data for the small Ree group R(q), q = 3^(2e+1).
//
//   |R(q)| = q^3 (q - 1) (q^3 + 1),   degree = q^3 + 1,
//   alpha = q + 1 - 3^(e+1),          beta = q + 1 + 3^(e+1),
//
// with alpha * beta = q^2 - q + 1, so q^3 + 1 = (q + 1) * alpha * beta.
// Supported for 0 <= e <= 10 (far beyond anything constructible here; the
// orders are exact integers throughout).
struct ReeParameters {
  int e = 0;
  std::uint64_t q = 3;
  std::uint64_t theta_exp = 3;       // 3^(e+1), the twist exponent: theta(t) = t^(3^(e+1))
  std::uint64_t alpha = 1;           // q + 1 - 3^(e+1)
  std::uint64_t beta = 7;            // q + 1 + 3^(e+1)
  std::uint64_t block_size = 4;      // q + 1
  mpz_class degree;                  // q^3 + 1
  mpz_class order;                   // q^3 (q-1) (q^3+1)
  mpz_class involution_count;        // q^3+1 choose-free: |G| / |C|, C of order q(q^2-1)
  mpz_class centralizer_order;       // q (q^2 - 1)
  mpz_class block_count;             // degree * (degree-1) / ((q+1) * q)
};

ReeParameters ree_parameters(int e);

}  // namespace ree
