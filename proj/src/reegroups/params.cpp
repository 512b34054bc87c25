#include "reegroups/params.hpp"

#include <stdexcept>

namespace ree {

ReeParameters ree_parameters(int e) {
  if (e < 0 || e > 10) throw std::invalid_argument("ree_parameters: need 0 <= e <= 10");
  ReeParameters p;
  p.e = e;
  std::uint64_t q = 3;
  for (int i = 0; i < 2 * e; ++i) q *= 3;
  p.q = q;
  std::uint64_t t = 3;
  for (int i = 0; i < e; ++i) t *= 3;
  p.theta_exp = t;
  p.alpha = q + 1 - t;
  p.beta = q + 1 + t;
  p.block_size = q + 1;

  const mpz_class mq(static_cast<unsigned long>(q));
  const mpz_class q3 = mq * mq * mq;
  p.degree = q3 + 1;
  p.order = q3 * (mq - 1) * (q3 + 1);
  p.centralizer_order = mq * (mq * mq - 1);
  p.involution_count = p.order / p.centralizer_order;
  p.block_count = p.degree * (p.degree - 1) / (mpz_class(static_cast<unsigned long>(q + 1)) * mq);

  // alpha * beta = q^2 - q + 1 is the identity the two Frobenius factors must
  // satisfy; fail loudly if the arithmetic above ever drifts.
  if (mpz_class(static_cast<unsigned long>(p.alpha)) * static_cast<unsigned long>(p.beta) !=
      mq * mq - mq + 1)
    throw std::logic_error("ree_parameters: alpha * beta != q^2 - q + 1");
  if (p.involution_count != p.block_count)
    throw std::logic_error("ree_parameters: involution and block counts disagree");
  return p;
}

}  // namespace ree
