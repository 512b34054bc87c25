#include <random>
#include "permcore/random.hpp"

#include "permcore/smallgroup.hpp"
#include "reegroups/ree.hpp"

namespace ree {

using gf3::El;
using permcore::Perm;
using permcore::Pt;

ReeModel::ReeModel(int e) {
  if (e != 0 && e != 1) throw std::invalid_argument("ReeModel: e must be 0 or 1");
  F_ = (e == 0) ? &gf3::Field::gf3() : &gf3::Field::gf27();
  params_ = ree_parameters(e);
  q_ = F_->q();
  n_ = q_ * q_ * q_ + 1;
  chart_lookup_.reserve(n_ * 2);
  for (std::uint32_t p = 0; p < n_; ++p) {
    const auto key = pack(chart(p));
    if (!chart_lookup_.emplace(key, p).second)
      throw ReeConstructionError("ReeModel: two points share a chart vector");
  }
}

std::uint64_t ReeModel::pack(const std::array<El, 7>& v) {
  std::uint64_t key = 0;
  for (int i = 0; i < 7; ++i) key |= static_cast<std::uint64_t>(v[i]) << (5 * i);
  return key;
}

std::array<El, 7> ReeModel::normalize(std::array<El, 7> v) const {
  const gf3::Field& F = *F_;
  for (int i = 0; i < 7; ++i) {
    if (v[i] != 0) {
      const El s = F.inv(v[i]);
      for (int j = i; j < 7; ++j) v[j] = F.mul(v[j], s);
      return v;
    }
  }
  throw ReeConstructionError("ReeModel: zero chart vector");
}

std::array<El, 7> ReeModel::chart(std::uint32_t point) const {
  if (point == infinity()) return {0, 0, 0, 0, 0, 0, 1};
  const gf3::Field& F = *F_;
  const El z = static_cast<El>(point % q_);
  const El y = static_cast<El>((point / q_) % q_);
  const El x = static_cast<El>(point / (q_ * q_));

  const El x3 = F.mul(F.mul(x, x), x);
  const El xt = F.twist(x);
  // f1 = x^(theta+3) - x z - x^2 y - y^theta
  const El f1 = F.sub(F.sub(F.sub(F.mul(xt, x3), F.mul(x, z)), F.mul(F.mul(x, x), y)), F.twist(y));
  // f2 = x^(2 theta+3) - x y^2 + y z - x^theta y^theta - z^theta
  const El f2 = F.sub(F.sub(F.add(F.sub(F.mul(F.mul(xt, xt), x3), F.mul(x, F.mul(y, y))), F.mul(y, z)),
                            F.mul(xt, F.twist(y))),
                      F.twist(z));
  // f3 = z^2 - x f2 - y f1
  const El f3 = F.sub(F.sub(F.mul(z, z), F.mul(x, f2)), F.mul(y, f1));
  return {1, x, y, z, f1, f2, f3};
}

Perm ReeModel::translation(El a, El b, El c) const {
  const gf3::Field& F = *F_;
  const El at = F.twist(a);
  const El at1 = F.mul(at, a);  // a^(theta+1)
  Perm p(n_);
  for (std::uint32_t xi = 0; xi < q_; ++xi)
    for (std::uint32_t yi = 0; yi < q_; ++yi)
      for (std::uint32_t zi = 0; zi < q_; ++zi) {
        const El x = static_cast<El>(xi), y = static_cast<El>(yi), z = static_cast<El>(zi);
        const El x2 = F.add(x, a);
        const El y2 = F.add(F.add(y, b), F.mul(at, x));
        const El z2 =
            F.add(F.add(F.sub(F.add(z, c), F.mul(b, x)), F.mul(a, y)), F.mul(at1, x));
        p.img[point_index(x, y, z)] = point_index(x2, y2, z2);
      }
  p.img[infinity()] = infinity();
  return p;
}

Perm ReeModel::torus(El lambda) const {
  const gf3::Field& F = *F_;
  if (lambda == 0) throw std::invalid_argument("ReeModel::torus: lambda must be nonzero");
  const El lt = F.twist(lambda);
  const El ly = F.mul(lt, lambda);                 // lambda^(theta+1)
  const El lz = F.mul(lt, F.mul(lambda, lambda));  // lambda^(theta+2)
  Perm p(n_);
  for (std::uint32_t xi = 0; xi < q_; ++xi)
    for (std::uint32_t yi = 0; yi < q_; ++yi)
      for (std::uint32_t zi = 0; zi < q_; ++zi) {
        const El x = static_cast<El>(xi), y = static_cast<El>(yi), z = static_cast<El>(zi);
        p.img[point_index(x, y, z)] =
            point_index(F.mul(lambda, x), F.mul(ly, y), F.mul(lz, z));
      }
  p.img[infinity()] = infinity();
  return p;
}

Perm ReeModel::weyl() const {
  Perm p(n_);
  for (std::uint32_t pt = 0; pt < n_; ++pt) {
    const auto v = chart(pt);
    std::array<El, 7> w;
    for (int i = 0; i < 7; ++i) w[i] = v[6 - i];
    w[3] = F_->neg(w[3]);
    const auto it = chart_lookup_.find(pack(normalize(w)));
    if (it == chart_lookup_.end())
      throw ReeConstructionError(
          "ReeModel::weyl: reversed chart vector is not the chart of any point (model violated)");
    p.img[pt] = it->second;
  }
  if (!permcore::is_valid_image_vector(p.img))
    throw ReeConstructionError("ReeModel::weyl: chart reversal is not a bijection");
  return p;
}

std::vector<Perm> ReeModel::standard_generators() const {
  return {translation(1, 0, 0), translation(0, 1, 0), translation(0, 0, 1),
          torus(F_->generator()), weyl()};
}

// The postcondition battery below is part of the construction, not a test
// knob: a group failing any check is not R(q), so every failure throws and
// nothing downstream runs.
ReeGroup build_ree_model(int e) {
  ReeModel M(e);
  const std::vector<Perm> gens = M.standard_generators();
  permcore::BsgsOptions opt;
  opt.rng_seed = permcore::derive_seed(0x2ee0000 + static_cast<std::uint64_t>(e), 1);
  permcore::StabChain G = permcore::build_bsgs(gens, opt);
  const Perm& J = gens[4];

  const ReeParameters P = M.params();
  if (!G.certified_by_sweep())
    throw ReeConstructionError("ree battery: chain was not certified by the deterministic sweep");
  if (G.order() != P.order)
    throw ReeConstructionError("ree battery: order is " + G.order().get_str() + ", expected " +
                               P.order.get_str());
  if (G.levels().size() < 2 || G.levels()[0].orbit.size() != M.point_count() ||
      G.levels()[1].orbit.size() != M.point_count() - 1)
    throw ReeConstructionError("ree battery: action is not 2-transitive");
  if (!permcore::is_involution(J) || permcore::fixed_point_count(J) != P.block_size)
    throw ReeConstructionError("ree battery: Weyl element is not an involution fixing q+1 points");

  // Sampled structure checks.  Seeded internally: the battery is part of the
  // construction, not a test knob.
  std::mt19937_64 rng(permcore::derive_seed(0xba77e2 + static_cast<std::uint64_t>(e), 2));
  std::vector<Perm> sample_invols;
  int draws = 0;
  while (sample_invols.size() < 24 && draws < 2000) {
    ++draws;
    const Perm g = G.random_element(rng);
    const std::uint64_t m = permcore::element_order(g);
    if (m % 2 == 0) {
      Perm h = permcore::power(g, m / 2);
      if (!permcore::is_involution(h) || permcore::fixed_point_count(h) != P.block_size)
        throw ReeConstructionError("ree battery: sampled involution fixes the wrong number of points");
      sample_invols.push_back(std::move(h));
    }
  }
  if (sample_invols.size() < 24)
    throw ReeConstructionError("ree battery: could not sample enough involutions");

  // Sampled single-class evidence: for pairs with odd product order m, the
  // power (rho rho')^((m+1)/2) conjugates rho to rho'; verify that identity
  // exactly on at least 12 pairs.
  int witnessed = 0;
  for (const Perm& h : sample_invols) {
    if (witnessed >= 12) break;
    const Perm x = permcore::compose(J, h);
    const std::uint64_t m = permcore::element_order(x);
    if (m % 2 == 1) {
      const Perm w = permcore::power(x, (m + 1) / 2);
      if (permcore::conjugate(J, w) != h)
        throw ReeConstructionError("ree battery: dihedral conjugacy witness failed");
      ++witnessed;
    }
  }
  if (witnessed < 12)
    throw ReeConstructionError("ree battery: too few odd-order involution pairs to witness conjugacy");

  return ReeGroup{P, std::move(G), J};
}

ReeGroup build_ree27() { return build_ree_model(1); }

}  // namespace ree
