#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "permcore/smallgroup.hpp"
#include "reegroups/companions.hpp"
#include "reegroups/ree.hpp"

namespace ree {

using permcore::Perm;
using permcore::PermHash;
using permcore::Pt;
using permcore::StabChain;

// R(3) is not simple: it is PGammaL(2, 8) = PSL(2, 8) : C_3, which has no
// faithful 2-transitive action below 28 points.  The 28-point action is the
// coset action on K = N(<t>) for t of order 9: <t> is a cyclic Sylow
// 3-subgroup of PSL(2, 8), and its normalizer in PGammaL(2, 8) has order 54 =
// 1512 / 28.  Everything below is exhaustive — 1512 elements is nothing — and
// every structural claim is asserted.
ReeGroup build_ree3() {
  StabChain pgl = build_pgammal28();
  const std::vector<Perm> els = pgl.elements(10000);
  if (els.size() != 1512) throw ReeConstructionError("build_ree3: PGammaL(2,8) has wrong order");

  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  index.reserve(els.size() * 2);
  for (std::uint32_t i = 0; i < els.size(); ++i) index.emplace(els[i], i);

  // First element of order 9 in enumeration order (deterministic).
  std::uint32_t t_idx = UINT32_MAX;
  for (std::uint32_t i = 0; i < els.size(); ++i)
    if (permcore::element_order(els[i]) == 9) {
      t_idx = i;
      break;
    }
  if (t_idx == UINT32_MAX) throw ReeConstructionError("build_ree3: no element of order 9");
  const Perm& t = els[t_idx];

  std::unordered_set<Perm, PermHash> t_powers;
  for (int k = 0; k < 9; ++k) t_powers.insert(permcore::power(t, static_cast<std::uint64_t>(k)));

  // K = N(<t>): everything conjugating t to a power of t.
  std::vector<std::uint32_t> K;
  for (std::uint32_t i = 0; i < els.size(); ++i)
    if (t_powers.count(permcore::conjugate(t, els[i]))) K.push_back(i);
  if (K.size() != 54)
    throw ReeConstructionError("build_ree3: |N(<t>)| = " + std::to_string(K.size()) +
                               ", expected 54");

  // Right cosets Kg, labelled by the minimal element index they contain.
  std::vector<std::uint32_t> coset_label(els.size());
  for (std::uint32_t i = 0; i < els.size(); ++i) {
    std::uint32_t lab = UINT32_MAX;
    for (std::uint32_t k : K) lab = std::min(lab, index.at(permcore::compose(els[k], els[i])));
    coset_label[i] = lab;
  }
  std::vector<std::uint32_t> labels;
  for (std::uint32_t i = 0; i < els.size(); ++i)
    if (coset_label[i] == i) labels.push_back(i);
  std::sort(labels.begin(), labels.end());
  if (labels.size() != 28)
    throw ReeConstructionError("build_ree3: expected 28 cosets, found " +
                               std::to_string(labels.size()));
  std::unordered_map<std::uint32_t, Pt> coset_id;
  for (Pt c = 0; c < labels.size(); ++c) coset_id.emplace(labels[c], c);

  // Push each 9-point generator down to the right-multiplication action on
  // cosets: Kg . h = K(gh).
  std::vector<Perm> action_gens;
  for (const Perm& h : pgl.generators()) {
    Perm a(labels.size());
    for (Pt c = 0; c < labels.size(); ++c) {
      const Perm gh = permcore::compose(els[labels[c]], h);
      a.img[c] = coset_id.at(coset_label[index.at(gh)]);
    }
    action_gens.push_back(std::move(a));
  }

  StabChain G = permcore::build_bsgs(action_gens);

  // Battery (all exhaustive at this size).
  if (G.order() != 1512)
    throw ReeConstructionError("build_ree3: coset action is not faithful of order 1512");
  if (G.levels().size() < 2 || G.levels()[0].orbit.size() != 28 ||
      G.levels()[1].orbit.size() != 27)
    throw ReeConstructionError("build_ree3: action is not 2-transitive on 28 points");
  const ReeParameters P = ree_parameters(0);
  std::vector<Perm> invols = permcore::involutions_enumerate(G, 2000);
  if (invols.size() != 63)
    throw ReeConstructionError("build_ree3: expected 63 involutions, found " +
                               std::to_string(invols.size()));
  for (const Perm& v : invols)
    if (permcore::fixed_point_count(v) != P.block_size)
      throw ReeConstructionError("build_ree3: an involution fixes the wrong number of points");

  return ReeGroup{P, std::move(G), invols.front()};
}

}  // namespace ree
