#include "cgroupkit/cgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "permcore/smallgroup.hpp"

namespace cgk {

using permcore::Perm;
using permcore::PermHash;
using permcore::Pt;
using permcore::StabChain;

StringCheckResult check_string(const std::vector<Perm>& gens) {
  StringCheckResult r;
  r.involutions_ok = !gens.empty();
  for (const Perm& g : gens)
    if (!permcore::is_involution(g)) r.involutions_ok = false;
  if (!r.involutions_ok) return r;

  r.string_ok = true;
  const std::size_t n = gens.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t m = permcore::element_order(permcore::compose(gens[i], gens[j]));
      if (j == i + 1) {
        r.schlafli.push_back(m);
        if (m == 2) r.degenerate = true;
      } else if (m != 2) {
        r.string_ok = false;
      }
    }
  return r;
}

namespace {

// Elements of a parabolic <gens[j] : j in mask>, exactly, as a hash set.
// Returns false (leaving out empty) if the subgroup exceeds the bound.
bool parabolic_elements(const std::vector<Perm>& gens, unsigned mask, std::uint64_t bound,
                        std::unordered_set<Perm, PermHash>& out, StabChain* chain_out = nullptr) {
  const std::size_t degree = gens[0].degree();
  std::vector<Perm> sub;
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (mask & (1u << j)) sub.push_back(gens[j]);
  if (sub.empty()) sub.push_back(permcore::identity_perm(degree));
  StabChain H = permcore::build_bsgs(sub);
  if (H.order() > bound) return false;
  H.for_each_element([&](const Perm& g) { out.insert(g); });
  if (chain_out) *chain_out = std::move(H);
  return true;
}

std::string mask_str(unsigned mask, std::size_t n) {
  std::string s = "{";
  bool first = true;
  for (std::size_t j = 0; j < n; ++j)
    if (mask & (1u << j)) {
      if (!first) s += ",";
      s += std::to_string(j);
      first = false;
    }
  return s + "}";
}

}  // namespace

IntersectionCheckResult check_intersection(const std::vector<Perm>& gens,
                                           std::uint64_t parabolic_bound) {
  IntersectionCheckResult res;
  const std::size_t n = gens.size();
  if (n == 0 || n > 8) {
    res.detail = "rank out of range";
    return res;
  }
  const unsigned full = (1u << n) - 1;

  // Cache parabolic element sets by subset mask.
  std::unordered_map<unsigned, std::unordered_set<Perm, PermHash>> sets;
  auto get_set = [&](unsigned mask) -> const std::unordered_set<Perm, PermHash>* {
    auto it = sets.find(mask);
    if (it != sets.end()) return &it->second;
    std::unordered_set<Perm, PermHash> s;
    if (!parabolic_elements(gens, mask, parabolic_bound, s)) return nullptr;
    return &sets.emplace(mask, std::move(s)).first->second;
  };

  for (unsigned J = 1; J <= full; ++J)
    for (unsigned K = J + 1; K <= full; ++K) {
      if ((J & K) == J || (J & K) == K) continue;  // nested: trivially fine
      const auto* SJ = get_set(J);
      const auto* SK = get_set(K);
      const auto* SM = get_set(J & K);
      if (!SJ || !SK || !SM) {
        res.refused = true;
        res.detail = "parabolic " + mask_str(!SJ ? J : (!SK ? K : (J & K)), n) +
                     " exceeds the enumeration bound";
        return res;
      }
      // Walk the smaller of the two sides.
      const auto* small = SJ->size() <= SK->size() ? SJ : SK;
      const auto* large = small == SJ ? SK : SJ;
      std::uint64_t inter = 0;
      for (const Perm& g : *small)
        if (large->count(g)) {
          ++inter;
          if (!SM->count(g)) {
            res.detail = "element of G_" + mask_str(J, n) + " ∩ G_" + mask_str(K, n) +
                         " missing from G_" + mask_str(J & K, n);
            return res;
          }
        }
      if (inter != SM->size()) {
        res.detail = "G_" + mask_str(J, n) + " ∩ G_" + mask_str(K, n) + " has order " +
                     std::to_string(inter) + ", expected " + std::to_string(SM->size());
        return res;
      }
    }
  res.ok = true;
  return res;
}

StabChain n_zero(const StabChain& G, const StabChain& H, std::uint64_t bound) {
  StabChain N = permcore::normalizer_bruteforce(G, H, bound);
  std::vector<Perm> invols = permcore::involutions_enumerate(N, bound);
  if (invols.empty()) return permcore::build_bsgs({permcore::identity_perm(G.degree())});
  return permcore::build_bsgs(invols);
}

CosetGeometry build_coset_geometry(const std::vector<Perm>& gens, const StabChain& group,
                                   std::uint64_t materialize_bound,
                                   std::uint64_t parabolic_bound) {
  const StringCheckResult sc = check_string(gens);
  if (!sc.ok()) throw std::invalid_argument("build_coset_geometry: tuple fails the string condition");
  for (const Perm& g : gens)
    if (!group.contains(g))
      throw std::invalid_argument("build_coset_geometry: generator not in the supplied group");

  const std::size_t n = gens.size();
  CosetGeometry geo;

  // Maximal parabolic chains G_i = <gens minus rho_i>.
  std::vector<StabChain> maximal;
  bool all_small = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Perm> sub;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sub.push_back(gens[j]);
    maximal.push_back(permcore::build_bsgs(sub));
    if (maximal.back().order() > parabolic_bound) all_small = false;
    mpz_class q;
    if (!mpz_divisible_p(group.order().get_mpz_t(), maximal.back().order().get_mpz_t()))
      throw std::logic_error("build_coset_geometry: parabolic order does not divide |G|");
    q = group.order() / maximal.back().order();
    geo.face_counts.push_back(q);
  }
  geo.flag_count = group.order();

  // Thinness: the corank-1 intersections cap at <rho_i>.  Only attempted when
  // the maximal parabolics are enumerable.
  if (all_small && n >= 2) {
    geo.thin_checked = true;
    geo.thin = true;
    for (std::size_t i = 0; i < n && geo.thin; ++i) {
      // intersect all G_j with j != i
      std::unordered_set<Perm, PermHash> acc;
      maximal[(i + 1) % n].for_each_element([&](const Perm& g) { acc.insert(g); });
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == (i + 1) % n) continue;
        std::unordered_set<Perm, PermHash> next;
        for (const Perm& g : acc)
          if (maximal[j].contains(g)) next.insert(g);
        acc = std::move(next);
      }
      // expected: {1, rho_i}
      if (acc.size() != 2 || !acc.count(gens[i]) ||
          !acc.count(permcore::identity_perm(gens[i].degree())))
        geo.thin = false;
    }
  }

  // Materialization: label every element's coset per type and count incidences
  // and distinct flags.
  if (group.order() <= materialize_bound) {
    geo.materialized = true;
    std::vector<Perm> els = group.elements(materialize_bound);
    std::unordered_map<Perm, std::uint32_t, PermHash> index;
    for (std::uint32_t i = 0; i < els.size(); ++i) index.emplace(els[i], i);

    // coset label of element e for type i: minimal index in G_i * e
    std::vector<std::vector<std::uint32_t>> label(n, std::vector<std::uint32_t>(els.size()));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Perm> para = maximal[i].elements(parabolic_bound);
      for (std::uint32_t ei = 0; ei < els.size(); ++ei) {
        std::uint32_t lab = UINT32_MAX;
        for (const Perm& p : para)
          lab = std::min(lab, index.at(permcore::compose(p, els[ei])));
        label[i][ei] = lab;
      }
      std::unordered_set<std::uint32_t> distinct(label[i].begin(), label[i].end());
      if (mpz_class(static_cast<unsigned long>(distinct.size())) != geo.face_counts[i])
        throw std::logic_error("build_coset_geometry: materialized face count disagrees");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::unordered_set<std::uint64_t> pairs;
        for (std::uint32_t ei = 0; ei < els.size(); ++ei)
          pairs.insert((static_cast<std::uint64_t>(label[i][ei]) << 32) | label[j][ei]);
        geo.incidences[{static_cast<int>(i), static_cast<int>(j)}] = pairs.size();
      }
    // distinct maximal flags must exhaust the group when parabolics intersect
    // trivially
    std::unordered_set<std::string> flags;
    for (std::uint32_t ei = 0; ei < els.size(); ++ei) {
      std::string key;
      for (std::size_t i = 0; i < n; ++i) {
        key += std::to_string(label[i][ei]);
        key += ':';
      }
      flags.insert(std::move(key));
    }
    if (mpz_class(static_cast<unsigned long>(flags.size())) != geo.flag_count)
      throw std::logic_error("build_coset_geometry: flag count disagrees with |G|");
  }
  return geo;
}

bool tail_normalizer_condition(const std::vector<Perm>& gens) {
  if (gens.size() != 3) throw std::invalid_argument("tail_normalizer_condition: rank-3 tuples only");
  const Perm& r0 = gens[0];
  const Perm& r1 = gens[1];
  const Perm& r2 = gens[2];
  // rho_0 normalizes <rho_2>: rho_2 conjugated by rho_0 is rho_2 (or identity,
  // impossible for an involution).
  if (permcore::conjugate(r2, r0) != r2) return false;
  // rho_0 must NOT normalize <rho_1, rho_2>: some generator conjugates outside.
  StabChain D = permcore::build_bsgs({r1, r2});
  return !D.contains(permcore::conjugate(r1, r0)) || !D.contains(permcore::conjugate(r2, r0));
}

}  // namespace cgk
