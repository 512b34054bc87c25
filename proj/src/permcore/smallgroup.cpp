#include "permcore/smallgroup.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "permcore/random.hpp"

namespace permcore {

std::vector<Perm> involutions_enumerate(const StabChain& G, std::uint64_t bound) {
  const std::uint64_t n = G.order_u64();
  if (n > bound) throw std::length_error("involutions_enumerate: group order exceeds bound");
  std::vector<Perm> out;
  G.for_each_element([&](const Perm& g) {
    if (is_involution(g)) out.push_back(g);
  });
  return out;
}

namespace {

struct VecPtHash {
  std::size_t operator()(const std::vector<Pt>& v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (Pt x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return h;
  }
};

std::vector<Pt> image_of_set(const std::vector<Pt>& s, const Perm& g) {
  std::vector<Pt> t;
  t.reserve(s.size());
  for (Pt x : s) t.push_back(g.img[x]);
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

ClassOrbitStats involution_class_orbit(const StabChain& G, const Perm& rho,
                                       const std::function<void(const Perm&)>& visit,
                                       std::uint64_t max_class, std::uint64_t small_bound) {
  if (!is_involution(rho)) throw std::invalid_argument("involution_class_orbit: rho is not an involution");
  if (!G.contains(rho)) throw std::invalid_argument("involution_class_orbit: rho not in G");
  const std::vector<Perm>& gens = G.generators();
  ClassOrbitStats stats;

  bool small = true;
  if (G.order() > small_bound) small = false;

  if (small) {
    // Exact whole-permutation dedup; BFS over the conjugation action.
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> queue;
    seen.insert(rho);
    queue.push_back(rho);
    if (visit) visit(rho);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      // Copy: queue reallocates as we append.
      const Perm cur = queue[qi];
      for (const Perm& s : gens) {
        Perm c = conjugate(cur, s);
        if (seen.insert(c).second) {
          if (visit) visit(c);
          queue.push_back(std::move(c));
          if (seen.size() > max_class) {
            stats.count = seen.size();
            return stats;  // complete stays false
          }
        }
      }
    }
    stats.count = seen.size();
    stats.complete = true;
    return stats;
  }

  // Large-group path: walk fixed sets.  Nodes carry only (parent, generator),
  // so memory stays at a few dozen bytes per class member.
  const std::vector<Pt> root = fixed_points(rho);
  if (root.empty())
    throw std::invalid_argument(
        "involution_class_orbit: fixed-point-free involution in a group too large to enumerate");
  stats.fixed_set_keyed = true;

  struct Node {
    std::uint32_t parent;
    std::uint16_t gen;
  };
  std::unordered_map<std::vector<Pt>, std::uint32_t, VecPtHash> seen;
  std::vector<Node> nodes;
  // The map owns each set; node-based buckets keep these pointers stable.
  std::vector<const std::vector<Pt>*> sets;

  auto it0 = seen.emplace(root, 0).first;
  sets.push_back(&it0->first);
  nodes.push_back({0, 0});

  auto replay = [&](std::uint32_t idx) -> Perm {
    // Compose the generator word along the path root -> idx, then conjugate.
    std::vector<std::uint16_t> word;
    std::uint32_t cur = idx;
    while (cur != 0) {
      word.push_back(nodes[cur].gen);
      cur = nodes[cur].parent;
    }
    Perm w = identity_perm(G.degree());
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = compose(w, gens[*it]);
    Perm c = conjugate(rho, w);
    if (!is_involution(c) || fixed_point_count(c) != root.size())
      throw std::logic_error("involution_class_orbit: replayed conjugate has wrong shape");
    return c;
  };

  if (visit) visit(rho);
  for (std::uint32_t qi = 0; qi < nodes.size(); ++qi) {
    for (std::uint16_t si = 0; si < gens.size(); ++si) {
      std::vector<Pt> im = image_of_set(*sets[qi], gens[si]);
      auto [it, fresh] = seen.emplace(std::move(im), static_cast<std::uint32_t>(nodes.size()));
      if (fresh) {
        sets.push_back(&it->first);
        nodes.push_back({qi, si});
        if (visit) visit(replay(static_cast<std::uint32_t>(nodes.size() - 1)));
        if (nodes.size() > max_class) {
          stats.count = nodes.size();
          return stats;
        }
      }
    }
  }
  stats.count = nodes.size();
  stats.complete = true;
  return stats;
}

CentralizerResult centralizer_of_involution(const StabChain& G, const Perm& rho,
                                            const mpz_class& target_order,
                                            std::uint64_t seed, std::uint64_t max_draws,
                                            bool sweep_certify) {
  if (!is_involution(rho)) throw std::invalid_argument("centralizer_of_involution: rho is not an involution");
  std::mt19937_64 rng(seed);
  std::vector<Perm> cgens{rho};

  auto commutes_with_rho = [&](const Perm& h) {
    return compose(h, rho) == compose(rho, h);
  };

  BsgsOptions opt;
  opt.rng_seed = derive_seed(seed, 0x77);
  if (!sweep_certify) opt.order_hint = target_order;

  CentralizerResult res{build_bsgs(cgens, opt), 0, false};
  if (res.group.order() == target_order) {
    res.reached_target = true;
    return res;
  }

  while (res.draws < max_draws) {
    ++res.draws;
    const Perm g = G.random_element(rng);
    const Perm rg = conjugate(rho, g);
    const Perm x = compose(rho, rg);
    const std::uint64_t m = element_order(x);
    Perm h = (m % 2 == 1) ? compose(g, power(x, (m - 1) / 2))  // the dihedral trick
                          : power(x, m / 2);  // central involution of <rho, rho^g>
    if (is_identity(h)) continue;
    if (!commutes_with_rho(h))
      throw std::logic_error("centralizer_of_involution: dihedral trick produced a non-centralizing element");
    if (res.group.contains(h)) continue;
    cgens.push_back(std::move(h));
    opt.rng_seed = derive_seed(seed, 0x1000 + res.draws);
    res.group = build_bsgs(cgens, opt);
    if (res.group.order() == target_order) {
      res.reached_target = true;
      return res;
    }
    if (res.group.order() > target_order)
      throw std::logic_error("centralizer_of_involution: centralizer exceeded the target order");
  }
  return res;
}

StabChain centralizer_bruteforce(const StabChain& G, const Perm& rho, std::uint64_t bound) {
  const std::uint64_t n = G.order_u64();
  if (n > bound) throw std::length_error("centralizer_bruteforce: group order exceeds bound");
  std::vector<Perm> cels;
  G.for_each_element([&](const Perm& g) {
    if (compose(g, rho) == compose(rho, g)) cels.push_back(g);
  });
  return build_bsgs(cels);
}

StabChain normalizer_bruteforce(const StabChain& G, const StabChain& H, std::uint64_t bound) {
  const std::uint64_t n = G.order_u64();
  if (n > bound) throw std::length_error("normalizer_bruteforce: group order exceeds bound");
  const std::vector<Perm>& hgens = H.generators();
  std::vector<Perm> nels;
  G.for_each_element([&](const Perm& g) {
    for (const Perm& s : hgens)
      if (!H.contains(conjugate(s, g))) return;
    nels.push_back(g);
  });
  return build_bsgs(nels);
}

StabChain derived_subgroup(const StabChain& G) {
  const std::vector<Perm>& gens = G.generators();
  std::vector<Perm> dgens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!is_identity(c)) dgens.push_back(std::move(c));
    }
  if (dgens.empty()) {
    // Abelian on these generators: G' is trivial.
    return build_bsgs({identity_perm(G.degree())});
  }
  // G' is the normal closure of the generator commutators; conjugate by the
  // group generators until the chain stops growing.  Every rebuild runs the
  // full deterministic sweep, so the final order is certified.
  StabChain D = build_bsgs(dgens);
  for (int round = 0; round < 100; ++round) {
    std::vector<Perm> fresh;
    for (const Perm& d : D.strong_generators())
      for (const Perm& g : gens) {
        Perm c = conjugate(d, g);
        if (!D.contains(c)) fresh.push_back(std::move(c));
      }
    if (fresh.empty()) return D;
    for (Perm& f : fresh) dgens.push_back(std::move(f));
    D = build_bsgs(dgens);
  }
  throw std::runtime_error("derived_subgroup: normal closure failed to stabilize");
}

std::vector<Perm> center_elements(const StabChain& G, std::uint64_t bound) {
  const std::uint64_t n = G.order_u64();
  if (n > bound) throw std::length_error("center_elements: group order exceeds bound");
  const std::vector<Perm>& gens = G.generators();
  std::vector<Perm> out;
  G.for_each_element([&](const Perm& z) {
    for (const Perm& g : gens)
      if (compose(z, g) != compose(g, z)) return;
    out.push_back(z);
  });
  return out;
}

}  // namespace permcore
