#include "unital/unital.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace unital {

using permcore::Perm;
using permcore::Pt;

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

}  // namespace

std::vector<Pt> block_of(const ree::ReeGroup& G, const Perm& rho) {
  if (!permcore::is_involution(rho)) throw std::invalid_argument("block_of: rho is not an involution");
  if (!G.group.contains(rho)) throw std::invalid_argument("block_of: rho is not in the group");
  std::vector<Pt> fix = permcore::fixed_points(rho);
  if (fix.size() != G.params.block_size)
    throw std::logic_error("block_of: involution fixes " + std::to_string(fix.size()) +
                           " points, expected q+1 = " + std::to_string(G.params.block_size));
  return fix;  // already sorted by construction
}

SteinerSystem build_unital(const ree::ReeGroup& G) {
  const std::uint64_t v = G.group.degree();
  const std::uint32_t k = static_cast<std::uint32_t>(G.params.block_size);
  const std::vector<Perm>& gens = G.group.generators();

  SteinerSystem S;
  S.v = v;
  S.k = k;

  // Triangular pair bitmap: pair (i < j) lives at bit i*v - i*(i+1)/2 + (j-i-1).
  const std::uint64_t pair_count = v * (v - 1) / 2;
  std::vector<std::uint64_t> bitmap((pair_count + 63) / 64, 0);
  auto pair_bit = [v](std::uint64_t i, std::uint64_t j) {
    return i * v - i * (i + 1) / 2 + (j - i - 1);
  };

  auto absorb = [&](const std::vector<Pt>& blk) {
    for (std::uint32_t a = 0; a < blk.size(); ++a)
      for (std::uint32_t b = a + 1; b < blk.size(); ++b) {
        const std::uint64_t bit = pair_bit(blk[a], blk[b]);
        std::uint64_t& word = bitmap[bit >> 6];
        const std::uint64_t mask = 1ULL << (bit & 63);
        if (word & mask)
          throw std::logic_error("build_unital: point pair {" + std::to_string(blk[a]) + ", " +
                                 std::to_string(blk[b]) + "} lies on two blocks");
        word |= mask;
        ++S.pairs_covered;
      }
  };

  // Orbit of the root block under the generators; exact dedup on sorted sets.
  std::unordered_set<std::vector<Pt>, VecPtHash> seen;
  std::vector<const std::vector<Pt>*> order;

  const std::vector<Pt> root = block_of(G, G.involution);
  absorb(root);
  order.push_back(&*seen.insert(root).first);

  std::vector<Pt> img(k);
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    const std::vector<Pt>& cur = *order[qi];
    for (const Perm& g : gens) {
      for (std::uint32_t t = 0; t < k; ++t) img[t] = g.img[cur[t]];
      std::sort(img.begin(), img.end());
      const auto [it, fresh] = seen.insert(img);
      if (fresh) {
        absorb(*it);
        order.push_back(&*it);
      }
    }
  }

  if (S.pairs_covered != pair_count)
    throw std::logic_error("build_unital: covered " + std::to_string(S.pairs_covered) +
                           " pairs of " + std::to_string(pair_count));
  const mpz_class found(static_cast<unsigned long>(order.size()));
  if (found != G.params.block_count)
    throw std::logic_error("build_unital: found " + std::to_string(order.size()) +
                           " blocks, expected " + G.params.block_count.get_str());

  S.blocks.reserve(order.size());
  for (const auto* b : order) S.blocks.push_back(*b);
  S.verified = true;
  return S;
}

}  // namespace unital
