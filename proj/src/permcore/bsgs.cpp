#include "permcore/bsgs.hpp"

#include <stdexcept>

#include "permcore/random.hpp"

namespace permcore {

std::vector<Pt> StabChain::base() const {
  std::vector<Pt> b;
  b.reserve(levels_.size());
  for (const Level& L : levels_) b.push_back(L.beta);
  return b;
}

std::uint64_t StabChain::order_u64() const {
  if (!order_.fits_ulong_p()) throw std::overflow_error("StabChain::order_u64: order exceeds 64 bits");
  return static_cast<std::uint64_t>(order_.get_ui());
}

Perm StabChain::sift(const Perm& g, std::size_t start_level, std::size_t* drop_level) const {
  Perm r = g;
  for (std::size_t l = start_level; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    Pt p = r.img[L.beta];
    if (L.via[p] == VIA_NONE) {
      if (drop_level) *drop_level = l;
      return r;
    }
    // Divide by u_p on the right: r <- r * g_k^{-1} walks p up the Schreier
    // tree one edge at a time until it reaches beta.
    while (p != L.beta) {
      const std::int32_t k = L.via[p];
      r = compose(r, sinvs_[static_cast<std::size_t>(k)]);
      p = L.parent[p];
    }
  }
  if (drop_level) *drop_level = levels_.size();
  return r;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return is_identity(sift(g));
}

Perm StabChain::transversal_element(std::size_t level, Pt p) const {
  const Level& L = levels_[level];
  if (L.via[p] == VIA_NONE) throw std::out_of_range("transversal_element: point not in orbit");
  // Collect the edge generators from p back to beta, then multiply them in
  // path order: u_p = g_1 g_2 ... g_k with g_1 leaving beta.
  std::vector<std::uint32_t> edges;
  Pt x = p;
  while (x != L.beta) {
    edges.push_back(static_cast<std::uint32_t>(L.via[x]));
    x = L.parent[x];
  }
  Perm u = identity_perm(degree_);
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) u = compose(u, sgens_[*it]);
  return u;
}

Perm StabChain::random_element(std::mt19937_64& rng) const {
  Perm acc = identity_perm(degree_);
  // One uniform transversal choice per level, deepest first; the decomposition
  // g = t_{L-1} ... t_0 is unique, so this is exactly uniform on the group.
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& L = levels_[l];
    const Pt p = L.orbit[rng() % L.orbit.size()];
    acc = compose(acc, transversal_element(l, p));
  }
  return acc;
}

std::vector<Perm> StabChain::elements(std::uint64_t bound) const {
  const std::uint64_t n = order_u64();
  if (n > bound) throw std::length_error("StabChain::elements: order exceeds bound");
  std::vector<Perm> out;
  out.reserve(n);
  for_each_element([&](const Perm& g) { out.push_back(g); });
  return out;
}

struct BsgsBuilder {
  StabChain& C;

  void rebuild_orbit(std::size_t l) {
    StabChain::Level& L = C.levels_[l];
    L.via.assign(C.degree_, StabChain::VIA_NONE);
    L.parent.assign(C.degree_, 0);
    L.orbit.clear();
    L.via[L.beta] = StabChain::VIA_ROOT;
    L.orbit.push_back(L.beta);
    for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
      const Pt p = L.orbit[qi];
      for (std::uint32_t gi : L.gen_idx) {
        const Pt q = C.sgens_[gi].img[p];
        if (L.via[q] == StabChain::VIA_NONE) {
          L.via[q] = static_cast<std::int32_t>(gi);
          L.parent[q] = p;
          L.orbit.push_back(q);
        }
      }
    }
  }

  std::size_t level_of(const Perm& g) const {
    for (std::size_t l = 0; l < C.levels_.size(); ++l)
      if (g.img[C.levels_[l].beta] != C.levels_[l].beta) return l;
    return C.levels_.size();
  }

  void add_strong_generator(Perm g) {
    const std::size_t lev = level_of(g);
    if (lev == C.levels_.size()) {
      // g fixes the whole current base: extend it by the smallest moved point.
      Pt beta = 0;
      while (g.img[beta] == beta) ++beta;
      C.levels_.emplace_back();
      C.levels_.back().beta = beta;
    }
    const auto idx = static_cast<std::uint32_t>(C.sgens_.size());
    C.sinvs_.push_back(inverse(g));
    C.sgens_.push_back(std::move(g));
    // The new generator is usable at every level whose base prefix it fixes.
    for (std::size_t l = 0; l <= lev; ++l) C.levels_[l].gen_idx.push_back(idx);
    for (std::size_t l = 0; l <= lev; ++l) rebuild_orbit(l);
  }

  mpz_class current_order() const {
    mpz_class o = 1;
    for (const StabChain::Level& L : C.levels_) o *= static_cast<unsigned long>(L.orbit.size());
    return o;
  }

  bool hint_reached(const BsgsOptions& opt) const {
    return opt.order_hint && current_order() == *opt.order_hint;
  }

  // Phase 1: sift random products, absorbing any non-trivial residue, until
  // `stabilize_rounds` consecutive sifts come back clean (or the order hint is
  // reached).  Pure accelerator for phase 2.
  void random_phase(const BsgsOptions& opt) {
    if (C.sgens_.empty()) return;  // trivial group
    if (hint_reached(opt)) return;
    ProductReplacementSampler smp(C.original_gens_, opt.rng_seed);
    int clean = 0;
    long iters = 0;
    while (clean < opt.stabilize_rounds) {
      if (++iters > 200000) throw std::runtime_error("build_bsgs: seeding phase failed to stabilize");
      Perm r = C.sift(smp.next());
      if (is_identity(r)) {
        ++clean;
      } else {
        add_strong_generator(std::move(r));
        clean = 0;
        if (hint_reached(opt)) return;
      }
    }
  }

  // Phase 2: the deterministic certificate.  Every Schreier generator
  // u_p * s * u_{s(p)}^{-1} of every level must sift to the identity through
  // the chain below; by Schreier's lemma this proves each level's orbit
  // stabilizer is exactly the next level's group, hence |G| = prod of orbit
  // sizes.  Tree edges are skipped (their Schreier generator is trivial by
  // construction).  Any surviving residue is absorbed and the sweep restarts.
  void schreier_sweep() {
    int restarts = 0;
  restart:
    if (++restarts > 5000) throw std::runtime_error("build_bsgs: Schreier sweep failed to converge");
    for (std::size_t l = C.levels_.size(); l-- > 0;) {
      StabChain::Level& L = C.levels_[l];
      for (std::size_t oi = 0; oi < L.orbit.size(); ++oi) {
        const Pt p = L.orbit[oi];
        const Perm up = C.transversal_element(l, p);
        for (std::uint32_t gi : L.gen_idx) {
          const Pt q = C.sgens_[gi].img[p];
          if (L.parent[q] == p && L.via[q] == static_cast<std::int32_t>(gi)) continue;
          // w maps beta to q, so sifting from level l divides by u_q first.
          Perm r = C.sift(compose(up, C.sgens_[gi]), l);
          if (!is_identity(r)) {
            add_strong_generator(std::move(r));
            goto restart;
          }
        }
      }
    }
  }

  void verify_phase(const BsgsOptions& opt) {
    if (C.sgens_.empty()) return;
    ProductReplacementSampler smp(C.original_gens_, opt.rng_seed ^ 0xa5a5a5a5a5a5a5a5ULL);
    for (int i = 0; i < opt.verify_rounds; ++i)
      if (!is_identity(C.sift(smp.next())))
        throw std::logic_error("build_bsgs: verification sift failed after sweep");
  }
};


StabChain build_bsgs(const std::vector<Perm>& gens, const BsgsOptions& opt) {
  if (gens.empty()) throw std::invalid_argument("build_bsgs: empty generator list");
  const std::size_t n = gens[0].degree();
  StabChain C;
  C.degree_ = n;
  for (const Perm& g : gens) {
    if (g.degree() != n) throw std::invalid_argument("build_bsgs: generator degree mismatch");
    if (!is_valid_image_vector(g.img)) throw std::invalid_argument("build_bsgs: generator is not a permutation");
    C.original_gens_.push_back(g);
  }
  BsgsBuilder B{C};
  // Seed the chain with the residues of the input generators.  Each original
  // generator factors as (transversal product) * residue over the master list,
  // so the strong generators still generate the same group.
  for (const Perm& g : C.original_gens_) {
    Perm r = C.sift(g);
    if (!is_identity(r)) B.add_strong_generator(std::move(r));
  }
  B.random_phase(opt);
  if (B.hint_reached(opt)) {
    // Caller-certified ambient order reached; see BsgsOptions::order_hint for
    // the (strict) conditions under which this is sound.
    C.certified_by_sweep_ = false;
  } else {
    B.schreier_sweep();
    B.verify_phase(opt);
    C.certified_by_sweep_ = true;
  }
  C.order_ = B.current_order();
  return C;
}

}  // namespace permcore
