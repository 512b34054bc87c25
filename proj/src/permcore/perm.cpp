#include "permcore/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permcore {

bool is_valid_image_vector(const std::vector<Pt>& images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n, false);
  for (Pt v : images) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm identity_perm(std::size_t n) { return Perm(n); }

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.img.size(); ++i)
    if (p.img[i] != i) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r;
  r.img.resize(p.img.size());
  for (std::size_t x = 0; x < p.img.size(); ++x) r.img[x] = q.img[p.img[x]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r;
  r.img.resize(p.img.size());
  for (std::size_t x = 0; x < p.img.size(); ++x) r.img[p.img[x]] = static_cast<Pt>(x);
  return r;
}

Perm conjugate(const Perm& p, const Perm& g) {
  Perm r;
  r.img.resize(p.img.size());
  for (std::size_t x = 0; x < p.img.size(); ++x) r.img[g.img[x]] = g.img[p.img[x]];
  return r;
}

Perm commutator(const Perm& a, const Perm& b) {
  // a^{-1} b^{-1} a b, assembled left-to-right.
  return compose(compose(compose(inverse(a), inverse(b)), a), b);
}

Perm power(const Perm& p, std::uint64_t k) {
  Perm acc = identity_perm(p.degree());
  Perm sq = p;
  while (k > 0) {
    if (k & 1) acc = compose(acc, sq);
    sq = compose(sq, sq);
    k >>= 1;
  }
  return acc;
}

std::uint64_t element_order(const Perm& p) {
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  std::uint64_t ord = 1;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    Pt x = static_cast<Pt>(start);
    do {
      seen[x] = true;
      x = p.img[x];
      ++len;
    } while (x != start);
    const std::uint64_t g = std::gcd(ord, len);
    const std::uint64_t q = len / g;
    if (ord > UINT64_MAX / q) throw std::overflow_error("element_order: lcm exceeds 64 bits");
    ord *= q;
  }
  return ord;
}

bool is_involution(const Perm& p) {
  bool moved = false;
  for (std::size_t x = 0; x < p.img.size(); ++x) {
    const Pt y = p.img[x];
    if (y != x) {
      moved = true;
      if (p.img[y] != x) return false;
    }
  }
  return moved;
}

std::vector<Pt> fixed_points(const Perm& p) {
  std::vector<Pt> fix;
  for (std::size_t x = 0; x < p.img.size(); ++x)
    if (p.img[x] == x) fix.push_back(static_cast<Pt>(x));
  return fix;
}

std::size_t fixed_point_count(const Perm& p) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < p.img.size(); ++x)
    if (p.img[x] == x) ++c;
  return c;
}

namespace {
inline std::uint64_t mix64(std::uint64_t z) {
  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t perm_hash(const Perm& p) {
  std::uint64_t h = 0x243f6a8885a308d3ULL ^ (p.degree() * 0x9e3779b97f4a7c15ULL);
  for (Pt v : p.img) h = mix64(h ^ v);
  return h;
}

std::array<std::uint64_t, 2> perm_hash128(const Perm& p) {
  std::uint64_t h1 = 0x452821e638d01377ULL ^ (p.degree() * 0x9e3779b97f4a7c15ULL);
  std::uint64_t h2 = 0xbe5466cf34e90c6cULL ^ (p.degree() * 0xc2b2ae3d27d4eb4fULL);
  for (Pt v : p.img) {
    h1 = mix64(h1 ^ v);
    h2 = mix64(h2 ^ (v * 0x9ddfea08eb382d69ULL));
  }
  return {h1, h2};
}

std::string cycle_string(const Perm& p) {
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  std::ostringstream out;
  bool any = false;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start] || p.img[start] == start) {
      seen[start] = true;
      continue;
    }
    any = true;
    out << '(';
    Pt x = static_cast<Pt>(start);
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      first = false;
      seen[x] = true;
      x = p.img[x];
    } while (x != start);
    out << ')';
  }
  return any ? out.str() : "id";
}

}  // namespace permcore
