#pragma once

// Exhaustive cohomology over GF(2) for algebras of dimension <= 5, with the
// adjoint module. Cochains are stored as explicit value tables indexed by
// subsets of basis indices and every cochain of a parity slice is visited.
// Nothing here goes through the library's cochain coordinates.

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "superpoisson/bundle.hpp"

namespace brute {

using Mask = std::uint32_t;

struct Algebra {
  int n = 0;
  std::vector<int> parity;
  std::vector<std::vector<Mask>> bracket, product;
  std::vector<Mask> square;  // per odd basis vector
  bool has_product = false;

  Mask bilinear(const std::vector<std::vector<Mask>>& t, Mask a, Mask b) const {
    Mask out = 0;
    for (int i = 0; i < n; ++i)
      if (a >> i & 1)
        for (int j = 0; j < n; ++j)
          if (b >> j & 1) out ^= t[i][j];
    return out;
  }
  Mask br(Mask a, Mask b) const { return bilinear(bracket, a, b); }
  Mask mul(Mask a, Mask b) const { return bilinear(product, a, b); }
  Mask sq(Mask x) const {
    Mask out = 0;
    for (int i = 0; i < n; ++i) {
      if (!(x >> i & 1)) continue;
      out ^= square[i];
      for (int j = i + 1; j < n; ++j)
        if (x >> j & 1) out ^= bracket[i][j];
    }
    return out;
  }
  int mask_parity(Mask m) const {
    int p = 0;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) p ^= parity[i];
    return p;
  }
  Mask parity_part(int p) const {
    Mask m = 0;
    for (int i = 0; i < n; ++i)
      if (parity[i] == p) m |= Mask(1) << i;
    return m;
  }
};

inline Mask to_mask(const spo::Vec& v) {
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) m |= Mask(1) << i;
  return m;
}

inline Algebra from_bundle(const spo::AlgebraBundle& a) {
  if (a.field.degree() != 1) throw std::invalid_argument("brute force runs over GF(2) only");
  if (!a.is_lie()) throw std::invalid_argument("needs a bracket and a squaring");
  Algebra b;
  b.n = static_cast<int>(a.dim());
  if (b.n > 5) throw std::invalid_argument("too large for exhaustive enumeration");
  b.bracket.assign(b.n, std::vector<Mask>(b.n, 0));
  b.product.assign(b.n, std::vector<Mask>(b.n, 0));
  b.square.assign(b.n, 0);
  for (int i = 0; i < b.n; ++i) {
    b.parity.push_back(a.space.parity(i));
    b.square[i] = to_mask((*a.squaring)[i]);
    for (int j = 0; j < b.n; ++j) {
      b.bracket[i][j] = to_mask(a.bracket->at(i, j));
      if (a.product) b.product[i][j] = to_mask(a.product->at(i, j));
    }
  }
  b.has_product = a.product.has_value();
  return b;
}

// A degree-k cochain with values in the adjoint module: phi on k-subsets of
// the basis, omega on (odd basis vector, (k-2)-subset).
struct Cochain {
  int degree = 0;
  std::vector<Mask> phi;                 // indexed by subset mask
  std::vector<std::vector<Mask>> omega;  // [basis index][subset mask]
};

class Enumerator {
 public:
  explicit Enumerator(Algebra a) : a_(std::move(a)) {}
  const Algebra& algebra() const { return a_; }

  // phi on a list of basis indices; repeated indices give zero.
  Mask phi_basis(const Cochain& c, const std::vector<int>& idx) const {
    Mask s = 0;
    for (int i : idx) {
      if (s >> i & 1) return 0;
      s |= Mask(1) << i;
    }
    return c.phi[s];
  }
  // Multilinear extension to arbitrary arguments.
  Mask phi(const Cochain& c, const std::vector<Mask>& args) const {
    std::vector<int> idx(args.size());
    return phi_rec(c, args, idx, 0);
  }
  // Quadratic in x, multilinear in the rest.
  Mask omega(const Cochain& c, Mask x, const std::vector<Mask>& rest) const {
    Mask out = 0;
    for (int i = 0; i < a_.n; ++i) {
      if (!(x >> i & 1)) continue;
      out ^= omega_basis_rest(c, i, rest);
      for (int j = i + 1; j < a_.n; ++j)
        if (x >> j & 1) {
          std::vector<Mask> args{Mask(1) << i, Mask(1) << j};
          args.insert(args.end(), rest.begin(), rest.end());
          out ^= phi(c, args);
        }
    }
    return out;
  }

  // Coordinates of the degree-k parity slice: (is_omega, basis index of x, subset, value bit).
  struct Slot {
    bool is_omega;
    int x;
    Mask subset;
    int bit;
  };
  std::vector<Slot> slots(int degree, int parity) const {
    std::vector<Slot> out;
    const Mask full = (Mask(1) << a_.n) - 1;
    for (Mask s = 0; s <= full; ++s) {
      if (std::popcount(s) != degree) continue;
      for (int m = 0; m < a_.n; ++m)
        if ((a_.mask_parity(s) ^ a_.parity[m]) == parity) out.push_back({false, -1, s, m});
    }
    if (degree >= 2)
      for (int x = 0; x < a_.n; ++x) {
        if (!a_.parity[x]) continue;
        for (Mask s = 0; s <= full; ++s) {
          if (std::popcount(s) != degree - 2) continue;
          for (int m = 0; m < a_.n; ++m)
            if ((a_.mask_parity(s) ^ a_.parity[m]) == parity) out.push_back({true, x, s, m});
        }
      }
    return out;
  }

  Cochain decode(int degree, const std::vector<Slot>& sl, std::uint64_t bits) const {
    Cochain c;
    c.degree = degree;
    c.phi.assign(std::size_t(1) << a_.n, 0);
    c.omega.assign(a_.n, std::vector<Mask>(std::size_t(1) << a_.n, 0));
    for (std::size_t k = 0; k < sl.size(); ++k) {
      if (!(bits >> k & 1)) continue;
      const Slot& s = sl[k];
      if (s.is_omega)
        c.omega[s.x][s.subset] ^= Mask(1) << s.bit;
      else
        c.phi[s.subset] ^= Mask(1) << s.bit;
    }
    return c;
  }

  // The coboundary, evaluated straight from its defining formula on every
  // basis input of degree k + 1. The result is a flat list of values.
  std::vector<Mask> coboundary(const Cochain& c) const {
    std::vector<Mask> out;
    const int k = c.degree;
    const Mask full = (Mask(1) << a_.n) - 1;
    for (Mask s = 0; s <= full; ++s) {
      if (std::popcount(s) != k + 1) continue;
      std::vector<int> xs = members(s);
      Mask v = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<Mask> rest;
        for (std::size_t t = 0; t < xs.size(); ++t)
          if (t != i) rest.push_back(Mask(1) << xs[t]);
        v ^= a_.br(Mask(1) << xs[i], phi(c, rest));
      }
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          std::vector<Mask> args{a_.br(Mask(1) << xs[i], Mask(1) << xs[j])};
          for (std::size_t t = 0; t < xs.size(); ++t)
            if (t != i && t != j) args.push_back(Mask(1) << xs[t]);
          v ^= phi(c, args);
        }
      out.push_back(v);
    }
    if (k + 1 >= 2)
      for (int x = 0; x < a_.n; ++x) {
        if (!a_.parity[x]) continue;
        const Mask xm = Mask(1) << x;
        for (Mask s = 0; s <= full; ++s) {
          if (std::popcount(s) != k - 1) continue;
          std::vector<int> zs = members(s);
          std::vector<Mask> z;
          for (int i : zs) z.push_back(Mask(1) << i);
          Mask v = 0;
          std::vector<Mask> xz{xm};
          xz.insert(xz.end(), z.begin(), z.end());
          v ^= a_.br(xm, phi(c, xz));
          std::vector<Mask> sz{a_.sq(xm)};
          sz.insert(sz.end(), z.begin(), z.end());
          v ^= phi(c, sz);
          for (std::size_t i = 0; i < z.size(); ++i) {
            std::vector<Mask> hat;
            for (std::size_t t = 0; t < z.size(); ++t)
              if (t != i) hat.push_back(z[t]);
            if (k >= 2) v ^= a_.br(z[i], omega(c, xm, hat));
            std::vector<Mask> args{a_.br(xm, z[i]), xm};
            args.insert(args.end(), hat.begin(), hat.end());
            v ^= phi(c, args);
          }
          if (k >= 2)
            for (std::size_t i = 0; i < z.size(); ++i)
              for (std::size_t j = i + 1; j < z.size(); ++j) {
                std::vector<Mask> args{a_.br(z[i], z[j])};
                for (std::size_t t = 0; t < z.size(); ++t)
                  if (t != i && t != j) args.push_back(z[t]);
                v ^= omega(c, xm, args);
              }
          out.push_back(v);
        }
      }
    return out;
  }

  // Multiderivation rule in the first slot, and for degree 2 the rule for
  // omega on products xy, tested on every odd x and even y.
  bool is_poisson_cochain(const Cochain& c) const {
    if (!a_.has_product) throw std::invalid_argument("Poisson cochains need a product");
    const int k = c.degree;
    if (k == 0) return true;
    if (k > 2) throw std::invalid_argument("Poisson membership is implemented up to degree 2");
    for (int i = 0; i < a_.n; ++i)
      for (int j = 0; j < a_.n; ++j) {
        const Mask x = Mask(1) << i, y = Mask(1) << j;
        for (int z = 0; z < (k == 2 ? a_.n : 1); ++z) {
          std::vector<Mask> rest;
          if (k == 2) rest.push_back(Mask(1) << z);
          auto with = [&](Mask first) {
            std::vector<Mask> args{first};
            args.insert(args.end(), rest.begin(), rest.end());
            return phi(c, args);
          };
          if (with(a_.mul(x, y)) != (a_.mul(x, with(y)) ^ a_.mul(y, with(x)))) return false;
        }
      }
    if (k == 2) {
      const Mask odd = a_.parity_part(1), even = a_.parity_part(0);
      for (Mask x = odd; x; x = (x - 1) & odd)
        for (Mask y = even;; y = (y - 1) & even) {
          Mask xy = a_.mul(x, y);
          Mask lhs = omega(c, xy, {});
          Mask rhs = a_.mul(a_.mul(y, y), omega(c, x, {})) ^ a_.mul(xy, phi(c, {x, y}));
          if (lhs != rhs) return false;
          if (!y) break;
        }
    }
    return true;
  }

  struct Dims {
    std::size_t cochains = 0;  // log2 of the number of admissible cochains
    std::size_t cocycles = 0;
    std::size_t coboundaries = 0;
    std::size_t cohomology() const { return cocycles - coboundaries; }
  };

  Dims cohomology(int degree, int parity, bool poisson) const {
    Dims d;
    auto sl = slots(degree, parity);
    if (sl.size() > 24) throw std::invalid_argument("slice too large");
    std::uint64_t admissible = 0, closed = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << sl.size()); ++bits) {
      Cochain c = decode(degree, sl, bits);
      if (poisson && !is_poisson_cochain(c)) continue;
      ++admissible;
      std::vector<Mask> img = coboundary(c);
      bool zero = true;
      for (Mask v : img) zero = zero && v == 0;
      if (zero) ++closed;
    }
    std::set<std::vector<Mask>> images;
    if (degree > 0) {
      auto prev = slots(degree - 1, parity);
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << prev.size()); ++bits) {
        Cochain c = decode(degree - 1, prev, bits);
        if (poisson && !is_poisson_cochain(c)) continue;
        images.insert(coboundary(c));
      }
    } else {
      images.insert(std::vector<Mask>{});
    }
    d.cochains = log2_exact(admissible);
    d.cocycles = log2_exact(closed);
    d.coboundaries = log2_exact(images.size());
    return d;
  }

 private:
  Algebra a_;

  static std::vector<int> members(Mask s) {
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
      if (s & 1) out.push_back(i);
    return out;
  }
  static std::size_t log2_exact(std::uint64_t v) {
    if (v == 0 || (v & (v - 1))) throw std::logic_error("subset count is not a power of two");
    return static_cast<std::size_t>(std::countr_zero(v));
  }

  Mask phi_rec(const Cochain& c, const std::vector<Mask>& args, std::vector<int>& idx, std::size_t pos) const {
    if (pos == args.size()) return phi_basis(c, idx);
    Mask out = 0;
    for (int i = 0; i < a_.n; ++i)
      if (args[pos] >> i & 1) {
        idx[pos] = i;
        out ^= phi_rec(c, args, idx, pos + 1);
      }
    return out;
  }
  // omega(e_x, rest) for arbitrary rest, multilinear and alternating in rest.
  Mask omega_basis_rest(const Cochain& c, int x, const std::vector<Mask>& rest) const {
    std::vector<int> idx(rest.size());
    return omega_rec(c, x, rest, idx, 0);
  }
  Mask omega_rec(const Cochain& c, int x, const std::vector<Mask>& rest, std::vector<int>& idx, std::size_t pos) const {
    if (pos == rest.size()) {
      Mask s = 0;
      for (int i : idx) {
        if (s >> i & 1) return 0;
        s |= Mask(1) << i;
      }
      return c.omega[x][s];
    }
    Mask out = 0;
    for (int i = 0; i < a_.n; ++i)
      if (rest[pos] >> i & 1) {
        idx[pos] = i;
        out ^= omega_rec(c, x, rest, idx, pos + 1);
      }
    return out;
  }
};

}  // namespace brute
