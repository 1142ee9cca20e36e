#include "superpoisson/cohomology.hpp"

#include <algorithm>
#include <limits>

#include "superpoisson/checks.hpp"

namespace spo {
namespace {

constexpr std::size_t kMaxCoords = 20'000'000;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::vector<Tuple> combinations(std::size_t n, std::size_t k) {
  std::vector<Tuple> out;
  if (k > n) return out;
  Tuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = static_cast<std::uint16_t>(i);
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = static_cast<std::uint16_t>(t[j - 1] + 1);
  }
  return out;
}

// One linear functional on cochain coordinates per basis vector of M.
using LinVec = std::vector<SparseRow>;

class Evaluator {
 public:
  explicit Evaluator(const CochainSpace& s) : s_(s), f_(s.field()), n_(s.algebra().dim()), m_(s.module().dim()) {}

  LinVec zero() const { return LinVec(m_); }

  // out += coef * phi(args)
  void phi(LinVec& out, Scalar coef, const std::vector<const Vec*>& args) const {
    if (args.size() != s_.degree()) throw Error(ErrorKind::ArityMismatch, "phi takes " + std::to_string(s_.degree()) + " arguments");
    Tuple idx(args.size());
    expand(args, 0, coef, idx, [&](const Tuple& t, Scalar c) {
      Tuple sorted = t;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
      std::size_t r = s_.tuple_rank(sorted);
      for (std::size_t m = 0; m < m_; ++m) out[m].emplace_back(static_cast<std::uint32_t>(s_.phi_index(r, m)), c);
    });
  }

  // out += coef * omega(x, rest), x odd
  void omega(LinVec& out, Scalar coef, const Vec& x, const std::vector<const Vec*>& rest) const {
    if (s_.degree() < 2 || rest.size() + 2 != s_.degree())
      throw Error(ErrorKind::ArityMismatch, "omega takes " + std::to_string(s_.degree() >= 2 ? s_.degree() - 1 : 0) + " arguments");
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) {
        if (s_.algebra().space.parity(i) != 1) throw Error(ErrorKind::NotOddHomogeneous, "omega needs an odd first argument");
        support.push_back(i);
      }
    Tuple idx(rest.size());
    for (std::size_t p = 0; p < support.size(); ++p) {
      std::size_t i = support[p];
      std::size_t pos = *s_.odd_position(i);
      expand(rest, 0, f_.mul(coef, f_.square(x[i])), idx, [&](const Tuple& t, Scalar c) {
        Tuple sorted = t;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
        std::size_t r = s_.tuple_rank(sorted);
        for (std::size_t m = 0; m < m_; ++m) out[m].emplace_back(static_cast<std::uint32_t>(s_.omega_index(pos, r, m)), c);
      });
      for (std::size_t q = p + 1; q < support.size(); ++q) {
        Vec xi = unit_vector(n_, i), xj = unit_vector(n_, support[q]);
        std::vector<const Vec*> args{&xi, &xj};
        args.insert(args.end(), rest.begin(), rest.end());
        phi(out, f_.mul(coef, f_.mul(x[i], x[support[q]])), args);
      }
    }
  }

  // out += op * v, with op an operator on M
  void act(LinVec& out, const Matrix& op, LinVec v) const {
    for (auto& row : v) canonicalize(row);
    for (std::size_t k = 0; k < m_; ++k)
      for (std::size_t m = 0; m < m_; ++m) {
        Scalar a = op(k, m);
        if (!a) continue;
        for (auto [c, val] : v[m]) out[k].emplace_back(c, f_.mul(a, val));
      }
  }

  static void finish(LinVec& v) {
    for (auto& row : v) canonicalize(row);
  }

 private:
  template <class F>
  void expand(const std::vector<const Vec*>& args, std::size_t pos, Scalar coef, Tuple& idx, F&& emit) const {
    if (!coef) return;
    if (pos == args.size()) {
      emit(idx, coef);
      return;
    }
    const Vec& a = *args[pos];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      idx[pos] = static_cast<std::uint16_t>(i);
      expand(args, pos + 1, f_.mul(coef, a[i]), idx, emit);
    }
  }

  const CochainSpace& s_;
  const Field& f_;
  std::size_t n_, m_;
};

Vec apply_linvec(const Field& f, const LinVec& v, const Vec& coords) {
  Vec out(v.size(), 0);
  for (std::size_t m = 0; m < v.size(); ++m)
    for (auto [c, val] : v[m]) out[m] ^= f.mul(val, coords[c]);
  return out;
}

std::vector<Vec> basis_vectors(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  return out;
}

// D * b for every b, via a column-major copy of D.
std::vector<Vec> images(const Field& f, const SparseMatrix& d, const std::vector<Vec>& basis) {
  std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> cols(d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (auto [c, v] : d.row(r)) cols[c].emplace_back(static_cast<std::uint32_t>(r), v);
  std::vector<Vec> out;
  out.reserve(basis.size());
  for (const Vec& b : basis) {
    Vec img(d.rows(), 0);
    for (std::size_t c = 0; c < b.size(); ++c) {
      if (!b[c]) continue;
      for (auto [r, v] : cols[c]) img[r] ^= f.mul(b[c], v);
    }
    out.push_back(std::move(img));
  }
  return out;
}

std::vector<Vec> unit_subspace(const CochainSpace& s, std::optional<int> parity) {
  std::vector<Vec> out;
  for (std::size_t c = 0; c < s.dim(); ++c)
    if (!parity || s.coord_parity(c) == *parity) out.push_back(unit_vector(s.dim(), c));
  return out;
}

// Cohomology at `src` of the complex restricted to the given subspaces.
CohomologyResult restricted_cohomology(const CochainSpace& src, const std::vector<Vec>& here,
                                       const SparseMatrix& d_here, const std::vector<Vec>& prev,
                                       const SparseMatrix* d_prev, std::optional<int> parity) {
  const Field& f = src.field();
  CohomologyResult res;
  res.degree = src.degree();
  res.parity = parity;
  res.cochain_dim = here.size();
  std::vector<Vec> img = images(f, d_here, here);
  if (!here.empty()) {
    Matrix m = Matrix::from_columns(d_here.rows(), img);
    for (const Vec& k : kernel_basis(f, m)) {
      Vec z(src.dim(), 0);
      for (std::size_t j = 0; j < k.size(); ++j)
        if (k[j]) axpy(f, z, k[j], here[j]);
      res.cocycles.push_back(std::move(z));
    }
  }
  SpanBasis bounds(f, src.dim());
  if (d_prev)
    for (Vec& b : images(f, *d_prev, prev)) bounds.insert(std::move(b));
  res.coboundaries = bounds.rows();
  res.dim = quotient_dim(f, res.cocycles, res.coboundaries);
  for (const Vec& z : res.cocycles)
    if (bounds.insert(z)) res.representatives.push_back(z);
  return res;
}

}  // namespace

Module adjoint_module(const AlgebraBundle& l) {
  Module m{l.space, {}};
  for (std::size_t i = 0; i < l.dim(); ++i) m.action.push_back(ad(l, l.basis(i)));
  return m;
}

Matrix module_operator(const Field& f, const Module& m, const Vec& x) {
  Matrix out(m.dim(), m.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) ^= f.mul(x[i], m.action[i](r, c));
  }
  return out;
}

CochainSpace::CochainSpace(AlgebraBundle l, Module m, std::size_t degree)
    : l_(std::move(l)), m_(std::move(m)), degree_(degree) {
  if (!l_.bracket || !l_.squaring) throw Error(ErrorKind::MissingStructure, "cochains need a Lie superalgebra");
  const std::size_t n = l_.dim();
  if (m_.action.size() != n) throw Error(ErrorKind::DimensionMismatch, "module needs one operator per basis element");
  for (const Matrix& a : m_.action)
    if (a.rows() != m_.dim() || a.cols() != m_.dim()) throw Error(ErrorKind::DimensionMismatch, "module operator size");
  if (n > std::numeric_limits<std::uint16_t>::max()) throw Error(ErrorKind::SizeBudgetExceeded, "algebra too large");
  binom_.assign(n + 1, std::vector<std::uint64_t>(degree + 2, 0));
  for (std::size_t a = 0; a <= n; ++a) {
    binom_[a][0] = 1;
    for (std::size_t b = 1; b <= degree + 1 && b <= a; ++b)
      binom_[a][b] = sat_add(binom_[a - 1][b - 1], b < a ? binom_[a - 1][b] : 0);
  }
  odd_ = l_.space.indices(1);
  odd_pos_.assign(n, -1);
  for (std::size_t p = 0; p < odd_.size(); ++p) odd_pos_[odd_[p]] = static_cast<std::int64_t>(p);
  std::uint64_t count = binom_[n][std::min(degree, n + 1)] * m_.dim();
  if (degree > n) count = 0;
  if (degree >= 2 && degree - 2 <= n) count = sat_add(count, odd_.size() * binom_[n][degree - 2] * m_.dim());
  if (count > kMaxCoords)
    throw Error(ErrorKind::SizeBudgetExceeded, "degree " + std::to_string(degree) + " cochains need " + std::to_string(count) + " coordinates");
  phi_tuples_ = combinations(n, degree);
  if (degree >= 2) omega_tuples_ = combinations(n, degree - 2);
}

std::size_t CochainSpace::tuple_rank(const Tuple& t) const {
  const std::size_t n = l_.dim(), k = t.size();
  std::uint64_t r = binom_[n][k] - 1;
  for (std::size_t i = 0; i < k; ++i) r -= binom_[n - 1 - t[i]][k - i];
  return static_cast<std::size_t>(r);
}

std::optional<std::size_t> CochainSpace::odd_position(std::size_t basis_index) const {
  if (basis_index >= odd_pos_.size() || odd_pos_[basis_index] < 0) return std::nullopt;
  return static_cast<std::size_t>(odd_pos_[basis_index]);
}

int CochainSpace::coord_parity(std::size_t c) const {
  const std::size_t md = m_.dim();
  int p = m_.space.parity(c % md);
  const Tuple& t = c < phi_count() ? phi_tuples_[c / md] : omega_tuples_[((c - phi_count()) / md) % omega_tuples_.size()];
  for (auto i : t) p ^= l_.space.parity(i);
  return p;
}

std::vector<std::size_t> CochainSpace::coords_of_parity(int parity) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim(); ++c)
    if (coord_parity(c) == parity) out.push_back(c);
  return out;
}

std::string CochainSpace::coord_name(std::size_t c) const {
  const std::size_t md = m_.dim();
  std::string args;
  auto join = [&](const Tuple& t) {
    for (auto i : t) {
      if (!args.empty() && args.back() != '(' && args.back() != ';') args += ",";
      args += l_.space.name(i);
    }
  };
  std::string head;
  if (c < phi_count()) {
    head = "phi(";
    args = head;
    join(phi_tuples_[c / md]);
  } else {
    std::size_t rest = (c - phi_count()) / md;
    std::size_t pos = rest / omega_tuples_.size();
    args = "omega(" + l_.space.name(odd_[pos]) + ";";
    join(omega_tuples_[rest % omega_tuples_.size()]);
    if (args.back() == ';') args.pop_back();
  }
  return args + ")->" + m_.space.name(c % md);
}

Vec eval_phi(const CochainSpace& s, const Vec& coords, const std::vector<Vec>& args) {
  Evaluator ev(s);
  LinVec out = ev.zero();
  std::vector<const Vec*> ptrs;
  for (const Vec& a : args) ptrs.push_back(&a);
  ev.phi(out, 1, ptrs);
  return apply_linvec(s.field(), out, coords);
}

Vec eval_omega(const CochainSpace& s, const Vec& coords, const Vec& x, const std::vector<Vec>& rest) {
  Evaluator ev(s);
  LinVec out = ev.zero();
  std::vector<const Vec*> ptrs;
  for (const Vec& a : rest) ptrs.push_back(&a);
  ev.omega(out, 1, x, ptrs);
  return apply_linvec(s.field(), out, coords);
}

SparseMatrix coboundary(const CochainSpace& src, const CochainSpace& dst) {
  if (dst.degree() != src.degree() + 1) throw Error(ErrorKind::ArityMismatch, "coboundary goes up one degree");
  const AlgebraBundle& l = src.algebra();
  const Module& mod = src.module();
  const std::size_t n = l.dim(), md = mod.dim();
  const std::vector<Vec> e = basis_vectors(n);
  Evaluator ev(src);
  SparseMatrix d(dst.dim(), src.dim());
  auto store = [&](LinVec& acc, auto index) {
    Evaluator::finish(acc);
    for (std::size_t m = 0; m < md; ++m) d.row(index(m)) = std::move(acc[m]);
  };

  for (const Tuple& t : dst.phi_tuples()) {
    LinVec acc = ev.zero();
    const std::size_t k = t.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<const Vec*> rest;
      for (std::size_t j = 0; j < k; ++j)
        if (j != i) rest.push_back(&e[t[j]]);
      LinVec tmp = ev.zero();
      ev.phi(tmp, 1, rest);
      ev.act(acc, mod.action[t[i]], std::move(tmp));
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const Vec& br = l.bracket->at(t[i], t[j]);
        if (is_zero(br)) continue;
        std::vector<const Vec*> args{&br};
        for (std::size_t q = 0; q < k; ++q)
          if (q != i && q != j) args.push_back(&e[t[q]]);
        ev.phi(acc, 1, args);
      }
    std::size_t r = dst.tuple_rank(t);
    store(acc, [&](std::size_t m) { return dst.phi_index(r, m); });
  }

  for (std::size_t pos = 0; pos < dst.odd_basis().size(); ++pos) {
    const std::size_t xi = dst.odd_basis()[pos];
    const Vec& x = e[xi];
    const Vec& sx = (*l.squaring)[xi];
    for (const Tuple& z : dst.omega_tuples()) {
      LinVec acc = ev.zero();
      const std::size_t k = z.size();
      {
        std::vector<const Vec*> args{&x};
        for (auto zi : z) args.push_back(&e[zi]);
        LinVec tmp = ev.zero();
        ev.phi(tmp, 1, args);
        ev.act(acc, mod.action[xi], std::move(tmp));
      }
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<const Vec*> rest;
        for (std::size_t j = 0; j < k; ++j)
          if (j != i) rest.push_back(&e[z[j]]);
        LinVec tmp = ev.zero();
        ev.omega(tmp, 1, x, rest);
        ev.act(acc, mod.action[z[i]], std::move(tmp));
      }
      if (!is_zero(sx)) {
        std::vector<const Vec*> args{&sx};
        for (auto zi : z) args.push_back(&e[zi]);
        ev.phi(acc, 1, args);
      }
      for (std::size_t i = 0; i < k; ++i) {
        const Vec& br = l.bracket->at(xi, z[i]);
        if (is_zero(br)) continue;
        std::vector<const Vec*> args{&br, &x};
        for (std::size_t j = 0; j < k; ++j)
          if (j != i) args.push_back(&e[z[j]]);
        ev.phi(acc, 1, args);
      }
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
          const Vec& br = l.bracket->at(z[i], z[j]);
          if (is_zero(br)) continue;
          std::vector<const Vec*> rest{&br};
          for (std::size_t q = 0; q < k; ++q)
            if (q != i && q != j) rest.push_back(&e[z[q]]);
          ev.omega(acc, 1, x, rest);
        }
      std::size_t r = dst.tuple_rank(z);
      store(acc, [&](std::size_t m) { return dst.omega_index(pos, r, m); });
    }
  }
  return d;
}

SparseMatrix coboundary_matrix(const CochainSpace& src) {
  CochainSpace dst(src.algebra(), src.module(), src.degree() + 1);
  return coboundary(src, dst);
}

CohomologyResult lie_cohomology(const AlgebraBundle& l, const Module& m, std::size_t n, std::optional<int> parity) {
  CochainSpace src(l, m, n), dst(l, m, n + 1);
  SparseMatrix d_here = coboundary(src, dst);
  if (n == 0) return restricted_cohomology(src, unit_subspace(src, parity), d_here, {}, nullptr, parity);
  CochainSpace prev(l, m, n - 1);
  SparseMatrix d_prev = coboundary(prev, src);
  return restricted_cohomology(src, unit_subspace(src, parity), d_here, unit_subspace(prev, parity), &d_prev, parity);
}

SparseMatrix poisson_constraints(const CochainSpace& s) {
  const AlgebraBundle& p = s.algebra();
  if (!p.product) throw Error(ErrorKind::MissingStructure, "Poisson cochains need a product");
  const Field& f = p.field;
  const std::size_t n = p.dim(), deg = s.degree();
  const std::vector<Vec> e = basis_vectors(n);
  std::vector<Matrix> mult;
  for (std::size_t i = 0; i < n; ++i) mult.push_back(left_mult(p, e[i]));
  auto mult_by = [&](const Vec& x) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      if (x[i])
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) out(r, c) ^= f.mul(x[i], mult[i](r, c));
    return out;
  };
  Evaluator ev(s);
  std::vector<SparseRow> rows;
  auto emit = [&](LinVec& acc) {
    Evaluator::finish(acc);
    for (auto& r : acc)
      if (!r.empty()) rows.push_back(std::move(r));
  };
  auto ptrs = [&](const Tuple& t) {
    std::vector<const Vec*> out;
    for (auto i : t) out.push_back(&e[i]);
    return out;
  };

  if (deg >= 1) {
    auto tails = combinations(n, deg - 1);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) {
        const Vec& xy = p.product->at(x, y);
        for (const Tuple& z : tails) {
          LinVec acc = ev.zero();
          auto rest = ptrs(z);
          std::vector<const Vec*> a{&xy};
          a.insert(a.end(), rest.begin(), rest.end());
          if (!is_zero(xy)) ev.phi(acc, 1, a);
          for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
            std::vector<const Vec*> b{&e[v]};
            b.insert(b.end(), rest.begin(), rest.end());
            LinVec tmp = ev.zero();
            ev.phi(tmp, 1, b);
            ev.act(acc, mult[u], std::move(tmp));
          }
          emit(acc);
        }
      }
  }
  if (deg >= 2) {
    auto with_pairs = [&](int parity) {
      std::vector<Vec> out;
      auto idx = p.space.indices(parity);
      for (auto i : idx) out.push_back(e[i]);
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          Vec v = e[idx[a]];
          add_into(v, e[idx[b]]);
          out.push_back(std::move(v));
        }
      return out;
    };
    const std::vector<Vec> xs = with_pairs(1), ys = with_pairs(0);
    auto tails = combinations(n, deg - 2);
    for (const Vec& x : xs)
      for (const Vec& y : ys) {
        Vec xy = eval_product(p, x, y);
        Matrix yy = mult_by(eval_product(p, y, y)), mxy = mult_by(xy);
        for (const Tuple& z : tails) {
          LinVec acc = ev.zero();
          auto rest = ptrs(z);
          if (!is_zero(xy)) ev.omega(acc, 1, xy, rest);
          LinVec t1 = ev.zero();
          ev.omega(t1, 1, x, rest);
          ev.act(acc, yy, std::move(t1));
          std::vector<const Vec*> a{&x, &y};
          a.insert(a.end(), rest.begin(), rest.end());
          LinVec t2 = ev.zero();
          ev.phi(t2, 1, a);
          ev.act(acc, mxy, std::move(t2));
          emit(acc);
        }
      }
    if (deg >= 3) {
      auto tails3 = combinations(n, deg - 3);
      for (const Vec& x : xs)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = a; b < n; ++b) {
            const Vec& ab = p.product->at(a, b);
            for (const Tuple& z : tails3) {
              LinVec acc = ev.zero();
              auto rest = ptrs(z);
              if (!is_zero(ab)) {
                std::vector<const Vec*> r{&ab};
                r.insert(r.end(), rest.begin(), rest.end());
                ev.omega(acc, 1, x, r);
              }
              for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
                std::vector<const Vec*> r{&e[v]};
                r.insert(r.end(), rest.begin(), rest.end());
                LinVec tmp = ev.zero();
                ev.omega(tmp, 1, x, r);
                ev.act(acc, mult[u], std::move(tmp));
              }
              emit(acc);
            }
          }
    }
  }
  SparseMatrix out(rows.size(), s.dim());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(i) = std::move(rows[i]);
  return out;
}

namespace {

std::vector<Vec> constrained_basis(const CochainSpace& s, std::optional<int> parity) {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < s.dim(); ++c)
    if (!parity || s.coord_parity(c) == *parity) cols.push_back(c);
  SparseMatrix cons = poisson_constraints(s);
  std::vector<std::int64_t> where(s.dim(), -1);
  for (std::size_t j = 0; j < cols.size(); ++j) where[cols[j]] = static_cast<std::int64_t>(j);
  Matrix m(cons.rows(), cols.size());
  for (std::size_t r = 0; r < cons.rows(); ++r)
    for (auto [c, v] : cons.row(r))
      if (where[c] >= 0) m(r, static_cast<std::size_t>(where[c])) = v;
  std::vector<Vec> out;
  for (const Vec& k : kernel_basis(s.field(), m)) {
    Vec full(s.dim(), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = k[j];
    out.push_back(std::move(full));
  }
  return out;
}

}  // namespace

std::vector<Vec> poisson_subspace(const AlgebraBundle& p, std::size_t n, std::optional<int> parity) {
  if (!p.is_poisson()) throw Error(ErrorKind::MissingStructure, "Poisson cochains need a Poisson superalgebra");
  return constrained_basis(CochainSpace(p, adjoint_module(p), n), parity);
}

CohomologyResult poisson_cohomology(const AlgebraBundle& p, std::size_t n, std::optional<int> parity) {
  if (!p.is_poisson()) throw Error(ErrorKind::MissingStructure, "Poisson cohomology needs a Poisson superalgebra");
  const Module adj = adjoint_module(p);
  CochainSpace src(p, adj, n), dst(p, adj, n + 1);
  SparseMatrix d_here = coboundary(src, dst);
  std::vector<Vec> here = constrained_basis(src, parity);
  SparseMatrix next_cons = poisson_constraints(dst);
  for (const Vec& img : images(p.field, d_here, here)) {
    bool escapes = !is_zero(next_cons.apply(p.field, img));
    for (std::size_t c = 0; c < img.size() && !escapes; ++c)
      if (img[c] && parity && dst.coord_parity(c) != *parity) escapes = true;
    if (escapes)
      throw Error(ErrorKind::DifferentialEscapesSubspace,
                  "d maps a degree-" + std::to_string(n) + " Poisson cochain outside the Poisson cochains");
  }
  if (n == 0) return restricted_cohomology(src, here, d_here, {}, nullptr, parity);
  CochainSpace prev(p, adj, n - 1);
  SparseMatrix d_prev = coboundary(prev, src);
  return restricted_cohomology(src, here, d_here, constrained_basis(prev, parity), &d_prev, parity);
}

LieCocycle hochschild_to_lie(const AlgebraBundle& a, const BilinearTable& mu) {
  if (!a.product) throw Error(ErrorKind::MissingStructure, "no product");
  const Field& f = a.field;
  const std::size_t n = a.dim();
  if (mu.dim() != n) throw Error(ErrorKind::DimensionMismatch, "cocycle table size");
  auto m = [&](const Vec& x, const Vec& y) { return bilinear(f, mu, x, y); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = a.basis(i), y = a.basis(j), z = a.basis(k);
        Vec v = eval_product(a, x, m(y, z));
        add_into(v, m(eval_product(a, x, y), z));
        add_into(v, m(x, eval_product(a, y, z)));
        add_into(v, eval_product(a, m(x, y), z));
        if (!is_zero(v))
          throw Error(ErrorKind::NotAHochschildCocycle,
                      "fails at (" + a.space.name(i) + ", " + a.space.name(j) + ", " + a.space.name(k) + ")");
      }
  AlgebraBundle lie = assoc_to_lie(a);
  LieCocycle out{CochainSpace(lie, adjoint_module(lie), 2), {}};
  const CochainSpace& s = out.space;
  out.coords.assign(s.dim(), 0);
  for (std::size_t r = 0; r < s.phi_tuples().size(); ++r) {
    const Tuple& t = s.phi_tuples()[r];
    Vec v = mu.at(t[0], t[1]);
    add_into(v, mu.at(t[1], t[0]));
    for (std::size_t k = 0; k < n; ++k) out.coords[s.phi_index(r, k)] = v[k];
  }
  for (std::size_t pos = 0; pos < s.odd_basis().size(); ++pos) {
    const Vec& v = mu.at(s.odd_basis()[pos], s.odd_basis()[pos]);
    for (std::size_t k = 0; k < n; ++k) out.coords[s.omega_index(pos, 0, k)] = v[k];
  }
  if (!is_zero(coboundary_matrix(s).apply(f, out.coords)))
    throw Error(ErrorKind::NotAHochschildCocycle, "image is not a Lie 2-cocycle");
  return out;
}

}  // namespace spo
