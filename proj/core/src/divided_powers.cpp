#include "superpoisson/divided_powers.hpp"

namespace spo {
namespace {

bool is_power_of_two(unsigned i) { return i && !(i & (i - 1)); }

std::vector<std::size_t> vars_with(const DPSpec& s, VarRole r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.vars.size(); ++i)
    if (s.vars[i].role == r) out.push_back(i);
  return out;
}

}  // namespace

DPSpec make_dp_spec(DPType type, std::size_t even_pairs, std::size_t odd_vars, const std::vector<unsigned>& heights) {
  const std::size_t n_even = 2 * even_pairs;
  if (!heights.empty() && heights.size() != 1 && heights.size() != n_even && heights.size() != n_even + odd_vars)
    throw Error(ErrorKind::ValidationError, "expected 1, " + std::to_string(n_even) + " or " +
                                                std::to_string(n_even + odd_vars) + " heights");
  auto height = [&](std::size_t v) -> unsigned {
    if (heights.empty()) return 1;
    if (v >= n_even && heights.size() <= n_even) return 1;
    return heights.size() == 1 ? heights[0] : heights[v];
  };
  if (type == DPType::PiPi && odd_vars % 2)
    throw Error(ErrorKind::RoleMismatch, "odd variables must come in xi/eta pairs");
  DPSpec s;
  for (std::size_t i = 0; i < even_pairs; ++i) s.vars.push_back({"p" + std::to_string(i + 1), VarRole::P, height(i)});
  for (std::size_t i = 0; i < even_pairs; ++i)
    s.vars.push_back({"q" + std::to_string(i + 1), VarRole::Q, height(even_pairs + i)});
  if (type == DPType::PiI) {
    for (std::size_t i = 0; i < odd_vars; ++i)
      s.vars.push_back({"theta" + std::to_string(i + 1), VarRole::Theta, height(n_even + i)});
  } else {
    for (std::size_t i = 0; i < odd_vars / 2; ++i)
      s.vars.push_back({"xi" + std::to_string(i + 1), VarRole::Xi, height(n_even + i)});
    for (std::size_t i = 0; i < odd_vars / 2; ++i)
      s.vars.push_back({"eta" + std::to_string(i + 1), VarRole::Eta, height(n_even + odd_vars / 2 + i)});
  }
  return s;
}

DividedPowers::DividedPowers(const Field& f, DPSpec spec) : field_(f), spec_(std::move(spec)) {
  std::size_t dim = 1;
  for (const auto& v : spec_.vars) {
    if (v.height < 1) throw Error(ErrorKind::ValidationError, "height of " + v.name + " must be positive");
    if (v.parity() == 1 && v.height != 1)
      throw Error(ErrorKind::ValidationError, "odd variable " + v.name + " must have height 1");
    if (v.height > 12) throw Error(ErrorKind::SizeBudgetExceeded, "height of " + v.name + " too large");
    strides_.push_back(dim);
    dim <<= v.height;
    if (dim > kMaxDividedPowerDim)
      throw Error(ErrorKind::SizeBudgetExceeded, "divided power algebra exceeds " + std::to_string(kMaxDividedPowerDim) + " monomials");
  }
  monomials_.reserve(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    Monomial m(spec_.vars.size());
    for (std::size_t s = 0; s < m.size(); ++s) m[s] = static_cast<unsigned>((idx / strides_[s]) & ((1u << spec_.vars[s].height) - 1));
    monomials_.push_back(std::move(m));
  }
}

std::optional<std::size_t> DividedPowers::index_of(const Monomial& m) const {
  if (m.size() != spec_.vars.size()) return std::nullopt;
  std::size_t idx = 0;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] >= (1u << spec_.vars[s].height)) return std::nullopt;
    idx += m[s] * strides_[s];
  }
  return idx;
}

int DividedPowers::parity(std::size_t i) const {
  int p = 0;
  for (std::size_t s = 0; s < spec_.vars.size(); ++s)
    if (spec_.vars[s].parity()) p ^= static_cast<int>(monomials_[i][s] & 1);
  return p;
}

std::string DividedPowers::name(std::size_t i) const {
  std::string out;
  for (std::size_t s = 0; s < spec_.vars.size(); ++s) {
    unsigned e = monomials_[i][s];
    if (!e) continue;
    if (!out.empty()) out += "*";
    out += spec_.vars[s].name;
    if (e > 1) out += "^(" + std::to_string(e) + ")";
  }
  return out.empty() ? "1" : out;
}

SuperSpace DividedPowers::space() const {
  std::vector<BasisVector> b;
  for (std::size_t i = 0; i < dim(); ++i) b.push_back({name(i), parity(i)});
  return SuperSpace(std::move(b));
}

std::optional<std::size_t> DividedPowers::multiply_basis(std::size_t a, std::size_t b) const {
  const Monomial &x = monomials_[a], &y = monomials_[b];
  std::size_t idx = 0;
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (!binom_odd(x[s], y[s])) return std::nullopt;
    unsigned e = x[s] + y[s];
    if (e >= (1u << spec_.vars[s].height)) return std::nullopt;
    idx += e * strides_[s];
  }
  return idx;
}

std::optional<std::size_t> DividedPowers::partial_basis(std::size_t var, std::size_t a) const {
  if (monomials_[a][var] == 0) return std::nullopt;
  return a - strides_[var];
}

Vec DividedPowers::monomial_vector(const Monomial& m) const {
  auto idx = index_of(m);
  if (!idx) throw Error(ErrorKind::ValidationError, "monomial outside the height bounds");
  return unit_vector(dim(), *idx);
}

Vec DividedPowers::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim(), 0);
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (!x[a]) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (!y[b]) continue;
      if (auto c = multiply_basis(a, b)) out[*c] ^= field_.mul(x[a], y[b]);
    }
  }
  return out;
}

Vec DividedPowers::partial(std::size_t var, const Vec& x) const {
  Vec out(dim(), 0);
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a])
      if (auto c = partial_basis(var, a)) out[*c] ^= x[a];
  return out;
}

Vec DividedPowers::gamma2(const Vec& x) const {
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] && parity(a)) throw Error(ErrorKind::NotEven, "divided square of a non-even element");
  Vec out(dim(), 0);
  const Scalar c = x[0];
  std::vector<std::size_t> support;
  for (std::size_t a = 1; a < x.size(); ++a)
    if (x[a]) support.push_back(a);
  for (std::size_t p = 0; p < support.size(); ++p) {
    std::size_t a = support[p];
    const Monomial& m = monomials_[a];
    std::size_t nonzero = 0, var = 0;
    for (std::size_t s = 0; s < m.size(); ++s)
      if (m[s]) ++nonzero, var = s;
    if (nonzero == 1 && is_power_of_two(m[var]) && 2 * m[var] < (1u << spec_.vars[var].height))
      out[a + m[var] * strides_[var]] ^= field_.square(x[a]);
    for (std::size_t q = p + 1; q < support.size(); ++q)
      if (auto prod = multiply_basis(a, support[q])) out[*prod] ^= field_.mul(x[a], x[support[q]]);
  }
  if (c)
    for (std::size_t a : support) out[a] ^= field_.mul(c, x[a]);
  return out;
}

AlgebraBundle build_divided_power(const Field& f, DPType type, const DPSpec& spec) {
  std::vector<std::size_t> ps = vars_with(spec, VarRole::P), qs = vars_with(spec, VarRole::Q);
  std::vector<std::size_t> th = vars_with(spec, VarRole::Theta), xs = vars_with(spec, VarRole::Xi),
                           es = vars_with(spec, VarRole::Eta);
  if (ps.size() != qs.size()) throw Error(ErrorKind::RoleMismatch, "even variables must come in p/q pairs");
  if (type == DPType::PiI && (!xs.empty() || !es.empty()))
    throw Error(ErrorKind::RoleMismatch, "type PiI takes unpaired theta variables only");
  if (type == DPType::PiPi && (!th.empty() || xs.size() != es.size()))
    throw Error(ErrorKind::RoleMismatch, "type PiPi takes xi/eta pairs only");

  DividedPowers alg(f, spec);
  const std::size_t n = alg.dim();
  AlgebraBundle out = make_bundle(f, alg.space().basis(), type == DPType::PiI ? "PiI" : "PiPi");
  out.product = BilinearTable(n);
  out.bracket = BilinearTable(n);
  out.squaring = std::vector<Vec>(n, Vec(n, 0));
  out.unit = unit_vector(n, 0);

  // Pairs (u, v) contributing d/du f * d/dv g + d/dv f * d/du g.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ps.size(); ++i) pairs.emplace_back(ps[i], qs[i]);
  for (std::size_t i = 0; i < xs.size(); ++i) pairs.emplace_back(xs[i], es[i]);

  auto d = [&](std::size_t var, std::size_t a) -> Vec {
    auto idx = alg.partial_basis(var, a);
    return idx ? unit_vector(n, *idx) : Vec(n, 0);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (auto c = alg.multiply_basis(a, b)) {
        Vec v(n, 0);
        v[*c] = 1;
        out.product->set(a, b, v);
      }
      Vec br(n, 0);
      for (auto [u, v] : pairs) {
        add_into(br, alg.multiply(d(u, a), d(v, b)));
        add_into(br, alg.multiply(d(v, a), d(u, b)));
      }
      for (std::size_t t : th) add_into(br, alg.multiply(d(t, a), d(t, b)));
      if (a == b) br.assign(n, 0);
      out.bracket->set(a, b, br);
    }
    if (alg.parity(a) == 1) {
      Vec s(n, 0);
      for (auto [u, v] : pairs) add_into(s, alg.multiply(d(u, a), d(v, a)));
      for (std::size_t t : th) add_into(s, alg.gamma2(d(t, a)));
      (*out.squaring)[a] = s;
    }
  }
  return out;
}

AlgebraBundle build_pi_i(const Field& f, const DPSpec& spec) { return build_divided_power(f, DPType::PiI, spec); }
AlgebraBundle build_pi_pi(const Field& f, const DPSpec& spec) { return build_divided_power(f, DPType::PiPi, spec); }

}  // namespace spo
