#include "superpoisson/enveloping.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "superpoisson/checks.hpp"

namespace spo {
namespace {

constexpr std::size_t kMonomialBudget = 200000;
constexpr int kSamples = 8;

// Sparse element over monomials; a monomial is a string of generator indices.
using Elem = std::unordered_map<std::string, Scalar>;

void add_term(Elem& e, const std::string& m, Scalar c) {
  if (!c) return;
  Scalar& slot = e[m];
  slot ^= c;
  if (!slot) e.erase(m);
}

std::string letter_string(std::size_t g) { return std::string(1, static_cast<char>(g)); }

std::size_t letter_at(const std::string& m, std::size_t i) { return static_cast<unsigned char>(m[i]); }

// Number of non-decreasing words of each length up to cap in `even` letters
// that may repeat and `odd` letters that may not.
std::vector<std::size_t> ordered_counts(std::size_t even, std::size_t odd, std::size_t cap) {
  std::vector<std::size_t> e(cap + 1, 0), o(cap + 1, 0), out(cap + 1, 0);
  auto binom = [](std::size_t n, std::size_t k) {
    if (k > n) return std::size_t{0};
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (std::size_t k = 0; k <= cap; ++k) {
    e[k] = even == 0 ? (k == 0) : binom(even + k - 1, k);
    o[k] = binom(odd, k);
  }
  for (std::size_t k = 0; k <= cap; ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      out[k] += e[j] * o[k - j];
      if (out[k] > kMonomialBudget) throw Error(ErrorKind::SizeBudgetExceeded, "too many normal monomials");
    }
  return out;
}

}  // namespace

struct TruncatedUEA::Impl {
  LieRinehartTriple triple;
  std::size_t max_degree = 0, slack = 0, cap = 0;
  std::size_t na = 0, nl = 0, n = 0;
  std::vector<std::string> names;
  std::vector<int> parity;
  std::vector<Vec> bracket;  // n*n entries, length-n vectors over generators
  std::vector<Vec> square;   // n entries
  std::vector<Vec> absorb;   // na*n entries: i(a.w)
  std::vector<std::string> monomials;
  std::vector<std::string> monomial_names;
  std::unordered_map<std::string, std::size_t> index;
  SpanBasis relations{Field(), 0};
  std::optional<Vec> unit;
  mutable std::unordered_map<std::string, Elem> memo;

  const Field& field() const { return triple.algebra.field; }

  Elem times_vector(const std::string& m, const Vec& v) const {
    Elem out;
    for (std::size_t c = 0; c < n; ++c) {
      if (!v[c]) continue;
      for (const auto& [w, k] : right_letter(m, c)) add_term(out, w, field().mul(v[c], k));
    }
    return out;
  }

  // Normal form of (normal monomial m) * (generator x).
  const Elem& right_letter(const std::string& m, std::size_t x) const {
    std::string key = m;
    key.push_back(static_cast<char>(x));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Elem out;
    if (m.empty()) {
      out[letter_string(x)] = 1;
    } else {
      std::size_t y = letter_at(m, m.size() - 1);
      std::string rest = m.substr(0, m.size() - 1);
      if (y < na) {
        const Vec& v = absorb[y * n + x];
        for (std::size_t c = 0; c < n; ++c) add_term(out, letter_string(c), v[c]);
      } else if (x > y || (x == y && parity[x] == 0)) {
        out[key] = 1;
      } else if (x == y) {
        out = times_vector(rest, square[x]);
      } else {
        Elem head = right_letter(rest, x);
        for (const auto& [w, k] : head)
          for (const auto& [w2, k2] : right_letter(w, y)) add_term(out, w2, field().mul(k, k2));
        for (const auto& [w, k] : times_vector(rest, bracket[x * n + y])) add_term(out, w, k);
      }
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
  }

  Elem times_word(const Elem& e, const std::string& word) const {
    Elem cur = e;
    for (std::size_t i = 0; i < word.size(); ++i) {
      Elem next;
      for (const auto& [w, k] : cur)
        for (const auto& [w2, k2] : right_letter(w, letter_at(word, i))) add_term(next, w2, field().mul(k, k2));
      cur = std::move(next);
    }
    return cur;
  }

  Elem normal_form(const std::string& word) const { return times_word(Elem{{std::string(), 1}}, word); }

  Elem from_words(const std::vector<std::pair<std::string, Scalar>>& terms) const {
    Elem out;
    for (const auto& [w, k] : terms)
      for (const auto& [w2, k2] : normal_form(w)) add_term(out, w2, field().mul(k, k2));
    return out;
  }

  Vec to_vec(const Elem& e) const {
    Vec v(monomials.size(), 0);
    for (const auto& [w, k] : e) {
      auto it = index.find(w);
      if (it == index.end()) throw Error(ErrorKind::SizeBudgetExceeded, "product exceeds the word cap");
      v[it->second] ^= k;
    }
    return v;
  }

  Elem to_elem(const Vec& v) const {
    Elem e;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) e[monomials[i]] = v[i];
    return e;
  }

  std::size_t degree(const Vec& v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) return monomials[i].size();
    return 0;
  }

  // Rewriting steps available on the pair (u, v), as combinations of words.
  std::vector<std::vector<std::pair<std::string, Scalar>>> rules(std::size_t u, std::size_t v) const {
    std::vector<std::vector<std::pair<std::string, Scalar>>> out;
    auto single = [&](const Vec& vec) {
      std::vector<std::pair<std::string, Scalar>> r;
      for (std::size_t c = 0; c < n; ++c)
        if (vec[c]) r.emplace_back(letter_string(c), vec[c]);
      return r;
    };
    if (u < na) out.push_back(single(absorb[u * n + v]));
    if (u > v) {
      auto r = single(bracket[v * n + u]);
      r.emplace_back(letter_string(v) + letter_string(u), 1);
      out.push_back(std::move(r));
    }
    if (u == v && parity[u] == 1) out.push_back(single(square[u]));
    return out;
  }

  void build();
};

void TruncatedUEA::Impl::build() {
  const AlgebraBundle &A = triple.algebra, &L = triple.lie;
  const Field& f = field();
  na = A.dim();
  nl = L.dim();
  n = na + nl;
  if (n > 250) throw Error(ErrorKind::SizeBudgetExceeded, "too many generators");
  cap = max_degree + slack;
  if (cap < 2) throw Error(ErrorKind::ValidationError, "word cap must be at least 2");

  for (std::size_t i = 0; i < na; ++i) {
    names.push_back(A.space.name(i));
    parity.push_back(A.space.parity(i));
  }
  for (std::size_t i = 0; i < nl; ++i) {
    std::string s = L.space.name(i);
    while (A.space.index_of(s)) s += "'";
    names.push_back(s);
    parity.push_back(L.space.parity(i));
  }

  // Bracket and squaring of A + L, written over the generators.
  auto lift_a = [&](const Vec& a) {
    Vec v(n, 0);
    std::copy(a.begin(), a.end(), v.begin());
    return v;
  };
  auto lift_l = [&](const Vec& x) {
    Vec v(n, 0);
    std::copy(x.begin(), x.end(), v.begin() + static_cast<std::ptrdiff_t>(na));
    return v;
  };
  bracket.assign(n * n, Vec(n, 0));
  square.assign(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i >= na && j >= na) bracket[i * n + j] = lift_l(L.bracket->at(i - na, j - na));
      else if (i >= na) bracket[i * n + j] = lift_a(triple.anchor[i - na].column(j));
      else if (j >= na) bracket[i * n + j] = lift_a(triple.anchor[j - na].column(i));
    }
  for (std::size_t i = na; i < n; ++i)
    if (parity[i] == 1) square[i] = lift_l((*L.squaring)[i - na]);
  absorb.assign(na * n, Vec(n, 0));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t w = 0; w < n; ++w)
      absorb[a * n + w] = w < na ? lift_a(eval_product(A, A.basis(a), A.basis(w))) : lift_l(triple.action[a][w - na]);
  if (A.unit) unit = lift_a(*A.unit);

  // Normal monomials: single A generators and ordered L words, odd letters at most once.
  std::size_t even = 0, odd = 0;
  for (std::size_t i = na; i < n; ++i) (parity[i] ? odd : even) += 1;
  auto counts = ordered_counts(even, odd, cap);
  std::size_t total = na;
  for (std::size_t k = 1; k <= cap; ++k) total += counts[k];
  if (total > kMonomialBudget) throw Error(ErrorKind::SizeBudgetExceeded, "too many normal monomials");
  for (std::size_t a = 0; a < na; ++a) monomials.push_back(letter_string(a));
  std::string cur;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!cur.empty()) monomials.push_back(cur);
    if (cur.size() == cap) return;
    for (std::size_t x = from; x < n; ++x) {
      cur.push_back(static_cast<char>(x));
      grow(parity[x] ? x + 1 : x);
      cur.pop_back();
    }
  };
  grow(na);
  std::sort(monomials.begin(), monomials.end(), [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](char x, char y) { return static_cast<unsigned char>(x) > static_cast<unsigned char>(y); });
  });
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    index[monomials[i]] = i;
    std::string s;
    for (std::size_t k = 0; k < monomials[i].size(); ++k) s += (k ? " " : "") + names[letter_at(monomials[i], k)];
    monomial_names.push_back(s);
  }

  // Relations: every single rewriting step on words of length 2 and 3 compared
  // with the chosen normal form, closed under multiplication by generators.
  relations = SpanBasis(f, monomials.size());
  std::vector<Vec> queue;
  auto push = [&](const Elem& e) {
    Vec v = relations.reduce(to_vec(e));
    if (is_zero(v)) return;
    relations.insert(v);
    queue.push_back(std::move(v));
  };
  std::vector<std::string> words;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      words.push_back(letter_string(u) + letter_string(v));
      if (cap >= 3)
        for (std::size_t w = 0; w < n; ++w) words.push_back(letter_string(u) + letter_string(v) + letter_string(w));
    }
  for (const std::string& word : words) {
    Elem base = normal_form(word);
    for (std::size_t p = 0; p + 1 < word.size(); ++p)
      for (const auto& step : rules(letter_at(word, p), letter_at(word, p + 1))) {
        std::vector<std::pair<std::string, Scalar>> terms;
        for (const auto& [w, k] : step) terms.emplace_back(word.substr(0, p) + w + word.substr(p + 2), k);
        Elem diff = from_words(terms);
        for (const auto& [w, k] : base) add_term(diff, w, k);
        push(diff);
      }
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    if (degree(v) + 1 > cap) continue;
    Elem e = to_elem(v);
    for (std::size_t x = 0; x < n; ++x) {
      push(times_word(e, letter_string(x)));
      Elem left;
      for (const auto& [w, k] : e)
        for (const auto& [w2, k2] : normal_form(letter_string(x) + w)) add_term(left, w2, f.mul(k, k2));
      push(left);
    }
  }
}

TruncatedUEA::TruncatedUEA(const LieRinehartTriple& t, std::size_t max_degree, std::size_t slack)
    : impl_(std::make_shared<Impl>()) {
  if (!t.lie.is_lie()) throw Error(ErrorKind::MissingStructure, "Lie structure on L");
  if (!t.algebra.product) throw Error(ErrorKind::MissingStructure, "product on A");
  impl_->triple = t;
  impl_->max_degree = max_degree;
  impl_->slack = slack;
  impl_->build();
}

const LieRinehartTriple& TruncatedUEA::triple() const { return impl_->triple; }
std::size_t TruncatedUEA::max_degree() const { return impl_->max_degree; }
std::size_t TruncatedUEA::slack() const { return impl_->slack; }
std::size_t TruncatedUEA::generator_count() const { return impl_->n; }
const std::string& TruncatedUEA::generator_name(std::size_t g) const { return impl_->names.at(g); }
std::size_t TruncatedUEA::dim() const { return impl_->monomials.size(); }
const std::string& TruncatedUEA::monomial_name(std::size_t i) const { return impl_->monomial_names.at(i); }
std::vector<std::size_t> TruncatedUEA::monomial_letters(std::size_t i) const {
  const std::string& m = impl_->monomials.at(i);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < m.size(); ++k) out.push_back(letter_at(m, k));
  return out;
}
std::size_t TruncatedUEA::monomial_degree(std::size_t i) const { return impl_->monomials.at(i).size(); }
std::size_t TruncatedUEA::relation_rank() const { return impl_->relations.rank(); }
const std::vector<Vec>& TruncatedUEA::relations() const { return impl_->relations.rows(); }

std::vector<std::size_t> TruncatedUEA::representatives() const {
  std::vector<bool> pivot(dim(), false);
  for (std::size_t p : impl_->relations.pivots()) pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = dim(); i-- > 0;)
    if (!pivot[i] && monomial_degree(i) <= max_degree()) out.push_back(i);
  return out;
}

std::vector<std::size_t> TruncatedUEA::degree_dims() const {
  std::vector<std::size_t> dims(max_degree() + 1, 0);
  for (std::size_t i : representatives()) dims[monomial_degree(i)] += 1;
  if (impl_->unit && max_degree() >= 1 && !is_zero(reduce(embed_a(*impl_->triple.algebra.unit)))) {
    dims[0] += 1;
    dims[1] -= 1;
  }
  return dims;
}

Vec TruncatedUEA::letter(std::size_t g) const {
  if (g >= impl_->n) throw Error(ErrorKind::DimensionMismatch, "generator index");
  return impl_->to_vec(Elem{{letter_string(g), 1}});
}

Vec TruncatedUEA::embed(const Vec& a, const Vec& x) const {
  Vec v = zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) axpy(impl_->field(), v, a[i], letter(i));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) axpy(impl_->field(), v, x[i], letter(impl_->na + i));
  return v;
}
Vec TruncatedUEA::embed_a(const Vec& a) const { return embed(a, Vec(impl_->nl, 0)); }
Vec TruncatedUEA::embed_l(const Vec& x) const { return embed(Vec(impl_->na, 0), x); }

Vec TruncatedUEA::multiply(const Vec& u, const Vec& v) const {
  if (degree(u) + degree(v) > word_cap()) throw Error(ErrorKind::SizeBudgetExceeded, "product exceeds the word cap");
  const Field& f = impl_->field();
  Elem out;
  Elem left = impl_->to_elem(u);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j]) continue;
    for (const auto& [w, k] : impl_->times_word(left, impl_->monomials[j])) add_term(out, w, f.mul(k, v[j]));
  }
  return impl_->to_vec(out);
}

Vec TruncatedUEA::reduce(const Vec& v) const { return impl_->relations.reduce(v); }
std::size_t TruncatedUEA::degree(const Vec& v) const { return impl_->degree(v); }

UEAResult truncated_uea(const LieRinehartTriple& t, std::size_t max_degree, std::size_t slack) {
  TruncatedUEA u(t, max_degree, slack);
  TruncatedUEA next(t, max_degree, slack + 1);
  StabilityCertificate c{slack, u.degree_dims(), next.degree_dims(), false};
  c.stable = c.dims == c.dims_next;
  if (!c.stable) throw Error(ErrorKind::UnstableTruncation, "coset dimensions changed with one more degree of slack");
  return {std::move(u), std::move(c)};
}

Report check_uea_relations(const TruncatedUEA& u, std::uint64_t seed) {
  if (u.max_degree() < 2) throw Error(ErrorKind::ValidationError, "relations need max degree at least 2");
  const LieRinehartTriple& t = u.triple();
  const AlgebraBundle &A = t.algebra, &L = t.lie;
  const Field& f = A.field;
  Report r;
  auto expect = [&](const std::string& law, const std::string& w, const Vec& lhs, const Vec& rhs) {
    Vec a = u.reduce(lhs), b = u.reduce(rhs);
    if (a != b) r.fail(law, w, std::to_string(u.degree(a)) + "-filtered element", std::to_string(u.degree(b)) + "-filtered element");
  };
  auto mul = [&](const Vec& x, const Vec& y) { return u.multiply(x, y); };
  auto plus = [](Vec x, const Vec& y) {
    add_into(x, y);
    return x;
  };
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t x = 0; x < L.dim(); ++x) {
      Vec ia = u.embed_a(A.basis(a)), ix = u.embed_l(L.basis(x));
      std::string w = A.space.name(a) + "," + L.space.name(x);
      expect("module action", w, u.embed_l(t.action[a][x]), mul(ia, ix));
      expect("anchor commutation", w, mul(ix, ia), plus(mul(ia, ix), u.embed_a(apply(f, t.anchor[x], A.basis(a)))));
    }
  const std::size_t n = u.generator_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec gi = u.letter(i), gj = u.letter(j);
      Vec lhs = plus(mul(gi, gj), mul(gj, gi));
      Vec rhs = u.zero();
      if (i < A.dim() && j >= A.dim()) rhs = u.embed_a(apply(f, t.anchor[j - A.dim()], A.basis(i)));
      if (i >= A.dim()) rhs = u.embed_l(eval_bracket(L, L.basis(i - A.dim()), L.basis(j - A.dim())));
      expect("supercommutator", u.generator_name(i) + "," + u.generator_name(j), lhs, rhs);
    }
  // Squares of odd elements a + x of A + L equal rho_x(a) + s(x).
  auto odd_square = [&](const Vec& a, const Vec& x, const std::string& w) {
    Vec c = u.embed(a, x);
    Vec s = plus(u.embed_a(apply(f, lr_anchor(t, x), a)), u.embed_l(is_zero(x) ? L.zero() : eval_squaring(L, x)));
    expect("odd square", w, mul(c, c), s);
  };
  for (std::size_t a : A.space.indices(1)) odd_square(A.basis(a), L.zero(), A.space.name(a));
  for (std::size_t x : L.space.indices(1)) odd_square(A.zero(), L.basis(x), L.space.name(x));
  std::mt19937_64 rng(seed);
  for (int s = 0; s < kSamples; ++s) {
    Vec a = A.dim() ? random_homogeneous(A, 1, rng) : A.zero();
    Vec x = L.dim() ? random_homogeneous(L, 1, rng) : L.zero();
    odd_square(a, x, "random odd element");
  }
  if (A.unit) {
    Vec one = u.embed_a(*A.unit);
    for (std::size_t g = 0; g < n; ++g) {
      expect("unit", u.generator_name(g), mul(one, u.letter(g)), u.letter(g));
      expect("unit", u.generator_name(g), mul(u.letter(g), one), u.letter(g));
    }
  }
  return r;
}

PoissonUEA poisson_uea(const AlgebraBundle& p, std::size_t max_degree, std::size_t slack, std::uint64_t seed) {
  Kaehler k = kaehler(p);
  UEAResult res = truncated_uea(k.triple, max_degree, slack);
  const TruncatedUEA& u = res.uea;
  const Field& f = p.field;
  const std::size_t n = p.dim();
  Matrix m(u.dim(), n), h(u.dim(), n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set_column(i, u.embed_a(p.basis(i)));
    Vec g(k.generator_dim, 0);
    for (std::size_t j = 0; j < n; ++j) g[kaehler_generator(n, j, i)] = (*p.unit)[j];
    h.set_column(i, u.embed_l(kaehler_project(k, g)));
  }
  Report r;
  auto M = [&](const Vec& x) { return apply(f, m, x); };
  auto H = [&](const Vec& x) { return apply(f, h, x); };
  auto mul = [&](const Vec& x, const Vec& y) { return u.multiply(x, y); };
  auto plus = [](Vec x, const Vec& y) {
    add_into(x, y);
    return x;
  };
  auto expect = [&](const std::string& law, const std::string& w, const Vec& lhs, const Vec& rhs) {
    if (!u.equal(lhs, rhs)) r.fail(law, w, "lhs", "rhs");
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x = p.basis(i), y = p.basis(j);
      std::string w = p.space.name(i) + "," + p.space.name(j);
      expect("m multiplicative", w, M(eval_product(p, x, y)), mul(M(x), M(y)));
      expect("h bracket", w, H(eval_bracket(p, x, y)), plus(mul(H(x), H(y)), mul(H(y), H(x))));
      expect("UEA1", w, H(eval_product(p, x, y)), plus(mul(M(x), H(y)), mul(M(y), H(x))));
      expect("UEA2", w, M(eval_bracket(p, x, y)), plus(mul(M(x), H(y)), mul(H(y), M(x))));
    }
  auto odd_even = [&](const Vec& x, const Vec& y, const std::string& w) {
    Vec mx = M(x), my = M(y), hx = H(x), hy = H(y);
    expect("UEA3", w, mul(mul(my, hx), mx), mul(mul(mx, my), hx));
    Vec rhs = plus(plus(mul(mul(my, hx), my), mul(mul(mx, my), hy)), mul(mul(hy, mx), my));
    expect("UEA4", w, mul(mul(my, my), hx), rhs);
  };
  auto odd_square = [&](const Vec& x, const std::string& w) {
    expect("h squaring", w, H(eval_squaring(p, x)), mul(H(x), H(x)));
  };
  for (std::size_t i : p.space.indices(1)) {
    odd_square(p.basis(i), p.space.name(i));
    for (std::size_t j : p.space.indices(0)) odd_even(p.basis(i), p.basis(j), p.space.name(i) + "," + p.space.name(j));
  }
  if (!p.space.indices(1).empty()) {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < kSamples; ++s) {
      Vec x = random_homogeneous(p, 1, rng), y = random_homogeneous(p, 0, rng);
      odd_square(x, "random");
      odd_even(x, y, "random");
    }
  }
  r.merge(check_uea_relations(u, seed));
  return {std::move(res), std::move(k), std::move(m), std::move(h), std::move(r)};
}

namespace {

void check_even_map(const SuperSpace& src, const SuperSpace& dst, const Matrix& map, const std::string& what, Report& r) {
  for (std::size_t i = 0; i < src.dim(); ++i) {
    Vec c = map.column(i);
    if (!is_zero(c) && !dst.homogeneous(c, src.parity(i))) r.fail("even map", what + " on " + src.name(i), "mixed", "homogeneous");
  }
}

}  // namespace

Report check_factorization(const TruncatedUEA& u, const AlgebraBundle& b, const Matrix& r_a, const Matrix& r_l) {
  const LieRinehartTriple& t = u.triple();
  const AlgebraBundle &A = t.algebra, &L = t.lie;
  const Field& f = A.field;
  if (!b.product) throw Error(ErrorKind::MissingStructure, "target product");
  if (r_a.rows() != b.dim() || r_a.cols() != A.dim() || r_l.rows() != b.dim() || r_l.cols() != L.dim())
    throw Error(ErrorKind::DimensionMismatch, "factorization maps");
  auto bm = [&](const Vec& x, const Vec& y) { return eval_product(b, x, y); };
  auto plus = [](Vec x, const Vec& y) {
    add_into(x, y);
    return x;
  };
  Report hyp;
  auto expect = [&](Report& rep, const std::string& law, const std::string& w, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) rep.fail(law, w, format(b, lhs), format(b, rhs));
  };
  check_even_map(A.space, b.space, r_a, "r_A", hyp);
  check_even_map(L.space, b.space, r_l, "r_L", hyp);
  auto RA = [&](const Vec& a) { return apply(f, r_a, a); };
  auto RL = [&](const Vec& x) { return apply(f, r_l, x); };
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      expect(hyp, "r_A multiplicative", A.space.name(i) + "," + A.space.name(j), RA(eval_product(A, A.basis(i), A.basis(j))),
             bm(RA(A.basis(i)), RA(A.basis(j))));
  if (A.unit && b.unit) expect(hyp, "r_A unit", "1", RA(*A.unit), *b.unit);
  for (std::size_t x = 0; x < L.dim(); ++x) {
    Vec lx = RL(L.basis(x));
    for (std::size_t y = 0; y < L.dim(); ++y) {
      Vec ly = RL(L.basis(y));
      expect(hyp, "r_L bracket", L.space.name(x) + "," + L.space.name(y), RL(eval_bracket(L, L.basis(x), L.basis(y))),
             plus(bm(lx, ly), bm(ly, lx)));
    }
    if (L.space.parity(x) == 1) expect(hyp, "r_L squaring", L.space.name(x), RL((*L.squaring)[x]), bm(lx, lx));
    for (std::size_t a = 0; a < A.dim(); ++a) {
      Vec ra = RA(A.basis(a));
      std::string w = A.space.name(a) + "," + L.space.name(x);
      expect(hyp, "r_L A-linear", w, RL(t.action[a][x]), bm(ra, lx));
      expect(hyp, "r anchor", w, bm(lx, ra), plus(bm(ra, lx), RA(apply(f, t.anchor[x], A.basis(a)))));
    }
  }
  if (!hyp.ok()) throw Error(ErrorKind::HypothesesFail, hyp.summary());

  // f on normal monomials by multiplicativity; it must kill every relation and
  // agree with the normal form of every product of two generators.
  const std::size_t n = u.generator_count(), na = A.dim();
  std::vector<Vec> gen(n);
  for (std::size_t g = 0; g < n; ++g) gen[g] = g < na ? RA(A.basis(g)) : RL(L.basis(g - na));
  std::vector<Vec> image(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    auto letters = u.monomial_letters(i);
    Vec acc = gen[letters[0]];
    for (std::size_t k = 1; k < letters.size(); ++k) acc = bm(acc, gen[letters[k]]);
    image[i] = std::move(acc);
  }
  auto f_of = [&](const Vec& v) {
    Vec out = b.zero();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) axpy(f, out, v[i], image[i]);
    return out;
  };
  Report r;
  for (const Vec& rel : u.relations())
    if (u.degree(rel) <= u.max_degree()) expect(r, "relation", "degree " + std::to_string(u.degree(rel)), f_of(rel), b.zero());
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k = 0; k < n; ++k)
      expect(r, "product", u.generator_name(g) + "," + u.generator_name(k), bm(gen[g], gen[k]),
             f_of(u.multiply(u.letter(g), u.letter(k))));
  return r;
}

Report check_poisson_factorization(const PoissonUEA& u, const AlgebraBundle& b, const Matrix& m, const Matrix& h) {
  const Kaehler& k = u.kaehler;
  const AlgebraBundle& p = k.triple.algebra;
  const Field& f = p.field;
  const std::size_t n = p.dim();
  if (!b.product) throw Error(ErrorKind::MissingStructure, "target product");
  if (m.rows() != b.dim() || h.rows() != b.dim() || m.cols() != n || h.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "factorization maps");
  auto bm = [&](const Vec& x, const Vec& y) { return eval_product(b, x, y); };
  auto plus = [](Vec x, const Vec& y) {
    add_into(x, y);
    return x;
  };
  auto M = [&](const Vec& x) { return apply(f, m, x); };
  auto H = [&](const Vec& x) { return apply(f, h, x); };
  Report hyp;
  auto expect = [&](const std::string& law, const std::string& w, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) hyp.fail(law, w, format(b, lhs), format(b, rhs));
  };
  check_even_map(p.space, b.space, m, "m", hyp);
  check_even_map(p.space, b.space, h, "h", hyp);
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = p.basis(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec y = p.basis(j);
      std::string w = p.space.name(i) + "," + p.space.name(j);
      expect("m multiplicative", w, M(eval_product(p, x, y)), bm(M(x), M(y)));
      expect("h bracket", w, H(eval_bracket(p, x, y)), plus(bm(H(x), H(y)), bm(H(y), H(x))));
      expect("UEA1", w, H(eval_product(p, x, y)), plus(bm(M(x), H(y)), bm(M(y), H(x))));
      expect("UEA2", w, M(eval_bracket(p, x, y)), plus(bm(M(x), H(y)), bm(H(y), M(x))));
      if (p.space.parity(i) == 1 && p.space.parity(j) == 0) {
        Vec mx = M(x), my = M(y), hx = H(x), hy = H(y);
        expect("UEA3", w, bm(bm(my, hx), mx), bm(bm(mx, my), hx));
        expect("UEA4", w, bm(bm(my, my), hx), plus(plus(bm(bm(my, hx), my), bm(bm(mx, my), hy)), bm(bm(hy, mx), my)));
      }
    }
    if (p.space.parity(i) == 1) expect("h squaring", p.space.name(i), H(eval_squaring(p, x)), bm(H(x), H(x)));
  }
  if (p.unit && b.unit) expect("m unit", "1", M(*p.unit), *b.unit);
  if (!hyp.ok()) throw Error(ErrorKind::HypothesesFail, hyp.summary());
  // h factors through d: the generator x dy goes to m(x) h(y).
  const std::size_t reps = k.representatives.size();
  Matrix r_l(b.dim(), reps);
  for (std::size_t c = 0; c < reps; ++c) {
    std::size_t g = k.representatives[c];
    r_l.set_column(c, bm(M(p.basis(g / n)), H(p.basis(g % n))));
  }
  return check_factorization(u.result.uea, b, m, r_l);
}

}  // namespace spo
