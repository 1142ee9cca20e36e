#include <doctest.h>

#include <random>

#include "superpoisson/error.hpp"
#include "superpoisson/field.hpp"
#include "superpoisson/matrix.hpp"

using namespace spo;

namespace {

// Carry-less product reduced by the modulus, one bit at a time.
unsigned poly_mulmod(unsigned a, unsigned b, unsigned modulus, int degree) {
  unsigned prod = 0;
  for (int i = 0; i < 16; ++i)
    if (b >> i & 1) prod ^= a << i;
  for (int bit = 2 * degree; bit >= degree; --bit)
    if (prod >> bit & 1) prod ^= modulus << (bit - degree);
  return prod;
}

// Irreducibility by trial division with every polynomial of lower degree.
bool irreducible_oracle(unsigned poly) {
  int deg = 31 - __builtin_clz(poly);
  for (unsigned d = 2; d < (1u << (deg / 2 + 1)); ++d) {
    int dd = 31 - __builtin_clz(d);
    if (dd == 0) continue;
    unsigned r = poly;
    for (int bit = deg; bit >= dd; --bit)
      if (r >> bit & 1) r ^= d << (bit - dd);
    if (r == 0) return false;
  }
  return true;
}

struct NaiveField {
  unsigned modulus;
  int degree;
  unsigned mul(unsigned a, unsigned b) const { return poly_mulmod(a, b, modulus, degree); }
  unsigned inv(unsigned a) const {
    for (unsigned x = 1; x < (1u << degree); ++x)
      if (mul(a, x) == 1) return x;
    return 0;
  }
};

// Schoolbook elimination over the naive field.
std::size_t naive_rank(const NaiveField& f, std::vector<std::vector<unsigned>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    unsigned iv = f.inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      unsigned factor = f.mul(rows[r][c], iv);
      if (!factor) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] ^= f.mul(factor, rows[rank][k]);
    }
    ++rank;
  }
  return rank;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, double density = 0.5) {
  Matrix m(r, c);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<unsigned> val(1, f.order() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) < density) m(i, j) = static_cast<Scalar>(val(rng));
  return m;
}

std::vector<std::vector<unsigned>> rows_of(const Matrix& m) {
  std::vector<std::vector<unsigned>> out(m.rows(), std::vector<unsigned>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("prime field and quadratic extension") {
    Field f2;
    CHECK(f2.order() == 2);
    CHECK(Field::add(1, 1) == 0);
    Field f4(2, 0b111);
    CHECK(f4.order() == 4);
    CHECK_THROWS_AS(Field(2, 0b101), Error);
    try {
      Field bad(2, 0b101);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonIrreducibleModulus);
    }
    try {
      Field big(9);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedDegree);
    }
  }

  TEST_CASE("irreducibility agrees with trial division") {
    for (int k = 1; k <= 8; ++k) {
      CHECK(irreducible_oracle(Field::default_modulus(k)));
      for (unsigned poly = 1u << k; poly < (2u << k); ++poly) CHECK(Field::is_irreducible(poly) == irreducible_oracle(poly));
    }
  }

  TEST_CASE("GF(4) generator arithmetic") {
    Field f4(2, 0b111);
    const Scalar g = 0b10;
    CHECK(f4.mul(g, g) == 0b11);
    CHECK(f4.inv(g) == 0b11);
    CHECK(f4.square(g) == Field::add(g, 1));
  }

  TEST_CASE("table multiplication matches polynomial reduction for every degree") {
    for (int k = 1; k <= 8; ++k) {
      Field f(k);
      for (unsigned a = 0; a < f.order(); ++a)
        for (unsigned b = 0; b < f.order(); ++b) {
          unsigned expect = poly_mulmod(a, b, f.modulus(), k);
          REQUIRE(f.mul(a, b) == expect);
          REQUIRE(f.mul_slow(a, b) == expect);
        }
    }
  }

  TEST_CASE("field axioms and Frobenius exhaustively up to GF(16)") {
    for (int k = 1; k <= 4; ++k) {
      Field f(k);
      const unsigned q = f.order();
      for (unsigned a = 0; a < q; ++a) {
        REQUIRE(Field::add(a, a) == 0);
        REQUIRE(f.mul(a, 1) == a);
        REQUIRE(f.square(a) == f.mul(a, a));
        if (a) REQUIRE(f.mul(a, f.inv(a)) == 1);
        for (unsigned b = 0; b < q; ++b) {
          REQUIRE(f.mul(a, b) == f.mul(b, a));
          REQUIRE(f.square(Field::add(a, b)) == Field::add(f.square(a), f.square(b)));
          REQUIRE(f.square(f.mul(a, b)) == f.mul(f.square(a), f.square(b)));
          for (unsigned c = 0; c < q; ++c) {
            REQUIRE(Field::add(Field::add(a, b), c) == Field::add(a, Field::add(b, c)));
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.mul(a, Field::add(b, c)) == Field::add(f.mul(a, b), f.mul(a, c)));
          }
        }
      }
      // Frobenius is a bijection.
      std::vector<bool> hit(q, false);
      for (unsigned a = 0; a < q; ++a) hit[f.square(a)] = true;
      for (unsigned a = 0; a < q; ++a) CHECK(hit[a]);
    }
  }

  TEST_CASE("inverse of zero is rejected") {
    Field f(3);
    CHECK_THROWS_AS(f.inv(0), Error);
  }

  TEST_CASE("hex round trip") {
    Field f(8);
    for (unsigned a = 0; a < f.order(); ++a) CHECK(f.from_hex(f.to_hex(a)) == a);
  }

  TEST_CASE("rref small cases") {
    Field f;
    Echelon e = rref(f, Matrix::identity(3));
    CHECK(e.reduced == Matrix::identity(3));
    CHECK(e.pivots == std::vector<std::size_t>{0, 1, 2});
    Matrix ones = Matrix::from_rows(2, {{1, 1}, {1, 1}});
    Echelon o = rref(f, ones);
    CHECK(o.rank() == 1);
    CHECK(o.reduced == Matrix::from_rows(2, {{1, 1}, {0, 0}}));
  }

  TEST_CASE("rank agrees with schoolbook elimination on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> size(1, 40);
    for (int k : {1, 2, 3}) {
      Field f(k);
      NaiveField nf{f.modulus(), k};
      for (int trial = 0; trial < 200; ++trial) {
        double density = trial % 3 == 0 ? 0.1 : 0.5;
        Matrix m = random_matrix(f, size(rng), size(rng), rng, density);
        REQUIRE(rank(f, m) == naive_rank(nf, rows_of(m)));
      }
    }
    Matrix m20 = random_matrix(Field(), 20, 30, rng);
    CHECK(rank(Field(), m20) == naive_rank(NaiveField{0b11, 1}, rows_of(m20)));
  }

  TEST_CASE("kernel basis") {
    Field f;
    auto k1 = kernel_basis(f, Matrix::from_rows(2, {{1, 1}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == Vec{1, 1});
    auto k0 = kernel_basis(f, Matrix(2, 3));
    CHECK(k0.size() == 3);
    std::mt19937_64 rng(11);
    for (int k : {1, 2}) {
      Field fk(k);
      for (int trial = 0; trial < 50; ++trial) {
        Matrix m = random_matrix(fk, 1 + trial % 9, 2 + trial % 13, rng, 0.4);
        auto ker = kernel_basis(fk, m);
        CHECK(ker.size() == m.cols() - rank(fk, m));
        for (const Vec& v : ker) CHECK(is_zero(apply(fk, m, v)));
        if (!ker.empty()) CHECK(rank(fk, Matrix::from_rows(m.cols(), ker)) == ker.size());
      }
    }
  }

  TEST_CASE("quotient dimension") {
    Field f;
    std::vector<Vec> big{{1, 0}, {0, 1}}, small{{1, 0}};
    CHECK(quotient_dim(f, big, small) == 1);
    CHECK(quotient_dim(f, big, big) == 0);
    CHECK_THROWS_AS(quotient_dim(f, small, big), Error);
  }

  TEST_CASE("quotient dimension of a random chain complex") {
    // V1 -> V2 -> V3 with d2 d1 = 0, built in adapted coordinates and then
    // conjugated by elementary row operations on V2.
    Field f;
    NaiveField nf{0b11, 1};
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n1 = 4 + trial % 5, n2 = 10, n3 = 6, split = 3 + trial % 4;
      Matrix d1 = random_matrix(f, n2, n1, rng), d2 = random_matrix(f, n3, n2, rng);
      for (std::size_t r = split; r < n2; ++r)
        for (std::size_t c = 0; c < n1; ++c) d1(r, c) = 0;
      for (std::size_t r = 0; r < n3; ++r)
        for (std::size_t c = 0; c < split; ++c) d2(r, c) = 0;
      std::uniform_int_distribution<std::size_t> pick(0, n2 - 1);
      for (int op = 0; op < 40; ++op) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        // Row i += row j on d1; column j += column i on d2 keeps d2 d1 fixed.
        for (std::size_t c = 0; c < n1; ++c) d1(i, c) ^= d1(j, c);
        for (std::size_t r = 0; r < n3; ++r) d2(r, j) ^= d2(r, i);
      }
      REQUIRE(multiply(f, d2, d1).is_zero());
      std::vector<Vec> image;
      for (std::size_t c = 0; c < n1; ++c) image.push_back(d1.column(c));
      std::size_t expect = (n2 - naive_rank(nf, rows_of(d2))) - naive_rank(nf, rows_of(d1));
      CHECK(quotient_dim(f, kernel_basis(f, d2), image) == expect);
    }
  }

  TEST_CASE("solve finds a preimage exactly when one exists") {
    Field f(2);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      Matrix m = random_matrix(f, 8, 5, rng, 0.3);
      Vec x(5);
      for (auto& c : x) c = static_cast<Scalar>(rng() % 4);
      Vec b = apply(f, m, x);
      auto sol = solve(f, m, b);
      REQUIRE(sol);
      CHECK(apply(f, m, *sol) == b);
      Vec off = b;
      off[trial % 8] ^= 1;
      std::vector<Vec> cols;
      for (std::size_t c = 0; c < 5; ++c) cols.push_back(m.column(c));
      cols.push_back(off);
      bool consistent = rank(f, Matrix::from_columns(8, cols)) == rank(f, m);
      CHECK(solve(f, m, off).has_value() == consistent);
    }
  }

  TEST_CASE("span basis membership") {
    Field f;
    SpanBasis s(f, 3);
    CHECK(s.insert({1, 1, 0}));
    CHECK(s.insert({0, 1, 1}));
    CHECK_FALSE(s.insert({1, 0, 1}));
    CHECK(s.contains({1, 0, 1}));
    CHECK_FALSE(s.contains({1, 0, 0}));
    CHECK(s.rank() == 2);
  }

  TEST_CASE("sparse product matches dense product") {
    Field f(3);
    std::mt19937_64 rng(9);
    Matrix a = random_matrix(f, 7, 5, rng, 0.3), b = random_matrix(f, 5, 6, rng, 0.3);
    auto sparse = [](const Matrix& m) {
      SparseMatrix s(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (m(i, j)) s.row(i).push_back({static_cast<std::uint32_t>(j), m(i, j)});
      return s;
    };
    CHECK(multiply(f, sparse(a), sparse(b)).to_dense() == multiply(f, a, b));
    Vec v{1, 2, 3, 4, 5};
    CHECK(sparse(a).apply(f, v) == apply(f, a, v));
  }
}
