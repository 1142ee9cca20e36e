#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "superpoisson/field.hpp"
#include "superpoisson/matrix.hpp"

namespace spo {

struct BasisVector {
  std::string name;
  int parity = 0;  // 0 even, 1 odd
};

// Z/2-graded space with an ordered, named basis.
class SuperSpace {
 public:
  SuperSpace() = default;
  explicit SuperSpace(std::vector<BasisVector> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const std::string& name(std::size_t i) const { return basis_[i].name; }
  int parity(std::size_t i) const { return basis_[i].parity; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::vector<std::size_t> indices(int parity) const;
  // Parity of a nonzero homogeneous vector; nullopt for zero or mixed vectors.
  std::optional<int> parity_of(const Vec& v) const;
  bool homogeneous(const Vec& v, int parity) const;

  bool operator==(const SuperSpace& o) const;

 private:
  std::vector<BasisVector> basis_;
};

enum class Symmetry { None, Symmetric };

// dim x dim table of coefficient vectors: the values of a bilinear map on basis pairs.
class BilinearTable {
 public:
  BilinearTable() = default;
  BilinearTable(std::size_t dim, Symmetry sym = Symmetry::Symmetric)
      : dim_(dim), sym_(sym), values_(dim * dim, Vec(dim, 0)) {}

  std::size_t dim() const { return dim_; }
  Symmetry symmetry() const { return sym_; }
  const Vec& at(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
  Vec& at(std::size_t i, std::size_t j) { return values_[i * dim_ + j]; }
  // Sets (i,j) and, for symmetric tables, (j,i).
  void set(std::size_t i, std::size_t j, const Vec& v);
  bool is_zero() const;
  bool operator==(const BilinearTable& o) const = default;

 private:
  std::size_t dim_ = 0;
  Symmetry sym_ = Symmetry::Symmetric;
  std::vector<Vec> values_;
};

// Structure constants of a superalgebra: any combination of an associative
// product, a bracket, and a squaring on the odd part.
struct AlgebraBundle {
  Field field;
  SuperSpace space;
  std::optional<BilinearTable> product;
  std::optional<BilinearTable> bracket;
  std::optional<std::vector<Vec>> squaring;  // indexed by basis; even slots stay zero
  std::optional<Vec> unit;
  std::string name;

  std::size_t dim() const { return space.dim(); }
  Vec zero() const { return Vec(dim(), 0); }
  Vec basis(std::size_t i) const { return unit_vector(dim(), i); }
  bool is_lie() const { return bracket && squaring; }
  bool is_poisson() const { return product && bracket && squaring; }
};

AlgebraBundle make_bundle(const Field& f, std::vector<BasisVector> basis, std::string name = {});

Vec bilinear(const Field& f, const BilinearTable& t, const Vec& x, const Vec& y);
Vec eval_product(const AlgebraBundle& a, const Vec& x, const Vec& y);
Vec eval_bracket(const AlgebraBundle& a, const Vec& x, const Vec& y);
// s(sum l_i x_i) = sum l_i^2 s(x_i) + sum_{i<j} l_i l_j [x_i, x_j] for odd x.
Vec eval_squaring(const AlgebraBundle& a, const Vec& x);
// Left multiplication and adjoint operators as matrices.
Matrix left_mult(const AlgebraBundle& a, const Vec& x);
Matrix ad(const AlgebraBundle& a, const Vec& x);

std::string format(const AlgebraBundle& a, const Vec& v);
std::string format(const Field& f, const SuperSpace& s, const Vec& v);

Vec random_vector(const Field& f, std::size_t n, std::mt19937_64& rng);
Vec random_homogeneous(const AlgebraBundle& a, int parity, std::mt19937_64& rng);

struct Violation {
  std::string law;
  std::string witness;
  std::string lhs;
  std::string rhs;
};

// Result of a structural check. Keeps the first few violations with witnesses
// and counts the rest.
class Report {
 public:
  static constexpr std::size_t kKept = 16;

  void fail(std::string law, std::string witness, std::string lhs, std::string rhs);
  void merge(const Report& other);
  bool ok() const { return count_ == 0; }
  std::size_t count() const { return count_; }
  const std::vector<Violation>& violations() const { return kept_; }
  bool has_law(const std::string& law) const;
  std::string summary() const;

 private:
  std::vector<Violation> kept_;
  std::size_t count_ = 0;
};

}  // namespace spo
