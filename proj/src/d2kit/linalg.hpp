#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "d2kit/rational.hpp"

namespace d2kit {

using Vec = std::vector<Rational>;

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
void add_scaled(Vec& acc, const Rational& c, const Vec& v);

// Dense row-major matrix over the ground field.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static Matrix identity(int n);
  static Matrix zero(int r, int c) { return Matrix(r, c); }
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_cols(const std::vector<Vec>& cols);

  Vec apply(const Vec& x) const;  // m * x
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  Vec row(int i) const;
  Vec col(int j) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
};

struct RrefResult {
  Matrix m;
  std::vector<int> pivots;
};

// Unique reduced row-echelon form; deterministic by uniqueness of the RREF.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

// Some x with m*x = b, or nullopt when b is outside the column space.
// Free variables are set to zero, making the choice deterministic.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Basis of the nullspace {x : m*x = 0}, one vector per free column.
std::vector<Vec> kernel(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

// Coefficients c with sum_i c_i * generators_i = v, in terms of the given
// generators (not a canonicalized basis); absent if v is outside the span.
std::optional<Vec> span_membership(const std::vector<Vec>& generators,
                                   const Vec& v);

// ---------------------------------------------------------------------------
// Sparse echelon accumulator.  Relation spans arising from tensor-product
// quotients are huge but extremely sparse; rows are kept as sorted
// (column, value) pairs and reduced in a single left-to-right sweep.
// ---------------------------------------------------------------------------

using SVec = std::vector<std::pair<int, Rational>>;

SVec to_sparse(const Vec& v);
Vec to_dense(const SVec& v, int n);

class Echelon {
 public:
  explicit Echelon(int ambient) : ambient_(ambient) {}

  // Reduces v against the current rows and inserts the remainder if nonzero.
  // Returns true when the rank grew.
  bool insert(SVec v);
  bool insert(const Vec& v) { return insert(to_sparse(v)); }

  // Back-substitution pass; afterwards the stored rows are the unique RREF
  // basis of the span.  Queries are valid before and after.
  void finalize();

  SVec reduce(SVec v) const;
  bool contains(const Vec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }
  std::vector<int> pivot_columns() const;
  std::vector<int> free_columns() const;
  const std::map<int, SVec>& rows() const { return rows_; }

 private:
  int ambient_;
  std::map<int, SVec> rows_;  // pivot column -> row with leading coefficient 1
};

// Presentation of a quotient V/K by an explicit relation span, with the
// deterministic complement basis given by the non-pivot coordinates of the
// relation RREF.  project∘section = id and ker(project) = K.
class QuotientCtx {
 public:
  QuotientCtx() = default;
  static QuotientCtx from_relations(int ambient,
                                    const std::vector<Vec>& relations);
  static QuotientCtx from_relations_sparse(int ambient,
                                           std::vector<SVec> relations);

  int ambient_dim() const { return ech_.ambient(); }
  int dim() const { return static_cast<int>(free_.size()); }

  Vec project(const Vec& full) const;
  Vec section(const Vec& q) const;
  bool relation_contains(const Vec& full) const { return ech_.contains(full); }
  int relation_rank() const { return ech_.rank(); }
  const std::vector<int>& free_columns() const { return free_; }

  Matrix project_matrix() const;
  Matrix section_matrix() const;

  // Transport of a linear operator on the ambient space to the quotient:
  // project ∘ op ∘ section.  Callers must ensure op preserves the relations.
  Matrix induced(const Matrix& ambient_op) const;

 private:
  Echelon ech_{0};
  std::vector<int> free_;
};

// Subspace of k^n in canonical form: the stored basis is the unique RREF
// basis, so equal subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace from_span(int ambient, const std::vector<Vec>& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  // Coordinates in the canonical basis.
  std::optional<Vec> coordinates_of(const Vec& v) const;
  Vec from_coordinates(const Vec& coords) const;

  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool contains_subspace(const Subspace& o) const;

 private:
  int ambient_;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

}  // namespace d2kit
