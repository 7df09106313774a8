#pragma once

#include <string>
#include <vector>

#include "d2kit/linalg.hpp"

namespace d2kit {

// Finite-dimensional unital associative algebra given by structure
// constants: basis_i * basis_j = sum_k c[i][j][k] basis_k.
struct Algebra {
  int dim = 0;
  std::vector<std::string> basis_names;
  std::vector<Rational> structure;  // c[((i*dim)+j)*dim+k]
  Vec unit;

  Algebra() = default;
  Algebra(int n, std::vector<std::string> names);

  const Rational& c(int i, int j, int k) const {
    return structure[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  Rational& c(int i, int j, int k) {
    return structure[(static_cast<size_t>(i) * dim + j) * dim + k];
  }

  Vec multiply(const Vec& x, const Vec& y) const;
  Matrix left_mult(const Vec& x) const;   // y -> x*y
  Matrix right_mult(const Vec& x) const;  // y -> y*x
  bool is_commutative() const;
};

struct ValidationIssue {
  std::string what;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  void fail(std::string what) { issues.push_back({std::move(what)}); }
  std::string summary() const;
};

ValidationReport validate_algebra(const Algebra& a);

// Algebra homomorphism given by its matrix on basis coordinates.
struct AlgebraMap {
  Algebra source;
  Algebra target;
  Matrix matrix;  // target.dim x source.dim

  Vec apply(const Vec& x) const { return matrix.apply(x); }
};

ValidationReport validate_homomorphism(const AlgebraMap& f);

// c_op[i][j][k] = c[j][i][k]
Algebra opposite_algebra(const Algebra& a);

// Structure constants of a multiplicatively closed subspace, in its own
// canonical basis.  Throws if the subspace is not closed or lacks the unit.
Algebra subalgebra_on(const Algebra& a, const Subspace& s,
                      const std::string& name_prefix);

// Center Z(a) as a subspace.
Subspace center(const Algebra& a);

struct Ideal {
  std::vector<Vec> generators;
  Subspace closure;
};

// Smallest two-sided ideal containing the generators; fixpoint iteration
// over left/right multiplication by basis elements, bounded by dim steps.
Ideal ideal_closure(const Algebra& a, const std::vector<Vec>& generators);

}  // namespace d2kit
