#include "d2kit/algebra.hpp"

#include <sstream>

namespace d2kit {

Algebra::Algebra(int n, std::vector<std::string> names)
    : dim(n),
      basis_names(std::move(names)),
      structure(static_cast<size_t>(n) * n * n),
      unit(n) {
  if (basis_names.empty())
    for (int i = 0; i < n; ++i) basis_names.push_back("e" + std::to_string(i));
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw DimensionMismatch("algebra multiply");
  Vec r(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Rational f = x[i] * y[j];
      for (int k = 0; k < dim; ++k) {
        const Rational& s = c(i, j, k);
        if (!s.is_zero()) r[k] += f * s;
      }
    }
  }
  return r;
}

Matrix Algebra::left_mult(const Vec& x) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = multiply(x, unit_vec(dim, j));
    for (int k = 0; k < dim; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = multiply(unit_vec(dim, j), x);
    for (int k = 0; k < dim; ++k) m.at(k, j) = col[k];
  }
  return m;
}

bool Algebra::is_commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (multiply(unit_vec(dim, i), unit_vec(dim, j)) !=
          multiply(unit_vec(dim, j), unit_vec(dim, i)))
        return false;
  return true;
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << issues.size() << " issue(s):";
  for (const auto& i : issues) os << "\n  - " << i.what;
  return os.str();
}

ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport rep;
  if (static_cast<int>(a.unit.size()) != a.dim ||
      static_cast<int>(a.structure.size()) !=
          static_cast<size_t>(a.dim) * a.dim * a.dim ||
      static_cast<int>(a.basis_names.size()) != a.dim) {
    rep.fail("descriptor shape mismatch");
    return rep;
  }
  for (int i = 0; i < a.dim; ++i) {
    Vec ei = unit_vec(a.dim, i);
    if (a.multiply(a.unit, ei) != ei)
      rep.fail("unit fails on the left at basis " + a.basis_names[i]);
    if (a.multiply(ei, a.unit) != ei)
      rep.fail("unit fails on the right at basis " + a.basis_names[i]);
  }
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec ij = a.multiply(unit_vec(a.dim, i), unit_vec(a.dim, j));
      for (int l = 0; l < a.dim; ++l) {
        Vec lhs = a.multiply(ij, unit_vec(a.dim, l));
        Vec rhs = a.multiply(
            unit_vec(a.dim, i),
            a.multiply(unit_vec(a.dim, j), unit_vec(a.dim, l)));
        if (lhs != rhs)
          rep.fail("associativity fails at triple (" + a.basis_names[i] +
                   ", " + a.basis_names[j] + ", " + a.basis_names[l] + ")");
      }
    }
  return rep;
}

ValidationReport validate_homomorphism(const AlgebraMap& f) {
  ValidationReport rep;
  if (f.matrix.rows != f.target.dim || f.matrix.cols != f.source.dim) {
    rep.fail("matrix shape mismatch");
    return rep;
  }
  if (f.apply(f.source.unit) != f.target.unit) rep.fail("unit not preserved");
  for (int i = 0; i < f.source.dim; ++i)
    for (int j = 0; j < f.source.dim; ++j) {
      Vec lhs = f.apply(
          f.source.multiply(unit_vec(f.source.dim, i), unit_vec(f.source.dim, j)));
      Vec rhs = f.target.multiply(f.apply(unit_vec(f.source.dim, i)),
                                  f.apply(unit_vec(f.source.dim, j)));
      if (lhs != rhs)
        rep.fail("multiplicativity fails at pair (" + f.source.basis_names[i] +
                 ", " + f.source.basis_names[j] + ")");
    }
  return rep;
}

Algebra opposite_algebra(const Algebra& a) {
  Algebra op(a.dim, a.basis_names);
  op.unit = a.unit;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) op.c(i, j, k) = a.c(j, i, k);
  return op;
}

Algebra subalgebra_on(const Algebra& a, const Subspace& s,
                      const std::string& name_prefix) {
  int n = s.dim();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(name_prefix + std::to_string(i));
  Algebra sub(n, std::move(names));
  auto u = s.coordinates_of(a.unit);
  if (!u) throw ArithmeticError("subalgebra does not contain the unit");
  sub.unit = *u;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec prod = a.multiply(s.basis()[i], s.basis()[j]);
      auto coords = s.coordinates_of(prod);
      if (!coords)
        throw ArithmeticError("subspace not multiplicatively closed");
      for (int k = 0; k < n; ++k) sub.c(i, j, k) = (*coords)[k];
    }
  return sub;
}

Subspace center(const Algebra& a) {
  // x with x*e_i - e_i*x = 0 for all basis elements.
  Matrix m(a.dim * a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    Matrix d = a.right_mult(unit_vec(a.dim, i)) - a.left_mult(unit_vec(a.dim, i));
    for (int r = 0; r < a.dim; ++r)
      for (int c = 0; c < a.dim; ++c) m.at(i * a.dim + r, c) = d.at(r, c);
  }
  return Subspace::from_span(a.dim, kernel(m));
}

Ideal ideal_closure(const Algebra& a, const std::vector<Vec>& generators) {
  Subspace span = Subspace::from_span(a.dim, generators);
  for (int step = 0; step < a.dim; ++step) {
    std::vector<Vec> next(span.basis());
    for (const Vec& v : span.basis())
      for (int i = 0; i < a.dim; ++i) {
        next.push_back(a.multiply(unit_vec(a.dim, i), v));
        next.push_back(a.multiply(v, unit_vec(a.dim, i)));
      }
    Subspace grown = Subspace::from_span(a.dim, next);
    if (grown.dim() == span.dim()) break;
    span = grown;
  }
  return Ideal{generators, span};
}

}  // namespace d2kit
