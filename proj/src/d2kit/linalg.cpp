#include "d2kit/linalg.hpp"

#include <algorithm>

namespace d2kit {

Vec zero_vec(int n) { return Vec(n); }

Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = Rational(1);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add");
  Vec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub");
  Vec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Rational& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

void add_scaled(Vec& acc, const Rational& c, const Vec& v) {
  if (acc.size() != v.size()) throw DimensionMismatch("add_scaled");
  if (c.is_zero()) return;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += c * v[i];
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols)
      throw DimensionMismatch("from_rows: ragged input");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(cols[j].size()) != m.rows)
      throw DimensionMismatch("from_cols: ragged input");
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols)
    throw DimensionMismatch("matrix apply");
  Vec r(rows);
  for (int i = 0; i < rows; ++i) {
    Rational s;
    for (int j = 0; j < cols; ++j) {
      const Rational& m = at(i, j);
      if (!m.is_zero() && !x[j].is_zero()) s += m * x[j];
    }
    r[i] = s;
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw DimensionMismatch("matrix multiply");
  Matrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rational& m = at(i, k);
      if (m.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        const Rational& n = o.at(k, j);
        if (!n.is_zero()) r.at(i, j) += m * n;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw DimensionMismatch("matrix add");
  Matrix r(*this);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw DimensionMismatch("matrix sub");
  Matrix r(*this);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::row(int i) const {
  Vec v(cols);
  for (int j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows == o.rows && cols == o.cols && a == o.a;
}

bool Matrix::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  Matrix r(m);
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < r.cols && lead < r.rows; ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows; ++i) {
      if (!r.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
    Rational inv = r.at(lead, col).inverse();
    for (int j = col; j < r.cols; ++j) {
      if (!r.at(lead, j).is_zero()) r.at(lead, j) *= inv;
    }
    for (int i = 0; i < r.rows; ++i) {
      if (i == lead) continue;
      Rational f = r.at(i, col);
      if (f.is_zero()) continue;
      for (int j = col; j < r.cols; ++j) {
        if (!r.at(lead, j).is_zero()) r.at(i, j) -= f * r.at(lead, j);
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

int rank(const Matrix& m) {
  return static_cast<int>(rref(m).pivots.size());
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows)
    throw DimensionMismatch("solve: rhs length");
  Matrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  RrefResult rr = rref(aug);
  for (int p : rr.pivots)
    if (p == m.cols) return std::nullopt;  // inconsistent system
  Vec x(m.cols);
  for (size_t k = 0; k < rr.pivots.size(); ++k)
    x[rr.pivots[k]] = rr.m.at(static_cast<int>(k), m.cols);
  return x;
}

std::vector<Vec> kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols);
    v[j] = Rational(1);
    for (size_t k = 0; k < rr.pivots.size(); ++k)
      v[rr.pivots[k]] = -rr.m.at(static_cast<int>(k), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  Matrix aug(m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = Rational(1);
  }
  RrefResult rr = rref(aug);
  if (static_cast<int>(rr.pivots.size()) != m.rows ||
      rr.pivots.back() != m.rows - 1)
    return std::nullopt;
  Matrix inv(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.at(i, j) = rr.m.at(i, m.cols + j);
  return inv;
}

std::optional<Vec> span_membership(const std::vector<Vec>& generators,
                                   const Vec& v) {
  if (generators.empty())
    return is_zero_vec(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  for (const auto& g : generators)
    if (g.size() != v.size()) throw DimensionMismatch("span_membership");
  return solve(Matrix::from_cols(generators), v);
}

SVec to_sparse(const Vec& v) {
  SVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

Vec to_dense(const SVec& v, int n) {
  Vec d(n);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

namespace {

// acc -= c * row, both sorted sparse; result stays sorted.
SVec sparse_axpy(const SVec& acc, const Rational& c, const SVec& row) {
  SVec out;
  out.reserve(acc.size() + row.size());
  size_t i = 0, j = 0;
  while (i < acc.size() || j < row.size()) {
    if (j >= row.size() || (i < acc.size() && acc[i].first < row[j].first)) {
      out.push_back(acc[i++]);
    } else if (i >= acc.size() || row[j].first < acc[i].first) {
      out.emplace_back(row[j].first, -(c * row[j].second));
      ++j;
    } else {
      Rational v = acc[i].second - c * row[j].second;
      if (!v.is_zero()) out.emplace_back(acc[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SVec Echelon::reduce(SVec v) const {
  // Rows lead with their pivot, so one left-to-right sweep suffices.
  SVec out;
  size_t k = 0;
  while (k < v.size()) {
    auto it = rows_.find(v[k].first);
    if (it == rows_.end()) {
      out.push_back(v[k]);
      ++k;
      continue;
    }
    Rational c = v[k].second;
    SVec rest(v.begin() + k, v.end());
    v = sparse_axpy(rest, c, it->second);
    k = 0;
  }
  return out;
}

bool Echelon::insert(SVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational inv = v.front().second.inverse();
  for (auto& [i, x] : v) x *= inv;
  rows_.emplace(v.front().first, std::move(v));
  return true;
}

void Echelon::finalize() {
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SVec& row = it->second;
    SVec tail(row.begin() + 1, row.end());
    SVec head(row.begin(), row.begin() + 1);
    tail = reduce(std::move(tail));
    row = std::move(head);
    row.insert(row.end(), tail.begin(), tail.end());
  }
}

bool Echelon::contains(const Vec& v) const {
  return reduce(to_sparse(v)).empty();
}

std::vector<int> Echelon::pivot_columns() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const auto& [piv, _] : rows_) p.push_back(piv);
  return p;
}

std::vector<int> Echelon::free_columns() const {
  std::vector<int> f;
  auto it = rows_.begin();
  for (int j = 0; j < ambient_; ++j) {
    while (it != rows_.end() && it->first < j) ++it;
    if (it == rows_.end() || it->first != j) f.push_back(j);
  }
  return f;
}

QuotientCtx QuotientCtx::from_relations(int ambient,
                                        const std::vector<Vec>& relations) {
  std::vector<SVec> s;
  s.reserve(relations.size());
  for (const auto& r : relations) s.push_back(to_sparse(r));
  return from_relations_sparse(ambient, std::move(s));
}

QuotientCtx QuotientCtx::from_relations_sparse(int ambient,
                                               std::vector<SVec> relations) {
  QuotientCtx q;
  q.ech_ = Echelon(ambient);
  for (auto& r : relations) q.ech_.insert(std::move(r));
  q.ech_.finalize();
  q.free_ = q.ech_.free_columns();
  return q;
}

Vec QuotientCtx::project(const Vec& full) const {
  if (static_cast<int>(full.size()) != ambient_dim())
    throw DimensionMismatch("quotient project");
  SVec red = ech_.reduce(to_sparse(full));
  Vec out(dim());
  size_t k = 0;
  for (const auto& [col, val] : red) {
    while (k < free_.size() && free_[k] < col) ++k;
    // reduced vectors are supported on free columns
    out[k] = val;
  }
  return out;
}

Vec QuotientCtx::section(const Vec& q) const {
  if (static_cast<int>(q.size()) != dim())
    throw DimensionMismatch("quotient section");
  Vec full(ambient_dim());
  for (size_t k = 0; k < free_.size(); ++k) full[free_[k]] = q[k];
  return full;
}

Matrix QuotientCtx::project_matrix() const {
  Matrix m(dim(), ambient_dim());
  for (int j = 0; j < ambient_dim(); ++j) {
    Vec p = project(unit_vec(ambient_dim(), j));
    for (int i = 0; i < dim(); ++i) m.at(i, j) = p[i];
  }
  return m;
}

Matrix QuotientCtx::section_matrix() const {
  Matrix m(ambient_dim(), dim());
  for (size_t k = 0; k < free_.size(); ++k)
    m.at(free_[k], static_cast<int>(k)) = Rational(1);
  return m;
}

Matrix QuotientCtx::induced(const Matrix& ambient_op) const {
  Matrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    Vec img = project(ambient_op.apply(section(unit_vec(dim(), j))));
    for (int i = 0; i < dim(); ++i) m.at(i, j) = img[i];
  }
  return m;
}

Subspace Subspace::from_span(int ambient, const std::vector<Vec>& vectors) {
  Echelon e(ambient);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient)
      throw DimensionMismatch("subspace span");
    e.insert(v);
  }
  e.finalize();
  Subspace s(ambient);
  for (const auto& [piv, row] : e.rows()) {
    s.pivots_.push_back(piv);
    s.basis_.push_back(to_dense(row, ambient));
  }
  return s;
}

bool Subspace::contains(const Vec& v) const {
  return coordinates_of(v).has_value();
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw DimensionMismatch("subspace coordinates");
  // RREF basis: coordinates are read off at the pivot positions.
  Vec coords(dim());
  for (int k = 0; k < dim(); ++k) coords[k] = v[pivots_[k]];
  Vec rebuilt(ambient_);
  for (int k = 0; k < dim(); ++k) add_scaled(rebuilt, coords[k], basis_[k]);
  if (rebuilt != v) return std::nullopt;
  return coords;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
  if (static_cast<int>(coords.size()) != dim())
    throw DimensionMismatch("subspace from_coordinates");
  Vec v(ambient_);
  for (int k = 0; k < dim(); ++k) add_scaled(v, coords[k], basis_[k]);
  return v;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionMismatch("subspace sum");
  std::vector<Vec> all(a.basis_);
  all.insert(all.end(), b.basis_.begin(), b.basis_.end());
  return from_span(a.ambient_, all);
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionMismatch("subspace intersect");
  // x = sum c_i a_i = sum d_j b_j: kernel of the stacked system [A^T | -B^T].
  int da = a.dim(), db = b.dim();
  Matrix m(a.ambient_, da + db);
  for (int j = 0; j < da; ++j)
    for (int i = 0; i < a.ambient_; ++i) m.at(i, j) = a.basis_[j][i];
  for (int j = 0; j < db; ++j)
    for (int i = 0; i < a.ambient_; ++i) m.at(i, da + j) = -b.basis_[j][i];
  std::vector<Vec> vecs;
  for (const Vec& k : kernel(m)) {
    Vec x(a.ambient_);
    for (int j = 0; j < da; ++j) add_scaled(x, k[j], a.basis_[j]);
    vecs.push_back(std::move(x));
  }
  return from_span(a.ambient_, vecs);
}

bool Subspace::contains_subspace(const Subspace& o) const {
  for (const auto& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

}  // namespace d2kit
