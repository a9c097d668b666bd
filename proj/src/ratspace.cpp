#include "cartan/ratspace.hpp"

#include <algorithm>

#include "cartan/error.hpp"

namespace cartan {

bool LinearFunctional::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

std::vector<std::size_t> row_reduce(std::vector<RationalVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

RationalSubspace RationalSubspace::span(std::span<const RationalVector> vectors,
                                        std::size_t ambient_dim) {
  RationalSubspace s(ambient_dim);
  std::vector<RationalVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim)
      throw DimensionError("span: vector of length " + std::to_string(v.size()) +
                           " in ambient dimension " + std::to_string(ambient_dim));
    rows.push_back(v);
  }
  s.pivots_ = row_reduce(rows, ambient_dim);
  s.basis_ = std::move(rows);
  return s;
}

RationalSubspace RationalSubspace::full(std::size_t ambient_dim) {
  std::vector<RationalVector> e(ambient_dim, RationalVector(ambient_dim));
  for (std::size_t i = 0; i < ambient_dim; ++i) e[i][i] = 1;
  return span(e, ambient_dim);
}

bool RationalSubspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_dim_) throw DimensionError("membership test: ambient mismatch");
  RationalVector w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = w[pivots_[i]];
    if (f != 0) axpy(w, -f, basis_[i]);
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionError("containment: ambient mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const RationalVector& v) { return contains(v); });
}

RationalSubspace RationalSubspace::orthogonal_complement() const {
  // Null space of the RREF matrix: one vector per free column.
  std::vector<bool> is_pivot(ambient_dim_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<RationalVector> kernel;
  for (std::size_t free = 0; free < ambient_dim_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(ambient_dim_);
    v[free] = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) v[pivots_[i]] = -basis_[i][free];
    kernel.push_back(std::move(v));
  }
  return span(kernel, ambient_dim_);
}

RationalSubspace RationalSubspace::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != ambient_dim_) throw DimensionError("permutation length mismatch");
  std::vector<RationalVector> moved;
  for (const auto& b : basis_) {
    RationalVector v(ambient_dim_);
    for (std::size_t i = 0; i < ambient_dim_; ++i) v[perm[i]] = b[i];
    moved.push_back(std::move(v));
  }
  return span(moved, ambient_dim_);
}

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("sum: ambient mismatch");
  std::vector<RationalVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return RationalSubspace::span(all, a.ambient_dim());
}

RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersect: ambient mismatch");
  return sum(a.orthogonal_complement(), b.orthogonal_complement()).orthogonal_complement();
}

bool member(const RationalSubspace& a, const RationalVector& v) { return a.contains(v); }

RationalSubspace block_sum(std::span<const RationalSubspace> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.ambient_dim();
  std::vector<RationalVector> rows;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (const auto& v : b.basis()) {
      RationalVector w(total);
      std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(offset));
      rows.push_back(std::move(w));
    }
    offset += b.ambient_dim();
  }
  return RationalSubspace::span(rows, total);
}

RationalSubspace annihilator_preimage(const RationalSubspace& space,
                                      const RationalSubspace& quotient_by,
                                      std::span<const LinearFunctional> functionals) {
  if (space.ambient_dim() != quotient_by.ambient_dim())
    throw DimensionError("annihilator_preimage: ambient mismatch");
  if (!space.contains(quotient_by))
    throw ContractError("annihilator_preimage: quotient subspace is not contained in the space");
  std::vector<RationalVector> normals;
  for (const auto& f : functionals) {
    if (f.coeffs.size() != space.ambient_dim())
      throw DimensionError("annihilator_preimage: functional length mismatch");
    for (const auto& q : quotient_by.basis())
      if (f(q) != 0)
        throw ContractError("annihilator_preimage: functional does not vanish on the quotient");
    normals.push_back(f.coeffs);
  }
  const auto kernel = RationalSubspace::span(normals, space.ambient_dim()).orthogonal_complement();
  return intersect(space, kernel);
}

LinearFunctional functional_from_hyperplane(const RationalSubspace& space,
                                            const RationalSubspace& hyperplane,
                                            const RationalVector& point, const Rational& value) {
  if (!space.contains(hyperplane) || hyperplane.dim() + 1 != space.dim())
    throw ContractError("functional_from_hyperplane: not a hyperplane of the space");
  if (hyperplane.contains(point) || !space.contains(point))
    throw ContractError("functional_from_hyperplane: point must lie in space minus hyperplane");
  // Normal direction: the part of `space` orthogonal to the hyperplane.
  const auto normal_space = intersect(space, hyperplane.orthogonal_complement());
  if (normal_space.dim() != 1) throw ContractError("functional_from_hyperplane: degenerate normal");
  const RationalVector& n = normal_space.basis().front();
  const Rational at_point = dot(n, point);
  LinearFunctional f{n};
  for (auto& c : f.coeffs) c *= value / at_point;
  return f;
}

std::size_t rank_of(std::span<const RationalVector> vectors, std::size_t ambient_dim) {
  return RationalSubspace::span(vectors, ambient_dim).dim();
}

bool solve_in_span(std::span<const RationalVector> columns, const RationalVector& target,
                   RationalVector& coeffs) {
  const std::size_t n = target.size();
  const std::size_t m = columns.size();
  // Augmented matrix rows: one per coordinate.
  std::vector<RationalVector> rows(n, RationalVector(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (columns[j].size() != n) throw DimensionError("solve_in_span: column length mismatch");
      rows[i][j] = columns[j][i];
    }
    rows[i][m] = target[i];
  }
  const auto piv = row_reduce(rows, m + 1);
  if (!piv.empty() && piv.back() == m) return false;
  coeffs.assign(m, Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) coeffs[piv[r]] = rows[r][m];
  return true;
}

}  // namespace cartan
