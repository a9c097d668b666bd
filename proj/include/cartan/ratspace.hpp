#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cartan/rational.hpp"

namespace cartan {

/// A linear functional on Q^n, stored by its coefficient vector.
struct LinearFunctional {
  RationalVector coeffs;

  Rational operator()(const RationalVector& v) const { return dot(coeffs, v); }
  bool is_zero() const;
  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

/// Linear subspace of Q^n held as its reduced row-echelon basis, so that
/// equal subspaces compare equal member-wise.
class RationalSubspace {
 public:
  explicit RationalSubspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static RationalSubspace span(std::span<const RationalVector> vectors, std::size_t ambient_dim);
  static RationalSubspace span(const std::vector<RationalVector>& vectors, std::size_t ambient_dim) {
    return span(std::span<const RationalVector>(vectors), ambient_dim);
  }
  static RationalSubspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }
  /// Column of the leading 1 of each basis row.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RationalVector& v) const;
  bool contains(const RationalSubspace& other) const;

  /// Orthogonal complement for the standard dot product.
  RationalSubspace orthogonal_complement() const;

  /// Image under a coordinate permutation: coordinate i moves to perm[i].
  RationalSubspace permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const RationalSubspace&, const RationalSubspace&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
};

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b);
RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b);
bool member(const RationalSubspace& a, const RationalVector& v);

/// Direct sum of subspaces living on consecutive coordinate blocks.
RationalSubspace block_sum(std::span<const RationalSubspace> blocks);

/// {v in space : f(v) = 0 for every f}. Every functional must vanish on
/// quotient_by, and quotient_by must lie in space; both are checked.
RationalSubspace annihilator_preimage(const RationalSubspace& space,
                                      const RationalSubspace& quotient_by,
                                      std::span<const LinearFunctional> functionals);

/// The unique functional on `space` (extended by zero on its orthogonal
/// complement) that vanishes on the codimension-one subspace `hyperplane`
/// and takes `value` at `point`.
LinearFunctional functional_from_hyperplane(const RationalSubspace& space,
                                            const RationalSubspace& hyperplane,
                                            const RationalVector& point, const Rational& value);

/// Reduces the rows of a matrix in place to reduced row-echelon form and
/// returns the pivot columns. Pivoting takes the first nonzero column.
std::vector<std::size_t> row_reduce(std::vector<RationalVector>& rows, std::size_t ncols);

/// Rank of a list of vectors.
std::size_t rank_of(std::span<const RationalVector> vectors, std::size_t ambient_dim);

/// Solves sum_j coeffs[j] * columns[j] = target, if possible.
bool solve_in_span(std::span<const RationalVector> columns, const RationalVector& target,
                   RationalVector& coeffs);

}  // namespace cartan
