#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cartan/rational.hpp"

namespace cartan {

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);

/// A simple Lie algebra type X_l. Construction validates the rank.
class SimpleType {
 public:
  SimpleType(Series series, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  bool is_exceptional() const { return series_ >= Series::E; }
  /// "A5", "E6", "G2".
  std::string name() const;
  int dimension() const;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

 private:
  Series series_;
  int rank_;
};

/// True when X_l satisfies the rank constraint of its series.
bool valid_rank(Series series, int rank);

/// Roots, Cartan matrix and fundamental weights of a simple type.
///
/// Vectors live in an orthogonal coordinate space (e_i coordinates for the
/// classical series, sub-lattices of the E8 or F4 or G2 realization for the
/// exceptional ones). Simple roots are numbered in the Vinberg-Onishchik
/// convention; bourbaki_index() converts. The invariant form is the dot
/// product scaled so that every long root has squared length 2.
class RootSystem {
 public:
  explicit RootSystem(SimpleType type);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  std::size_t ambient_dim() const { return ambient_dim_; }

  const std::vector<RationalVector>& roots() const { return roots_; }
  const std::vector<RationalVector>& positive_roots() const { return positive_; }
  const std::vector<RationalVector>& simple_roots() const { return simple_; }
  const std::vector<RationalVector>& fundamental_weights() const { return fundamental_; }
  /// cartan_matrix()[i][j] = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const RationalVector& highest_root() const { return highest_; }

  /// Normalized invariant form.
  Rational form(const RationalVector& u, const RationalVector& v) const;
  /// <u, v^vee> = 2 (u, v) / (v, v).
  Rational pairing(const RationalVector& u, const RationalVector& v) const;
  bool is_long(const RationalVector& root) const;

  /// Ambient vector of sum_i coords[i] * pi_i.
  RationalVector weight_vector(const RationalVector& coords) const;
  /// Coordinates of a weight in the fundamental-weight basis.
  RationalVector weight_coords(const RationalVector& v) const;
  /// Coordinates of an element of the root lattice in the simple-root basis.
  RationalVector root_coords(const RationalVector& v) const;

  /// Permutation i -> i* with pi_i^* = -w0(pi_i).
  const std::vector<std::size_t>& dual_permutation() const { return dual_; }
  /// Bourbaki label (0-based) of the simple root with VO label i (0-based).
  std::size_t bourbaki_index(std::size_t vo_index) const { return vo_to_bourbaki_[vo_index]; }
  const std::vector<std::size_t>& vo_to_bourbaki() const { return vo_to_bourbaki_; }

 private:
  SimpleType type_;
  std::size_t ambient_dim_ = 0;
  Rational scale_;
  std::vector<RationalVector> simple_;
  std::vector<RationalVector> roots_;
  std::vector<RationalVector> positive_;
  std::vector<RationalVector> fundamental_;
  std::vector<std::vector<int>> cartan_;
  RationalVector highest_;
  std::vector<std::size_t> dual_;
  std::vector<std::size_t> vo_to_bourbaki_;
};

RootSystem build_root_system(SimpleType t);

/// Memoized, thread-safe access to root systems.
const RootSystem& root_system(SimpleType t);

/// sum over roots beta of <beta, alpha^vee>^2 for the long root alpha
/// (highest root unless another long root is supplied).
Integer k_value(const RootSystem& rs);
Integer k_value(const RootSystem& rs, const RationalVector& long_root);

/// Closed form of k_g by series: 4l+4, 8l-4, 4l+4, 8l-8, 48, 72, 120, 36, 16.
Integer k_value_closed_form(SimpleType t);

/// Dimension of the irreducible module with highest weight lambda (given in
/// fundamental-weight coordinates); lambda must be dominant integral.
Integer weyl_dim(const RootSystem& rs, const RationalVector& lambda);

/// (lambda, lambda + 2 rho) in the normalized form.
Rational casimir(const RootSystem& rs, const RationalVector& lambda);

/// Dynkin index of an irreducible module: dim V(lambda) (lambda, lambda+2rho) / dim g.
/// Equals 1 for the tautological sl_n-module.
Rational module_dynkin_index(const RootSystem& rs, const RationalVector& lambda);

/// All permutations of simple-root labels preserving the Cartan matrix.
std::vector<std::vector<std::size_t>> diagram_automorphisms(const RootSystem& rs);

}  // namespace cartan
