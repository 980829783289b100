#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gabor/window.hpp"

namespace gabor {

/// Full-rank lattice B Z^2 in the time-frequency plane; columns of B are
/// generators (x, omega).
class Lattice2D {
 public:
  explicit Lattice2D(const Eigen::Matrix2d& basis);

  /// Row-major entries {b11, b12, b21, b22}.
  static Lattice2D from_row_major(const std::vector<double>& entries);

  const Eigen::Matrix2d& basis() const { return basis_; }
  double covolume() const { return std::abs(basis_.determinant()); }

 private:
  Eigen::Matrix2d basis_;
};

/// aZ x bZ. Throws Domain on nonpositive input.
Lattice2D rect(double a, double b);

Eigen::Matrix2d rotation(double r);      // [[cos r, sin r], [-sin r, cos r]]
Eigen::Matrix2d shear(double q);         // [[1, 0], [q, 1]]
Eigen::Matrix2d dilation_matrix(double a);  // diag(a, 1/a)

/// Basis = scale * R_r V_q D_a after sign normalisation; covolume = scale^2.
struct IwasawaFactors {
  double scale = 1.0;
  double r = 0.0;  // in (-pi, pi]
  double q = 0.0;
  double a = 1.0;  // > 0
  /// True if the basis had negative determinant and its columns were swapped.
  bool swapped_columns = false;

  double covolume() const { return scale * scale; }
};

IwasawaFactors iwasawa(const Lattice2D& lattice);

/// scale * R_r V_q D_a
Eigen::Matrix2d compose(const IwasawaFactors& f);

/// The lattice basis with positive determinant that `iwasawa` factors.
Eigen::Matrix2d normalized_basis(const Lattice2D& lattice);

/// Basis of L that depends on L alone: among the bases made of the shortest
/// lattice vectors (Lagrange-Gauss reduction), the positively oriented one
/// with the smallest Iwasawa angle |r|, then r >= 0, then the smallest |q|.
/// For aZ x bZ this is diag(a, b).
Eigen::Matrix2d canonical_basis(const Lattice2D& lattice);

/// G(w, L) rewritten as the unitarily equivalent G(window, covolume Z x Z).
struct ReducedSystem {
  Window window;
  double covolume = 0.0;
  IwasawaFactors factors;
  /// Operator tags applied to the window, in order.
  std::vector<std::string> steps;
  Parity parity_before = Parity::Unknown;
  Parity parity_after = Parity::Unknown;
};

/// Applies U = D_{scale/a} V_{-q} F_{-r}, the metaplectic operator whose
/// symplectic projection maps L onto covolume Z x Z. The factors come from
/// canonical_basis(L), so the result does not depend on the basis given.
/// Rectangular lattices reduce to a closed-form dilation; otherwise the
/// window is sampled on the standard grid first.
ReducedSystem reduce_general(const Window& w, const Lattice2D& lattice);

}  // namespace gabor
