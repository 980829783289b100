#include "gabor/lattice.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "gabor/error.hpp"
#include "gabor/metaplectic.hpp"

namespace gabor {

namespace {

std::string tag(const char* name, double value) {
  std::ostringstream os;
  os.precision(17);
  os << name << "(" << value << ")";
  return os.str();
}

}  // namespace

Lattice2D::Lattice2D(const Eigen::Matrix2d& basis) : basis_(basis) {
  const double det = basis.determinant();
  if (!std::isfinite(det) || det == 0.0 ||
      std::abs(det) <= 1e-14 * basis.squaredNorm()) {
    throw Error(ErrorKind::Domain, "lattice basis is singular");
  }
}

Lattice2D Lattice2D::from_row_major(const std::vector<double>& entries) {
  if (entries.size() != 4) throw Error(ErrorKind::Precondition, "basis needs four entries");
  Eigen::Matrix2d b;
  b << entries[0], entries[1], entries[2], entries[3];
  return Lattice2D(b);
}

Lattice2D rect(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::Domain, "rect needs a, b > 0");
  return Lattice2D(Eigen::Vector2d(a, b).asDiagonal());
}

Eigen::Matrix2d rotation(double r) {
  Eigen::Matrix2d m;
  m << std::cos(r), std::sin(r), -std::sin(r), std::cos(r);
  return m;
}

Eigen::Matrix2d shear(double q) {
  Eigen::Matrix2d m;
  m << 1.0, 0.0, q, 1.0;
  return m;
}

Eigen::Matrix2d dilation_matrix(double a) {
  Eigen::Matrix2d m;
  m << a, 0.0, 0.0, 1.0 / a;
  return m;
}

Eigen::Matrix2d normalized_basis(const Lattice2D& lattice) {
  Eigen::Matrix2d b = lattice.basis();
  if (b.determinant() < 0.0) b.col(0).swap(b.col(1));
  return b;
}

IwasawaFactors iwasawa(const Lattice2D& lattice) {
  IwasawaFactors f;
  f.swapped_columns = lattice.basis().determinant() < 0.0;
  const Eigen::Matrix2d b = normalized_basis(lattice);
  f.scale = std::sqrt(b.determinant());
  const Eigen::Matrix2d s = b / f.scale;

  // R_{-r} S is lower triangular when tan r = s12 / s22.
  f.r = std::atan2(s(0, 1), s(1, 1));
  if (f.r <= -std::numbers::pi) f.r = std::numbers::pi;
  const Eigen::Matrix2d lower = rotation(-f.r) * s;
  f.a = lower(0, 0);
  f.q = lower(1, 0) / f.a;
  return f;
}

Eigen::Matrix2d canonical_basis(const Lattice2D& lattice) {
  // Lagrange-Gauss reduction of the columns.
  Eigen::Vector2d u = lattice.basis().col(0);
  Eigen::Vector2d v = lattice.basis().col(1);
  if (u.squaredNorm() > v.squaredNorm()) std::swap(u, v);
  for (int iter = 0; iter < 200; ++iter) {
    const double m = std::round(u.dot(v) / u.squaredNorm());
    if (m == 0.0) break;
    v -= m * u;
    if (v.squaredNorm() >= u.squaredNorm()) break;
    std::swap(u, v);
  }
  if (u.squaredNorm() > v.squaredNorm()) std::swap(u, v);

  // Every vector no longer than the second minimum |v| is one of these.
  const double limit = v.squaredNorm() * (1.0 + 1e-9);
  std::vector<Eigen::Vector2d> shortest;
  for (const Eigen::Vector2d& c : {u, v, Eigen::Vector2d(u + v), Eigen::Vector2d(u - v)}) {
    if (c.squaredNorm() <= limit) {
      shortest.push_back(c);
      shortest.push_back(-c);
    }
  }

  const double covolume = lattice.covolume();
  Eigen::Matrix2d best = normalized_basis(lattice);
  double best_r = 0.0;
  double best_q = 0.0;
  bool found = false;
  for (const auto& x : shortest) {
    for (const auto& y : shortest) {
      Eigen::Matrix2d b;
      b << x, y;
      if (std::abs(b.determinant() - covolume) > 1e-9 * covolume) continue;
      const auto f = iwasawa(Lattice2D(b));
      // Smallest |r|, then r >= 0, then smallest |q|.
      const double dr = std::abs(f.r) - std::abs(best_r);
      const bool better =
          !found || dr < -1e-12 ||
          (std::abs(dr) <= 1e-12 && (f.r > best_r + 1e-12 ||
                                     (std::abs(f.r - best_r) <= 1e-12 &&
                                      std::abs(f.q) < std::abs(best_q) - 1e-12)));
      if (better) {
        best = b;
        best_r = f.r;
        best_q = f.q;
        found = true;
      }
    }
  }
  return best;
}

Eigen::Matrix2d compose(const IwasawaFactors& f) {
  return f.scale * rotation(f.r) * shear(f.q) * dilation_matrix(f.a);
}

ReducedSystem reduce_general(const Window& w, const Lattice2D& lattice) {
  const Eigen::Matrix2d basis = canonical_basis(lattice);
  ReducedSystem out{w, lattice.covolume(), iwasawa(Lattice2D(basis)), {}, Parity::Unknown,
                    Parity::Unknown};
  out.factors.swapped_columns = lattice.basis().determinant() < 0.0;
  const auto& f = out.factors;
  out.parity_before = w.parity() == Parity::Unknown ? classify_parity(w) : w.parity();
  if (f.swapped_columns) out.steps.emplace_back("swap-columns");
  if (basis != normalized_basis(lattice)) out.steps.emplace_back("reduce-basis");

  const double dilation = f.scale / f.a;
  if (f.r == 0.0 && f.q == 0.0) {
    out.window = dilate(w, dilation);
    out.steps.push_back(tag("dilate", dilation));
  } else {
    SampledFunction g = sample(w);
    out.steps.emplace_back("sample(h=0.01,T=8)");
    if (f.r != 0.0) {
      g = frac_fourier(g, -f.r);
      out.steps.push_back(tag("frac-fourier", -f.r));
    }
    if (f.q != 0.0) {
      g = chirp(g, -f.q);
      out.steps.push_back(tag("chirp", -f.q));
    }
    out.window = dilate(sampled(std::move(g), "reduced(" + w.label() + ")"), dilation);
    out.steps.push_back(tag("dilate", dilation));
  }
  out.parity_after = classify_parity(out.window);
  return out;
}

}  // namespace gabor
