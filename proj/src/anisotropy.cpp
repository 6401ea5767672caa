#include "anisotropy.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polaron {

const char* model_name(Model m) { return m == Model::Full ? "full" : "simplified"; }

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void check_model_range(Model model, double e1, double e2, double e3) {
  // e ascending. Full: eigenvalues in (0,1], at most one equal to 1
  // (the middle one must stay strictly below 1). Simplified: in [0,1).
  if (model == Model::Full) {
    if (!(e1 > 0.0)) fail(Err::EigenvalueOutOfRange, "full model needs eigenvalues > 0, got " + fmt(e1));
    if (!(e3 <= 1.0 + 1e-14)) fail(Err::EigenvalueOutOfRange, "full model needs eigenvalues <= 1, got " + fmt(e3));
    if (!(e2 < 1.0)) fail(Err::EigenvalueOutOfRange, "full model needs the middle eigenvalue < 1, got " + fmt(e2));
  } else {
    if (!(e1 >= 0.0)) fail(Err::EigenvalueOutOfRange, "simplified model needs eigenvalues >= 0, got " + fmt(e1));
    if (!(e3 < 1.0)) fail(Err::EigenvalueOutOfRange, "simplified model needs eigenvalues < 1, got " + fmt(e3));
  }
}

}  // namespace

CanonicalPotential canonicalize(const DielectricSpec& spec) {
  Eigen::Matrix3d M;
  double scale = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      M(i, j) = spec.matrix[i][j];
      scale = std::max(scale, std::abs(M(i, j)));
    }
  if (scale == 0.0 && spec.model == Model::Full)
    fail(Err::EigenvalueOutOfRange, "zero matrix is not admissible for the full model");
  const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, scale))
    fail(Err::NotSymmetric, "matrix asymmetry " + fmt(asym));

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (M + M.transpose()));
  const Eigen::Vector3d ev = es.eigenvalues();  // ascending
  check_model_range(spec.model, ev(0), ev(1), ev(2));

  CanonicalPotential pot;
  pot.model = spec.model;
  if (spec.model == Model::Full) {
    // canonical entries are the pairwise products sqrt(m_i m_j), descending
    Vec3 p = {std::sqrt(ev(1) * ev(2)), std::sqrt(ev(0) * ev(2)), std::sqrt(ev(0) * ev(1))};
    std::sort(p.begin(), p.end(), std::greater<double>());
    pot.d = p;
  } else {
    // d_i = 1 - s_i with s descending, so d ascending
    Vec3 p = {1.0 - ev(2), 1.0 - ev(1), 1.0 - ev(0)};
    std::sort(p.begin(), p.end());
    pot.d = p;
  }
  return pot;
}

CanonicalPotential potential_from_diag(Model model, const Vec3& d_in) {
  Vec3 d = d_in;
  if (model == Model::Full) {
    std::sort(d.begin(), d.end(), std::greater<double>());
    // d are already the canonical entries; admissibility is 0 < d < 1
    if (!(d[2] > 0.0) || !(d[0] < 1.0))
      fail(Err::EigenvalueOutOfRange, "full canonical diagonal must lie in (0,1)");
  } else {
    std::sort(d.begin(), d.end());
    if (!(d[0] > 0.0) || !(d[2] <= 1.0))
      fail(Err::EigenvalueOutOfRange, "simplified canonical diagonal must lie in (0,1]");
  }
  CanonicalPotential pot;
  pot.model = model;
  pot.d = d;
  return pot;
}

double CanonicalPotential::eval_real(const Vec3& x) const {
  const double r2 = dot3(x, x);
  if (!(r2 > 1e-300)) fail(Err::OriginSingular, "eval_real at the origin");
  const double sx = x[0] / d[0], sy = x[1] / d[1], sz = x[2] / d[2];
  const double q = std::sqrt(sx * sx + sy * sy + sz * sz);
  if (model == Model::Full) return 1.0 / std::sqrt(r2) - 1.0 / q;
  return 1.0 / q;
}

double CanonicalPotential::eval_fourier(const Vec3& k) const {
  const double k2 = dot3(k, k);
  if (!(k2 > 1e-300)) fail(Err::OriginSingular, "eval_fourier at k = 0");
  const double det = d[0] * d[1] * d[2];
  const double dk0 = d[0] * k[0], dk1 = d[1] * k[1], dk2v = d[2] * k[2];
  const double dk2 = dk0 * dk0 + dk1 * dk1 + dk2v * dk2v;
  if (model == Model::Full) return 4.0 * M_PI * (1.0 / k2 - det / dk2);
  return 4.0 * M_PI * det / dk2;
}

PotentialBounds bounds(const CanonicalPotential& pot) {
  const double dmin = std::min({pot.d[0], pot.d[1], pot.d[2]});
  const double dmax = std::max({pot.d[0], pot.d[1], pot.d[2]});
  if (pot.model == Model::Full) return {1.0 - dmin, 1.0 - dmax};
  return {dmax, dmin};
}

SteinerFlags steiner_criteria(const CanonicalPotential& pot) {
  SteinerFlags f;
  const double slack = 1e-12;
  if (pot.model == Model::Full) {
    const double m1 = pot.d[0], m2 = pot.d[1], m3 = pot.d[2];  // descending
    f.axis[0] = true;
    f.axis[1] = m1 * m1 * m1 <= m2 * m2 + slack;
    f.axis[2] = m1 * m1 * m1 <= m3 * m3 + slack;
    f.plane12 = std::abs(m1 - m2) <= kEigEqualTol;
    f.plane23 = std::abs(m2 - m3) <= kEigEqualTol && f.axis[1];
  } else {
    f.axis = {true, true, true};
    f.plane12 = std::abs(pot.d[0] - pot.d[1]) <= kEigEqualTol;
    f.plane23 = std::abs(pot.d[1] - pot.d[2]) <= kEigEqualTol;
  }
  return f;
}

CylStructure cyl_structure(const CanonicalPotential& pot) {
  const bool eq01 = std::abs(pot.d[0] - pot.d[1]) <= kEigEqualTol;
  const bool eq12 = std::abs(pot.d[1] - pot.d[2]) <= kEigEqualTol;
  CylStructure c;
  if (eq01) {
    c.axis = 2;
    c.d_plane = pot.d[0];
    c.d_axis = pot.d[2];
  } else if (eq12) {
    c.axis = 0;
    c.d_plane = pot.d[1];
    c.d_axis = pot.d[0];
  } else {
    fail(Err::NotCylindrical, "diagonal has no doubly degenerate entry");
  }
  return c;
}

}  // namespace polaron
