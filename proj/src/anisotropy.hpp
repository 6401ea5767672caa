// anisotropy.hpp -- dielectric matrices, canonical diagonal potentials,
// Coulomb envelopes and Steiner self-symmetry criteria.
//
// Two interaction models on R^3:
//   full:        V(x) = 1/|x| - 1/|M^{-1}x|,  M = diag(d), 0 < d3 <= d2 <= d1 < 1
//   simplified:  V(x) = 1/|D^{-1}x|,          D = diag(d), 0 < d1 <= d2 <= d3 <= 1
// Off-diagonal inputs are rotated to this principal-axis frame by
// canonicalize(); the rotation itself is discarded.
#pragma once

#include <array>

#include "common.hpp"

namespace polaron {

enum class Model { Full, Simplified };

const char* model_name(Model m);

struct DielectricSpec {
  Model model = Model::Full;
  // row-major symmetric 3x3
  std::array<std::array<double, 3>, 3> matrix{};
};

struct CanonicalPotential {
  Model model = Model::Full;
  Vec3 d{};  // canonical diagonal, ordering per model (see header comment)

  double eval_real(const Vec3& x) const;
  double eval_fourier(const Vec3& k) const;
};

struct PotentialBounds {
  double a = 0.0;  // V(x) <= a/|x|
  double b = 0.0;  // b/|x| <= V(x)
};

struct SteinerFlags {
  std::array<bool, 3> axis{};  // St_k(V) = V for axis e_k
  bool plane12 = false;        // (e1,e2)-radial
  bool plane23 = false;        // (e2,e3)-radial
};

CanonicalPotential canonicalize(const DielectricSpec& spec);

// Construct directly from a canonical diagonal (sorted into the model's
// ordering convention); validates the same eigenvalue ranges.
CanonicalPotential potential_from_diag(Model model, const Vec3& d);

PotentialBounds bounds(const CanonicalPotential& pot);

SteinerFlags steiner_criteria(const CanonicalPotential& pot);

// Tolerance for "two eigenvalues equal" in the cylindrical classification.
inline constexpr double kEigEqualTol = 1e-10;

// Cylindrical structure of a potential whose diagonal has a doubly
// degenerate entry: axis is the distinguished direction (0 or 2 after
// canonical sorting), plane/axis scales are the corresponding d entries.
struct CylStructure {
  int axis = 2;         // distinguished axis index
  double d_plane = 0.0; // degenerate pair entry
  double d_axis = 0.0;  // remaining entry
};

// Throws NotCylindrical when no degenerate pair exists.
CylStructure cyl_structure(const CanonicalPotential& pot);

}  // namespace polaron
