#pragma once

// Geometry of the 2-sphere with three cone points of angles 2*alpha_i.
//
// A base point is (alpha_1, alpha_2, alpha_3) in the cube [0, pi]^3. Writing
// x_i = alpha_i / pi, the cube splits along the planes
//   x1 + x2 + x3 = 1                 (Euclidean face, lower sphericity limit)
//   -x1 + x2 + x3 = 1, x1 - x2 + x3 = 1, x1 + x2 - x3 = 1
//                                    (upper sphericity limit faces)
// into the hyperbolic corner, the spherical tetrahedron with vertices
// (1,0,0), (0,1,0), (0,0,1), (1,1,1), and the region beyond its upper faces.
// All region tests are exact; only curvature_parameter uses floating point.

#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "sfc/arith.hpp"

namespace sfc {

struct BasePoint {
  std::array<PiRational, 3> alpha;

  BasePoint(PiRational a1, PiRational a2, PiRational a3) : alpha{a1, a2, a3} {
    for (const auto& a : alpha) {
      if (a.coeff() > Rational(1)) throw std::domain_error("base angle outside [0, pi]: " + a.to_string());
    }
  }

  /// alpha_i / pi
  const Rational& x(std::size_t i) const { return alpha[i].coeff(); }

  friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

enum class RegionClass { Hyperbolic, EuclideanFace, SphericalInterior, SphericalEdge, NoStructureFace, DegenerateBoundary };

inline std::string_view to_string(RegionClass c) {
  switch (c) {
    case RegionClass::Hyperbolic: return "Hyperbolic";
    case RegionClass::EuclideanFace: return "EuclideanFace";
    case RegionClass::SphericalInterior: return "SphericalInterior";
    case RegionClass::SphericalEdge: return "SphericalEdge";
    case RegionClass::NoStructureFace: return "NoStructureFace";
    case RegionClass::DegenerateBoundary: return "DegenerateBoundary";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, RegionClass c) { return os << to_string(c); }

inline bool admits_structure(RegionClass c) {
  return c != RegionClass::NoStructureFace && c != RegionClass::DegenerateBoundary;
}

namespace detail {

// On edge l_i: x_i = 1 and the other two coordinates equal and positive.
inline bool on_spherical_edge(const BasePoint& p) {
  const Rational one(1);
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational& u = p.x((i + 1) % 3);
    const Rational& v = p.x((i + 2) % 3);
    if (p.x(i) == one && u == v && u.sign() > 0) return true;
  }
  return false;
}

}  // namespace detail

inline RegionClass classify_triangle(const BasePoint& p) {
  const Rational one(1);
  const Rational sum = p.x(0) + p.x(1) + p.x(2);
  if (sum < one) return RegionClass::Hyperbolic;
  if (sum == one) {
    const bool all_positive = p.x(0).sign() > 0 && p.x(1).sign() > 0 && p.x(2).sign() > 0;
    return all_positive ? RegionClass::EuclideanFace : RegionClass::DegenerateBoundary;
  }
  if (detail::on_spherical_edge(p)) return RegionClass::SphericalEdge;
  // x_i < 1 on the open tetrahedron is implied by the three face inequalities
  const Rational t1 = sum - p.x(0) - p.x(0);
  const Rational t2 = sum - p.x(1) - p.x(1);
  const Rational t3 = sum - p.x(2) - p.x(2);
  if (t1 < one && t2 < one && t3 < one) return RegionClass::SphericalInterior;
  return RegionClass::NoStructureFace;
}

/// S = (cos a2 + cos(a1 + a3)) / (cos a2 + cos(a1 - a3)).
///
/// S < 0 on spherical points (sphere of radius 1/sqrt(-S)), S = 0 on the
/// Euclidean limit and 0 < S <= 1 on hyperbolic points (disc of radius
/// 1/sqrt(S)). The denominator vanishes exactly when a1 + a2 - a3 or
/// -a1 + a2 + a3 equals +-pi; where the numerator vanishes too and a3 = 0
/// or a1 = pi the limit value 1 is returned, elsewhere it throws.
inline double curvature_parameter(const BasePoint& p) {
  const Rational one(1);
  const Rational d_plus = p.x(1) + p.x(0) - p.x(2);
  const Rational d_minus = p.x(1) - p.x(0) + p.x(2);
  const bool denominator_zero = d_plus == one || d_plus == -one || d_minus == one || d_minus == -one;
  if (denominator_zero) {
    const Rational n_plus = p.x(1) + p.x(0) + p.x(2);
    const Rational n_minus = p.x(1) - p.x(0) - p.x(2);
    const bool numerator_zero = n_plus == one || n_plus == Rational(3) || n_minus == one || n_minus == -one;
    if (numerator_zero && (p.x(2).sign() == 0 || p.x(0) == one)) return 1.0;
    throw std::domain_error("curvature parameter undefined at (" + p.alpha[0].to_string() + ", " +
                            p.alpha[1].to_string() + ", " + p.alpha[2].to_string() + ")");
  }
  const double a1 = p.alpha[0].radians();
  const double a2 = p.alpha[1].radians();
  const double a3 = p.alpha[2].radians();
  return (std::cos(a2) + std::cos(a1 + a3)) / (std::cos(a2) + std::cos(a1 - a3));
}

struct BaseLimits {
  PiRational lower;
  PiRational upper;
};

/// Limits on alpha_3 for the family (O,0 | a1, a2, pi/alpha_3), 1 < a1 <= a2:
/// hyperbolic below lower, Euclidean at lower, spherical strictly between.
inline BaseLimits base_limits(Integer a1, Integer a2) {
  if (a1 <= 1) throw std::invalid_argument("base_limits: need a1 > 1");
  if (a1 > a2) throw std::invalid_argument("base_limits: need a1 <= a2");
  const Integer prod = detail::checked_mul(a1, a2);
  return {PiRational(Rational(prod - a2 - a1, prod)), PiRational(Rational(prod - a2 + a1, prod))};
}

}  // namespace sfc
