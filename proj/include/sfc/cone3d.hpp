#pragma once

// Geometric Seifert conemanifold structures (M, beta_1, beta_2, beta_3).
//
// The cone angle beta_i around the (a_i, b_i)-fibre and the base angle
// alpha_i are tied by beta_i = 2 a_i alpha_i, so a cone structure is
// classified by the region of its base point together with the sign of e.
// beta_i = 2 pi means the fibre is not singular.

#include <algorithm>
#include <array>
#include <bitset>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "sfc/base2d.hpp"
#include "sfc/seifert.hpp"

namespace sfc {

/// Either a Thurston geometry or the statement that no compatible structure exists.
class GeometryResult {
 public:
  GeometryResult() = default;
  GeometryResult(GeometryType g) : geometry_(g) {}  // NOLINT(google-explicit-constructor)
  static GeometryResult none() { return GeometryResult(); }

  bool has_structure() const { return geometry_.has_value(); }
  GeometryType geometry() const { return geometry_.value(); }

  std::string_view name() const { return geometry_ ? to_string(*geometry_) : std::string_view("NoStructure"); }

  friend bool operator==(const GeometryResult&, const GeometryResult&) = default;
  friend std::ostream& operator<<(std::ostream& os, const GeometryResult& g) { return os << g.name(); }

 private:
  std::optional<GeometryType> geometry_;
};

inline GeometryResult geometry_of_region(RegionClass region, bool euler_zero) {
  switch (region) {
    case RegionClass::Hyperbolic: return geometry_for(Curvature::Negative, euler_zero);
    case RegionClass::EuclideanFace: return geometry_for(Curvature::Zero, euler_zero);
    case RegionClass::SphericalInterior:
    case RegionClass::SphericalEdge: return geometry_for(Curvature::Positive, euler_zero);
    case RegionClass::NoStructureFace:
    case RegionClass::DegenerateBoundary: return GeometryResult::none();
  }
  return GeometryResult::none();
}

class ConeStructure {
 public:
  /// Normalizes the signature and carries each angle along with its fibre.
  static ConeStructure make(const SeifertSignature& raw, const std::array<PiRational, 3>& angles) {
    const Normalization norm = normalize_tracked(raw);
    std::array<PiRational, 3> beta;
    for (std::size_t i = 0; i < 3; ++i) beta[i] = angles[norm.source[i]];
    return ConeStructure(norm.sig, beta);
  }

  /// The non-singular structure: every angle 2 pi.
  static ConeStructure manifold(const SeifertSignature& raw) {
    return make(raw, {PiRational::full_turn(), PiRational::full_turn(), PiRational::full_turn()});
  }

  const SeifertSignature& signature() const { return sig_; }
  const std::array<PiRational, 3>& angles() const { return beta_; }

  bool singular(std::size_t i) const { return beta_[i] != PiRational::full_turn(); }

  /// alpha_i = beta_i / (2 a_i)
  BasePoint base_point() const {
    auto alpha = [&](std::size_t i) { return PiRational(beta_[i].coeff() / Rational(2 * sig_.fibers[i].a)); };
    return BasePoint(alpha(0), alpha(1), alpha(2));
  }

 private:
  ConeStructure(const SeifertSignature& sig, const std::array<PiRational, 3>& beta) : sig_(sig), beta_(beta) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Rational limit(2 * sig_.fibers[i].a);
      if (beta_[i].coeff() > limit)
        throw std::domain_error("cone angle " + beta_[i].to_string() + " exceeds 2 pi a = " + limit.to_string() + "pi");
    }
  }

  SeifertSignature sig_;
  std::array<PiRational, 3> beta_;
};

inline GeometryResult classify_cone(const ConeStructure& cs) {
  const RegionClass region = classify_triangle(cs.base_point());
  return geometry_of_region(region, euler_number(cs.signature()).sign() == 0);
}

struct SphericityInterval {
  PiRational lower;  // beta_L: Nil/Euclidean angle, hyperbolic-side limit
  PiRational upper;  // beta_U

  friend bool operator==(const SphericityInterval&, const SphericityInterval&) = default;
};

namespace detail {

inline std::pair<Integer, Integer> sorted_pair(Integer a1, Integer a2) {
  return a1 <= a2 ? std::pair{a1, a2} : std::pair{a2, a1};
}

}  // namespace detail

/// Limits of sphericity for the cone angle on a single singular fibre of
/// multiplicity `singular`, the other two fibres (multiplicities a1, a2, in
/// any order) being non-singular:
///   beta_L = 2 pi a3 (a1 a2 - a1 - a2) / (a1 a2)
///   beta_U = 2 pi a3 (a1 a2 - a2 + a1) / (a1 a2),   1 < a1 <= a2.
inline SphericityInterval sphericity_limits(Integer a1, Integer a2, Integer singular) {
  const auto [lo, hi] = detail::sorted_pair(a1, a2);
  if (singular < 1) throw std::invalid_argument("sphericity_limits: singular multiplicity must be >= 1");
  if (lo <= 1) throw std::invalid_argument("sphericity_limits: both non-singular fibres must be exceptional");
  const BaseLimits base = base_limits(lo, hi);
  const Rational scale(2 * singular);
  return {PiRational(base.lower.coeff() * scale), PiRational(base.upper.coeff() * scale)};
}

/// beta_U / beta_L = (a1 a2 - a2 + a1) / (a1 a2 - a2 - a1); independent of the singular fibre.
inline Rational sphericity_ratio(Integer a1, Integer a2) {
  const auto [lo, hi] = detail::sorted_pair(a1, a2);
  if (lo <= 1) throw std::invalid_argument("sphericity_ratio: need 1 < a1 <= a2");
  const Integer prod = detail::checked_mul(lo, hi);
  if (prod - lo - hi == 0) throw std::domain_error("sphericity_ratio: lower limit is zero");
  return Rational(prod - hi + lo, prod - hi - lo);
}

/// Geometry of the non-singular manifold read off from where 2 pi sits
/// relative to the sphericity interval of one fibre:
/// beta_L > 2 pi: SL2R / H2xR; beta_L = 2 pi: Nil / Euclidean;
/// beta_L < 2 pi < beta_U: Spherical / S2xR.
/// When 2 pi >= beta_U the base point lies on or beyond an upper face; only
/// the edge case a1 = a2 with a general singular fibre keeps a structure.
inline GeometryResult manifold_geometry_from_limits(Integer a1, Integer a2, Integer singular, bool euler_zero) {
  const SphericityInterval lim = sphericity_limits(a1, a2, singular);
  const PiRational full = PiRational::full_turn();
  if (full < lim.lower) return geometry_for(Curvature::Negative, euler_zero);
  if (full == lim.lower) return geometry_for(Curvature::Zero, euler_zero);
  if (full < lim.upper) return geometry_for(Curvature::Positive, euler_zero);
  if (full == lim.upper && a1 == a2 && singular == 1) return geometry_for(Curvature::Positive, euler_zero);
  return GeometryResult::none();
}

/// Size of the continuous family of structures with a prescribed singular set.
struct FamilyDim {
  int k;
  friend bool operator==(const FamilyDim&, const FamilyDim&) = default;
};
struct OrbifoldOnly {
  friend bool operator==(const OrbifoldOnly&, const OrbifoldOnly&) = default;
};
struct NoFamily {
  friend bool operator==(const NoFamily&, const NoFamily&) = default;
};
using FamilyDimension = std::variant<FamilyDim, OrbifoldOnly, NoFamily>;

inline std::string to_string(const FamilyDimension& d) {
  if (const auto* dim = std::get_if<FamilyDim>(&d)) return "Dim(" + std::to_string(dim->k) + ")";
  if (std::holds_alternative<OrbifoldOnly>(d)) return "OrbifoldOnly";
  return "None";
}

/// Singular set as a mask over the fibre slots of a normalized signature.
using FiberSet = std::bitset<3>;

/// Dimension of the family of geometric cone structures whose singular set
/// is exactly `singular` (slots of the normalized signature).
///
/// Non-singular slots pin x_j = 1/a_j; singular slots range over [0, 1]
/// minus the value 1/a_i. The constraint subspace meets the open hyperbolic
/// region iff the pinned coordinates sum below 1, and the open spherical
/// tetrahedron iff every pinned coordinate is below 1 (a_j > 1). A pinned
/// general fibre forces x_j = 1, a face of the cube, where only the edges
/// x_j = 1, x_u = x_v > 0 carry structures:
///  - two free coordinates on such a face give the one-parameter edge family;
///  - one free coordinate in the interior of a face meets the edge in an
///    isolated point (OrbifoldOnly, unless that point is the non-singular one);
///  - a free coordinate along a cube edge gives nothing.
inline FamilyDimension family_dimension(const SeifertSignature& sig, FiberSet singular) {
  if (!is_normalized(sig)) throw std::invalid_argument("family_dimension: signature must be normalized");
  const int k = static_cast<int>(singular.count());
  if (k == 0) {
    return classify_cone(ConeStructure::manifold(sig)).has_structure() ? FamilyDimension{FamilyDim{0}}
                                                                         : FamilyDimension{NoFamily{}};
  }
  Rational pinned_sum(0);
  bool pinned_on_face = false;
  std::array<Rational, 3> pinned{};
  for (std::size_t j = 0; j < 3; ++j) {
    if (singular[j]) continue;
    pinned[j] = Rational(1, sig.fibers[j].a);
    pinned_sum += pinned[j];
    pinned_on_face = pinned_on_face || sig.fibers[j].a == 1;
  }
  const bool hyperbolic_reachable = pinned_sum < Rational(1);
  const bool spherical_reachable = !pinned_on_face;
  if (hyperbolic_reachable || spherical_reachable) return FamilyDim{k};

  if (k == 2) return FamilyDim{1};

  // k == 1: one free coordinate i, pinned j (on the face x_j = 1) and l.
  std::size_t i = 0;
  while (!singular[i]) ++i;
  const std::size_t j = sig.fibers[(i + 1) % 3].a == 1 ? (i + 1) % 3 : (i + 2) % 3;
  const std::size_t l = 3 - i - j;
  if (pinned[l] == Rational(1)) return NoFamily{};
  // The only structure on the line is the edge point x_i = x_l.
  if (pinned[l] == Rational(1, sig.fibers[i].a)) return NoFamily{};
  return OrbifoldOnly{};
}

}  // namespace sfc
