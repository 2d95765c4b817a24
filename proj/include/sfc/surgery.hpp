#pragma once

// Dehn surgery on torus knots and the (m, n) line model.
//
// p/q surgery on the left-handed K(r,s) gives
//   <-1; (s,b1), (r,b2), (|qrs + p|, eps q)>,   -rs + b1 r + b2 s = -1,
// and on the right-handed knot
//   <-1; (s,b1), (r,b2), (|-qrs + p|, eps q)>,  -rs + b1 r + b2 s = +1,
// eps being the sign of the bracketed quantity. The third fibre (m, n) is
// the core of the surgery. The manifold sits on the line through the origin
// and (m, n); the point with abscissa x on that line carries cone angle
// 2 pi m / x on the core.

#include <optional>
#include <string>
#include <vector>

#include "sfc/cone3d.hpp"

namespace sfc {

struct TorusKnot {
  Integer r;
  Integer s;
  Handedness hand;

  TorusKnot(Integer r_, Integer s_, Handedness h) : r(r_), s(s_), hand(h) {
    if (!(r > s && s > 1)) throw std::invalid_argument("torus knot needs r > s > 1");
    if (gcd(r, s) != 1) throw std::invalid_argument("torus knot needs gcd(r, s) = 1");
  }

  Integer rs() const { return detail::checked_mul(r, s); }
  /// Sign in front of qrs in the core multiplicity: +1 left-handed, -1 right-handed.
  Integer twist() const { return hand == Handedness::Left ? 1 : -1; }

  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;

  std::string to_string() const {
    return "K(" + std::to_string(r) + "," + std::to_string(s) + "," + std::string(sfc::to_string(hand)) + ")";
  }
};

/// p/q surgery with p >= 0, gcd(p, |q|) = 1; infinity is 1/0 and zero is 0/1.
struct SurgerySpec {
  TorusKnot knot;
  Integer p;
  Integer q;

  /// Accepts any coprime (p, q) != (0, 0) and flips signs so that p >= 0 (q = 1 when p = 0).
  static SurgerySpec make(const TorusKnot& knot, Integer p, Integer q) {
    if (p == 0 && q == 0) throw std::invalid_argument("surgery slope 0/0");
    if (gcd(p, q) != 1) throw std::invalid_argument("surgery slope " + std::to_string(p) + "/" + std::to_string(q) +
                                                    " is not in lowest terms");
    if (p < 0 || (p == 0 && q < 0)) {
      p = detail::checked_neg(p);
      q = detail::checked_neg(q);
    }
    return SurgerySpec{knot, p, q};
  }

  std::string slope() const { return std::to_string(p) + "/" + std::to_string(q); }

  friend bool operator==(const SurgerySpec&, const SurgerySpec&) = default;
};

struct LinePoint {
  Integer m;
  Integer n;

  friend bool operator==(const LinePoint&, const LinePoint&) = default;
};

namespace detail {

// qrs + p (left) or -qrs + p (right)
inline Integer signed_core_multiplicity(const SurgerySpec& spec) {
  return checked_add(checked_mul(checked_mul(spec.q, spec.knot.rs()), spec.knot.twist()), spec.p);
}

}  // namespace detail

class ExceptionalSlope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline LinePoint line_of_surgery(const SurgerySpec& spec) {
  const Integer m_signed = detail::signed_core_multiplicity(spec);
  if (m_signed == 0) {
    throw ExceptionalSlope("slope " + spec.slope() + " on " + spec.knot.to_string() +
                           " gives a reducible manifold (core multiplicity 0)");
  }
  const Integer eps = m_signed > 0 ? 1 : -1;
  return {detail::checked_abs(m_signed), eps * spec.q};
}

/// Inverse of line_of_surgery: p/q = (m - rs n)/n (left), (m + rs n)/n (right).
/// The point (1, 0) is surgery infinity.
inline SurgerySpec surgery_of_line(const TorusKnot& knot, const LinePoint& pt) {
  if (pt.m <= 0) throw std::invalid_argument("line point needs m > 0");
  if (gcd(pt.m, pt.n) != 1) throw std::invalid_argument("line point (m, n) must be primitive");
  const Integer p = detail::checked_sub(pt.m, detail::checked_mul(detail::checked_mul(knot.rs(), pt.n), knot.twist()));
  return SurgerySpec::make(knot, p, pt.n);
}

inline SeifertSignature surgery_signature(const SurgerySpec& spec) {
  const LinePoint core = line_of_surgery(spec);
  const FiberCoeffs c = fiber_coeffs(spec.knot.r, spec.knot.s, spec.knot.hand);
  return SeifertSignature{-1, {Fiber{spec.knot.s, c.b1}, Fiber{spec.knot.r, c.b2}, Fiber{core.m, core.n}}};
}

struct XLimits {
  Rational upper;  // x_U = rs / (rs - r + s)
  Rational lower;  // x_L = rs / (rs - r - s)

  friend bool operator==(const XLimits&, const XLimits&) = default;
};

inline XLimits x_limits(const TorusKnot& knot) {
  const Integer rs = knot.rs();
  return {Rational(rs, rs - knot.r + knot.s), Rational(rs, rs - knot.r - knot.s)};
}

/// Cone structure on the surgered manifold with angle beta on the core and
/// every other fibre non-singular.
inline ConeStructure surgery_cone(const SurgerySpec& spec, const PiRational& beta) {
  return ConeStructure::make(surgery_signature(spec), {PiRational::full_turn(), PiRational::full_turn(), beta});
}

inline GeometryResult classify_surgery_cone(const SurgerySpec& spec, const PiRational& beta) {
  return classify_cone(surgery_cone(spec, beta));
}

/// Same classification read off the line picture: x against x_U, x_L and
/// whether e vanishes. x is nullopt for beta = 0 (the point at infinity).
inline GeometryResult classify_by_abscissa(const TorusKnot& knot, std::optional<Rational> x, bool euler_zero) {
  if (!x) return geometry_for(Curvature::Negative, euler_zero);
  const XLimits lim = x_limits(knot);
  if (*x > lim.lower) return geometry_for(Curvature::Negative, euler_zero);
  if (*x == lim.lower) return geometry_for(Curvature::Zero, euler_zero);
  if (*x > lim.upper) return geometry_for(Curvature::Positive, euler_zero);
  return GeometryResult::none();
}

/// x = 2 pi m / beta, or nullopt for beta = 0.
inline std::optional<Rational> abscissa(const LinePoint& pt, const PiRational& beta) {
  if (beta.coeff().sign() == 0) return std::nullopt;
  return Rational(2 * pt.m) / beta.coeff();
}

struct OrbifoldAngle {
  Integer x;
  PiRational angle;  // 2 pi / x

  friend bool operator==(const OrbifoldAngle&, const OrbifoldAngle&) = default;
};

/// Integer abscissas strictly between x_U and x_L: the cone angles 2 pi / x
/// of spherical orbifolds with the core as singular set.
inline std::vector<OrbifoldAngle> spherical_orbifold_angles(const TorusKnot& knot) {
  const XLimits lim = x_limits(knot);
  std::vector<OrbifoldAngle> out;
  for (Integer x = lim.upper.floor() + 1; Rational(x) < lim.lower; ++x) {
    out.push_back({x, PiRational(Rational(2, x))});
  }
  return out;
}

/// Nil structures with the core singular exist iff x_L is an integer.
inline bool nil_admissible(const TorusKnot& knot) { return x_limits(knot).lower.is_integer(); }

struct BrieskornWitness {
  TorusKnot knot;
  Integer q;
};

/// For pairwise coprime a1 < a2 < a3, finds q with a3 = |q a1 a2 - 1|: the
/// Brieskorn sphere is then 1/q surgery on the right-handed K(a2, a1)
/// (equivalently -1/q surgery on the left-handed knot).
inline std::optional<BrieskornWitness> brieskorn_surgery(Integer a1, Integer a2, Integer a3) {
  if (!(1 < a1 && a1 < a2 && a2 < a3)) throw std::invalid_argument("brieskorn_surgery: need 1 < a1 < a2 < a3");
  if (gcd(a1, a2) != 1 || gcd(a1, a3) != 1 || gcd(a2, a3) != 1)
    throw std::invalid_argument("brieskorn_surgery: multiplicities must be pairwise coprime");
  const Integer prod = detail::checked_mul(a1, a2);
  std::optional<Integer> q;
  if ((1 + a3) % prod == 0) q = (1 + a3) / prod;
  else if ((1 - a3) % prod == 0) q = (1 - a3) / prod;
  if (!q) return std::nullopt;
  return BrieskornWitness{TorusKnot(a2, a1, Handedness::Right), *q};
}

struct AtlasRecord {
  TorusKnot knot;
  LinePoint point;
  Integer p;
  Integer q;
  Integer k;  // orbifold label; beta = 2 pi / k
  Integer x;  // k m
  PiRational beta;
  GeometryResult geometry;
};

struct IntRange {
  Integer lo;
  Integer hi;
};

/// One record per primitive (m, n) with 1 <= m <= m_max, n in range, and
/// per label 1 <= k <= k_max, ordered by (m, n, k).
inline std::vector<AtlasRecord> atlas(const TorusKnot& knot, Integer m_max, IntRange n_range, Integer k_max) {
  std::vector<AtlasRecord> out;
  for (Integer m = 1; m <= m_max; ++m) {
    for (Integer n = n_range.lo; n <= n_range.hi; ++n) {
      if (gcd(m, n) != 1) continue;
      const LinePoint pt{m, n};
      const SurgerySpec spec = surgery_of_line(knot, pt);
      for (Integer k = 1; k <= k_max; ++k) {
        const PiRational beta(Rational(2, k));
        out.push_back({knot, pt, spec.p, spec.q, k, detail::checked_mul(k, m), beta, classify_surgery_cone(spec, beta)});
      }
    }
  }
  return out;
}

}  // namespace sfc
