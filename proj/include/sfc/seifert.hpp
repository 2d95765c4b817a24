#pragma once

// Seifert fibred manifolds over S^2 with at most three exceptional fibres.
//
// A signature <b; (a1,b1), (a2,b2), (a3,b3)> always carries three fibre
// slots; general fibres occupy a slot as (1, k) in raw form and (1, 0) once
// normalized. Normalized form has 0 <= bi < ai and a1 >= a2 >= a3, ties
// broken by bi ascending.

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sfc/arith.hpp"

namespace sfc {

struct Fiber {
  Integer a = 1;  // multiplicity
  Integer b = 0;

  bool exceptional() const { return a > 1; }

  friend bool operator==(const Fiber&, const Fiber&) = default;
};

struct SeifertSignature {
  Integer b = 0;
  std::array<Fiber, 3> fibers{};

  friend bool operator==(const SeifertSignature&, const SeifertSignature&) = default;

  int exceptional_count() const {
    return static_cast<int>(std::count_if(fibers.begin(), fibers.end(), [](const Fiber& f) { return f.exceptional(); }));
  }

  std::string to_string() const {
    std::string out = "<" + std::to_string(b) + ";";
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      out += (i ? ",(" : "(") + std::to_string(fibers[i].a) + "," + std::to_string(fibers[i].b) + ")";
    }
    return out + ">";
  }

  friend std::ostream& operator<<(std::ostream& os, const SeifertSignature& s) { return os << s.to_string(); }
};

/// Throws std::invalid_argument unless every pair has a >= 1 and gcd(a, b) = 1.
inline void validate(const SeifertSignature& sig) {
  for (const auto& f : sig.fibers) {
    if (f.a < 1) throw std::invalid_argument("fibre multiplicity must be >= 1 in " + sig.to_string());
    if (gcd(f.a, f.b) != 1) throw std::invalid_argument("fibre pair is not coprime in " + sig.to_string());
  }
}

inline bool fiber_order(const Fiber& x, const Fiber& y) {
  if (x.a != y.a) return x.a > y.a;
  return x.b < y.b;
}

/// Normalized form and the slot each normalized fibre came from.
struct Normalization {
  SeifertSignature sig;
  std::array<std::size_t, 3> source{};  // sig.fibers[i] came from raw slot source[i]
};

inline Normalization normalize_tracked(const SeifertSignature& raw) {
  validate(raw);
  Normalization out;
  out.sig.b = raw.b;
  for (std::size_t i = 0; i < 3; ++i) {
    const Fiber& f = raw.fibers[i];
    // {b, (a, bi)} -> {b - r, (a, bi + r a)} with r = -floor(bi / a)
    const Integer shift = detail::floor_div(f.b, f.a);
    out.sig.b = detail::checked_add(out.sig.b, shift);
    out.sig.fibers[i] = {f.a, detail::checked_sub(f.b, detail::checked_mul(shift, f.a))};
  }
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return fiber_order(out.sig.fibers[i], out.sig.fibers[j]); });
  const auto fibers = out.sig.fibers;
  for (std::size_t i = 0; i < 3; ++i) {
    out.sig.fibers[i] = fibers[order[i]];
    out.source[i] = order[i];
  }
  return out;
}

inline SeifertSignature normalize(const SeifertSignature& raw) { return normalize_tracked(raw).sig; }

inline bool is_normalized(const SeifertSignature& sig) {
  for (const auto& f : sig.fibers) {
    if (f.a < 1 || f.b < 0 || f.b >= f.a || (f.a > 1 && gcd(f.a, f.b) != 1)) return false;
  }
  return !fiber_order(sig.fibers[1], sig.fibers[0]) && !fiber_order(sig.fibers[2], sig.fibers[1]);
}

/// e = -b - sum bi/ai.
inline Rational euler_number(const SeifertSignature& sig) {
  Rational e(-sig.b);
  for (const auto& f : sig.fibers) e -= Rational(f.b, f.a);
  return e;
}

/// Orbifold Euler characteristic of the base: 2 - sum over exceptional fibres of (1 - 1/ai).
inline Rational orbifold_euler_char(const SeifertSignature& sig) {
  Rational chi(2);
  for (const auto& f : sig.fibers) {
    if (f.exceptional()) chi -= Rational(1) - Rational(1, f.a);
  }
  return chi;
}

enum class GeometryType { Spherical, Nil, SL2R, S2xR, Euclidean, H2xR };

inline std::string_view to_string(GeometryType g) {
  switch (g) {
    case GeometryType::Spherical: return "Spherical";
    case GeometryType::Nil: return "Nil";
    case GeometryType::SL2R: return "SL2R";
    case GeometryType::S2xR: return "S2xR";
    case GeometryType::Euclidean: return "Euclidean";
    case GeometryType::H2xR: return "H2xR";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, GeometryType g) { return os << to_string(g); }

/// The three columns of the geometry table, indexed by the sign of chi.
enum class Curvature { Positive, Zero, Negative };

/// Row e != 0 gives Spherical/Nil/SL2R, row e = 0 gives S2xR/Euclidean/H2xR.
inline GeometryType geometry_for(Curvature column, bool euler_zero) {
  switch (column) {
    case Curvature::Positive: return euler_zero ? GeometryType::S2xR : GeometryType::Spherical;
    case Curvature::Zero: return euler_zero ? GeometryType::Euclidean : GeometryType::Nil;
    case Curvature::Negative: return euler_zero ? GeometryType::H2xR : GeometryType::SL2R;
  }
  return GeometryType::Spherical;
}

inline GeometryType manifold_geometry(const SeifertSignature& sig) {
  const int chi_sign = orbifold_euler_char(sig).sign();
  const Curvature column = chi_sign > 0 ? Curvature::Positive : chi_sign == 0 ? Curvature::Zero : Curvature::Negative;
  return geometry_for(column, euler_number(sig).sign() == 0);
}

/// |H1|, or nullopt when the first homology is infinite (e = 0).
using HomologyOrder = std::optional<Integer>;

inline HomologyOrder homology_order(const SeifertSignature& sig) {
  Rational order = euler_number(sig);
  if (order.sign() == 0) return std::nullopt;
  for (const auto& f : sig.fibers) order *= Rational(f.a);
  if (order.sign() < 0) order = -order;
  if (!order.is_integer()) throw std::logic_error("non-integral homology order for " + sig.to_string());
  return order.num();
}

struct LensParams {
  Integer m;
  Integer n;  // in [0, |m|)

  friend bool operator==(const LensParams&, const LensParams&) = default;
};

/// L(m, n) for a signature with at most two exceptional fibres and e != 0.
///
/// The exceptional fibres are taken in ascending multiplicity (a1 <= a2):
/// m = b a1 a2 + a1 b2 + a2 b1 and n = rho a2 + sigma b2 (mod m), where
/// -rho a1 + sigma (b a1 + b1) = 1.
inline LensParams lens_params(const SeifertSignature& raw) {
  const SeifertSignature sig = normalize(raw);
  if (sig.exceptional_count() > 2) throw std::invalid_argument("lens_params: three exceptional fibres in " + sig.to_string());
  // Normalized order is descending; slot 2 is a general fibre (1, 0).
  const Fiber f1 = sig.fibers[1];
  const Fiber f2 = sig.fibers[0];
  using detail::checked_add;
  using detail::checked_mul;
  const Integer m = checked_add(checked_add(checked_mul(checked_mul(sig.b, f1.a), f2.a), checked_mul(f1.a, f2.b)),
                                checked_mul(f2.a, f1.b));
  if (m == 0) throw std::domain_error("lens_params: Euler number vanishes for " + sig.to_string());
  const Integer c = checked_add(checked_mul(sig.b, f1.a), f1.b);
  // gcd(a1, c) = 1 since gcd(a1, b1) = 1.
  const auto [g, x, y] = bezout(-f1.a, c);
  if (g != 1) throw std::logic_error("lens_params: non-coprime fibre data");
  const Integer n = checked_add(checked_mul(x, f2.a), checked_mul(y, f2.b));
  return {m, detail::floor_mod(n, m)};
}

namespace family {
struct Lens { Integer m, n; };
struct Prism { Integer n, m; };
struct T { Integer m; };
struct O { Integer m; };
struct I { Integer m; };
struct N333 { Integer m, n; };
struct N244 { Integer m, n; };
struct N236 { Integer m, n; };
struct Brieskorn { Integer a1, a2, a3; };
struct Generic {};
}  // namespace family

using FamilyId = std::variant<family::Lens, family::Prism, family::T, family::O, family::I, family::N333, family::N244,
                              family::N236, family::Brieskorn, family::Generic>;

inline std::string to_string(const FamilyId& id) {
  auto s = [](Integer v) { return std::to_string(v); };
  return std::visit(
      [&](const auto& f) -> std::string {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, family::Lens>) return "Lens(" + s(f.m) + "," + s(f.n) + ")";
        else if constexpr (std::is_same_v<F, family::Prism>) return "Prism(" + s(f.n) + "," + s(f.m) + ")";
        else if constexpr (std::is_same_v<F, family::T>) return "T(" + s(f.m) + ")";
        else if constexpr (std::is_same_v<F, family::O>) return "O(" + s(f.m) + ")";
        else if constexpr (std::is_same_v<F, family::I>) return "I(" + s(f.m) + ")";
        else if constexpr (std::is_same_v<F, family::N333>) return "N333(" + s(f.m) + "," + s(f.n) + ")";
        else if constexpr (std::is_same_v<F, family::N244>) return "N244(" + s(f.m) + "," + s(f.n) + ")";
        else if constexpr (std::is_same_v<F, family::N236>) return "N236(" + s(f.m) + "," + s(f.n) + ")";
        else if constexpr (std::is_same_v<F, family::Brieskorn>)
          return "Brieskorn(" + s(f.a1) + "," + s(f.a2) + "," + s(f.a3) + ")";
        else return "Generic";
      },
      id);
}

namespace detail {

// Fibres of a normalized signature in ascending multiplicity.
inline std::array<Fiber, 3> ascending(const SeifertSignature& sig) {
  return {sig.fibers[2], sig.fibers[1], sig.fibers[0]};
}

inline bool multiplicities_are(const std::array<Fiber, 3>& f, Integer x, Integer y, Integer z) {
  return f[0].a == x && f[1].a == y && f[2].a == z;
}

}  // namespace detail

/// Every named family the manifold belongs to, most specific first.
///
/// Brieskorn homology spheres come first; the spherical (Prism, T, O, I), the
/// flat-base (N333, N244, N236) and the lens families follow. Generic is
/// returned alone when nothing matches.
inline std::vector<FamilyId> all_families(const SeifertSignature& raw) {
  const SeifertSignature sig = normalize(raw);
  const auto f = detail::ascending(sig);
  const Integer b = sig.b;
  std::vector<FamilyId> out;
  using detail::multiplicities_are;

  if (sig.exceptional_count() == 3) {
    const bool coprime = gcd(f[0].a, f[1].a) == 1 && gcd(f[0].a, f[2].a) == 1 && gcd(f[1].a, f[2].a) == 1;
    const HomologyOrder h = homology_order(sig);
    if (coprime && h && *h == 1) out.push_back(family::Brieskorn{f[0].a, f[1].a, f[2].a});

    if (f[0].a == 2 && f[1].a == 2) {
      const Integer n = f[2].a;
      out.push_back(family::Prism{n, (b + 1) * n + f[2].b});
    } else if (multiplicities_are(f, 2, 3, 3)) {
      out.push_back(family::T{6 * b + 3 + 2 * (f[1].b + f[2].b)});
    } else if (multiplicities_are(f, 2, 3, 4)) {
      out.push_back(family::O{12 * b + 6 + 4 * f[1].b + 3 * f[2].b});
    } else if (multiplicities_are(f, 2, 3, 5)) {
      out.push_back(family::I{30 * b + 15 + 10 * f[1].b + 6 * f[2].b});
    } else if (multiplicities_are(f, 3, 3, 3)) {
      out.push_back(family::N333{3 * b + f[0].b + f[1].b + f[2].b, std::min({f[0].b, f[1].b, f[2].b})});
    } else if (multiplicities_are(f, 2, 4, 4)) {
      out.push_back(family::N244{4 * b + 2 + f[1].b + f[2].b, std::min(f[1].b, f[2].b)});
    } else if (multiplicities_are(f, 2, 3, 6)) {
      out.push_back(family::N236{6 * b + 3 + 2 * f[1].b + f[2].b, std::min(f[1].b, f[2].b)});
    }
  } else if (euler_number(sig).sign() != 0) {
    const LensParams lp = lens_params(sig);
    out.push_back(family::Lens{lp.m, lp.n});
  }
  if (out.empty()) out.push_back(family::Generic{});
  return out;
}

inline FamilyId identify_family(const SeifertSignature& sig) { return all_families(sig).front(); }

/// Rebuilds the normalized signature named by a Prism/T/O/I/N family tag.
/// Returns nullopt for tags that do not pin down a signature (Lens, Brieskorn, Generic)
/// or for parameters that violate the family congruence.
inline std::optional<SeifertSignature> signature_of(const FamilyId& id) {
  auto build = [](Integer b, Fiber f1, Fiber f2, Fiber f3) {
    SeifertSignature s{b, {f1, f2, f3}};
    return normalize(s);
  };
  return std::visit(
      [&](const auto& f) -> std::optional<SeifertSignature> {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, family::Prism>) {
          if (f.n < 2) return std::nullopt;
          // m = (b + 1) n + b3 with 0 < b3 < n
          const Integer b3 = detail::floor_mod(f.m, f.n);
          if (gcd(f.n, b3) != 1) return std::nullopt;
          return build((f.m - b3) / f.n - 1, {2, 1}, {2, 1}, {f.n, b3});
        } else if constexpr (std::is_same_v<F, family::T>) {
          for (Integer b2 = 1; b2 <= 2; ++b2)
            for (Integer b3 = b2; b3 <= 2; ++b3) {
              const Integer rest = f.m - 3 - 2 * (b2 + b3);
              if (rest % 6 == 0) return build(rest / 6, {2, 1}, {3, b2}, {3, b3});
            }
          return std::nullopt;
        } else if constexpr (std::is_same_v<F, family::O>) {
          for (Integer b2 = 1; b2 <= 2; ++b2)
            for (Integer b3 : {1, 3}) {
              const Integer rest = f.m - 6 - 4 * b2 - 3 * b3;
              if (rest % 12 == 0) return build(rest / 12, {2, 1}, {3, b2}, {4, b3});
            }
          return std::nullopt;
        } else if constexpr (std::is_same_v<F, family::I>) {
          for (Integer b2 = 1; b2 <= 2; ++b2)
            for (Integer b3 = 1; b3 <= 4; ++b3) {
              const Integer rest = f.m - 15 - 10 * b2 - 6 * b3;
              if (rest % 30 == 0) return build(rest / 30, {2, 1}, {3, b2}, {5, b3});
            }
          return std::nullopt;
        } else if constexpr (std::is_same_v<F, family::N333>) {
          for (Integer x = 1; x <= 2; ++x)
            for (Integer y = x; y <= 2; ++y)
              for (Integer z = y; z <= 2; ++z) {
                const Integer rest = f.m - x - y - z;
                if (x == f.n && rest % 3 == 0) return build(rest / 3, {3, x}, {3, y}, {3, z});
              }
          return std::nullopt;
        } else if constexpr (std::is_same_v<F, family::N244>) {
          for (Integer x : {1, 3})
            for (Integer y : {1, 3}) {
              if (y < x || x != f.n) continue;
              const Integer rest = f.m - 2 - x - y;
              if (rest % 4 == 0) return build(rest / 4, {2, 1}, {4, x}, {4, y});
            }
          return std::nullopt;
        } else if constexpr (std::is_same_v<F, family::N236>) {
          for (Integer b2 = 1; b2 <= 2; ++b2)
            for (Integer b3 : {1, 5}) {
              if (std::min(b2, b3) != f.n) continue;
              const Integer rest = f.m - 3 - 2 * b2 - b3;
              if (rest % 6 == 0) return build(rest / 6, {2, 1}, {3, b2}, {6, b3});
            }
          return std::nullopt;
        } else {
          return std::nullopt;
        }
      },
      id);
}

}  // namespace sfc
