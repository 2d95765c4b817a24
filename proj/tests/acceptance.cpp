// Acceptance checks. One PASS/FAIL line per criterion; indented lines are detail.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "sfc/plot.hpp"

using namespace sfc;

namespace {

struct Report {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void fail(const std::string& what) { failures.push_back(what); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string str(const PiRational& b) { return b.to_string(); }

PiRational pi(Integer n, Integer d = 1) { return PiRational(Rational(n, d)); }

Curvature column_of(GeometryType g) {
  switch (g) {
    case GeometryType::Spherical:
    case GeometryType::S2xR: return Curvature::Positive;
    case GeometryType::Nil:
    case GeometryType::Euclidean: return Curvature::Zero;
    case GeometryType::SL2R:
    case GeometryType::H2xR: return Curvature::Negative;
  }
  return Curvature::Negative;
}

bool is(const GeometryResult& g, Curvature c) { return g.has_structure() && column_of(g.geometry()) == c; }

// ---- 1 --------------------------------------------------------------------

struct Sweep {
  PiRational lower, upper;
  std::vector<std::string> problems;
};

// Walks the cone angle on fibre slot 2 of `raw` over multiples of pi/grid and
// reads the limits off classify_cone alone.
Sweep sweep_limits(const SeifertSignature& raw) {
  constexpr Integer grid = 5040;
  const Integer a = raw.fibers[2].a;
  const Integer steps = 2 * a * grid;
  const PiRational full = PiRational::full_turn();
  auto at = [&](Integer k) { return classify_cone(ConeStructure::make(raw, {full, full, pi(k, grid)})); };

  Sweep out{pi(0), pi(0), {}};
  Integer k = 0;
  // negative-curvature run, possibly empty; k = 0 may carry no structure
  if (!at(0).has_structure()) k = 1;
  while (k <= steps && is(at(k), Curvature::Negative)) ++k;
  Integer first_spherical;
  if (k <= steps && is(at(k), Curvature::Zero)) {
    out.lower = pi(k, grid);
    first_spherical = k + 1;
  } else {
    out.lower = pi(k - 1, grid);  // infimum of the spherical run
    first_spherical = k;
  }
  k = first_spherical;
  if (k > steps || !is(at(k), Curvature::Positive)) out.problems.push_back("no spherical run");
  while (k <= steps && is(at(k), Curvature::Positive)) ++k;
  out.upper = k > steps ? pi(steps, grid) : pi(k, grid);
  for (Integer j = k; j <= steps; ++j) {
    if (at(j).has_structure()) {
      out.problems.push_back("structure above the spherical run at " + str(pi(j, grid)));
      break;
    }
  }
  return out;
}

SeifertSignature sig3(Integer b, Fiber f1, Fiber f2, Fiber f3) { return SeifertSignature{b, {f1, f2, f3}}; }

void check_limits(Report& rep, const std::string& label, const SeifertSignature& raw, PiRational lo, PiRational hi) {
  const SphericityInterval lim = sphericity_limits(raw.fibers[0].a, raw.fibers[1].a, raw.fibers[2].a);
  rep.expect(lim.lower == lo && lim.upper == hi, label + ": formula gives (" + str(lim.lower) + ", " + str(lim.upper) +
                                                     "), table (" + str(lo) + ", " + str(hi) + ")");
  const Sweep s = sweep_limits(raw);
  rep.expect(s.lower == lim.lower && s.upper == lim.upper,
             label + ": sweep gives (" + str(s.lower) + ", " + str(s.upper) + ")");
  for (const auto& p : s.problems) rep.fail(label + ": " + p);
}

Report criterion_sphericity_tables() {
  Report rep;
  const Fiber f21{2, 1}, f31{3, 1}, f41{4, 1}, f51{5, 1}, f61{6, 1};
  for (Integer n = 2; n <= 10; ++n) {
    check_limits(rep, "prism n=" + std::to_string(n), sig3(-1, f21, f21, Fiber{n, 1}), pi(0), pi(2 * n));
  }
  check_limits(rep, "T (3,1)", sig3(-1, f21, f31, f31), pi(1), pi(5));
  check_limits(rep, "O (4,1)", sig3(-1, f21, f31, f41), pi(4, 3), pi(20, 3));
  check_limits(rep, "O (2,1)", sig3(-1, f31, f41, f21), pi(5, 3), pi(11, 3));
  check_limits(rep, "I (5,1)", sig3(-1, f21, f31, f51), pi(5, 3), pi(25, 3));
  check_limits(rep, "I (3,1)", sig3(-1, f21, f51, f31), pi(9, 5), pi(21, 5));
  check_limits(rep, "I (2,1)", sig3(-1, f31, f51, f21), pi(28, 15), pi(52, 15));

  // every singular fibre of the flat-base families sits at 2 pi
  const std::vector<std::pair<std::string, SeifertSignature>> flat = {
      {"N333 (3,1)", sig3(-1, f31, f31, f31)}, {"N244 (2,1)", sig3(-1, f41, f41, f21)},
      {"N244 (4,1)", sig3(-1, f21, f41, f41)}, {"N236 (2,1)", sig3(-1, f31, f61, f21)},
      {"N236 (3,1)", sig3(-1, f21, f61, f31)}, {"N236 (6,1)", sig3(-1, f21, f31, f61)}};
  for (const auto& [label, raw] : flat) {
    const SphericityInterval lim = sphericity_limits(raw.fibers[0].a, raw.fibers[1].a, raw.fibers[2].a);
    rep.expect(lim.lower == PiRational::full_turn(), label + ": beta_L = " + str(lim.lower));
    const Sweep s = sweep_limits(raw);
    rep.expect(s.lower == PiRational::full_turn(), label + ": sweep beta_L = " + str(s.lower));
    rep.expect(s.upper == lim.upper, label + ": sweep beta_U = " + str(s.upper));
  }

  // printed values that disagree with the closed form; the closed form is asserted
  struct Erratum {
    std::string label;
    SeifertSignature raw;
    bool upper;
    PiRational printed, formula;
  };
  const std::vector<Erratum> errata = {
      {"T(m) (2,1)-fibre lower", sig3(-1, f31, f31, f21), false, pi(8, 3), pi(4, 3)},
      {"O(m) (3,b2)-fibre upper", sig3(-1, f21, f41, f31), true, pi(3), pi(9, 2)},
      {"N333 upper", sig3(-1, f31, f31, f31), true, pi(4), pi(6)},
      {"N244 (4,b)-fibre upper", sig3(-1, f21, f41, f41), true, pi(3), pi(6)},
      {"N236 (2,1)-fibre upper", sig3(-1, f31, f61, f21), true, pi(8, 3), pi(10, 3)},
  };
  for (const auto& e : errata) {
    const SphericityInterval lim = sphericity_limits(e.raw.fibers[0].a, e.raw.fibers[1].a, e.raw.fibers[2].a);
    const Sweep s = sweep_limits(e.raw);
    const PiRational got = e.upper ? lim.upper : lim.lower;
    const PiRational swept = e.upper ? s.upper : s.lower;
    rep.expect(got == e.formula, e.label + ": formula " + str(got) + ", expected " + str(e.formula));
    rep.expect(swept == e.formula, e.label + ": sweep " + str(swept) + ", expected " + str(e.formula));
    rep.note("discrepancy " + e.label + ": printed " + str(e.printed) + ", formula " + str(got) + ", sweep " +
             str(swept));
  }
  return rep;
}

// ---- 2 --------------------------------------------------------------------

Report criterion_ratios() {
  Report rep;
  const std::vector<std::tuple<Integer, Integer, Rational>> cases = {
      {2, 3, Rational(5)}, {3, 4, Rational(11, 5)}, {2, 5, Rational(7, 3)}, {3, 5, Rational(13, 7)}, {4, 5, Rational(19, 11)}};
  for (const auto& [a1, a2, want] : cases) {
    const std::string label = "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
    rep.expect(sphericity_ratio(a1, a2) == want, label + ": ratio " + sphericity_ratio(a1, a2).to_string());
    for (Integer a3 = 1; a3 <= 50; ++a3) {
      const SphericityInterval lim = sphericity_limits(a1, a2, a3);
      const Rational r = lim.upper.coeff() / lim.lower.coeff();
      if (r != want) rep.fail(label + " a3=" + std::to_string(a3) + ": beta_U/beta_L = " + r.to_string());
    }
  }
  return rep;
}

// ---- 3 --------------------------------------------------------------------

GeometryResult classify_slope(const TorusKnot& k, Integer p, Integer q, const PiRational& beta) {
  return classify_surgery_cone(SurgerySpec::make(k, p, q), beta);
}

Report criterion_trefoil() {
  Report rep;
  const TorusKnot left(3, 2, Handedness::Left), right(3, 2, Handedness::Right);

  std::vector<Integer> labels;
  for (const auto& o : spherical_orbifold_angles(left)) labels.push_back(o.x);
  rep.expect(labels == std::vector<Integer>{2, 3, 4, 5}, "orbifold labels differ from {2,3,4,5}");
  // same set straight from the classifier, over lines m = 1
  for (Integer x = 1; x <= 30; ++x) {
    for (Integer n = -3; n <= 3; ++n) {
      const bool sph = is(classify_surgery_cone(surgery_of_line(left, {1, n}), pi(2, x)), Curvature::Positive);
      const bool want = x >= 2 && x <= 5;
      if (sph != want) rep.fail("label " + std::to_string(x) + " on line (1," + std::to_string(n) + ")");
    }
  }

  auto family = [&](const TorusKnot& k, Integer c, Integer sign, Integer label) {
    int checked = 0;
    for (Integer y = -60; y <= 60; ++y) {
      if (y == 0 || gcd(c, y) != 1) continue;
      const Integer p = c + sign * 6 * y;
      const GeometryResult g = classify_slope(k, p, y, pi(2, label));
      const GeometryType want = p == 0 ? GeometryType::Euclidean : GeometryType::Nil;
      if (g != GeometryResult(want)) {
        rep.fail(k.to_string() + " slope " + std::to_string(p) + "/" + std::to_string(y) + " angle 2pi/" +
                 std::to_string(label) + ": " + std::string(g.name()));
      }
      ++checked;
    }
    return checked;
  };
  const int n1 = family(left, 2, -1, 3) + family(left, 3, -1, 2);
  const int n2 = family(right, 2, 1, 3) + family(right, 3, 1, 2);
  rep.note("trefoil Nil orbifold slopes checked: " + std::to_string(n1) + " left, " + std::to_string(n2) + " right");

  for (Integer y : {1, 5, 7, 11}) {
    for (const auto& [k, sign] : {std::pair{left, Integer{-1}}, std::pair{right, Integer{1}}}) {
      const Integer p = 6 + sign * 6 * y;
      const GeometryResult g = classify_slope(k, p, y, PiRational::full_turn());
      // 0-surgery has e = 0: the flat member of the Nil/Euclidean pair
      const GeometryType want = p == 0 ? GeometryType::Euclidean : GeometryType::Nil;
      rep.expect(g == GeometryResult(want), k.to_string() + " manifold slope " + std::to_string(p) + "/" +
                                                 std::to_string(y) + ": " + std::string(g.name()));
      rep.expect(manifold_geometry(surgery_signature(SurgerySpec::make(k, p, y))) == want,
                 k.to_string() + " table geometry at y=" + std::to_string(y));
    }
  }
  rep.note("y = 1 is 0-surgery (e = 0), Euclidean; y = 5, 7, 11 are Nil");

  std::vector<Integer> nil_x;
  for (Integer x = 1; x <= 200; ++x) {
    if (is(classify_by_abscissa(left, Rational(x), false), Curvature::Zero)) nil_x.push_back(x);
    const bool flat = is(classify_surgery_cone(surgery_of_line(left, {1, 1}), pi(2, x)), Curvature::Zero);
    rep.expect(flat == (x == 6), "classifier at x=" + std::to_string(x));
  }
  rep.expect(nil_x == std::vector<Integer>{6}, "integer Nil abscissas differ from {6}");
  return rep;
}

// ---- 4 --------------------------------------------------------------------

Report criterion_admissibility() {
  Report rep;
  std::set<std::pair<Integer, Integer>> spherical, nil, small_xl;
  int knots = 0;
  for (Integer r = 3; r <= 100; ++r) {
    for (Integer s = 2; s < r; ++s) {
      if (gcd(r, s) != 1) continue;
      ++knots;
      const TorusKnot k(r, s, Handedness::Left);
      const XLimits lim = x_limits(k);
      // classify orbifold labels directly on the line m = 1
      bool sph = false, flat = false;
      for (Integer x = 2; Rational(x) <= lim.lower + Rational(1); ++x) {
        const GeometryResult g = classify_surgery_cone(surgery_of_line(k, {1, 1}), pi(2, x));
        sph = sph || is(g, Curvature::Positive);
        flat = flat || is(g, Curvature::Zero);
      }
      if (sph) spherical.insert({r, s});
      if (flat) nil.insert({r, s});
      rep.expect(sph == !spherical_orbifold_angles(k).empty(), k.to_string() + ": orbifold angles disagree");
      rep.expect(flat == nil_admissible(k), k.to_string() + ": nil_admissible disagrees");
      const bool below_two = lim.lower < Rational(2);
      const bool rule = (r - 2) * (s - 2) > 4 || (r == 5 && s == 4);
      rep.expect(below_two == rule, k.to_string() + ": x_L = " + lim.lower.to_string());
      if (below_two) small_xl.insert({r, s});
    }
  }
  std::set<std::pair<Integer, Integer>> want_sph = {{4, 3}, {5, 3}};
  for (Integer r = 3; r <= 100; r += 2) want_sph.insert({r, 2});
  rep.expect(spherical == want_sph, "spherical-orbifold-admissible set differs");
  rep.expect(nil == std::set<std::pair<Integer, Integer>>{{3, 2}}, "Nil-admissible set differs");
  rep.note(std::to_string(knots) + " knots, " + std::to_string(spherical.size()) + " spherical-admissible, " +
           std::to_string(small_xl.size()) + " with x_L < 2");
  return rep;
}

// ---- 5 --------------------------------------------------------------------

Report criterion_surgery_identities() {
  Report rep;
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<Integer> pd(-400, 400), qd(-60, 60);
  int total = 0;
  for (Integer r = 3; r <= 12; ++r) {
    for (Integer s = 2; s < r; ++s) {
      if (gcd(r, s) != 1) continue;
      for (Handedness h : {Handedness::Left, Handedness::Right}) {
        const TorusKnot k(r, s, h);
        const Integer rs = r * s;
        int done = 0;
        auto check = [&](Integer p, Integer q) {
          const SurgerySpec spec = SurgerySpec::make(k, p, q);
          LinePoint pt;
          try {
            pt = line_of_surgery(spec);
          } catch (const ExceptionalSlope&) {
            return false;
          }
          const SeifertSignature sig = surgery_signature(spec);
          const HomologyOrder h1 = homology_order(sig);
          if (spec.p == 0) rep.expect(!h1.has_value(), k.to_string() + " " + spec.slope() + ": finite homology");
          else rep.expect(h1 && *h1 == spec.p, k.to_string() + " " + spec.slope() + ": |H1| mismatch");
          const Rational e = euler_number(sig);
          const Rational want = h == Handedness::Left ? Rational(pt.m - pt.n * rs, rs * pt.m)
                                                      : -Rational(pt.m + pt.n * rs, rs * pt.m);
          rep.expect(e == want, k.to_string() + " " + spec.slope() + ": e = " + e.to_string());
          rep.expect(surgery_of_line(k, pt) == spec, k.to_string() + " " + spec.slope() + ": round trip");
          return true;
        };
        check(0, 1);
        check(1, 0);
        while (done < 1000) {
          const Integer p = pd(rng), q = qd(rng);
          if ((p == 0 && q == 0) || gcd(p, q) != 1) continue;
          if (check(p, q)) ++done;
        }
        total += done;
      }
    }
  }
  rep.note(std::to_string(total) + " random slopes");

  const SurgerySpec poincare = SurgerySpec::make(TorusKnot(3, 2, Handedness::Left), 1, -1);
  const SeifertSignature sig = normalize(surgery_signature(poincare));
  rep.expect(sig == sig3(-1, {5, 1}, {3, 1}, {2, 1}), "Poincare signature " + sig.to_string());
  rep.expect(homology_order(sig) == HomologyOrder{1}, "Poincare homology");
  rep.expect(classify_surgery_cone(poincare, PiRational::full_turn()) == GeometryResult(GeometryType::Spherical),
             "Poincare geometry");
  const auto fams = all_families(sig);
  std::vector<std::string> names;
  for (const auto& f : fams) names.push_back(to_string(f));
  rep.expect(names == std::vector<std::string>{"Brieskorn(2,3,5)", "I(1)"}, "Poincare families");
  return rep;
}

// ---- 6 --------------------------------------------------------------------

Report criterion_table_consistency() {
  Report rep;
  std::vector<Fiber> options;
  for (Integer a = 1; a <= 12; ++a)
    for (Integer b = 0; b < std::max<Integer>(a, 1); ++b)
      if (gcd(a, b) == 1) options.push_back({a, b});
  long total = 0, degenerate = 0, mismatched = 0, face = 0;
  for (const auto& f1 : options)
    for (const auto& f2 : options)
      for (const auto& f3 : options) {
        SeifertSignature sig{0, {f1, f2, f3}};
        if (!is_normalized(sig)) continue;
        // off the edges of the cube face x3 = 1
        const bool cube_face = f3.a == 1 && f1.a != f2.a;
        for (Integer b = -3; b <= 3; ++b) {
          sig.b = b;
          ++total;
          const ConeStructure cs = ConeStructure::manifold(sig);
          if (classify_triangle(cs.base_point()) == RegionClass::DegenerateBoundary) {
            ++degenerate;
            continue;
          }
          const GeometryResult got = classify_cone(cs);
          const bool agrees = got == GeometryResult(manifold_geometry(sig));
          if (!agrees) ++mismatched;
          if (cube_face) {
            ++face;
            if (got.has_structure()) rep.fail(sig.to_string() + ": cube-face point has " + std::string(got.name()));
          } else if (!agrees) {
            rep.fail(sig.to_string() + ": cone " + std::string(got.name()) + ", table " +
                     std::string(to_string(manifold_geometry(sig))));
          }
        }
      }
  rep.expect(degenerate == 0, "DegenerateBoundary at all-2pi angles");
  rep.expect(mismatched == face, "mismatches are not exactly the cube-face points");
  rep.note(std::to_string(total) + " signatures; " + std::to_string(degenerate) + " DegenerateBoundary; " +
           std::to_string(mismatched) + " disagree, all on the cube face x3 = 1 off its edges (a3 = 1, a1 != a2)");
  return rep;
}

// ---- 7 --------------------------------------------------------------------

Report criterion_curvature() {
  Report rep;
  auto pt = [](Rational a, Rational b, Rational c) { return BasePoint(PiRational(a), PiRational(b), PiRational(c)); };
  rep.expect(std::abs(curvature_parameter(pt({1, 3}, {1, 3}, {1, 3}))) <= 1e-12, "S(pi/3,pi/3,pi/3) != 0");
  rep.expect(std::abs(curvature_parameter(pt({1, 2}, {1, 2}, {1, 2})) + 1.0) <= 1e-12, "S(pi/2,pi/2,pi/2) != -1");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Integer> den(1, 240);
  int hits = 0, skipped = 0;
  while (hits < 10000) {
    const Integer d = den(rng);
    std::uniform_int_distribution<Integer> num(0, d);
    const BasePoint p = pt({num(rng), d}, {num(rng), d}, {num(rng), d});
    double s;
    try {
      s = curvature_parameter(p);
    } catch (const std::domain_error&) {
      ++skipped;
      continue;
    }
    ++hits;
    const RegionClass c = classify_triangle(p);
    const double tol = 1e-9;
    bool ok = true;
    if (c == RegionClass::SphericalInterior) ok = s < tol;
    else if (c == RegionClass::EuclideanFace) ok = std::abs(s) <= tol;
    else if (c == RegionClass::Hyperbolic) ok = s > -tol;
    if (!ok) {
      std::ostringstream os;
      os << "S = " << s << " in " << c;
      rep.fail(os.str());
    }
  }
  rep.note(std::to_string(hits) + " points, " + std::to_string(skipped) + " off the formula's domain skipped");
  return rep;
}

// ---- 8 --------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<double> boundary_xs(const std::string& svg) {
  std::vector<double> xs;
  const std::string tag = "<line class=\"boundary";
  for (auto pos = svg.find(tag); pos != std::string::npos; pos = svg.find(tag, pos + 1)) {
    const auto x1 = svg.find("x1=\"", pos) + 4;
    xs.push_back(std::stod(svg.substr(x1, svg.find('"', x1) - x1)));
  }
  return xs;
}

Report criterion_plot() {
  Report rep;
  const TorusKnot trefoil(3, 2, Handedness::Left), k43(4, 3, Handedness::Left);
  const PlotWindow window{Rational(12), Rational(-5), Rational(5)};

  const std::string csv = export_csv(build_plot(trefoil, window));
  rep.expect(csv.find("\n5,1,1,-1,5,Spherical\n") != std::string::npos, "trefoil CSV lacks row 5,1,...,Spherical");
  rep.expect(csv.find("\n6,1,0,1,6,Euclidean\n") != std::string::npos, "trefoil CSV lacks row 6,1,...,Euclidean");
  const std::string csv43 = export_csv(build_plot(k43, PlotWindow{Rational(40), Rational(-20), Rational(20)}));
  rep.expect(csv43.find(",Nil\n") == std::string::npos, "(4,3) CSV has a Nil row");

  for (const auto& k : {trefoil, k43, TorusKnot(5, 2, Handedness::Right), TorusKnot(7, 3, Handedness::Left)}) {
    const XLimits lim = x_limits(k);
    const auto xs = boundary_xs(render_svg(build_plot(k, window)));
    const bool ok = xs.size() == 2 && std::abs(xs[0] - lim.upper.to_double()) <= 1e-9 &&
                    std::abs(xs[1] - lim.lower.to_double()) <= 1e-9;
    rep.expect(ok, k.to_string() + ": SVG boundaries off x_U = " + lim.upper.to_string() +
                       ", x_L = " + lim.lower.to_string());
  }

  // two full runs through the command line
  const auto dir = std::filesystem::temp_directory_path() / "sfc_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const std::string svg = (dir / ("run" + std::to_string(run) + ".svg")).string();
    const std::string out_csv = (dir / ("run" + std::to_string(run) + ".csv")).string();
    const std::vector<std::string> args = {"sfc", "plot", "--knot", "3,2", "--hand", "left", "--xmax", "12",
                                           "--out", svg, "--csv", out_csv};
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    rep.expect(code == 0, "plot command failed: " + err.str());
    outputs.push_back(slurp(svg) + "\n--\n" + slurp(out_csv));
  }
  rep.expect(outputs[0] == outputs[1] && outputs[0].size() > 100, "plot output differs between runs");
  return rep;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Report()>>> criteria = {
      {"1 sphericity tables", criterion_sphericity_tables},
      {"2 ratio independence", criterion_ratios},
      {"3 trefoil conclusions", criterion_trefoil},
      {"4 admissibility", criterion_admissibility},
      {"5 surgery identities", criterion_surgery_identities},
      {"6 geometry table consistency", criterion_table_consistency},
      {"7 curvature parameter", criterion_curvature},
      {"8 plot and csv", criterion_plot},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Report rep;
    try {
      rep = fn();
    } catch (const std::exception& e) {
      rep.fail(std::string("exception: ") + e.what());
    }
    const bool ok = rep.failures.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    for (const auto& n : rep.notes) std::cout << "    " << n << "\n";
    for (std::size_t i = 0; i < rep.failures.size() && i < 10; ++i) std::cout << "    ! " << rep.failures[i] << "\n";
    if (rep.failures.size() > 10) std::cout << "    ! ... " << rep.failures.size() - 10 << " more\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
