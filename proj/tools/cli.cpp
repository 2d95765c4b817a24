#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "sfc/io.hpp"
#include "sfc/plot.hpp"

namespace sfc::cli {
namespace {

using io::Json;

// malformed input; reported as a usage error
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Integer> parse_int_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(detail::parse_integer(item));
  if (out.size() != expected)
    throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated integers");
  return out;
}

TorusKnot parse_knot(const std::string& text, const std::string& hand) {
  const auto rs = parse_int_list(text, 2, "--knot");
  return TorusKnot(rs[0], rs[1], parse_handedness(hand));
}

// "p/q", q may be negative or zero ("1/0" is infinity)
std::pair<Integer, Integer> parse_slope(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return {detail::parse_integer(text), 1};
  return {detail::parse_integer(text.substr(0, slash)), detail::parse_integer(text.substr(slash + 1))};
}

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const Integer v = detail::parse_integer(text);
    return {v, v};
  }
  const IntRange r{detail::parse_integer(text.substr(0, dots)), detail::parse_integer(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("--nrange needs A <= B");
  return r;
}

Json homology_json(const HomologyOrder& h) { return h ? Json(*h) : Json("infinite"); }

std::string homology_text(const HomologyOrder& h) { return h ? std::to_string(*h) : "infinite"; }

Json families_json(const SeifertSignature& sig) {
  Json arr = Json::array();
  for (const auto& f : all_families(sig)) arr.push_back(to_string(f));
  return arr;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("write failed: " + path);
}

// two-column table
class Table {
 public:
  Table& row(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  void print(std::ostream& out) const {
    std::size_t w = 0;
    for (const auto& r : rows_) w = std::max(w, r.first.size());
    for (const auto& r : rows_) out << std::left << std::setw(static_cast<int>(w + 2)) << r.first << r.second << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join(const Json& arr) {
  std::string out;
  for (const auto& v : arr) out += (out.empty() ? "" : ", ") + v.get<std::string>();
  return out;
}

void emit_error(std::ostream& err, const char* kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert conemanifold geometry classifier"};
  app.require_subcommand(1, 1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  std::string sig_text, angles_text, fibers_text, knot_text, hand_text, slope_text, beta_text = "2pi";
  std::string out_path, csv_path, nrange_text;
  Integer singular = 3, mmax = 0, kmax = 1;
  std::string xmax_text, ymin_text = "-5", ymax_text = "5";

  auto* classify = app.add_subcommand("classify", "Euler number, orbifold Euler characteristic, geometry, |H1|");
  classify->add_option("--sig", sig_text, "signature JSON")->required();

  auto* cone = app.add_subcommand("cone", "classify a cone structure");
  cone->add_option("--sig", sig_text, "signature JSON")->required();
  cone->add_option("--angles", angles_text, "three angles, e.g. 2pi,2pi,1/3pi")->required();

  auto* limits = app.add_subcommand("limits", "limits of sphericity for one singular fibre");
  limits->add_option("--fibers", fibers_text, "multiplicities a1,a2,a3")->required();
  limits->add_option("--singular", singular, "1-based position of the singular fibre")->check(CLI::Range(1, 3));

  auto* surgery = app.add_subcommand("surgery", "Dehn surgery on a torus knot");
  surgery->add_option("--knot", knot_text, "r,s")->required();
  surgery->add_option("--hand", hand_text, "left|right")->required();
  surgery->add_option("--slope", slope_text, "p/q")->required();
  surgery->add_option("--beta", beta_text, "cone angle on the surgery core");

  auto* identify = app.add_subcommand("identify", "named family of a signature");
  identify->add_option("--sig", sig_text, "signature JSON")->required();

  auto* plot = app.add_subcommand("plot", "geometry graph of a torus knot as SVG");
  plot->add_option("--knot", knot_text, "r,s")->required();
  plot->add_option("--hand", hand_text, "left|right")->required();
  plot->add_option("--xmax", xmax_text, "right edge of the window")->required();
  plot->add_option("--ymin", ymin_text, "bottom edge of the window");
  plot->add_option("--ymax", ymax_text, "top edge of the window");
  plot->add_option("--out", out_path, "SVG path")->required();
  plot->add_option("--csv", csv_path, "CSV path");

  auto* atlas_cmd = app.add_subcommand("atlas", "batch classification records as JSON");
  atlas_cmd->add_option("--knot", knot_text, "r,s")->required();
  atlas_cmd->add_option("--hand", hand_text, "left|right")->required();
  atlas_cmd->add_option("--mmax", mmax, "largest m")->required()->check(CLI::NonNegativeNumber);
  atlas_cmd->add_option("--nrange", nrange_text, "A..B")->required();
  atlas_cmd->add_option("--kmax", kmax, "largest orbifold label")->required()->check(CLI::PositiveNumber);
  atlas_cmd->add_option("--out", out_path, "JSON path")->required();

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      const SeifertSignature sig = io::parse_signature(sig_text);
      const SeifertSignature norm = normalize(sig);
      const Rational e = euler_number(norm);
      const Rational chi = orbifold_euler_char(norm);
      const GeometryType g = manifold_geometry(norm);
      const HomologyOrder h = homology_order(norm);
      if (as_json) {
        out << Json{{"signature", io::to_json(sig)},
                    {"normalized", io::to_json(norm)},
                    {"euler_number", e.to_string()},
                    {"chi", chi.to_string()},
                    {"geometry", std::string(to_string(g))},
                    {"homology_order", homology_json(h)}}
                   .dump()
            << "\n";
      } else {
        Table()
            .row("signature", norm.to_string())
            .row("euler number", e.to_string())
            .row("chi", chi.to_string())
            .row("geometry", std::string(to_string(g)))
            .row("|H1|", homology_text(h))
            .print(out);
      }
    } else if (cone->parsed()) {
      const SeifertSignature sig = io::parse_signature(sig_text);
      std::vector<PiRational> beta;
      std::stringstream ss(angles_text);
      std::string item;
      while (std::getline(ss, item, ',')) beta.push_back(PiRational::parse(item));
      if (beta.size() != 3) throw UsageError("--angles needs three comma-separated angles");
      const ConeStructure cs = ConeStructure::make(sig, {beta[0], beta[1], beta[2]});
      const RegionClass region = classify_triangle(cs.base_point());
      const GeometryResult g = classify_cone(cs);
      if (as_json) {
        out << Json{{"cone", io::to_json(cs)},
                    {"region", std::string(to_string(region))},
                    {"geometry", std::string(g.name())}}
                   .dump()
            << "\n";
      } else {
        out << g.name() << "\n";
      }
    } else if (limits->parsed()) {
      const auto a = parse_int_list(fibers_text, 3, "--fibers");
      const std::size_t k = static_cast<std::size_t>(singular - 1);
      const Integer a1 = a[(k + 1) % 3];
      const Integer a2 = a[(k + 2) % 3];
      const SphericityInterval lim = sphericity_limits(a1, a2, a[k]);
      std::optional<Rational> ratio;
      if (lim.lower.coeff().sign() != 0) ratio = sphericity_ratio(a1, a2);
      if (as_json) {
        out << Json{{"beta_L", lim.lower.to_string()},
                    {"beta_U", lim.upper.to_string()},
                    {"ratio", ratio ? Json(ratio->to_string()) : Json(nullptr)}}
                   .dump()
            << "\n";
      } else {
        Table()
            .row("singular fibre", std::to_string(a[k]))
            .row("beta_L", lim.lower.to_string())
            .row("beta_U", lim.upper.to_string())
            .row("ratio", ratio ? ratio->to_string() : "undefined")
            .print(out);
      }
    } else if (surgery->parsed()) {
      const TorusKnot knot = parse_knot(knot_text, hand_text);
      const auto [p, q] = parse_slope(slope_text);
      const SurgerySpec spec = SurgerySpec::make(knot, p, q);
      const PiRational beta = PiRational::parse(beta_text);
      const LinePoint pt = line_of_surgery(spec);
      const SeifertSignature sig = surgery_signature(spec);
      const SeifertSignature norm = normalize(sig);
      const GeometryResult g = classify_surgery_cone(spec, beta);
      const auto x = abscissa(pt, beta);
      const Json fams = families_json(sig);
      if (as_json) {
        out << Json{{"knot", io::to_json(knot)},
                    {"slope", spec.slope()},
                    {"p", spec.p},
                    {"q", spec.q},
                    {"signature", io::to_json(sig)},
                    {"normalized", io::to_json(norm)},
                    {"line", {{"m", pt.m}, {"n", pt.n}}},
                    {"beta", beta.to_string()},
                    {"x", x ? Json(x->to_string()) : Json(nullptr)},
                    {"euler_number", euler_number(norm).to_string()},
                    {"homology_order", homology_json(homology_order(norm))},
                    {"manifold_geometry", std::string(to_string(manifold_geometry(norm)))},
                    {"geometry", std::string(g.name())},
                    {"family", fams.front()},
                    {"families", fams}}
                   .dump()
            << "\n";
      } else {
        Table()
            .row("knot", knot.to_string())
            .row("slope", spec.slope())
            .row("signature", sig.to_string())
            .row("normalized", norm.to_string())
            .row("line point", "(" + std::to_string(pt.m) + "," + std::to_string(pt.n) + ")")
            .row("beta", beta.to_string())
            .row("x", x ? x->to_string() : "infinite")
            .row("euler number", euler_number(norm).to_string())
            .row("|H1|", homology_text(homology_order(norm)))
            .row("geometry", std::string(g.name()))
            .row("families", join(fams))
            .print(out);
      }
    } else if (identify->parsed()) {
      const SeifertSignature sig = io::parse_signature(sig_text);
      const Json fams = families_json(sig);
      if (as_json) {
        out << Json{{"normalized", io::to_json(normalize(sig))}, {"family", fams.front()}, {"families", fams}}.dump()
            << "\n";
      } else {
        out << fams.front().get<std::string>() << "\n";
        if (fams.size() > 1) out << "also: " << join(Json(std::vector<Json>(fams.begin() + 1, fams.end()))) << "\n";
      }
    } else if (plot->parsed()) {
      const TorusKnot knot = parse_knot(knot_text, hand_text);
      const PlotWindow window{Rational::parse(xmax_text), Rational::parse(ymin_text), Rational::parse(ymax_text)};
      if (window.y_min > window.y_max) throw UsageError("--ymin must not exceed --ymax");
      const PlotModel model = build_plot(knot, window);
      write_file(out_path, render_svg(model));
      if (!csv_path.empty()) write_file(csv_path, export_csv(model));
      if (as_json) {
        out << Json{{"knot", io::to_json(knot)},
                    {"x_U", model.boundaries.upper.to_string()},
                    {"x_L", model.boundaries.lower.to_string()},
                    {"points", model.points.size()},
                    {"svg", out_path},
                    {"csv", csv_path.empty() ? Json(nullptr) : Json(csv_path)}}
                   .dump()
            << "\n";
      } else {
        Table()
            .row("knot", knot.to_string())
            .row("x_U", model.boundaries.upper.to_string())
            .row("x_L", model.boundaries.lower.to_string())
            .row("points", std::to_string(model.points.size()))
            .row("svg", out_path)
            .print(out);
      }
    } else if (atlas_cmd->parsed()) {
      const TorusKnot knot = parse_knot(knot_text, hand_text);
      const IntRange nr = parse_range(nrange_text);
      const auto records = atlas(knot, mmax, nr, kmax);
      Json arr = Json::array();
      for (const auto& rec : records) arr.push_back(io::to_json(rec));
      write_file(out_path, arr.dump(1) + "\n");
      if (as_json) {
        out << Json{{"records", records.size()}, {"out", out_path}}.dump() << "\n";
      } else {
        out << records.size() << " records written to " << out_path << "\n";
      }
    }
  } catch (const IoError& e) {
    emit_error(err, "io", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    emit_error(err, "domain", e.what());
    return 1;
  } catch (const std::overflow_error& e) {
    emit_error(err, "overflow", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    emit_error(err, "usage", e.what());
    return 2;
  }
  return 0;
}

}  // namespace sfc::cli
