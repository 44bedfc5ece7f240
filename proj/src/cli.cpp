#include "latdense/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latdense/density.hpp"

namespace latdense {
namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NormKind norm_from(const std::string& s) {
  if (s == "1") return NormKind::kOne;
  if (s == "2") return NormKind::kTwo;
  return NormKind::kInf;
}

std::string norm_name(NormKind n) {
  switch (n) {
    case NormKind::kOne:
      return "1";
    case NormKind::kTwo:
      return "2";
    case NormKind::kInf:
      return "inf";
  }
  return "?";
}

std::string fmt_rat(const Rat& q) {
  std::ostringstream os;
  os << num(q);
  if (den(q) != 1) os << '/' << den(q);
  return os.str();
}

// Exact value first; the decimal tail is approximate and marked as such.
std::string rat_display(const Rat& q) {
  std::string s = fmt_rat(q);
  if (den(q) != 1) s += " ≈ " + decimal_string(q);
  return s;
}

ordered_json rat_json(const Rat& q) {
  return ordered_json{{"num", num(q).str()}, {"den", den(q).str()}};
}

ordered_json rat_json_approx(const Rat& q) {
  ordered_json j = rat_json(q);
  j["approx"] = decimal_string(q);
  return j;
}

std::string fmt_vec(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) os << ',';
    os << v(i);
  }
  os << ')';
  return os.str();
}

struct Loaded {
  std::string path;
  std::string digest;
  SemiSimpleSet set;
};

Loaded load_set(const std::string& path) {
  Loaded l;
  l.path = path;
  const std::string bytes = read_file(path);
  l.digest = "fnv1a:" + fnv1a64_hex(bytes);
  l.set = parse(bytes);
  return l;
}

void text_header(std::ostream& out, const std::string& command, const Loaded& l) {
  out << "command: " << command << "\n";
  out << "file: " << l.path << "\n";
  out << "digest: " << l.digest << "\n";
}

ordered_json json_header(const std::string& command, const Loaded& l) {
  return ordered_json{{"command", command}, {"file", l.path}, {"digest", l.digest}};
}

int report_invalid(const ValidationReport& report, std::ostream& err) {
  for (const auto& c : report.components) {
    for (const auto& f : c.failures)
      err << "component " << c.index + 1 << ": " << f << "\n";
  }
  err << "error: set is not semi-simple\n";
  return 1;
}

const char* kBoundedNote = "a bounded scan is not a proof of disjointness";

int run_validate(const std::string& path, long radius, std::ostream& out, std::ostream& err) {
  const Loaded l = load_set(path);
  text_header(out, "validate", l);
  const ValidationReport report = validate(l.set);
  for (const auto& c : report.components) {
    out << "component " << c.index + 1 << ": simple " << (c.simple ? "yes" : "NO");
    if (c.simple) {
      out << ", full-rank " << (c.full_rank ? "yes" : "no");
      if (c.full_rank) out << ", lattice determinant " << c.lattice_determinant;
    } else {
      out << " (";
      for (std::size_t i = 0; i < c.failures.size(); ++i) {
        if (i > 0) out << "; ";
        out << c.failures[i];
      }
      out << ")";
    }
    out << "\n";
  }
  if (!report.ok) {
    out << "result: INVALID (non-simple component)\n";
    err << "error: set is not semi-simple\n";
    return 1;
  }
  const DisjointReport dj = check_disjoint_bounded(l.set, radius);
  if (dj.clean) {
    out << "disjointness: no overlaps in the box [-" << radius << "," << radius << "]^"
        << l.set.dim << "\n";
    out << "note: " << kBoundedNote << "\n";
    out << "result: valid\n";
    return 0;
  }
  std::size_t shown = 0;
  for (const auto& w : dj.witnesses) {
    out << "overlap at " << fmt_vec(w.point) << ": components";
    for (std::size_t c : w.components) out << " " << c + 1;
    out << "\n";
    if (++shown == 10 && dj.witnesses.size() > 10) {
      out << "... " << dj.witnesses.size() - 10 << " more overlap points\n";
      break;
    }
  }
  out << "result: INVALID (components overlap)\n";
  err << "error: components overlap within radius " << radius << "\n";
  return 1;
}

int run_density(const std::string& path, const std::string& norm_s, const std::string& via_s,
                bool machine, std::ostream& out, std::ostream& err) {
  if (norm_s == "2") {
    err << "error: no exact density exists for --norm 2 (the Euclidean ball is not a "
           "polytope); use `latdense estimate --norm 2` for an empirical frequency table\n";
    return 2;
  }
  const NormKind norm = norm_from(norm_s);
  const DensityRoute route =
      via_s == "ehrhart" ? DensityRoute::kEhrhart : DensityRoute::kVolume;
  const Loaded l = load_set(path);
  const ValidationReport vr = validate(l.set);
  if (!vr.ok) return report_invalid(vr, err);
  const DisjointReport dj = check_disjoint_bounded(l.set, 20);
  if (!dj.clean) {
    err << "error: components overlap (e.g. at " << fmt_vec(dj.witnesses.front().point)
        << "); densities of the components would over-count\n";
    return 1;
  }
  const DensityReport report = set_density(l.set, norm, route, true);
  const std::string caveat =
      std::string("disjointness verified within radius 20 only (") + kBoundedNote + ")";

  if (machine) {
    ordered_json j = json_header("density", l);
    j["norm"] = norm_name(norm);
    j["via"] = via_s;
    j["caveats"] = ordered_json::array({caveat});
    ordered_json comps = ordered_json::array();
    for (const auto& c : report.components) {
      comps.push_back(ordered_json{{"index", c.index + 1},
                                   {"full_rank", c.full_rank},
                                   {"density", rat_json_approx(c.density)}});
    }
    j["components"] = comps;
    j["total"] = rat_json_approx(report.total);
    j["status"] = 0;
    out << j.dump(2) << "\n";
    return 0;
  }
  text_header(out, "density", l);
  out << "norm: " << norm_name(norm) << "\n";
  out << "via: " << via_s << "\n";
  out << "caveat: " << caveat << "\n";
  for (const auto& c : report.components) {
    out << "component " << c.index + 1 << ": full-rank " << (c.full_rank ? "yes" : "no")
        << ", density " << rat_display(c.density) << "\n";
  }
  out << "total density = " << rat_display(report.total) << "\n";
  return 0;
}

int run_estimate(const std::string& path, const std::string& norm_s, long radius, long steps,
                 bool machine, std::ostream& out, std::ostream& err) {
  const NormKind norm = norm_from(norm_s);
  const Loaded l = load_set(path);
  const ValidationReport vr = validate(l.set);
  if (!vr.ok) return report_invalid(vr, err);

  std::vector<long> radii;
  for (long i = 1; i <= steps; ++i) {
    long r = radius * i / steps;
    if (r < 1) r = 1;
    if (radii.empty() || radii.back() != r) radii.push_back(r);
  }
  const EstimateTable table = convergence_table(l.set, norm, radii);

  std::vector<std::string> caveats;
  if (norm == NormKind::kTwo)
    caveats.push_back("no exact density exists for norm 2; frequencies are estimates only");
  else
    caveats.push_back("exact reference assumes disjoint components (run `validate`)");

  if (machine) {
    ordered_json j = json_header("estimate", l);
    j["norm"] = norm_name(norm);
    j["caveats"] = caveats;
    ordered_json rows = ordered_json::array();
    for (const auto& r : table.rows) {
      ordered_json row{{"radius", r.radius},
                       {"hits", r.hits.str()},
                       {"ball", r.ball.str()},
                       {"frequency", rat_json_approx(r.frequency)}};
      if (r.exact_error) row["abs_error"] = rat_json_approx(*r.exact_error);
      rows.push_back(row);
    }
    j["rows"] = rows;
    j["status"] = 0;
    out << j.dump(2) << "\n";
    return 0;
  }
  text_header(out, "estimate", l);
  out << "norm: " << norm_name(norm) << "\n";
  for (const auto& c : caveats) out << "caveat: " << c << "\n";
  for (const auto& r : table.rows) {
    out << "r=" << r.radius << " hits=" << r.hits << " ball=" << r.ball
        << " frequency=" << rat_display(r.frequency);
    if (r.exact_error) out << " abs-error=" << rat_display(*r.exact_error);
    out << "\n";
  }
  return 0;
}

std::string fmt_poly_row(const Quasipolynomial& q, Index row) {
  std::ostringstream os;
  bool first = true;
  for (Index j = q.degree; j >= 0; --j) {
    const Rat c = q.coefficients(row, j);
    if (c == 0) continue;
    if (!first) os << " + ";
    os << fmt_rat(c);
    if (j >= 1) os << "*t";
    if (j >= 2) os << "^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int run_ehrhart(const std::string& path, long component, const std::string& norm_s, long max_t,
                bool machine, std::ostream& out, std::ostream& err) {
  const NormKind norm = norm_from(norm_s);
  const Loaded l = load_set(path);
  const ValidationReport vr = validate(l.set);
  if (!vr.ok) return report_invalid(vr, err);
  if (component < 1 || component > static_cast<long>(l.set.components.size())) {
    err << "error: component index out of range (set has " << l.set.components.size()
        << " components)\n";
    return 1;
  }
  const SimpleComponent& c = l.set.components[static_cast<std::size_t>(component - 1)];
  if (c.generators.cols() != l.set.dim) {
    err << "error: component " << component
        << " is not full rank; its dilate counts are not a degree-n quasipolynomial\n";
    return 1;
  }

  const Index n = l.set.dim;
  const HPolytope p =
      intersect(ball_polytope(norm, n), cone_halfspaces(Cone{c.generators}));
  const Lattice lat = lattice_from_basis(c.generators);

  const RatMat binv = inverse(lat.basis);
  const VertexSet vs = enumerate_vertices(p);
  Int denom = 1;
  for (const auto& v : vs.vertices) {
    const RatVec a = binv * v;
    denom = boost::multiprecision::lcm(denom, common_denominator(a));
  }

  CountSeries series;
  for (long t = 1; t <= max_t; ++t) series.entries.push_back({t, count_dilate(p, lat, t)});

  Quasipolynomial fit;
  bool fitted = false;
  std::string failure;
  for (long widen : {1L, 2L, 6L}) {
    const long period = denom.convert_to<long>() * widen;
    try {
      fit = ehrhart_fit(series, static_cast<int>(n), period);
      fitted = true;
      break;
    } catch (const Error& e) {
      failure = e.what();
    }
  }
  if (!fitted) {
    err << "error: no quasipolynomial of degree " << n << " fits the counts up to t=" << max_t
        << " (" << failure << "); try a larger --max-t\n";
    return 1;
  }
  const Rat lead = leading_coefficient(fit);
  const Rat implied = lead / ball_volume(norm, n);

  if (machine) {
    ordered_json j = json_header("ehrhart", l);
    j["component"] = component;
    j["norm"] = norm_name(norm);
    j["max_t"] = max_t;
    j["degree"] = fit.degree;
    j["period"] = fit.period;
    ordered_json rows = ordered_json::array();
    for (Index r = 0; r < static_cast<Index>(fit.period); ++r) {
      ordered_json coeffs = ordered_json::array();
      for (Index k = 0; k <= fit.degree; ++k) coeffs.push_back(rat_json(fit.coefficients(r, k)));
      rows.push_back(ordered_json{{"residue", r}, {"coefficients", coeffs}});
    }
    j["classes"] = rows;
    j["leading_coefficient"] = rat_json_approx(lead);
    j["implied_density"] = rat_json_approx(implied);
    j["status"] = 0;
    out << j.dump(2) << "\n";
    return 0;
  }
  text_header(out, "ehrhart", l);
  out << "component: " << component << "\n";
  out << "norm: " << norm_name(norm) << "\n";
  out << "fitted on dilates 1.." << max_t << "\n";
  out << "degree: " << fit.degree << "\n";
  out << "period: " << fit.period << "\n";
  for (Index r = 0; r < static_cast<Index>(fit.period); ++r)
    out << "t = " << r << " (mod " << fit.period << "): " << fmt_poly_row(fit, r) << "\n";
  out << "leading coefficient: " << rat_display(lead) << "\n";
  out << "implied density: " << rat_display(implied) << "\n";
  return 0;
}

int run_count_ball(const std::string& norm_s, long radius, long dim, std::ostream& out) {
  const NormKind norm = norm_from(norm_s);
  const Int count = ball_lattice_count(norm, radius, static_cast<int>(dim));
  out << "command: count-ball\n";
  out << "norm: " << norm_name(norm) << "\n";
  out << "radius: " << radius << "\n";
  out << "dim: " << dim << "\n";
  out << "count = " << count << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact asymptotic density of semi-simple subsets of Z^n"};
  app.name("latdense");
  app.require_subcommand(1);

  std::string v_file;
  long v_radius = 20;
  auto* validate_cmd =
      app.add_subcommand("validate", "check simplicity and bounded disjointness");
  validate_cmd->add_option("file", v_file, "set description file")->required();
  validate_cmd->add_option("--disjoint-radius", v_radius, "box radius for the overlap scan")
      ->check(CLI::NonNegativeNumber);

  std::string d_file, d_norm, d_via = "volume";
  bool d_machine = false;
  auto* density_cmd = app.add_subcommand("density", "exact asymptotic density");
  density_cmd->add_option("file", d_file, "set description file")->required();
  density_cmd->add_option("--norm", d_norm, "norm: 1 or inf")
      ->required()
      ->check(CLI::IsMember({"1", "2", "inf"}));
  density_cmd->add_option("--via", d_via, "computation route")
      ->check(CLI::IsMember({"volume", "ehrhart"}));
  density_cmd->add_flag("--machine", d_machine, "JSON output");

  std::string e_file, e_norm;
  long e_radius = 0, e_steps = 1;
  bool e_machine = false;
  auto* estimate_cmd = app.add_subcommand("estimate", "empirical density by direct counting");
  estimate_cmd->add_option("file", e_file, "set description file")->required();
  estimate_cmd->add_option("--norm", e_norm, "norm: 1, 2 or inf")
      ->required()
      ->check(CLI::IsMember({"1", "2", "inf"}));
  estimate_cmd->add_option("--radius", e_radius, "largest radius")
      ->required()
      ->check(CLI::NonNegativeNumber);
  estimate_cmd->add_option("--steps", e_steps, "number of radii up to --radius")
      ->check(CLI::PositiveNumber);
  estimate_cmd->add_flag("--machine", e_machine, "JSON output");

  std::string h_file, h_norm;
  long h_component = 0, h_max_t = 60;
  bool h_machine = false;
  auto* ehrhart_cmd =
      app.add_subcommand("ehrhart", "dilate-counting quasipolynomial of one component");
  ehrhart_cmd->add_option("file", h_file, "set description file")->required();
  ehrhart_cmd->add_option("--component", h_component, "component index, 1-based")
      ->required()
      ->check(CLI::PositiveNumber);
  ehrhart_cmd->add_option("--norm", h_norm, "norm: 1 or inf")
      ->required()
      ->check(CLI::IsMember({"1", "inf"}));
  ehrhart_cmd->add_option("--max-t", h_max_t, "fit on dilates 1..T")
      ->required()
      ->check(CLI::PositiveNumber);
  ehrhart_cmd->add_flag("--machine", h_machine, "JSON output");

  std::string b_norm;
  long b_radius = 0, b_dim = 0;
  auto* ball_cmd = app.add_subcommand("count-ball", "lattice points in a ball");
  ball_cmd->add_option("--norm", b_norm, "norm: 1, 2 or inf")
      ->required()
      ->check(CLI::IsMember({"1", "2", "inf"}));
  ball_cmd->add_option("--radius", b_radius, "ball radius")
      ->required()
      ->check(CLI::NonNegativeNumber);
  ball_cmd->add_option("--dim", b_dim, "ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(v_file, v_radius, out, err);
    if (density_cmd->parsed()) return run_density(d_file, d_norm, d_via, d_machine, out, err);
    if (estimate_cmd->parsed())
      return run_estimate(e_file, e_norm, e_radius, e_steps, e_machine, out, err);
    if (ehrhart_cmd->parsed())
      return run_ehrhart(h_file, h_component, h_norm, h_max_t, h_machine, out, err);
    if (ball_cmd->parsed()) return run_count_ball(b_norm, b_radius, b_dim, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace latdense
