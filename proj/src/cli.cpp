#include "quintic/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quintic/critical.hpp"
#include "quintic/invariants.hpp"
#include "quintic/lattice.hpp"
#include "quintic/luna.hpp"
#include "quintic/poly.hpp"
#include "quintic/sl2.hpp"
#include "quintic/stability.hpp"

namespace quintic {

namespace {

using nlohmann::json;

bool env_wants_json() {
  const char* fmt = std::getenv("QUINTIC_FORMAT");
  return fmt != nullptr && std::string(fmt) == "json";
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational parse_rational_text(const std::string& text) {
  std::size_t i = 0;
  const auto digits = [&](std::size_t from) {
    std::size_t k = from;
    while (k < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[k])))
      ++k;
    return k;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  const std::size_t num_end = digits(i);
  if (num_end == i) throw std::invalid_argument("malformed rational '" + text + "'");
  std::size_t den_begin = num_end;
  if (num_end < text.size()) {
    if (text[num_end] != '/')
      throw std::invalid_argument("malformed rational '" + text + "'");
    den_begin = num_end + 1;
    if (digits(den_begin) != text.size() || den_begin == text.size())
      throw std::invalid_argument("malformed rational '" + text + "'");
  }
  Rational num{mpz_class(text.substr(0, num_end))};
  if (den_begin == num_end) return num;
  const mpz_class den(text.substr(den_begin));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  num /= Rational(den);
  return num;
}

json lambda_json(const OneParamSubgroup& l) {
  return json::array({l.a[0], l.a[1], l.a[2], l.a[3]});
}

json monomial_json(const Monomial& m) {
  return json::array({m.e[0], m.e[1], m.e[2], m.e[3]});
}

json configuration_json(const MonomialConfiguration& cfg) {
  json arr = json::array();
  for (const auto& m : cfg.support) arr.push_back(monomial_json(m));
  return arr;
}

const char* kind_name(CriticalKind k) {
  return k == CriticalKind::MinimalOrbitBoundary ? "minimal-orbit-boundary"
                                                 : "unstable-cone";
}

std::string join_monomials(const MonomialConfiguration& cfg) {
  std::string s;
  for (const auto& m : cfg.support) {
    if (!s.empty()) s += ' ';
    s += m.str();
  }
  return s;
}

template <typename T>
std::string join_ints(const std::vector<T>& v) {
  std::string s;
  for (const T& x : v) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

// Records ordered for display: conventional labels first when present.
std::vector<CriticalRecord> display_records(int degree) {
  std::vector<CriticalRecord> recs = enumerate_critical(degree);
  std::stable_sort(recs.begin(), recs.end(),
                   [](const CriticalRecord& a, const CriticalRecord& b) {
                     if ((a.label != 0) != (b.label != 0)) return a.label != 0;
                     if (a.label != b.label) return a.label < b.label;
                     return a.lambda.a < b.lambda.a;
                   });
  return recs;
}

// ---- critical ----------------------------------------------------------

int cmd_critical(int degree, bool json_mode, std::ostream& out) {
  const auto recs = display_records(degree);
  if (json_mode) {
    json rows = json::array();
    for (const auto& r : recs) {
      rows.push_back({{"label", r.label},
                      {"lambda", lambda_json(r.lambda)},
                      {"kind", kind_name(r.kind)},
                      {"nonneg_size", r.nonneg.size()},
                      {"zero_size", r.zero.size()}});
    }
    emit(out, json{{"degree", degree},
                   {"count", recs.size()},
                   {"records", rows}});
    return 0;
  }
  out << "degree " << degree << ": " << recs.size()
      << " critical subgroups\n";
  std::size_t position = 0;
  for (const auto& r : recs) {
    ++position;
    const int id = r.label != 0 ? r.label : static_cast<int>(position);
    out << id << ' ' << r.lambda.str() << ' ' << kind_name(r.kind) << " M+="
        << r.nonneg.size() << " M0=" << r.zero.size() << '\n';
  }
  return 0;
}

// ---- verify-completeness ------------------------------------------------

int cmd_verify(int degree, int bound, bool serial, bool json_mode,
               std::ostream& out, std::ostream& err) {
  ScanOptions opt;
  opt.parallel = !serial;
  opt.progress = [&err](std::uint64_t n) {
    err << "progress: " << n << " candidates\n";
  };
  const CompletenessReport rep = verify_completeness(degree, bound, opt);
  if (json_mode) {
    json viols = json::array();
    for (const auto& v : rep.violations) viols.push_back(lambda_json(v));
    emit(out, json{{"degree", rep.degree},
                   {"bound", rep.bound},
                   {"scanned", rep.scanned},
                   {"violations", viols}});
  } else {
    out << "degree " << rep.degree << " bound " << rep.bound << ": scanned "
        << rep.scanned << " candidates, " << rep.violations.size()
        << " violations\n";
    for (const auto& v : rep.violations) out << "violation: " << v.str() << '\n';
  }
  return 0;
}

// ---- classify ------------------------------------------------------------

MonomialConfiguration configuration_from_file(const std::string& path,
                                              int* degree_out) {
  const std::string text = read_file(path);
  const SparsePolynomial p =
      SparsePolynomial::parse(text, {"x0", "x1", "x2", "x3"});
  if (p.is_zero()) throw std::runtime_error("input polynomial is zero");
  const auto deg = p.homogeneous_degree();
  if (!deg) throw std::runtime_error("input polynomial is not homogeneous");
  std::vector<Monomial> ms;
  for (const auto& [e, c] : p.terms())
    ms.push_back(Monomial{{e[0], e[1], e[2], e[3]}});
  *degree_out = *deg;
  return MonomialConfiguration::from_monomials(*deg, std::move(ms));
}

std::string flag_text(const KempfFlag& f) {
  std::string s;
  if (f.point) s += "point p" + std::to_string(*f.point);
  if (f.line) {
    if (!s.empty()) s += "; ";
    s += "line V(x" + std::to_string(f.line->first) + ",x" +
         std::to_string(f.line->second) + ")";
  }
  if (f.plane) {
    if (!s.empty()) s += "; ";
    s += "plane V(x" + std::to_string(*f.plane) + ")";
  }
  if (s.empty()) s = "none";
  s += f.partial ? " [partial]" : " [full]";
  return s;
}

int cmd_classify(const std::string& path, bool json_mode, std::ostream& out) {
  int degree = 0;
  const MonomialConfiguration cfg = configuration_from_file(path, &degree);
  if (degree < 2)
    throw std::runtime_error("classification needs degree >= 2");
  const auto records = enumerate_critical(degree);
  const StabilityReport rep = analyze_stability(cfg, records);

  if (json_mode) {
    json j{{"degree", rep.degree},
           {"support_size", cfg.size()},
           {"support", configuration_json(cfg)},
           {"torus_verdict", verdict_name(rep.verdict)},
           {"hull_position", hull_position_name(rep.hull.position)}};
    if (!rep.hull.barycentric.empty()) {
      json bc = json::array();
      for (const auto& q : rep.hull.barycentric) bc.push_back(rational_str(q));
      j["barycentric"] = bc;
    } else {
      j["barycentric"] = nullptr;
    }
    j["separating_lambda"] = rep.hull.hyperplane
                                 ? lambda_json(*rep.hull.hyperplane)
                                 : json(nullptr);
    if (rep.certificate) {
      const auto& c = *rep.certificate;
      j["certificate"] = {
          {"permutation", json::array({c.permutation[0], c.permutation[1],
                                       c.permutation[2], c.permutation[3]})},
          {"record_index", c.record_index},
          {"label", quintic_label(c.lambda)},
          {"lambda", lambda_json(c.lambda)},
          {"mu", c.mu_value}};
    } else {
      j["certificate"] = nullptr;
    }
    if (rep.worst) {
      j["worst"] = {{"lambda", lambda_json(rep.worst->lambda)},
                    {"squared_ratio", rational_str(rep.worst->squared_ratio)}};
    } else {
      j["worst"] = nullptr;
    }
    if (rep.flag) {
      const auto& f = *rep.flag;
      j["flag"] = {{"point", f.point ? json(*f.point) : json(nullptr)},
                   {"line", f.line ? json::array({f.line->first, f.line->second})
                                   : json(nullptr)},
                   {"plane", f.plane ? json(*f.plane) : json(nullptr)},
                   {"partial", f.partial}};
    } else {
      j["flag"] = nullptr;
    }
    emit(out, j);
    return 0;
  }

  out << verdict_name(rep.verdict) << " (torus); ";
  if (rep.certificate) {
    const auto& c = *rep.certificate;
    out << "certificate: sigma=(" << c.permutation[0] << ',' << c.permutation[1]
        << ',' << c.permutation[2] << ',' << c.permutation[3]
        << "), lambda=" << c.lambda.str();
    if (const int lab = quintic_label(c.lambda); lab != 0) out << ", label=" << lab;
    out << ", mu=" << c.mu_value << '\n';
  } else {
    out << "no non-stability certificate\n";
  }
  out << "degree: " << rep.degree << '\n';
  out << "support (" << cfg.size() << "): " << join_monomials(cfg) << '\n';
  out << "hull: " << hull_position_name(rep.hull.position) << '\n';
  if (!rep.hull.barycentric.empty()) {
    std::string bc;
    for (const auto& q : rep.hull.barycentric) {
      if (!bc.empty()) bc += ' ';
      bc += rational_str(q);
    }
    out << "barycentric: " << bc << '\n';
  }
  if (rep.hull.hyperplane)
    out << "separating lambda: " << rep.hull.hyperplane->str() << '\n';
  if (rep.worst)
    out << "worst direction: " << rep.worst->lambda.str()
        << ", squared ratio = " << rational_str(rep.worst->squared_ratio)
        << '\n';
  if (rep.flag) out << "flag: " << flag_text(*rep.flag) << '\n';
  return 0;
}

// ---- boundary -------------------------------------------------------------

int cmd_boundary(int degree, int label, std::uint64_t seed, bool json_mode,
                 std::ostream& out) {
  std::vector<CriticalRecord> chosen;
  for (const auto& r : display_records(degree)) {
    if (r.kind != CriticalKind::MinimalOrbitBoundary) continue;
    if (label != 0 && r.label != label) continue;
    chosen.push_back(r);
  }
  if (chosen.empty()) {
    std::ostringstream os;
    os << "no minimal-orbit boundary record";
    if (label != 0) os << " with label " << label;
    os << " at degree " << degree;
    throw std::runtime_error(os.str());
  }

  std::vector<BoundaryReport> reports;
  for (const auto& r : chosen) reports.push_back(boundary_report(r, degree, seed));

  if (json_mode) {
    json rows = json::array();
    for (const auto& rep : reports) {
      json row{{"label", rep.label},
               {"lambda", lambda_json(rep.lambda)},
               {"zero", configuration_json(rep.zero)},
               {"centralizer_dim", rep.centralizer},
               {"fiber_pos", rep.fiber.positive},
               {"fiber_neg", rep.fiber.negative},
               {"fiber_zero_count", rep.fiber.zero_count},
               {"normal_weight_count", rep.fiber.positive.size() +
                                           rep.fiber.negative.size() +
                                           rep.fiber.zero_count},
               {"orbit_rank", rep.dims.orbit_rank},
               {"dim_estimate", rep.dims.dim_estimate},
               {"seed", rep.dims.seed},
               {"dim_mismatch", rep.dim_mismatch}};
      row["reference_dim"] =
          rep.reference_dim ? json(*rep.reference_dim) : json(nullptr);
      rows.push_back(row);
    }
    emit(out, json{{"degree", degree}, {"reports", rows}});
    return 0;
  }

  bool first = true;
  for (const auto& rep : reports) {
    if (!first) out << '\n';
    first = false;
    out << "lambda";
    if (rep.label != 0) out << ' ' << rep.label;
    out << " = " << rep.lambda.str() << '\n';
    out << "zero set (" << rep.zero.size() << "): " << join_monomials(rep.zero)
        << '\n';
    out << "centralizer dim: " << rep.centralizer << '\n';
    out << "fiber positive (" << rep.fiber.positive.size()
        << "): " << join_ints(rep.fiber.positive) << '\n';
    out << "fiber negative (" << rep.fiber.negative.size()
        << "): " << join_ints(rep.fiber.negative) << '\n';
    out << "fiber zeros: " << rep.fiber.zero_count << '\n';
    out << "orbit rank: " << rep.dims.orbit_rank << '\n';
    out << "dim estimate: " << rep.dims.dim_estimate << '\n';
    if (rep.reference_dim) {
      out << "reference dim: " << *rep.reference_dim;
      if (rep.dim_mismatch)
        out << " (MISMATCH: estimate " << rep.dims.dim_estimate << ")";
      else
        out << " (agrees)";
      out << '\n';
    } else {
      out << "reference dim: none\n";
    }
    out << "seed: " << rep.dims.seed << '\n';
  }
  return 0;
}

// ---- sl2-slice -------------------------------------------------------------

json rep_json(const sl2::Rep& r) {
  json arr = json::array();
  for (const auto& [k, n] : r.mult) arr.push_back(json::array({k, n}));
  return arr;
}

int cmd_sl2(bool json_mode, std::ostream& out) {
  const sl2::SliceReport rep = sl2::slice_report();
  if (json_mode) {
    emit(out, json{{"coordinates", rep_json(rep.coordinates)},
                   {"coordinates_dim", rep.coordinates.dim()},
                   {"quintics", rep_json(rep.quintics)},
                   {"quintics_dim", rep.quintics.dim()},
                   {"adjoint", rep_json(rep.adjoint)},
                   {"adjoint_dim", rep.adjoint.dim()},
                   {"orbit", rep_json(rep.orbit)},
                   {"orbit_dim", rep.orbit.dim()},
                   {"slice", rep_json(rep.slice)},
                   {"slice_dim", rep.slice.dim()},
                   {"expected", rep_json(rep.expected)},
                   {"matches_expected", rep.matches_expected}});
    return 0;
  }
  const auto line = [&](const char* name, const sl2::Rep& r) {
    out << name << ": " << r.str() << " (dim " << r.dim() << ")\n";
  };
  line("coordinates", rep.coordinates);
  line("quintics", rep.quintics);
  line("adjoint", rep.adjoint);
  line("orbit", rep.orbit);
  line("slice", rep.slice);
  line("expected", rep.expected);
  out << "slice matches expected: " << (rep.matches_expected ? "yes" : "no")
      << '\n';
  return 0;
}

// ---- numeric subcommands ----------------------------------------------------

int cmd_genus(int degree, bool json_mode, std::ostream& out) {
  const std::int64_t count = genus_count(degree);
  const std::int64_t closed = genus_closed_form(degree);
  if (count != closed) {
    std::ostringstream os;
    os << "genus mismatch at degree " << degree << ": count " << count
       << " vs closed form " << closed;
    throw std::logic_error(os.str());
  }
  if (json_mode) {
    emit(out, json{{"degree", degree},
                   {"genus", count},
                   {"count", count},
                   {"closed_form", closed}});
  } else {
    out << count << '\n';
  }
  return 0;
}

int cmd_pg(int degree, bool json_mode, std::ostream& out) {
  const std::int64_t pg = hypersurface_pg(degree);
  if (json_mode)
    emit(out, json{{"degree", degree}, {"pg", pg}});
  else
    out << pg << '\n';
  return 0;
}

int cmd_lct(const std::string& weights_text, const std::string& degree_text,
            bool json_mode, std::ostream& out) {
  std::vector<Rational> weights;
  std::vector<std::string> weight_strs;
  std::string item;
  std::istringstream ss(weights_text);
  while (std::getline(ss, item, ',')) {
    weights.push_back(parse_rational_text(item));
    weight_strs.push_back(rational_str(weights.back()));
  }
  const WeightSystem ws(std::move(weights), parse_rational_text(degree_text));
  const Rational lct = lct_weight_bound(ws);
  const LctVerdict verdict = lct_verdict(lct);
  if (json_mode) {
    emit(out, json{{"weights", weight_strs},
                   {"degree", rational_str(ws.weighted_degree)},
                   {"lct", rational_str(lct)},
                   {"verdict", lct_verdict_name(verdict)}});
  } else {
    out << "lct = " << rational_str(lct) << '\n';
    out << "verdict: " << lct_verdict_name(verdict) << '\n';
  }
  return 0;
}

// ---- cover / branch ----------------------------------------------------------

SparsePolynomial plane_poly_from_file(const std::string& path) {
  return SparsePolynomial::parse(read_file(path), {"x0", "x1", "x2"});
}

int cmd_cover(const std::string& g2_path, const std::string& f4_path,
              const std::string& f5_path, bool json_mode, std::ostream& out) {
  const SparsePolynomial g2 = plane_poly_from_file(g2_path);
  const SparsePolynomial f4 = plane_poly_from_file(f4_path);
  const SparsePolynomial f5 = plane_poly_from_file(f5_path);
  const auto [h4, h6] = triple_cover_form(g2, f4, f5);
  const SparsePolynomial disc = cover_discriminant(h4, h6);
  if (json_mode) {
    emit(out, json{{"h4", h4.format()},
                   {"h6", h6.format()},
                   {"discriminant", disc.format()}});
  } else {
    out << "h4 = " << h4.format() << '\n';
    out << "h6 = " << h6.format() << '\n';
    out << "discriminant = " << disc.format() << '\n';
  }
  return 0;
}

int cmd_branch(const std::string& f3_path, const std::string& f4_path,
               const std::string& f5_path, bool json_mode, std::ostream& out) {
  const SparsePolynomial f3 = plane_poly_from_file(f3_path);
  const SparsePolynomial f4 = plane_poly_from_file(f4_path);
  const SparsePolynomial f5 = plane_poly_from_file(f5_path);
  const SparsePolynomial octic = branch_octic(f3, f4, f5);
  if (json_mode)
    emit(out, json{{"octic", octic.format()}});
  else
    out << "octic = " << octic.format() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact GIT stability computations for quintic surfaces"};
  app.name("quintic");
  app.require_subcommand(1);

  struct {
    int degree = 5;
    bool json = false;
  } crit;
  auto* sc_critical =
      app.add_subcommand("critical", "critical one-parameter subgroups");
  sc_critical->add_option("--degree", crit.degree, "form degree")
      ->check(CLI::Range(2, 12));
  sc_critical->add_flag("--json", crit.json, "JSON output");

  struct {
    int degree = 5;
    int bound = 375;
    bool serial = false;
    bool json = false;
  } scan;
  auto* sc_verify = app.add_subcommand(
      "verify-completeness", "exhaustive containment scan up to a bound");
  sc_verify->add_option("--degree", scan.degree, "form degree")
      ->check(CLI::Range(2, 12));
  sc_verify->add_option("--bound", scan.bound, "max |a_i|")
      ->check(CLI::Range(1, 1000000));
  sc_verify->add_flag("--serial", scan.serial, "use the serial reference kernel");
  sc_verify->add_flag("--json", scan.json, "JSON output");

  struct {
    std::string input;
    bool json = false;
  } cls;
  auto* sc_classify =
      app.add_subcommand("classify", "torus stability of a polynomial's support");
  sc_classify->add_option("--input", cls.input, "polynomial file in x0..x3")
      ->required();
  sc_classify->add_flag("--json", cls.json, "JSON output");

  struct {
    int degree = 5;
    int label = 0;
    std::uint64_t seed = 20240501;
    bool json = false;
  } bnd;
  auto* sc_boundary =
      app.add_subcommand("boundary", "Luna slice data for boundary subgroups");
  sc_boundary->add_option("--degree", bnd.degree, "form degree")
      ->check(CLI::Range(2, 12));
  sc_boundary->add_option("--lambda", bnd.label,
                          "conventional label of one record");
  sc_boundary->add_option("--seed", bnd.seed, "sampling seed");
  sc_boundary->add_flag("--json", bnd.json, "JSON output");

  struct {
    bool json = false;
  } sl2opt;
  auto* sc_sl2 = app.add_subcommand(
      "sl2-slice", "slice decomposition at the double-quadric point");
  sc_sl2->add_flag("--json", sl2opt.json, "JSON output");

  struct {
    int degree = 5;
    bool json = false;
  } gen;
  auto* sc_genus =
      app.add_subcommand("genus", "genus of the quasihomogeneous cone point");
  sc_genus->add_option("--degree", gen.degree, "form degree")
      ->check(CLI::Range(4, 64));
  sc_genus->add_flag("--json", gen.json, "JSON output");

  struct {
    int degree = 5;
    bool json = false;
  } pg;
  auto* sc_pg = app.add_subcommand("pg", "geometric genus of a smooth surface");
  sc_pg->add_option("--degree", pg.degree, "form degree")
      ->check(CLI::Range(1, 1000000));
  sc_pg->add_flag("--json", pg.json, "JSON output");

  struct {
    std::string weights;
    std::string degree;
    bool json = false;
  } lct;
  auto* sc_lct =
      app.add_subcommand("lct", "log-canonical-threshold weight bound");
  sc_lct->add_option("--weights", lct.weights, "comma-separated weights")
      ->required();
  sc_lct->add_option("--degree", lct.degree, "weighted degree")->required();
  sc_lct->add_flag("--json", lct.json, "JSON output");

  struct {
    std::string g2, f4, f5;
    bool json = false;
  } cov;
  auto* sc_cover =
      app.add_subcommand("cover", "triple cover form and discriminant");
  sc_cover->add_option("--g2", cov.g2, "degree-2 form file")->required();
  sc_cover->add_option("--f4", cov.f4, "degree-4 form file")->required();
  sc_cover->add_option("--f5", cov.f5, "degree-5 form file")->required();
  sc_cover->add_flag("--json", cov.json, "JSON output");

  struct {
    std::string f3, f4, f5;
    bool json = false;
  } br;
  auto* sc_branch = app.add_subcommand("branch", "branch octic f3*f5 - f4^2");
  sc_branch->add_option("--f3", br.f3, "degree-3 form file")->required();
  sc_branch->add_option("--f4", br.f4, "degree-4 form file")->required();
  sc_branch->add_option("--f5", br.f5, "degree-5 form file")->required();
  sc_branch->add_flag("--json", br.json, "JSON output");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("quintic");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool env_json = env_wants_json();
  try {
    if (sc_critical->parsed())
      return cmd_critical(crit.degree, crit.json || env_json, out);
    if (sc_verify->parsed())
      return cmd_verify(scan.degree, scan.bound, scan.serial,
                        scan.json || env_json, out, err);
    if (sc_classify->parsed())
      return cmd_classify(cls.input, cls.json || env_json, out);
    if (sc_boundary->parsed())
      return cmd_boundary(bnd.degree, bnd.label, bnd.seed,
                          bnd.json || env_json, out);
    if (sc_sl2->parsed()) return cmd_sl2(sl2opt.json || env_json, out);
    if (sc_genus->parsed())
      return cmd_genus(gen.degree, gen.json || env_json, out);
    if (sc_pg->parsed()) return cmd_pg(pg.degree, pg.json || env_json, out);
    if (sc_lct->parsed())
      return cmd_lct(lct.weights, lct.degree, lct.json || env_json, out);
    if (sc_cover->parsed())
      return cmd_cover(cov.g2, cov.f4, cov.f5, cov.json || env_json, out);
    if (sc_branch->parsed())
      return cmd_branch(br.f3, br.f4, br.f5, br.json || env_json, out);
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace quintic
