#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wbf/ann.hpp"
#include "wbf/bfun.hpp"
#include "wbf/errors.hpp"
#include "wbf/newton.hpp"
#include "wbf/parse.hpp"
#include "wbf/verify.hpp"

using json = nlohmann::json;
using namespace wbf;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kResourceCap = 2, kInputError = 3 };

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<Rational>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + to_string(v[i]);
  return s;
}

std::string vec_str(const std::vector<Rational>& v) { return "(" + join(v) + ")"; }

std::string mi_str(const MultiIndex& m, std::size_t n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

void check_weight(const std::vector<Rational>& w, std::size_t n) {
  if (w.size() != n) {
    throw InputError("weight has " + std::to_string(w.size()) + " entries, expected " + std::to_string(n));
  }
}

json bfunction_json(const BFunction& b) {
  json coeffs = json::array();
  for (const auto& c : b.poly.coeffs()) coeffs.push_back(to_string(c));
  json roots = json::array();
  for (const auto& [r, m] : b.roots) roots.push_back({{"value", to_string(r)}, {"multiplicity", m}});
  json out = {{"monic_coeffs", coeffs}, {"roots", roots}, {"factored", to_factored_string(b)}};
  if (b.unresolved.degree() > 0) out["irrational_factor"] = to_string(b.unresolved);
  return out;
}

void print_bfunction(const BFunction& b, bool unit) {
  if (unit) {
    std::cout << "1 (unit initial ideal)\n";
    return;
  }
  std::cout << to_factored_string(b) << "\n";
  std::cout << "roots:";
  for (const auto& [r, m] : b.roots) {
    std::cout << " " << to_string(r);
    if (m > 1) std::cout << " (x" << m << ")";
  }
  std::cout << "\n";
  if (b.unresolved.degree() > 0) std::cout << "irrational factor: " << to_string(b.unresolved) << "\n";
}

struct Source {
  std::string poly;
  std::string ideal_path;
  long ell = -1;
  std::string method = "auto";
  std::optional<long> alpha0;
  bool force = false;

  void add_to(CLI::App* cmd, bool with_ideal) {
    auto* p = cmd->add_option("--poly", poly, "polynomial f, e.g. \"x^3+y^4\"");
    if (with_ideal) {
      auto* i = cmd->add_option("--ideal", ideal_path, "file with one operator per line");
      p->excludes(i);
    }
    cmd->add_option("--ell", ell, "integer exponent of f (default -1)");
    cmd->add_option("--method", method, "auto, cusp, monomial_shift, linear_power, bm, quotient");
    cmd->add_option("--alpha0", alpha0, "smallest integer root of b_f, if known");
    cmd->add_flag("--force", force, "specialize the parametric annihilator even if the guard fails");
  }

  AnnOptions options() const {
    AnnOptions o;
    o.method = parse_ann_method(method);
    o.alpha0 = alpha0;
    o.force = force;
    return o;
  }
};

struct Loaded {
  IdealPresentation ideal;
  std::string description;
  std::string route;
  double seconds = 0;
};

Loaded load(const Source& src) {
  auto t0 = Clock::now();
  Loaded out;
  if (!src.ideal_path.empty()) {
    out.ideal = parse_ideal(read_file(src.ideal_path));
    out.description = src.ideal_path;
    out.route = "ideal file";
  } else if (!src.poly.empty()) {
    Polynomial f = parse_polynomial(src.poly);
    AnnResult a = annihilator(f, src.ell, src.options());
    out.ideal = a.ideal;
    out.description = "Ann(f^" + std::to_string(src.ell) + "), f = " + to_string(f);
    out.route = a.route;
  } else {
    throw InputError("one of --poly or --ideal is required");
  }
  out.seconds = since(t0);
  return out;
}

// ---------------------------------------------------------------- subcommands

int cmd_bfun(const Source& src, const std::string& weight, bool as_json) {
  auto t0 = Clock::now();
  Loaded in = load(src);
  auto w = parse_weight(weight);
  check_weight(w, in.ideal.sig().n());
  auto t1 = Clock::now();
  BFunctionResult r = bfunction_with_initial(in.ideal, w);
  double tb = since(t1);
  if (as_json) {
    json j = {{"input", src.poly.empty() ? src.ideal_path : src.poly},
              {"method", in.route},
              {"weight", json::array()},
              {"bfunction", bfunction_json(r.b)},
              {"timings", {{"annihilator_s", in.seconds}, {"bfunction_s", tb}, {"total_s", since(t0)}}}};
    if (!src.poly.empty()) j["ell"] = src.ell;
    for (const auto& x : w) j["weight"].push_back(to_string(x));
    j["unit_initial_ideal"] = r.initial.unit_ideal;
    std::cout << j.dump(2) << "\n";
  } else {
    print_bfunction(r.b, r.initial.unit_ideal);
    std::cout << "ideal: " << in.description << "\n";
    std::cout << "route: " << in.route << "\n";
  }
  return kOk;
}

int cmd_initial(const Source& src, const std::string& weight) {
  Loaded in = load(src);
  auto w = parse_weight(weight);
  check_weight(w, in.ideal.sig().n());
  InitialIdeal r = initial_ideal(in.ideal, w);
  std::cout << "# in_(-w,w) of " << in.description << ", w = " << vec_str(w) << "\n";
  if (r.unit_ideal) {
    std::cout << "1\n";
    return kOk;
  }
  for (const auto& g : r.basis.elements) std::cout << to_string(g) << "\n";
  return kOk;
}

int cmd_ann(const Source& src, bool check) {
  if (src.poly.empty()) throw InputError("--poly is required");
  Polynomial f = parse_polynomial(src.poly);
  auto t0 = Clock::now();
  AnnResult a = annihilator(f, src.ell, src.options());
  std::cout << "# Ann(f^" << src.ell << "), f = " << to_string(f) << "\n";
  std::cout << "# route: " << a.route << "\n";
  if (a.alpha0) std::cout << "# alpha0: " << *a.alpha0 << "\n";
  for (const auto& g : a.ideal.generators()) std::cout << to_string(g) << "\n";
  std::cout << "# " << since(t0) << " s\n";
  if (check) {
    bool ok = annihilates_all(a.ideal, f, src.ell);
    std::cout << "# annihilation check: " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) return kVerifyFailed;
  }
  return kOk;
}

std::string fan_svg(const Polynomial& f, const Fan& fan) {
  const double c = 200, r = 170;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  s << "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  s << "<line x1=\"0\" y1=\"200\" x2=\"400\" y2=\"200\" stroke=\"#ccc\"/>\n";
  s << "<line x1=\"200\" y1=\"0\" x2=\"200\" y2=\"400\" stroke=\"#ccc\"/>\n";
  auto unit = [](const RVec& v) {
    double x = v[0].get_d(), y = v[1].get_d(), l = std::hypot(x, y);
    return std::pair<double, double>{x / l, y / l};
  };
  for (const auto& ray : fan.rays) {
    auto [ux, uy] = unit(ray);
    s << "<line x1=\"" << c << "\" y1=\"" << c << "\" x2=\"" << c + r * ux << "\" y2=\"" << c - r * uy
      << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    s << "<text x=\"" << c + (r + 8) * ux - 14 << "\" y=\"" << c - (r + 8) * uy + 4
      << "\" font-size=\"12\">" << vec_str(ray) << "</text>\n";
  }
  for (const auto& cone : fan.maximal) {
    if (cone.interior.size() != 2 || (sgn(cone.interior[0]) == 0 && sgn(cone.interior[1]) == 0)) continue;
    auto [ux, uy] = unit(cone.interior);
    s << "<text x=\"" << c + 0.55 * r * ux - 20 << "\" y=\"" << c - 0.55 * r * uy
      << "\" font-size=\"11\" fill=\"#1f4e9c\">vertex " << mi_str(cone.vertex, 2) << "</text>\n";
  }
  s << "<text x=\"8\" y=\"16\" font-size=\"12\">dual fan of " << to_string(f) << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

int cmd_newton(const std::string& poly, const std::string& plot) {
  Polynomial f = parse_polynomial(poly);
  std::size_t n = f.nvars();
  NewtonPolytope np = newton_polytope(f);
  std::cout << "f = " << to_string(f) << "\n";
  std::cout << "dimension: " << np.dim << "\n";
  std::cout << "vertices:";
  for (const auto& v : np.vertices) std::cout << " " << mi_str(v, n);
  std::cout << "\n";
  Fan fan = dual_fan(f);
  std::cout << "rays:";
  for (const auto& ray : fan.rays) std::cout << " " << vec_str(ray);
  std::cout << "\n";
  std::cout << "maximal cones:\n";
  for (const auto& cone : fan.maximal) {
    std::cout << "  vertex " << mi_str(cone.vertex, n) << ": rays";
    for (const auto& ray : cone.rays) std::cout << " " << vec_str(ray);
    if (!cone.lineality.empty()) {
      std::cout << " lineality";
      for (const auto& l : cone.lineality) std::cout << " " << vec_str(l);
    }
    std::cout << "\n";
  }
  std::cout << "faces along rays:\n";
  for (const auto& ray : fan.rays) {
    FaceData fd = face_data(f, ray);
    std::cout << "  " << vec_str(ray) << ": ord " << to_string(fd.ord) << ", f_tau = " << to_string(fd.truncation)
              << "\n";
  }
  if (!plot.empty()) {
    if (n != 2) throw InputError("--plot needs two variables");
    std::ofstream out(plot);
    if (!out) throw InputError("cannot write " + plot);
    out << fan_svg(f, fan);
    std::cout << "wrote " << plot << "\n";
  }
  return kOk;
}

int cmd_bs(const std::string& poly, bool as_json) {
  Polynomial f = parse_polynomial(poly);
  auto t0 = Clock::now();
  BFunction b = bernstein_sato(f);
  double t = since(t0);
  auto a0 = min_integer_root(b);
  if (as_json) {
    json j = {{"input", poly}, {"bfunction", bfunction_json(b)}, {"timings", {{"total_s", t}}}};
    if (a0) j["min_integer_root"] = *a0;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_factored_string(b) << "\n";
    if (a0) std::cout << "smallest integer root: " << *a0 << "\n";
  }
  return kOk;
}

// Directions on a circle rounded to integer vectors, deduplicated, in angle order.
std::vector<RVec> sample_directions(int k) {
  std::vector<RVec> out;
  const double radius = 12;
  for (int i = 0; i < k; ++i) {
    double a = 2 * M_PI * i / k;
    RVec v{Rational(std::lround(radius * std::cos(a))), Rational(std::lround(radius * std::sin(a)))};
    if (sgn(v[0]) == 0 && sgn(v[1]) == 0) continue;
    v = primitive_vector(v);
    if (out.empty() || (out.back() != v && out.front() != v)) out.push_back(v);
  }
  return out;
}

int cmd_fan_scan(const Source& src, int rays) {
  if (src.poly.empty()) throw InputError("--poly is required");
  if (rays < 1) throw InputError("--rays must be positive");
  Polynomial f = parse_polynomial(src.poly);
  if (f.nvars() != 2) throw InputError("fan-scan needs two variables");
  AnnResult a = annihilator(f, src.ell, src.options());
  std::cout << "# Ann(f^" << src.ell << "), f = " << to_string(f) << " (" << a.route << ")\n";

  struct Sample {
    RVec w;
    std::string ideal_key;
    std::string face_key;
  };
  std::vector<Sample> samples;
  std::map<std::string, int> region_of;
  for (const auto& w : sample_directions(rays)) {
    InitialIdeal in = initial_ideal(a.ideal, w);
    std::string key;
    if (in.unit_ideal) {
      key = "1";
    } else {
      for (const auto& g : in.basis.elements) key += to_string(g) + "; ";
    }
    std::string face;
    for (const auto& m : face_data(f, w).face.members) face += mi_str(m, 2);
    region_of.emplace(key, static_cast<int>(region_of.size()));
    samples.push_back({w, key, face});
  }

  std::map<int, std::vector<const Sample*>> regions;
  for (const auto& s : samples) regions[region_of[s.ideal_key]].push_back(&s);
  bool refines = true;
  for (const auto& [id, members] : regions) {
    bool one_face = true;
    for (const auto* s : members) one_face = one_face && s->face_key == members.front()->face_key;
    refines = refines && one_face;
    std::cout << "region " << id << ": " << members.size() << " direction(s), face " << members.front()->face_key
              << (one_face ? "" : " [faces differ]") << "\n";
    std::cout << "  directions:";
    for (const auto* s : members) std::cout << " " << vec_str(s->w);
    std::cout << "\n  in-ideal: " << members.front()->ideal_key << "\n";
  }
  std::cout << samples.size() << " directions, " << regions.size() << " region(s); "
            << (refines ? "each region lies in one cone of the dual fan" : "refinement check FAILED") << "\n";
  return refines ? kOk : kVerifyFailed;
}

int cmd_verify() {
  int failed = 0;
  double total = 0;
  run_reference_suite([&](const CheckRow& row) {
    total += row.seconds;
    if (!row.pass) ++failed;
    std::cout << (row.pass ? "PASS " : "FAIL ") << row.id << "  " << row.description << "  ["
              << row.seconds << " s]\n";
    if (!row.pass) std::cout << "     " << row.detail << "\n";
    std::cout.flush();
  });
  std::cout << (failed ? std::to_string(failed) + " row(s) failed" : std::string("all rows passed")) << ", "
            << total << " s\n";
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"b-functions of D-module ideals with respect to weight vectors"};
  app.require_subcommand(1);

  Source src;
  std::string weight, plot, poly;
  bool as_json = false, check = false;
  int rays = 36;

  auto* bfun = app.add_subcommand("bfun", "b-function of Ann(f^ell) or of an ideal file for the weight (-w,w)");
  src.add_to(bfun, true);
  bfun->add_option("--weight", weight, "comma separated weight w")->required();
  bfun->add_flag("--json", as_json, "JSON output");

  auto* initial = app.add_subcommand("initial", "generators of the initial ideal in_(-w,w)");
  src.add_to(initial, true);
  initial->add_option("--weight", weight, "comma separated weight w")->required();

  auto* ann = app.add_subcommand("ann", "generators of Ann(f^ell)");
  src.add_to(ann, false);
  ann->add_flag("--check", check, "verify that every generator kills f^ell");

  auto* newton = app.add_subcommand("newton", "Newton polytope, dual fan and faces");
  newton->add_option("--poly", poly, "polynomial f")->required();
  newton->add_option("--plot", plot, "write an SVG sketch of the dual fan (two variables)");

  auto* bs = app.add_subcommand("bs", "Bernstein-Sato polynomial of f");
  bs->add_option("--poly", poly, "polynomial f")->required();
  bs->add_flag("--json", as_json, "JSON output");

  auto* scan = app.add_subcommand("fan-scan", "sample weight directions and group equal initial ideals");
  src.add_to(scan, false);
  scan->add_option("--rays", rays, "number of sampled directions (default 36)");

  auto* verify = app.add_subcommand("verify-paper", "recompute the reference example table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (bfun->parsed()) return cmd_bfun(src, weight, as_json);
    if (initial->parsed()) return cmd_initial(src, weight);
    if (ann->parsed()) return cmd_ann(src, check);
    if (newton->parsed()) return cmd_newton(poly, plot);
    if (bs->parsed()) return cmd_bs(poly, as_json);
    if (scan->parsed()) return cmd_fan_scan(src, rays);
    if (verify->parsed()) return cmd_verify();
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kResourceCap;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
