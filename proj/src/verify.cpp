#include "wbf/verify.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "wbf/ann.hpp"
#include "wbf/bfun.hpp"
#include "wbf/newton.hpp"
#include "wbf/parse.hpp"

namespace wbf {

namespace {

using Weight = std::vector<Rational>;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (ok ? "ok: " : "MISMATCH: ") << what << "; ";
  }
};

IdealPresentation ideal_of(std::size_t n, const std::vector<std::string>& gens) {
  auto sig = AlgebraSignature::weyl(n);
  std::vector<WeylOperator> ops;
  for (const auto& g : gens) ops.push_back(parse_operator(g, sig));
  return IdealPresentation(sig, ops);
}

BFunction roots(std::initializer_list<Rational> rs) { return BFunction::from_roots(rs); }

std::string wstr(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].get_str();
  return s + ")";
}

void expect_b(Outcome& o, const IdealPresentation& ideal, const Weight& w, const BFunction& want) {
  BFunction got = bfunction(ideal, w);
  o.check(got == want, "b" + wstr(w) + " = " + to_factored_string(got) + " (want " + to_factored_string(want) + ")");
}

const std::vector<Weight>& compass() {
  static const std::vector<Weight> w = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  return w;
}

Outcome row_ann_one() {
  Outcome o;
  auto ideal = ideal_of(2, {"dx", "dy"});
  for (const auto& w : compass()) expect_b(o, ideal, w, BFunction(UPoly::s()));
  return o;
}

Outcome row_unit_initial() {
  Outcome o;
  auto ideal = ideal_of(2, {"y+dx+dy", "x+dx+dy+1"});
  for (const Weight& w : {Weight{1, 1}, Weight{2, 1}, Weight{1, 2}}) {
    auto r = bfunction_with_initial(ideal, w);
    o.check(r.initial.unit_ideal, "initial ideal at " + wstr(w) + (r.initial.unit_ideal ? " is" : " is not") +
                                      " the unit ideal");
    o.check(r.b.is_one(), "b" + wstr(w) + " = " + to_factored_string(r.b));
  }
  return o;
}

Outcome row_three_term_curve() {
  Outcome o;
  Polynomial f = parse_polynomial("y+x^3+y^2");
  Fan fan = dual_fan(f);
  std::set<RVec> got(fan.rays.begin(), fan.rays.end());
  std::set<RVec> want = {{1, 3}, {1, 0}, {-2, -3}};
  o.check(got == want, "dual fan rays");
  auto ann = annihilator(f, -1).ideal;
  auto in1 = initial_ideal(ann, {1, -1});
  o.check(same_ideal(in1.ideal, ideal_of(2, {"dx", "y^2*dy+2*y"})), "initial ideal at (1,-1)");
  auto in2 = initial_ideal(ann, {0, -1});
  o.check(same_ideal(in2.ideal, ideal_of(2, {"y*dx", "y^2*dy+2*y", "4*x^3*dx+6*x^2*y*dy+12*x^2-dx"})),
          "initial ideal at (0,-1)");
  return o;
}

Outcome row_x3y4() {
  Outcome o;
  Polynomial f = parse_polynomial("x^3+y^4");
  AnnOptions opts;
  opts.method = AnnMethod::briancon_maisonobe;
  auto bm = annihilator(f, -1, opts).ideal;
  auto listed = ideal_of(2, {"3*x^2*dy-4*y^3*dx", "4*x*dx+3*y*dy+12"});
  o.check(same_ideal(bm, listed), "annihilator of 1/f equals the two listed generators");
  expect_b(o, listed, {1, 1}, roots({-3, Rational(-10, 3), Rational(-11, 3)}));
  return o;
}

Outcome row_arrangement() {
  Outcome o;
  Polynomial f = parse_polynomial("x*y*(x+y)");
  auto ann = annihilator(f, -1).ideal;
  o.check(same_ideal(ann, ideal_of(2, {"x*dx+y*dy+3", "(x*y+y^2)*dy+x+2*y"})),
          "annihilator of 1/f equals the two listed generators");
  expect_b(o, ann, {1, -1}, roots({1, -1}));
  return o;
}

Outcome row_binary_cubic() {
  Outcome o;
  Polynomial f = parse_polynomial("x^3-x^2*y+2*y^3");
  auto ann = annihilator(f, -1).ideal;
  Weight w{2, 1};
  BFunction b = bfunction(ann, w);
  BFunction want = roots({-3, -4, -5});
  o.check(b == want, "b(2,1) = " + to_factored_string(b));
  BFunction bound = binary_homogeneous_bound(3, w);
  o.check(bound == roots({-3, -4, -5, -6}), "bound = " + to_factored_string(bound));
  o.check(divides(b.poly, bound.poly), "b divides the bound");
  UPoly sp = support_product(f, w);
  o.check(sp == roots({-6, -5, -3}).poly, "support product = (s+6)(s+5)(s+3)");
  o.check(!divides(b.poly, sp) && !divides(sp, b.poly), "b neither divides nor is divided by the support product");
  return o;
}

Outcome row_three_variables() {
  Outcome o;
  Polynomial f = parse_polynomial("x^3-x^2*y+2*y^3+2*z^2*x");
  auto ann = annihilator(f, -1);
  o.detail << "route: " << ann.route << "; ";
  expect_b(o, ann.ideal, {2, -1, 0}, roots({3, 2, Rational(4, 3), Rational(-1, 3), -1}));
  return o;
}

Outcome row_mu_constant() {
  Outcome o;
  Polynomial f0 = parse_polynomial("x^4+y^5");
  Polynomial f = parse_polynomial("x^4+y^5+x^2*y^3");
  auto a0 = annihilator(f0, -1).ideal;
  auto a1 = annihilator(f, -1).ideal;
  expect_b(o, a0, {5, 4}, roots({-20}));
  expect_b(o, a1, {5, 4}, roots({-20}));
  BFunction b0 = bfunction(a0, {-5, -4});
  BFunction b1 = bfunction(a1, {-5, -4});
  o.check(b0 == roots({20}), "f0 at (-5,-4): " + to_factored_string(b0));
  BFunction want = roots({9, 14, Rational(62, 3), 21, Rational(64, 3), 22});
  o.check(b1 == want, "f at (-5,-4): " + to_factored_string(b1));
  o.check(gcd(b0.poly, b1.poly).degree() == 0, "no common roots at (-5,-4)");
  return o;
}

}  // namespace

std::vector<CheckRow> run_reference_suite(const std::function<void(const CheckRow&)>& on_row) {
  struct RowSpec {
    const char* id;
    const char* description;
    Outcome (*fn)();
  };
  const RowSpec specs[] = {
      {"1a", "b(Ann(1)) = s on 8 compass weights", row_ann_one},
      {"1b", "unit initial ideal, b = 1 at (1,1), (2,1), (1,2)", row_unit_initial},
      {"1c", "y+x^3+y^2: dual fan and two initial ideals", row_three_term_curve},
      {"1d", "x^3+y^4: annihilator and b(1,1)", row_x3y4},
      {"1e", "xy(x+y): annihilator and b(1,-1)", row_arrangement},
      {"1f", "x^3-x^2y+2y^3: b(2,1), bound, support product", row_binary_cubic},
      {"1g", "x^3-x^2y+2y^3+2z^2x: b(2,-1,0)", row_three_variables},
      {"1h", "x^4+y^5 and x^4+y^5+x^2y^3 at (5,4) and (-5,-4)", row_mu_constant},
  };
  std::vector<CheckRow> out;
  for (const auto& s : specs) {
    CheckRow row{s.id, s.description, false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = s.fn();
      row.pass = o.pass;
      row.detail = o.detail.str();
    } catch (const std::exception& e) {
      row.pass = false;
      row.detail = std::string("error: ") + e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_row) on_row(row);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace wbf
