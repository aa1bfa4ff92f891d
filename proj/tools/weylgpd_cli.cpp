// Copyright 2026 The weylgpd authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weylgpd_cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "weylgpd/errors.hpp"
#include "weylgpd/poly_text.hpp"
#include "weylgpd/selftest.hpp"

namespace wgd::cli {

namespace {

struct CommonOptions {
  std::string family;
  int m = -1, n = -1, r = -1;
  std::string space = "additive";
  long max_pairs = 0, max_degree = 0;
  std::string z_convention = "beta";
  std::string out_path;
};

void add_type_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--type", opt.family, "family: gl|sl|osp|p|q")->required();
  cmd->add_option("--m", opt.m, "eps rank (gl/sl)");
  cmd->add_option("--n", opt.n, "delta rank (gl/sl/osp) or rank (p/q)");
  cmd->add_option("--r", opt.r, "odd dimension r (osp)");
}

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--space", opt.space, "additive|multiplicative");
  cmd->add_option("--max-pairs", opt.max_pairs, "Groebner S-pair budget");
  cmd->add_option("--max-degree", opt.max_degree, "Groebner degree budget");
  cmd->add_option("--out", opt.out_path, "write the JSON result to a file");
}

SuperType type_from_options(const CommonOptions& opt) {
  Json j;
  j["family"] = opt.family;
  if (opt.m >= 0) j["m"] = opt.m;
  if (opt.n >= 0) j["n"] = opt.n;
  if (opt.r >= 0) j["r"] = opt.r;
  return supertype_from_json(j);
}

GroebnerBudget budget_from_options(const CommonOptions& opt) {
  GroebnerBudget budget;
  if (const char* env = std::getenv("WEYLGPD_MAX_PAIRS")) budget.max_pairs = std::atol(env);
  if (const char* env = std::getenv("WEYLGPD_MAX_DEGREE")) budget.max_degree = std::atol(env);
  if (opt.max_pairs > 0) budget.max_pairs = opt.max_pairs;
  if (opt.max_degree > 0) budget.max_degree = opt.max_degree;
  return budget;
}

ZConvention z_from_options(const CommonOptions& opt) {
  if (opt.z_convention == "beta") return ZConvention::HBeta;
  if (opt.z_convention == "sigma") return ZConvention::HSigmaBeta;
  throw ParseError("--z-convention must be beta|sigma");
}

// Inline JSON, or @path to load a file.
Json load_json_arg(const std::string& text) {
  std::string payload = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw ParseError("cannot open '" + text.substr(1) + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    payload = buffer.str();
  }
  try {
    return Json::parse(payload);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Setting setting_from(const CommonOptions& opt) {
  return make_setting(type_from_options(opt), space_from_string(opt.space));
}

Json describe_type(const CommonOptions& opt) {
  SuperType type = type_from_options(opt);
  RootSystemPtr rs = build_root_system(type);
  Json j;
  j["paper_ref"] = "root data, bilinear form and Weyl group of the classical families";
  j["type"] = supertype_to_json(type);
  auto roots = [&](const std::vector<Root>& list) {
    Json arr = Json::array();
    for (const Root& a : list) arr.push_back(root_to_string(type, a));
    return arr;
  };
  j["even_roots"] = roots(rs->even_roots);
  j["odd_roots"] = roots(rs->odd_roots);
  j["isotropic"] = roots(rs->isotropic);
  j["omega"] = roots(rs->omega);
  j["standard_chain"] = roots(rs->standard_chain);
  j["defect"] = rs->defect;
  j["weyl_order"] = rs->weyl_elements.size();
  Json gram = Json::array();
  for (const Rational& g : rs->gram_diag) gram.push_back(rational_to_string(g));
  j["gram_diagonal"] = gram;
  return j;
}

Json run_check(const CommonOptions& opt, const std::string& poly, bool strict) {
  Setting setting = setting_from(opt);
  Polynomial f = parse_polynomial(setting.ring, poly);
  MembershipReport report = is_supersymmetric_report(f, setting, strict);
  Json j;
  j["paper_ref"] = "defining conditions of the invariant algebra";
  j["setting"] = setting.to_string();
  j["poly"] = format_polynomial(f);
  j["member"] = report.member;
  j["witness"] = report.witness;
  return j;
}

Json run_telem(const CommonOptions& opt) {
  Setting setting = setting_from(opt);
  TElement T = t_element(setting);
  Json j;
  j["paper_ref"] = "kernel generator of the rank-lowering evaluation";
  j["setting"] = setting.to_string();
  j["t"] = format_polynomial(T.poly);
  j["verified"] = Json{{"w_invariant", true}, {"member", true}, {"ev_zero", true}};
  return j;
}

Json run_ev(const CommonOptions& opt, const std::string& poly) {
  Setting setting = setting_from(opt);
  Polynomial f = parse_polynomial(setting.ring, poly);
  EvResult image = ev_map(f, setting);
  Json j;
  j["paper_ref"] = "rank-lowering evaluation homomorphism";
  j["setting"] = setting.to_string();
  j["target"] = supertype_to_json(image.target.type());
  j["image"] = format_polynomial(image.image);
  return j;
}

Json run_atyp(const CommonOptions& opt, const std::string& point_json) {
  Setting setting = setting_from(opt);
  Point p = point_from_json(setting, load_json_arg(point_json));
  IncidenceData data = maximal_isoset_at(setting, p);
  Json j;
  j["paper_ref"] = "degree of atypicality via iso-set incidence";
  j["setting"] = setting.to_string();
  j["atyp"] = atyp(setting, p);
  Json e = Json::array(), f = Json::array();
  for (const Root& a : data.e_set) e.push_back(root_to_string(setting.type(), a));
  for (const Root& a : data.f_set) f.push_back(root_to_string(setting.type(), a));
  j["E"] = e;
  j["F"] = f;
  return j;
}

Json run_orbit(const CommonOptions& opt, const std::string& point_json) {
  Setting setting = setting_from(opt);
  Point p = point_from_json(setting, load_json_arg(point_json));
  OrbitDescription d = orbit_description(setting, p);
  Json j = orbit_description_to_json(setting, d);
  j["paper_ref"] = "orbits are finite unions of iso-parameter families";
  j["setting"] = setting.to_string();
  return j;
}

Json run_equiv(const CommonOptions& opt, const std::string& a_json, const std::string& b_json) {
  Setting setting = setting_from(opt);
  Point a = point_from_json(setting, load_json_arg(a_json));
  Point b = point_from_json(setting, load_json_arg(b_json));
  std::optional<OrbitWitness> witness = orbit_contains(setting, a, b);
  bool reverse = false;
  if (!witness) {
    witness = orbit_contains(setting, b, a);
    reverse = witness.has_value();
  }
  Json j;
  j["paper_ref"] = "orbit equivalence of points";
  j["setting"] = setting.to_string();
  j["equivalent"] = witness.has_value();
  if (witness) {
    j["witness"] = witness_to_json(setting, *witness);
    j["witness_direction"] = reverse ? "b_to_a" : "a_to_b";
  }
  return j;
}

Json run_groebner(const CommonOptions& opt, const std::string& ideal_arg,
                  const std::string& order_name, const std::string& eliminate,
                  const std::string& nf_poly, const std::string& radical_poly,
                  const std::string& intersect_arg) {
  GroebnerBudget budget = budget_from_options(opt);
  Json payload = load_json_arg(ideal_arg);
  IdealPresentation ideal = ideal_from_json(payload);
  Json j;
  j["paper_ref"] = "reduced Groebner bases, elimination and intersection";
  j["ring"] = ring_to_json(ideal.ring());

  bool laurent = ideal.ring()->laurent();
  auto poly_list = [&](const std::vector<Polynomial>& polys) {
    Json arr = Json::array();
    for (const Polynomial& g : polys) arr.push_back(format_polynomial(g));
    return arr;
  };

  if (!eliminate.empty()) {
    std::vector<int> drop;
    std::stringstream ss(eliminate);
    std::string name;
    while (std::getline(ss, name, ',')) {
      int v = ideal.ring()->index_of(name);
      if (v < 0) throw DomainError("unknown variable '" + name + "'");
      drop.push_back(v);
    }
    IdealPresentation out = laurent ? laurent_elimination_ideal(ideal, drop, budget)
                                    : elimination_ideal(ideal, drop, budget);
    j["eliminated"] = eliminate;
    j["generators"] = poly_list(out.generators());
    return j;
  }
  if (!intersect_arg.empty()) {
    IdealPresentation other = ideal_from_json(load_json_arg(intersect_arg), ideal.ring());
    IdealPresentation out = laurent ? laurent_ideal_intersect(ideal, other, budget)
                                    : ideal_intersect(ideal, other, budget);
    j["generators"] = poly_list(out.generators());
    return j;
  }
  if (!nf_poly.empty()) {
    if (laurent) throw DomainError("normal form needs an affine ring");
    Polynomial f = parse_polynomial(ideal.ring(), nf_poly);
    MonomialOrder order = order_name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    j["normal_form"] = format_polynomial(normal_form(f, ideal, order, budget));
    j["member"] = normal_form(f, ideal, order, budget).is_zero();
    return j;
  }
  if (!radical_poly.empty()) {
    Polynomial f = parse_polynomial(ideal.ring(), radical_poly);
    bool member = laurent ? laurent_radical_membership(f, ideal, budget)
                          : radical_membership(f, ideal, budget);
    j["radical_member"] = member;
    return j;
  }
  if (laurent) {
    LaurentChart chart = laurent_to_affine(ideal);
    j["chart_ring"] = ring_to_json(chart.affine.ring());
    j["generators"] = poly_list(
        reduced_groebner_basis(chart.affine,
                               order_name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex(),
                               budget));
    return j;
  }
  MonomialOrder order = order_name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
  j["order"] = order.tag();
  j["generators"] = poly_list(reduced_groebner_basis(ideal, order, budget));
  return j;
}

Json run_sclosure(const CommonOptions& opt, const std::string& ideal_arg) {
  Setting setting = setting_from(opt);
  GroebnerBudget budget = budget_from_options(opt);
  IdealPresentation ideal = ideal_from_json(load_json_arg(ideal_arg), setting.ring);
  ClosedSet v = make_closed_set(setting, ideal, budget);
  SClosureResult r = s_closure(setting, v, z_from_options(opt), budget);
  Json j = sclosure_to_json(setting, r);
  j["paper_ref"] = "S-closure through level elimination ideals and Weyl unions";
  j["setting"] = setting.to_string();
  j["z_convention"] = opt.z_convention;
  j["superalgebraic_input"] = same_zero_set(setting, v.ideal, r.closure, budget);
  return j;
}

Json run_orbitideal(const CommonOptions& opt, const std::string& point_json) {
  Setting setting = setting_from(opt);
  GroebnerBudget budget = budget_from_options(opt);
  Point p = point_from_json(setting, load_json_arg(point_json));
  IdealPresentation orbit = orbit_closure_ideal(setting, p, budget);
  Json j;
  j["paper_ref"] = "vanishing ideal of an orbit closure";
  j["setting"] = setting.to_string();
  j["ideal"] = ideal_to_json(orbit);
  return j;
}

Json run_selftest(uint64_t seed, int only, bool table) {
  Json j;
  j["paper_ref"] = "acceptance criteria";
  Json rows = Json::array();
  bool all = true;
  std::vector<CriterionResult> results;
  if (only)
    results.push_back(run_acceptance_criterion(only, seed));
  else
    results = run_acceptance_suite(seed);
  for (const CriterionResult& r : results) {
    Json row;
    row["id"] = r.id;
    row["name"] = r.name;
    row["passed"] = r.passed;
    row["detail"] = r.detail;
    rows.push_back(row);
    all = all && r.passed;
  }
  j["criteria"] = rows;
  j["all_passed"] = all;
  if (table) {
    std::ostringstream os;
    for (const CriterionResult& r : results)
      os << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.name << "  [" << r.detail << "]\n";
    j["table"] = os.str();
  }
  return j;
}

}  // namespace

DispatchResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"exact invariant-algebra and Weyl-groupoid computations"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string poly, point_json, a_json, b_json, ideal_arg, order_name = "grevlex";
  std::string eliminate, nf_poly, radical_poly, intersect_arg;
  bool strict = false, table = false;
  uint64_t seed = 20260809;
  int only = 0;

  CLI::App* describe = app.add_subcommand("describe", "root data of one type");
  add_type_flags(describe, opt);
  add_common_flags(describe, opt);

  CLI::App* check = app.add_subcommand("check", "membership oracle for the invariant algebra");
  add_type_flags(check, opt);
  add_common_flags(check, opt);
  check->add_option("--poly", poly)->required();
  check->add_flag("--strict", strict, "check every Omega root, not one per orbit");

  CLI::App* telem = app.add_subcommand("telem", "the distinguished element T");
  add_type_flags(telem, opt);
  add_common_flags(telem, opt);

  CLI::App* ev = app.add_subcommand("ev", "rank-lowering evaluation of a polynomial");
  add_type_flags(ev, opt);
  add_common_flags(ev, opt);
  ev->add_option("--poly", poly)->required();

  CLI::App* atyp_cmd = app.add_subcommand("atyp", "degree of atypicality of a point");
  add_type_flags(atyp_cmd, opt);
  add_common_flags(atyp_cmd, opt);
  atyp_cmd->add_option("--point", point_json, "point JSON (or @file)")->required();

  CLI::App* orbit = app.add_subcommand("orbit", "orbit description of a point");
  add_type_flags(orbit, opt);
  add_common_flags(orbit, opt);
  orbit->add_option("--point", point_json)->required();

  CLI::App* equiv = app.add_subcommand("equiv", "orbit equivalence of two points");
  add_type_flags(equiv, opt);
  add_common_flags(equiv, opt);
  equiv->add_option("--a", a_json)->required();
  equiv->add_option("--b", b_json)->required();

  CLI::App* groebner = app.add_subcommand("groebner", "Groebner basis operations on an ideal");
  groebner->add_option("--ideal", ideal_arg, "ideal JSON (or @file)")->required();
  groebner->add_option("--order", order_name, "lex|grevlex");
  groebner->add_option("--eliminate", eliminate, "comma-separated variables to eliminate");
  groebner->add_option("--normal-form", nf_poly, "reduce this polynomial");
  groebner->add_option("--radical-member", radical_poly, "radical membership of this polynomial");
  groebner->add_option("--intersect", intersect_arg, "intersect with this ideal JSON (or @file)");
  groebner->add_option("--max-pairs", opt.max_pairs);
  groebner->add_option("--max-degree", opt.max_degree);
  groebner->add_option("--out", opt.out_path);

  CLI::App* sclosure = app.add_subcommand("sclosure", "S-closure of a W-invariant closed set");
  add_type_flags(sclosure, opt);
  add_common_flags(sclosure, opt);
  sclosure->add_option("--ideal", ideal_arg)->required();
  sclosure->add_option("--z-convention", opt.z_convention, "beta|sigma");

  CLI::App* orbitideal = app.add_subcommand("orbitideal", "vanishing ideal of an orbit");
  add_type_flags(orbitideal, opt);
  add_common_flags(orbitideal, opt);
  orbitideal->add_option("--point", point_json)->required();

  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", seed);
  selftest->add_option("--only", only, "run a single criterion (1..8)");
  selftest->add_flag("--table", table, "include a human-readable table");
  selftest->add_option("--out", opt.out_path);

  DispatchResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    Json out;
    if (*describe) out = describe_type(opt);
    else if (*check) out = run_check(opt, poly, strict);
    else if (*telem) out = run_telem(opt);
    else if (*ev) out = run_ev(opt, poly);
    else if (*atyp_cmd) out = run_atyp(opt, point_json);
    else if (*orbit) out = run_orbit(opt, point_json);
    else if (*equiv) out = run_equiv(opt, a_json, b_json);
    else if (*groebner) out = run_groebner(opt, ideal_arg, order_name, eliminate, nf_poly,
                                           radical_poly, intersect_arg);
    else if (*sclosure) out = run_sclosure(opt, ideal_arg);
    else if (*orbitideal) out = run_orbitideal(opt, point_json);
    else if (*selftest) {
      out = run_selftest(seed, only, table);
      result.exit_code = out["all_passed"].get<bool>() ? 0 : 1;
    }
    result.output = out;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 1;
    result.output = Json{{"error", e.what()}, {"kind", "usage"}};
    return result;
  } catch (const ParseError& e) {
    result.exit_code = 1;
    result.output = Json{{"error", e.what()}, {"kind", "parse"}};
    return result;
  } catch (const BudgetExceededError& e) {
    result.exit_code = 3;
    result.output = Json{{"error", e.what()}, {"kind", "budget"}};
    return result;
  } catch (const DomainError& e) {
    result.exit_code = 2;
    result.output = Json{{"error", e.what()}, {"kind", "domain"}};
    return result;
  } catch (const Error& e) {
    result.exit_code = 2;
    result.output = Json{{"error", e.what()}, {"kind", "domain"}};
    return result;
  }

  if (!opt.out_path.empty()) {
    std::ofstream outfile(opt.out_path);
    outfile << result.output.dump(2) << "\n";
  }
  return result;
}

}  // namespace wgd::cli
