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

#include "weylgpd/json_io.hpp"

#include <cctype>

#include "weylgpd/errors.hpp"
#include "weylgpd/poly_text.hpp"

namespace wgd {

namespace {

Json rationals_to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const Rational& c : v) arr.push_back(rational_to_string(c));
  return arr;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rational strings");
  std::vector<Rational> out;
  for (const auto& item : j) {
    if (item.is_number_integer())
      out.push_back(Rational(item.get<long>()));
    else
      out.push_back(rational_from_string(item.get<std::string>()));
  }
  return out;
}

}  // namespace

Json supertype_to_json(const SuperType& type) {
  Json j;
  j["family"] = family_name(type.family);
  switch (type.family) {
    case Family::gl:
    case Family::sl:
      j["m"] = type.m;
      j["n"] = type.n;
      break;
    case Family::osp:
      j["r"] = type.r;
      j["n"] = type.n;
      break;
    case Family::p:
    case Family::q:
      j["n"] = type.n;
      break;
  }
  return j;
}

SuperType supertype_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family")) throw ParseError("type descriptor needs a family");
  std::string fam = j.at("family").get<std::string>();
  auto geti = [&](const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("type descriptor needs '") + key + "'");
    return j.at(key).get<int>();
  };
  if (fam == "gl") return SuperType::make_gl(geti("m"), geti("n"));
  if (fam == "sl") return SuperType::make_sl(geti("m"), geti("n"));
  if (fam == "osp") return SuperType::make_osp(geti("r"), geti("n"));
  if (fam == "p") return SuperType::make_p(geti("n"));
  if (fam == "q") return SuperType::make_q(geti("n"));
  throw ParseError("unknown family '" + fam + "'");
}

Space space_from_string(const std::string& s) {
  if (s == "additive") return Space::Additive;
  if (s == "multiplicative" || s == "torus") return Space::Multiplicative;
  throw ParseError("unknown space '" + s + "' (want additive|multiplicative)");
}

Json point_to_json(const Setting& setting, const Point& p) {
  int ne = setting.type().num_eps();
  std::vector<Rational> eps(p.begin(), p.begin() + ne);
  std::vector<Rational> delta(p.begin() + ne, p.end());
  Json j;
  if (setting.additive()) {
    j["eps"] = rationals_to_json(eps);
    if (setting.type().num_delta() > 0) j["delta"] = rationals_to_json(delta);
  } else {
    j["x"] = rationals_to_json(eps);
    if (setting.type().num_delta() > 0) j["y"] = rationals_to_json(delta);
  }
  return j;
}

Point point_from_json(const Setting& setting, const Json& j) {
  const char* eps_key = setting.additive() ? "eps" : "x";
  const char* delta_key = setting.additive() ? "delta" : "y";
  if (!j.is_object() || !j.contains(eps_key))
    throw ParseError(std::string("point needs '") + eps_key + "'");
  Point p = rationals_from_json(j.at(eps_key));
  if (setting.type().num_delta() > 0) {
    if (!j.contains(delta_key)) throw ParseError(std::string("point needs '") + delta_key + "'");
    std::vector<Rational> d = rationals_from_json(j.at(delta_key));
    p.insert(p.end(), d.begin(), d.end());
  }
  validate_point(setting, p);
  return p;
}

Json root_to_json(const Setting& setting, const Root& a) {
  return root_to_string(setting.type(), a);
}

Root root_from_string(const Setting& setting, const std::string& text) {
  int ne = setting.type().num_eps();
  int dim = setting.rs->dim();
  Root a(dim, Rational(0));
  size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    long coef = 1;
    if (pos > start) coef = std::stol(text.substr(start, pos - start));
    if (pos >= text.size() || (text[pos] != 'e' && text[pos] != 'd'))
      throw ParseError("bad root term in '" + text + "'");
    bool eps = text[pos] == 'e';
    ++pos;
    start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("bad root index in '" + text + "'");
    int idx = std::stoi(text.substr(start, pos - start)) - 1;
    int var = eps ? idx : ne + idx;
    if (idx < 0 || var >= dim || (!eps && setting.type().num_delta() == 0))
      throw ParseError("root label out of range in '" + text + "'");
    a[var] += sign * coef;
    any = true;
  }
  if (!any) throw ParseError("empty root text");
  return a;
}

Json ring_to_json(const RingPtr& ring) {
  Json j;
  j["vars"] = ring->names();
  j["mode"] = ring->laurent() ? "laurent" : "affine";
  return j;
}

RingPtr ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("mode"))
    throw ParseError("ring descriptor needs 'vars' and 'mode'");
  std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
  std::string mode = j.at("mode").get<std::string>();
  if (mode != "affine" && mode != "laurent") throw ParseError("ring mode must be affine|laurent");
  return make_ring(std::move(names), mode == "laurent" ? RingMode::Laurent : RingMode::Affine);
}

Json ideal_to_json(const IdealPresentation& ideal) {
  Json j;
  j["ring"] = ring_to_json(ideal.ring());
  Json gens = Json::array();
  for (const Polynomial& g : ideal.generators()) gens.push_back(format_polynomial(g));
  j["generators"] = gens;
  if (const auto& cache = ideal.cache_slot()) {
    Json gb;
    gb["order"] = cache->order.tag();
    Json basis = Json::array();
    for (const Polynomial& g : cache->basis) basis.push_back(format_polynomial(g));
    gb["basis"] = basis;
    j["groebner"] = gb;
  }
  return j;
}

IdealPresentation ideal_from_json(const Json& j, const RingPtr& expected_ring) {
  if (!j.is_object() || !j.contains("generators"))
    throw ParseError("ideal payload needs 'generators'");
  RingPtr ring = expected_ring;
  if (j.contains("ring")) {
    RingPtr declared = ring_from_json(j.at("ring"));
    if (ring && !ring->same_as(*declared))
      throw DomainError("ideal ring does not match the requested setting");
    if (!ring) ring = declared;
  }
  if (!ring) throw ParseError("ideal payload needs a 'ring' descriptor");
  std::vector<Polynomial> gens;
  for (const auto& item : j.at("generators"))
    gens.push_back(parse_polynomial(ring, item.get<std::string>()));
  return IdealPresentation(ring, std::move(gens));
}

Json orbit_description_to_json(const Setting& setting, const OrbitDescription& d) {
  Json j;
  j["base"] = point_to_json(setting, d.base);
  Json e = Json::array();
  for (const Root& a : d.e_set) e.push_back(root_to_string(setting.type(), a));
  Json f = Json::array();
  for (const Root& a : d.f_set) f.push_back(root_to_string(setting.type(), a));
  j["E"] = e;
  j["F"] = f;
  j["dim"] = d.dim;
  return j;
}

Json witness_to_json(const Setting& setting, const OrbitWitness& w) {
  Json taus = Json::array();
  for (const auto& [alpha, t] : w.taus) {
    Json g;
    g["kind"] = "tau";
    g["alpha"] = root_to_string(setting.type(), alpha);
    g["t"] = rational_to_string(t);
    taus.push_back(g);
  }
  Json weyl;
  weyl["kind"] = "weyl";
  Json img = Json::array(), sign = Json::array();
  for (int v = 0; v < w.w.size(); ++v) {
    img.push_back(w.w.image_of(v));
    sign.push_back(w.w.sign_of(v));
  }
  weyl["img"] = img;
  weyl["sign"] = sign;
  Json j;
  j["taus"] = taus;
  j["weyl"] = weyl;
  return j;
}

Json sclosure_to_json(const Setting& setting, const SClosureResult& r) {
  Json j;
  j["atypV"] = r.atyp_v;
  Json levels = Json::array();
  for (const IdealPresentation& level : r.levels) levels.push_back(ideal_to_json(level));
  j["levels"] = levels;
  j["closure"] = ideal_to_json(r.closure);
  Json flags = Json::array();
  for (const GeneratorFlag& f : r.symmetrized) {
    Json item;
    item["generator"] = format_polynomial(f.generator);
    item["symmetrized"] = format_polynomial(f.symmetrized);
    item["supersymmetric"] = f.supersymmetric;
    flags.push_back(item);
  }
  j["symmetrized_generators"] = flags;
  return j;
}

}  // namespace wgd
