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

#include <doctest.h>

#include <fstream>

#include "weylgpd/errors.hpp"
#include "weylgpd_cli.hpp"

using namespace wgd;
using cli::dispatch;

namespace {

// Minimal structural validator for the subset used by the shipped schemas:
// type, required, properties, items, enum.
bool validate(const Json& schema, const Json& value, std::string* why) {
  if (schema.contains("type")) {
    std::string t = schema.at("type").get<std::string>();
    bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
              (t == "string" && value.is_string()) || (t == "integer" && value.is_number_integer()) ||
              (t == "boolean" && value.is_boolean()) || (t == "number" && value.is_number());
    if (!ok) {
      *why = "expected type " + t + ", got " + value.dump();
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& option : schema.at("enum"))
      if (option == value) hit = true;
    if (!hit) {
      *why = "value " + value.dump() + " not in enum";
      return false;
    }
  }
  if (schema.contains("required"))
    for (const auto& key : schema.at("required"))
      if (!value.contains(key.get<std::string>())) {
        *why = "missing required key " + key.get<std::string>();
        return false;
      }
  if (schema.contains("properties") && value.is_object())
    for (const auto& [key, sub] : schema.at("properties").items())
      if (value.contains(key) && !validate(sub, value.at(key), why)) return false;
  if (schema.contains("items") && value.is_array())
    for (const auto& item : value)
      if (!validate(schema.at("items"), item, why)) return false;
  return true;
}

Json load_schema(const std::string& name) {
  std::ifstream in(std::string(WEYLGPD_SCHEMA_DIR) + "/" + name + ".schema.json");
  REQUIRE(in.good());
  return Json::parse(in);
}

void check_schema(const std::string& name, const Json& output) {
  std::string why;
  bool ok = validate(load_schema(name), output, &why);
  INFO(name, ": ", why, " in ", output.dump());
  CHECK(ok);
}

}  // namespace

TEST_CASE("root and point text round trips") {
  Setting s = make_setting(SuperType::make_osp(5, 2), Space::Additive);
  for (const char* text : {"e1-d1", "e1+d2", "2d1", "-e2", "e1-e2"}) {
    Root a = root_from_string(s, text);
    CHECK(root_to_string(s.type(), a) == text);
  }
  CHECK_THROWS_AS(root_from_string(s, "z9"), ParseError);
  Point p = {Rational(3), Rational(1), Rational(-1, 2), Rational(0)};
  CHECK(point_from_json(s, point_to_json(s, p)) == p);
}

TEST_CASE("describe") {
  auto r = dispatch({"describe", "--type", "q", "--n", "3"});
  CHECK(r.exit_code == 0);
  check_schema("describe", r.output);
  CHECK(r.output["weyl_order"] == 6);
  CHECK(r.output["defect"] == 1);
  CHECK(r.output["omega"].size() == 3);
}

TEST_CASE("check membership") {
  auto reject = dispatch({"check", "--type", "gl", "--m", "1", "--n", "1", "--space", "additive",
                          "--poly", "X1"});
  CHECK(reject.exit_code == 0);
  check_schema("check", reject.output);
  CHECK(reject.output["member"] == false);
  auto accept = dispatch({"check", "--type", "gl", "--m", "1", "--n", "1", "--space", "additive",
                          "--poly", "X1+Y1"});
  CHECK(accept.output["member"] == true);
  auto strict = dispatch({"check", "--type", "gl", "--m", "2", "--n", "2", "--space", "additive",
                          "--poly", "X1^2 + X2^2 - Y1^2 - Y2^2", "--strict"});
  CHECK(strict.output["member"] == true);

  // determinism: identical invocations produce byte-identical output
  auto again = dispatch({"check", "--type", "gl", "--m", "1", "--n", "1", "--space", "additive",
                         "--poly", "X1"});
  CHECK(again.output.dump() == reject.output.dump());
}

TEST_CASE("telem and ev") {
  auto t = dispatch({"telem", "--type", "q", "--n", "3", "--space", "additive"});
  CHECK(t.exit_code == 0);
  check_schema("telem", t.output);
  auto e = dispatch({"ev", "--type", "gl", "--m", "2", "--n", "1", "--space", "additive",
                     "--poly", "X1*X2 + X1*Y1 + X2*Y1 + Y1^2"});
  CHECK(e.exit_code == 0);
  check_schema("ev", e.output);
  CHECK(e.output["image"] == "0");
}

TEST_CASE("atyp, orbit, equiv") {
  auto a = dispatch({"atyp", "--type", "gl", "--m", "2", "--n", "1", "--space", "additive",
                     "--point", R"({"eps":["3","1"],"delta":["-1"]})"});
  CHECK(a.exit_code == 0);
  check_schema("atyp", a.output);
  CHECK(a.output["atyp"] == 1);

  auto o = dispatch({"orbit", "--type", "gl", "--m", "2", "--n", "1", "--space", "additive",
                     "--point", R"({"eps":["3","1"],"delta":["-1"]})"});
  check_schema("orbit", o.output);
  CHECK(o.output["dim"] == 1);

  auto eq = dispatch({"equiv", "--type", "gl", "--m", "1", "--n", "1", "--space", "additive",
                      "--a", R"({"eps":["1"],"delta":["-1"]})",
                      "--b", R"({"eps":["5"],"delta":["-5"]})"});
  check_schema("equiv", eq.output);
  CHECK(eq.output["equivalent"] == true);
}

TEST_CASE("groebner subcommand") {
  std::string ideal = R"({"ring":{"vars":["X1","X2","X3"],"mode":"affine"},)"
                      R"("generators":["X1^2 - X2","X1^3 - X3"]})";
  auto gb = dispatch({"groebner", "--ideal", ideal, "--order", "lex"});
  CHECK(gb.exit_code == 0);
  check_schema("groebner", gb.output);
  auto elim = dispatch({"groebner", "--ideal", ideal, "--eliminate", "X1"});
  check_schema("groebner", elim.output);
  REQUIRE(elim.output["generators"].size() == 1);
  CHECK(elim.output["generators"][0] == "X2^3 - X3^2");
  auto rad = dispatch({"groebner", "--ideal",
                       R"({"ring":{"vars":["X1"],"mode":"affine"},"generators":["X1^2"]})",
                       "--radical-member", "X1"});
  CHECK(rad.output["radical_member"] == true);
}

TEST_CASE("sclosure and orbitideal") {
  std::string ideal = R"({"generators":["X1 - 1","Y1 + 1"]})";
  auto sc = dispatch({"sclosure", "--type", "gl", "--m", "1", "--n", "1", "--space", "additive",
                      "--ideal", ideal});
  CHECK(sc.exit_code == 0);
  check_schema("sclosure", sc.output);
  CHECK(sc.output["atypV"] == 1);
  CHECK(sc.output["superalgebraic_input"] == false);

  auto oi = dispatch({"orbitideal", "--type", "gl", "--m", "1", "--n", "1", "--space", "additive",
                      "--point", R"({"eps":["2"],"delta":["-2"]})"});
  check_schema("orbitideal", oi.output);
  CHECK(oi.output["ideal"]["generators"][0] == "X1 + Y1");
}

TEST_CASE("selftest single criterion") {
  auto st = dispatch({"selftest", "--only", "1"});
  CHECK(st.exit_code == 0);
  check_schema("selftest", st.output);
  CHECK(st.output["all_passed"] == true);
}

TEST_CASE("exit code contract") {
  // 1: malformed input
  auto bad_json = dispatch({"atyp", "--type", "gl", "--m", "1", "--n", "1", "--point", "{oops"});
  CHECK(bad_json.exit_code == 1);
  check_schema("error", bad_json.output);
  auto bad_poly = dispatch({"check", "--type", "gl", "--m", "1", "--n", "1", "--poly", "Z7"});
  CHECK(bad_poly.exit_code == 1);

  // 2: unsupported (type, space) and domain errors
  auto p_additive = dispatch({"check", "--type", "p", "--n", "3", "--space", "additive",
                              "--poly", "X1"});
  CHECK(p_additive.exit_code == 2);
  check_schema("error", p_additive.output);
  auto bad_type = dispatch({"describe", "--type", "sl", "--m", "2", "--n", "2"});
  CHECK(bad_type.exit_code == 2);
  auto zero_coord = dispatch({"atyp", "--type", "q", "--n", "2", "--space", "multiplicative",
                              "--point", R"({"x":["1","0"]})"});
  CHECK(zero_coord.exit_code == 2);

  // 3: budget exhaustion
  auto budget = dispatch({"groebner", "--ideal",
                          R"({"ring":{"vars":["X1","X2","X3"],"mode":"affine"},)"
                          R"("generators":["X1^2 - X2","X1^3 - X3","X2^2 - X1*X3"]})",
                          "--order", "lex", "--max-pairs", "1"});
  CHECK(budget.exit_code == 3);
  check_schema("error", budget.output);
}
