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

#include <random>

#include "weylgpd/errors.hpp"
#include "weylgpd/groupoid.hpp"
#include "weylgpd/invariants.hpp"
#include "weylgpd/poly_text.hpp"

using namespace wgd;

namespace {

Polynomial P(const Setting& s, const char* text) { return parse_polynomial(s.ring, text); }

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int max_deg) {
  std::uniform_int_distribution<int> coef(-4, 4);
  Polynomial f(ring);
  for (int t = 0; t < 4; ++t) {
    std::vector<Monomial::Entry> entries;
    int budget = max_deg;
    for (int v = 0; v < ring->arity(); ++v) {
      int lo = ring->laurent() ? -1 : 0;
      std::uniform_int_distribution<int> e(lo, std::max(lo, std::min(budget, 2)));
      int ev = e(rng);
      if (ev > 0) budget -= ev;
      if (ev) entries.push_back({v, ev});
    }
    f.add_term(Monomial::from_entries(std::move(entries)), coef(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("setting construction") {
  CHECK_THROWS_AS(make_setting(SuperType::make_p(3), Space::Additive), DomainError);
  SettingOptions experimental;
  experimental.allow_experimental = true;
  Setting p3 = make_setting(SuperType::make_p(3), Space::Additive, experimental);
  CHECK(p3.experimental);
  Setting q3 = make_setting(SuperType::make_q(3), Space::Multiplicative);
  CHECK(q3.ring->laurent());
  CHECK(q3.ring->names() == std::vector<std::string>{"x1", "x2", "x3"});
  Setting gl = make_setting(SuperType::make_gl(2, 1), Space::Additive);
  CHECK(gl.ring->names() == std::vector<std::string>{"X1", "X2", "Y1"});
}

TEST_CASE("is_w_invariant") {
  Setting gl21 = make_setting(SuperType::make_gl(2, 1), Space::Additive);
  CHECK(is_w_invariant(P(gl21, "X1 + X2 + Y1"), gl21));
  CHECK(!is_w_invariant(P(gl21, "X1"), gl21));
  Setting osp = make_setting(SuperType::make_osp(5, 1), Space::Multiplicative);
  CHECK(is_w_invariant(P(osp, "x1 + x1^-1 + x2 + x2^-1"), osp));
  CHECK(!is_w_invariant(P(osp, "x1 + x2"), osp));
}

TEST_CASE("membership oracle") {
  SUBCASE("gl(1|1): k + T S(h)") {
    Setting s = make_setting(SuperType::make_gl(1, 1), Space::Additive);
    CHECK(is_supersymmetric(P(s, "1"), s));
    CHECK(is_supersymmetric(P(s, "X1 + Y1"), s));
    CHECK(!is_supersymmetric(P(s, "X1"), s));
    CHECK(is_supersymmetric(P(s, "X1^2 + X1*Y1"), s));
    MembershipReport r = is_supersymmetric_report(P(s, "X1"), s);
    CHECK(!r.member);
    CHECK(!r.witness.empty());
  }
  SUBCASE("sign rule for gl power sums") {
    Setting s = make_setting(SuperType::make_gl(2, 1), Space::Additive);
    for (int r = 1; r <= 3; ++r) {
      Polynomial xs(s.ring), ys(s.ring);
      xs.add_term(Monomial::variable(0, r), 1);
      xs.add_term(Monomial::variable(1, r), 1);
      ys.add_term(Monomial::variable(2, r), 1);
      Polynomial plus = xs + ys, minus = xs - ys;
      Polynomial accepted = r % 2 == 1 ? plus : minus;  // (-1)^(r+1) rule
      Polynomial rejected = r % 2 == 1 ? minus : plus;
      CHECK(is_supersymmetric(accepted, s, true));
      CHECK(!is_supersymmetric(rejected, s, true));
    }
  }
  SUBCASE("q(2) substitutions") {
    Setting s = make_setting(SuperType::make_q(2), Space::Additive);
    CHECK(is_supersymmetric(P(s, "X1 + X2"), s));
    CHECK(!is_supersymmetric(P(s, "X1*X2"), s));
    CHECK(is_supersymmetric(P(s, "X1^3 + X2^3"), s));
  }
  SUBCASE("multiplicative gl via the derivation condition") {
    Setting s = make_setting(SuperType::make_gl(2, 2), Space::Multiplicative);
    CHECK(is_supersymmetric(P(s, "x1 + x2 - y1 - y2"), s));
    CHECK(is_supersymmetric(P(s, "x1^-1 + x2^-1 - y1^-1 - y2^-1"), s));
    CHECK(!is_supersymmetric(P(s, "x1 + x2 + y1 + y2"), s));
    CHECK(!is_supersymmetric(P(s, "x1 + x2"), s));
  }
  SUBCASE("p(2) multiplicative") {
    Setting s = make_setting(SuperType::make_p(2), Space::Multiplicative);
    CHECK(is_supersymmetric(P(s, "1 - x1*x2"), s));
    CHECK(!is_supersymmetric(P(s, "x1 + x2"), s));
  }
  SUBCASE("strict mode agrees with the representative mode") {
    std::mt19937_64 rng(61);
    Setting s = make_setting(SuperType::make_gl(2, 2), Space::Additive);
    for (int k = 0; k < 25; ++k) {
      Polynomial f = reynolds(random_poly(rng, s.ring, 3), s.rs->weyl_elements);
      CHECK(is_supersymmetric(f, s) == is_supersymmetric(f, s, true));
    }
  }
}

TEST_CASE("t_element") {
  SUBCASE("frozen shapes") {
    Setting gl21 = make_setting(SuperType::make_gl(2, 1), Space::Additive);
    CHECK(t_element(gl21).poly == P(gl21, "X1*X2 + X1*Y1 + X2*Y1 + Y1^2"));
    Setting q3 = make_setting(SuperType::make_q(3), Space::Additive);
    CHECK(t_element(q3).poly ==
          P(q3, "X1^2*X2 + X1^2*X3 + X1*X2^2 + 2*X1*X2*X3 + X1*X3^2 + X2^2*X3 + X2*X3^2"));
    Setting p2 = make_setting(SuperType::make_p(2), Space::Multiplicative);
    CHECK(t_element(p2).poly == P(p2, "1 - x1*x2"));
  }
  SUBCASE("gl(2|2) torus element is the cleared product over omega") {
    Setting s = make_setting(SuperType::make_gl(2, 2), Space::Multiplicative);
    Polynomial T = t_element(s).poly;
    Polynomial expected = P(s, "x1*x2*y1^-1*y2^-1");
    for (const Root& beta : s.rs->omega) {
      Root minus = beta;
      for (Rational& c : minus) c = -c;
      expected = expected * (P(s, "1") - character_monomial(s, minus));
    }
    CHECK(T == expected);
  }
  SUBCASE("unsupported settings raise") {
    // half-sum of omega is not a weight for gl(2|1) on the torus
    CHECK_THROWS_AS(t_element(make_setting(SuperType::make_gl(2, 1), Space::Multiplicative)),
                    DomainError);
  }
  SUBCASE("osp(3|2): two sign classes multiply into the kernel element") {
    Setting add = make_setting(SuperType::make_osp(3, 1), Space::Additive);
    TElement T = t_element(add);  // construction verifies membership and ev(T) = 0
    CHECK(T.poly == P(add, "X1^2 - Y1^2"));
    Polynomial g = P(add, "X1^2 - Y1^2 + 3");  // W-invariant
    REQUIRE(is_w_invariant(g, add));
    Polynomial f = T.poly * g;
    CHECK(is_supersymmetric(f, add, true));
    CHECK(ev_map(f, add).image.is_zero());
    auto q = divide_exact(f, T.poly);
    REQUIRE(q);
    CHECK(is_w_invariant(*q, add));

    Setting mult = make_setting(SuperType::make_osp(3, 1), Space::Multiplicative);
    TElement Tm = t_element(mult);
    CHECK(is_supersymmetric(Tm.poly, mult, true));
    CHECK(ev_map(Tm.poly, mult).image.is_zero());
  }
}

TEST_CASE("ev_map") {
  SUBCASE("spec values") {
    Setting gl21 = make_setting(SuperType::make_gl(2, 1), Space::Additive);
    EvResult r = ev_map(t_element(gl21).poly, gl21);
    CHECK(r.image.is_zero());
    CHECK(r.target.type().to_string() == "gl(1|0)");
    Setting q3 = make_setting(SuperType::make_q(3), Space::Additive);
    CHECK(ev_map(P(q3, "X1 + X2 + X3"), q3).image ==
          parse_polynomial(ev_map(P(q3, "X1"), q3).target.ring, "X1"));
  }
  SUBCASE("multiplicative reductions land at 1") {
    Setting s = make_setting(SuperType::make_gl(2, 2), Space::Multiplicative);
    EvResult r = ev_map(P(s, "x1 + x2 - y1 - y2"), s);
    CHECK(r.target.type().to_string() == "gl(1|1)");
    CHECK(r.image == parse_polynomial(r.target.ring, "x1 - y1"));
    CHECK(is_supersymmetric(r.image, r.target));
  }
  SUBCASE("rank guards") {
    Setting q2 = make_setting(SuperType::make_q(2), Space::Additive);
    CHECK_NOTHROW(ev_map(P(q2, "X1 + X2"), q2));
    Setting q1 = make_setting(SuperType::make_q(1), Space::Additive);
    CHECK_THROWS_AS(ev_map(P(q1, "X1"), q1), DomainError);
  }
}

TEST_CASE("kernel and ideal properties") {
  std::mt19937_64 rng(67);
  std::vector<Setting> settings = {
      make_setting(SuperType::make_gl(2, 1), Space::Additive),
      make_setting(SuperType::make_q(3), Space::Additive),
      make_setting(SuperType::make_p(3), Space::Multiplicative),
  };
  for (const Setting& s : settings) {
    TElement T = t_element(s);
    // T * invariant stays in the algebra; 100 samples spread over settings
    for (int k = 0; k < 34; ++k) {
      Polynomial g = reynolds(random_poly(rng, s.ring, 3), s.rs->weyl_elements);
      Polynomial f = T.poly * g;
      CHECK(is_supersymmetric(f, s));
      CHECK(ev_map(f, s).image.is_zero());
      auto q = divide_exact(f, T.poly);
      REQUIRE(q);
      CHECK(is_w_invariant(*q, s));
    }
  }
}

TEST_CASE("orbit constancy separates members from non-members") {
  // accepted elements are constant on sampled orbit steps; each rejected
  // element admits a witness orbit pair with unequal values
  std::mt19937_64 rng(71);
  Setting s = make_setting(SuperType::make_gl(2, 1), Space::Additive);
  std::vector<Candidate> cands = generator_candidates(s, 3);
  std::uniform_int_distribution<int> num(-4, 4);

  int accepted_checked = 0;
  for (int k = 0; k < 50; ++k) {
    const Polynomial& f = cands[k % cands.size()].poly;
    // atypical base point: (a, b | -b) lies on the e2-d1 hyperplane
    Point lambda = {Rational(num(rng)), Rational(num(rng)), Rational(0)};
    lambda[2] = -lambda[1];
    GroupoidGenerator tau;
    tau.kind = GroupoidGenerator::Kind::Tau;
    tau.alpha = s.rs->standard_chain.front();
    tau.t = Rational(num(rng));
    Point moved = apply_generator(s, tau, lambda);
    CHECK(f.evaluate(lambda) == f.evaluate(moved));
    ++accepted_checked;
  }
  CHECK(accepted_checked == 50);

  int rejected_with_witness = 0;
  int rejected_total = 0;
  for (int k = 0; k < 40 && rejected_total < 20; ++k) {
    Polynomial f = random_poly(rng, s.ring, 2);
    if (f.is_zero() || is_supersymmetric(f, s)) continue;
    ++rejected_total;
    bool witnessed = false;
    for (int trial = 0; trial < 80 && !witnessed; ++trial) {
      // alternate between the two hyperplane families of gl(2|1)
      const Root& alpha = s.rs->omega[trial % s.rs->omega.size()];
      Point lambda = {Rational(num(rng)), Rational(num(rng)), Rational(0)};
      // solve the single incidence h_alpha(lambda) = 0 for the Y coordinate
      lambda[2] = -(alpha[0] * lambda[0] + alpha[1] * lambda[1]);
      GroupoidGenerator tau;
      tau.kind = GroupoidGenerator::Kind::Tau;
      tau.alpha = alpha;
      tau.t = Rational(1 + (trial % 3));
      Point moved = apply_generator(s, tau, lambda);
      if (f.evaluate(lambda) != f.evaluate(moved)) witnessed = true;
      for (const SignedPerm& w : s.rs->weyl_elements)
        if (f.evaluate(lambda) != f.evaluate(w.apply_to_weight(lambda))) witnessed = true;
    }
    CHECK(witnessed);
    if (witnessed) ++rejected_with_witness;
  }
  CHECK(rejected_with_witness == rejected_total);
  CHECK(rejected_total >= 10);
}

TEST_CASE("algebra closure under sums and products") {
  std::mt19937_64 rng(73);
  Setting s = make_setting(SuperType::make_q(3), Space::Multiplicative);
  std::vector<Candidate> cands = generator_candidates(s, 3);
  REQUIRE(cands.size() >= 3);
  std::uniform_int_distribution<size_t> pick(0, cands.size() - 1);
  for (int k = 0; k < 50; ++k) {
    const Polynomial& a = cands[pick(rng)].poly;
    const Polynomial& b = cands[pick(rng)].poly;
    CHECK(is_supersymmetric(a + b, s));
    CHECK(is_supersymmetric(a * b, s));
  }
}

TEST_CASE("generator candidates are machine verified") {
  for (Setting s : {make_setting(SuperType::make_gl(2, 2), Space::Additive),
                    make_setting(SuperType::make_gl(2, 2), Space::Multiplicative),
                    make_setting(SuperType::make_osp(5, 1), Space::Additive),
                    make_setting(SuperType::make_q(3), Space::Additive),
                    make_setting(SuperType::make_p(3), Space::Multiplicative)}) {
    std::vector<Candidate> cands = generator_candidates(s, 4);
    bool has_one = false, has_t = false;
    for (const Candidate& c : cands) {
      CHECK(is_supersymmetric(c.poly, s));
      if (c.label == "1") has_one = true;
      if (c.label == "T") has_t = true;
    }
    CHECK(has_one);
    CHECK(has_t);
  }
}
