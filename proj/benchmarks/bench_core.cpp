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

#include <benchmark/benchmark.h>

#include "weylgpd/poly_text.hpp"
#include "weylgpd/sgeom.hpp"

using namespace wgd;

namespace {

void BM_poly_mul(benchmark::State& state) {
  RingPtr R = make_ring({"X1", "X2", "X3", "X4"}, RingMode::Affine);
  Polynomial f = parse_polynomial(R, "X1^2 + 2*X2*X3 - X4 + 1");
  Polynomial g = parse_polynomial(R, "X1*X4 - 3*X2^2 + X3 - 2");
  Polynomial a = f.pow(3), b = g.pow(3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul);

void BM_groebner_twisted_cubic(benchmark::State& state) {
  RingPtr R = make_ring({"X1", "X2", "X3"}, RingMode::Affine);
  std::vector<Polynomial> gens = {parse_polynomial(R, "X1^2 - X2"),
                                  parse_polynomial(R, "X1^3 - X3")};
  for (auto _ : state) {
    IdealPresentation I(R, gens);  // fresh presentation defeats the cache
    benchmark::DoNotOptimize(reduced_groebner_basis(I, MonomialOrder::lex()));
  }
}
BENCHMARK(BM_groebner_twisted_cubic);

void BM_radical_membership(benchmark::State& state) {
  RingPtr R = make_ring({"X1", "X2", "X3"}, RingMode::Affine);
  Polynomial f = parse_polynomial(R, "X1 + X2");
  std::vector<Polynomial> gens = {parse_polynomial(R, "X1^2 + 2*X1*X2 + X2^2"),
                                  parse_polynomial(R, "X3^2")};
  for (auto _ : state) {
    IdealPresentation I(R, gens);
    benchmark::DoNotOptimize(radical_membership(f, I));
  }
}
BENCHMARK(BM_radical_membership);

void BM_membership_oracle_gl22(benchmark::State& state) {
  Setting s = make_setting(SuperType::make_gl(2, 2), Space::Additive);
  Polynomial p3 = parse_polynomial(s.ring, "X1^3 + X2^3 + Y1^3 + Y2^3");
  for (auto _ : state) benchmark::DoNotOptimize(is_supersymmetric(p3, s));
}
BENCHMARK(BM_membership_oracle_gl22);

void BM_sclosure_gl21(benchmark::State& state) {
  Setting s = make_setting(SuperType::make_gl(2, 1), Space::Additive);
  ClosedSet v = make_closed_set(
      s, IdealPresentation(s.ring, {reynolds(parse_polynomial(s.ring, "X1*Y1"),
                                             s.rs->weyl_elements)}));
  for (auto _ : state) benchmark::DoNotOptimize(s_closure(s, v));
}
BENCHMARK(BM_sclosure_gl21);

void BM_orbit_ideal_gl22_torus(benchmark::State& state) {
  Setting s = make_setting(SuperType::make_gl(2, 2), Space::Multiplicative);
  Point lambda = {Rational(2), Rational(3), Rational(2), Rational(7)};
  for (auto _ : state) benchmark::DoNotOptimize(orbit_closure_ideal(s, lambda));
}
BENCHMARK(BM_orbit_ideal_gl22_torus);

}  // namespace

BENCHMARK_MAIN();
