// Copyright 2026 The matroid-qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mqss/simulator.hpp"

namespace mqss {
namespace {

using C = Complex;

SparseState basis_state(unsigned q, Vec x) {
  const std::size_t n = x.size();
  return SparseState(Field::of_order(q), n, {{std::move(x), C(1)}});
}

GatePlan gates(std::vector<Gate> g) {
  GatePlan p;
  p.gates = std::move(g);
  return p;
}

std::vector<C> amps(std::initializer_list<C> a) { return std::vector<C>(a); }

TEST(SparseState, NormalizationIsExact) {
  EXPECT_THROW(SparseState(Field(), 1, {{{0}, C(1)}, {{1}, C(1)}}), Error);
  const SparseState bell(Field(), 2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}}, 2);
  EXPECT_EQ(bell.norm_squared(), 1);
  EXPECT_THROW(SparseState(Field(), 2, {{{0}, C(1)}}), Error);     // wrong length
  EXPECT_THROW(SparseState(Field(), 1, {{{2}, C(1)}}), Error);     // symbol outside GF(2)
  EXPECT_THROW(SparseState(Field(), 23, {{Vec(23, 0), C(1)}}), Error);  // 2^23 > guard
}

TEST(ApplyPlan, GateTruthTables) {
  const SparseState cnot = apply_plan(basis_state(2, {1, 0}), gates({{GateKind::kAdd, 1, 0, 1}}));
  EXPECT_EQ(cnot.coefficient({1, 1}), C(1));
  const SparseState mul = apply_plan(basis_state(3, {1}), gates({{GateKind::kMul, 2, 0, 0}}));
  EXPECT_EQ(mul.coefficient({2}), C(1));
  const SparseState swap = apply_plan(basis_state(5, {3, 4}), gates({{GateKind::kSwap, 1, 0, 1}}));
  EXPECT_EQ(swap.coefficient({4, 3}), C(1));
  const SparseState add = apply_plan(basis_state(5, {3, 4}), gates({{GateKind::kAdd, 2, 0, 1}}));
  EXPECT_EQ(add.coefficient({3, 0}), C(1));  // 4 + 2*3 = 10 = 0 mod 5
}

TEST(ApplyPlan, Errors) {
  EXPECT_THROW((void)apply_plan(basis_state(2, {0}), gates({{GateKind::kAdd, 1, 0, 1}})), Error);
  EXPECT_THROW((void)apply_plan(basis_state(2, {0, 0}), gates({{GateKind::kMul, 0, 0, 0}})), Error);
}

TEST(ApplyPlan, PermutesAmplitudes) {
  const SparseState s = prepare_secret(build_scheme(fixtures::tetracode(), 0),
                                       amps({C(Rational(3, 5)), C(0, Rational(4, 5)), C(0)}));
  const SparseState t = apply_plan(s, reconstruction_plan(build_scheme(fixtures::tetracode(), 0), 0b101));
  EXPECT_EQ(t.coefficients().size(), s.coefficients().size());
  std::vector<std::string> a, b;
  for (const auto& [k, v] : s.coefficients()) a.push_back(to_string(v));
  for (const auto& [k, v] : t.coefficients()) b.push_back(to_string(v));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  EXPECT_EQ(t.norm_squared(), 1);
}

TEST(ReducedState, ProductAndBell) {
  // |0> (x) |+>
  const SparseState prod(Field(), 2, {{{0, 0}, C(1)}, {{0, 1}, C(1)}}, 2);
  const DensityBlock r = reduced_state(prod, 0b01);
  EXPECT_EQ(r.dim, 2u);
  EXPECT_EQ(r.at(0, 0), C(1));
  EXPECT_EQ(r.at(1, 1), C(0));
  EXPECT_EQ(r.at(0, 1), C(0));

  const SparseState bell(Field(), 2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}}, 2);
  const DensityBlock b = reduced_state(bell, 0b01);
  EXPECT_EQ(b.at(0, 0), C(Rational(1, 2)));
  EXPECT_EQ(b.at(1, 1), C(Rational(1, 2)));
  EXPECT_EQ(b.at(0, 1), C(0));
  // On both qubits the block is the pure Bell projector.
  const DensityBlock full = reduced_state(bell, 0b11);
  EXPECT_EQ(full.at(0, 3), C(Rational(1, 2)));
  EXPECT_EQ(full.trace(), 1);
}

TEST(ReducedState, IndexOrderFirstQuditMostSignificant) {
  const DensityBlock r = reduced_state(basis_state(3, {2, 0, 1}), 0b101);
  EXPECT_EQ(r.dim, 9u);
  EXPECT_EQ(r.at(2 * 3 + 1, 2 * 3 + 1), C(1));
}

TEST(ReducedState, Guard) {
  const SparseState s(Field::of_order(3), 8, {{Vec(8, 0), C(1)}});
  EXPECT_THROW((void)reduced_state(s, 0xFF), Error);  // 3^8 > 4096
  EXPECT_NO_THROW((void)reduced_state(s, 0x7F));
  EXPECT_THROW((void)reduced_state(s, 1u << 9), Error);
}

TEST(PrepareSecret, HammingStates) {
  const QssScheme s = build_scheme(fixtures::hamming8(), 0);
  const SparseState zero = prepare_secret(s, amps({C(1), C(0)}));
  EXPECT_EQ(zero.normalizer(), 8);
  EXPECT_EQ(zero.coefficients().size(), 8u);
  for (const auto& [x, c] : zero.coefficients()) EXPECT_EQ(c, C(1));
  std::vector<Vec> keys;
  for (const auto& [x, c] : zero.coefficients()) keys.push_back(x);
  EXPECT_EQ(keys, encode_basis(s, 0));

  const SparseState one = prepare_secret(s, amps({C(0), C(1)}));
  keys.clear();
  for (const auto& [x, c] : one.coefficients()) keys.push_back(x);
  EXPECT_EQ(keys, encode_basis(s, 1));

  fixtures::expect_error([&] { (void)prepare_secret(s, amps({C(1), C(1)})); }, "not normalized");
  EXPECT_THROW((void)prepare_secret(s, amps({C(1)})), Error);
}

TEST(PrepareSecret, TrivialScheme) {
  const QssScheme s = build_scheme(fixtures::repetition2(), 0);
  const SparseState st = prepare_secret(s, amps({C(Rational(3, 5)), C(Rational(4, 5))}));
  EXPECT_EQ(st.normalizer(), 1);
  EXPECT_EQ(st.coefficient({0}), C(Rational(3, 5)));
  EXPECT_EQ(st.coefficient({1}), C(Rational(4, 5)));
}

TEST(ApplyPlan, HammingResidualState) {
  const QssScheme s = build_scheme(fixtures::hamming8(), 0);
  const GatePlan p = reconstruction_plan(s, s.minimal_access().mask_of({1, 2, 7}));
  const SparseState after = apply_plan(prepare_secret(s, amps({C(1), C(0)})), p);
  const std::vector<Vec> residual = {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1}, {1, 0, 1, 0, 1, 1}, {0, 1, 1, 1, 1, 0},
                                     {1, 0, 1, 1, 0, 0}, {0, 1, 1, 0, 0, 1}, {1, 1, 0, 1, 0, 1}, {1, 1, 0, 0, 1, 0}};
  std::set<Vec> expect;
  for (const Vec& r : residual) {
    Vec x{0};
    x.insert(x.end(), r.begin(), r.end());
    expect.insert(x);
  }
  std::set<Vec> got;
  for (const auto& [x, c] : after.coefficients()) {
    got.insert(x);
    EXPECT_EQ(c, C(1));
  }
  EXPECT_EQ(got, expect);
}

TEST(ReducedState, PrivacyOnHammingScheme) {
  const QssScheme s = build_scheme(fixtures::hamming8(), 0);
  const Subset b = s.minimal_access().mask_of({4, 5, 6});
  const DensityBlock r0 = reduced_state(prepare_secret(s, amps({C(1), C(0)})), b);
  const DensityBlock r1 = reduced_state(prepare_secret(s, amps({C(0), C(1)})), b);
  EXPECT_EQ(r0.dim, 8u);
  EXPECT_EQ(r0, r1);
  EXPECT_EQ(r0.trace(), 1);
  EXPECT_TRUE(r0.is_hermitian());
  EXPECT_TRUE(r0.has_nonnegative_minors());
}

TEST(DensityBlock, ValidityChecks) {
  const DensityBlock p = pure_density(0, amps({C(Rational(4, 5)), C(0, Rational(3, 5))}));
  EXPECT_TRUE(p.is_hermitian());
  EXPECT_TRUE(p.has_nonnegative_minors());
  EXPECT_EQ(p.trace(), 1);
  DensityBlock bad = p;
  bad.entries[{0, 1}] = C(1);
  EXPECT_FALSE(bad.is_hermitian());
  EXPECT_FALSE(bad.has_nonnegative_minors());
}

}  // namespace
}  // namespace mqss
