// Copyright 2026 The partswap Authors
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

#include "partswap/bloch.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "partswap/errors.hpp"

using namespace partswap;

namespace {

constexpr double kTol = 1e-12;

void expect_near(cplx actual, cplx expected, double tol = kTol) {
  EXPECT_NEAR(actual.real(), expected.real(), tol);
  EXPECT_NEAR(actual.imag(), expected.imag(), tol);
}

}  // namespace

TEST(BlochAngles, normalizes_phase) {
  EXPECT_DOUBLE_EQ(BlochAngles(1.0, -0.5).phi(), kTwoPi - 0.5);
  EXPECT_NEAR(BlochAngles(1.0, 7.0).phi(), 7.0 - kTwoPi, 1e-15);
  EXPECT_EQ(BlochAngles(1.0, kTwoPi).phi(), 0.0);
  EXPECT_EQ(BlochAngles(1.0, -1e-300).phi(), 0.0);
}

TEST(BlochAngles, rejects_bad_input) {
  EXPECT_THROW(BlochAngles(-0.1, 0.0), InvalidArgument);
  EXPECT_THROW(BlochAngles(kPi + 1e-9, 0.0), InvalidArgument);
  EXPECT_THROW(BlochAngles(NAN, 0.0), InvalidArgument);
  EXPECT_THROW(BlochAngles(1.0, INFINITY), InvalidArgument);
  EXPECT_NO_THROW(BlochAngles(kPi, 0.0));
  EXPECT_NO_THROW(BlochAngles(0.0, 0.0));
}

TEST(BlochAngles, poles_are_degenerate) {
  EXPECT_TRUE(BlochAngles(0.0, 1.3).degenerate());
  EXPECT_TRUE(BlochAngles(kPi, 1.3).degenerate());
  EXPECT_FALSE(BlochAngles(1e-6, 1.3).degenerate());
  // phi is kept verbatim even when meaningless.
  EXPECT_DOUBLE_EQ(BlochAngles(0.0, 1.3).phi(), 1.3);
}

TEST(StateFromAngles, examples) {
  const auto north = state_from_angles({0.0, 0.0});
  expect_near(north.a0, 1.0);
  expect_near(north.a1, 0.0);

  const auto south = state_from_angles({kPi, 0.0});
  expect_near(south.a0, 0.0);
  expect_near(south.a1, 1.0);

  const auto y_plus = state_from_angles({kPi / 2, kPi / 2});
  expect_near(y_plus.a0, 1.0 / std::sqrt(2.0));
  expect_near(y_plus.a1, cplx(0.0, 1.0 / std::sqrt(2.0)));
}

TEST(StateFromAngles, matches_rotation_oracle) {
  oracle::Gen gen(11);
  for (int i = 0; i < 1000; ++i) {
    const auto p = gen.bloch();
    const auto q = state_from_angles({p.theta, p.phi});
    const auto v = oracle::ket(p.theta, p.phi);
    expect_near(q.a0, v(0));
    expect_near(q.a1, v(1));
    EXPECT_NEAR(q.norm(), 1.0, kTol);
  }
}

TEST(ComplementAngles, examples) {
  const auto a = complement_angles({0.0, 0.0});
  EXPECT_DOUBLE_EQ(a.theta(), kPi);
  EXPECT_DOUBLE_EQ(a.phi(), kPi);

  const auto b = complement_angles({kPi / 2, 0.0});
  EXPECT_DOUBLE_EQ(b.theta(), kPi / 2);
  EXPECT_DOUBLE_EQ(b.phi(), kPi);

  const BlochAngles c(kPi / 3, 0.2);
  const auto cb = complement_angles(c);
  EXPECT_NEAR(cb.theta(), 2 * kPi / 3, 1e-15);
  EXPECT_NEAR(cb.phi(), 0.2 + kPi, 1e-15);
  EXPECT_LT(std::abs(inner_product(state_from_angles(c), state_from_angles(cb))), kTol);
}

TEST(ComplementAngles, antipodes_are_orthogonal_everywhere) {
  oracle::Gen gen(12);
  for (int i = 0; i < 10000; ++i) {
    const auto p = gen.bloch();
    const BlochAngles a(p.theta, p.phi);
    EXPECT_LT(std::abs(inner_product(state_from_angles(a), state_from_angles(complement_angles(a)))),
              kTol);
  }
}

TEST(InnerProduct, examples) {
  const auto x = state_from_angles({1.1, 2.3});
  expect_near(inner_product(x, x), 1.0);
  const auto plus = state_from_angles({kPi / 2, 0.0});
  const auto y_plus = state_from_angles({kPi / 2, kPi / 2});
  expect_near(inner_product(plus, y_plus), cplx(0.5, 0.5));
  EXPECT_LE(std::abs(inner_product(plus, y_plus)), 1.0 + kTol);
}

TEST(AnglesInnerProduct, examples) {
  const BlochAngles p(kPi / 3, 0.1);
  const BlochAngles q(kPi / 5, 1.2);
  expect_near(angles_inner_product(p, p), 1.0);
  expect_near(angles_inner_product(p, complement_angles(p)), 0.0);
  expect_near(angles_inner_product(p, q), inner_product(state_from_angles(p), state_from_angles(q)));
  // Oracle value from the rotation construction.
  const auto op = oracle::ket(kPi / 3, 0.1);
  const auto oq = oracle::ket(kPi / 5, 1.2);
  expect_near(angles_inner_product(p, q), op.dot(oq));
}

TEST(AnglesInnerProduct, agrees_with_constructed_vectors) {
  oracle::Gen gen(13);
  for (int i = 0; i < 10000; ++i) {
    const auto a = gen.bloch();
    const auto b = gen.bloch();
    const BlochAngles p(a.theta, a.phi), q(b.theta, b.phi);
    expect_near(angles_inner_product(p, q),
                inner_product(state_from_angles(p), state_from_angles(q)));
  }
}

TEST(Tensor, examples) {
  const PureQubit k0{1.0, 0.0}, k1{0.0, 1.0};
  const auto s00 = tensor(k0, k0);
  const auto s01 = tensor(k0, k1);
  for (std::size_t i = 0; i < 4; ++i) {
    expect_near(s00.amps[i], i == 0 ? 1.0 : 0.0);
    expect_near(s01.amps[i], i == 1 ? 1.0 : 0.0);
  }
  const auto s = tensor(state_from_angles({kPi / 2, 0.0}), state_from_angles({kPi / 2, kPi}));
  const double expected[] = {0.5, -0.5, 0.5, -0.5};
  for (std::size_t i = 0; i < 4; ++i) expect_near(s.amps[i], expected[i]);
}

TEST(Tensor, preserves_norm_and_matches_kron) {
  oracle::Gen gen(14);
  for (int i = 0; i < 1000; ++i) {
    const auto a = gen.bloch();
    const auto b = gen.bloch();
    const auto s = tensor(state_from_angles({a.theta, a.phi}), state_from_angles({b.theta, b.phi}));
    EXPECT_NEAR(s.norm(), 1.0, kTol);
    const auto v = oracle::kron(oracle::ket(a.theta, a.phi), oracle::ket(b.theta, b.phi));
    for (int k = 0; k < 4; ++k) expect_near(s.amps[k], v(k));
  }
}

TEST(Poles, state_independent_of_phase) {
  for (double theta : {0.0, kPi}) {
    const auto a = state_from_angles({theta, 0.0});
    const auto b = state_from_angles({theta, 1.7});
    EXPECT_NEAR(fidelity(a, b), 1.0, kTol);
  }
}

TEST(QubitBasis, construction) {
  const auto comp = QubitBasis::computational();
  expect_near(comp.up().a0, 1.0);
  expect_near(comp.down().a1, 1.0);
  const auto b = QubitBasis::from_angles({kPi / 3, 1.1});
  EXPECT_LT(std::abs(inner_product(b.up(), b.down())), kTol);
  EXPECT_FALSE(b.degenerate());
  EXPECT_TRUE(QubitBasis::from_angles({0.0, 0.4}).degenerate());
  EXPECT_THROW(QubitBasis(BlochAngles(1.0, 0.0), BlochAngles(1.2, 0.0)), InvalidArgument);
}

TEST(CircularDistance, wraps) {
  EXPECT_NEAR(circular_distance(0.1, kTwoPi - 0.1), 0.2, 1e-15);
  EXPECT_NEAR(circular_distance(1.0, 2.0), 1.0, 1e-15);
  EXPECT_NEAR(circular_distance(-kPi, kPi), 0.0, 1e-15);
  EXPECT_LE(circular_distance(0.0, kPi), kPi);
}
