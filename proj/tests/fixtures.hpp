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

// Codes and structures shared by several test files.

#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "mqss/code.hpp"
#include "mqss/error.hpp"

namespace fixtures {

// Extended Hamming [8,4,4] code with the all-ones row first.
inline const char* kHamming8 =
    "q 2\n"
    "4 8\n"
    "1 1 1 1 1 1 1 1\n"
    "0 1 0 0 0 1 1 1\n"
    "0 0 1 0 1 0 1 1\n"
    "0 0 0 1 1 1 1 0\n";

// Tetracode [4,2,3] over GF(3).
inline const char* kTetracode =
    "q 3\n"
    "2 4\n"
    "1 1 1 0\n"
    "0 1 2 1\n";

// {00, 11}
inline const char* kRepetition2 =
    "q 2\n"
    "1 2\n"
    "1 1\n";

inline mqss::LinearCode code(const char* text) { return mqss::LinearCode(mqss::matrix_from_text(text)); }
inline mqss::LinearCode hamming8() { return code(kHamming8); }
inline mqss::LinearCode tetracode() { return code(kTetracode); }
inline mqss::LinearCode repetition2() { return code(kRepetition2); }

// Shortened code generator and its residual strings as printed for the example.
inline const char* kSigma0 =
    "q 2\n"
    "3 7\n"
    "1 0 0 0 1 1 1\n"
    "0 1 0 1 0 1 1\n"
    "0 0 1 1 1 1 0\n";

inline const char* kRho0 =
    "q 2\n"
    "4 7\n"
    "1 1 1 1 1 1 1\n"
    "1 0 0 0 1 1 1\n"
    "0 1 0 1 0 1 1\n"
    "0 0 1 1 1 1 0\n";

// Over GF(5) with columns of the tetracode matroid but not self-dual as a code.
inline const char* kUniform24Gf5 =
    "q 5\n"
    "2 4\n"
    "1 0 1 1\n"
    "0 1 1 2\n";

// Self-dual [2k, k] code [I | A] with A A^T = -I, columns shuffled. A is found
// by random search, which is quick for the small k and q used in tests.
inline std::optional<mqss::LinearCode> random_self_dual(std::mt19937& rng, unsigned q, std::size_t k) {
  const mqss::Field f = mqss::Field::of_order(q);
  for (int attempt = 0; attempt < 200000; ++attempt) {
    std::vector<mqss::Vec> a(k, mqss::Vec(k));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<mqss::Elem>(rng() % q);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j) {
        const mqss::Elem d = mqss::dot(f, a[i], a[j]);
        ok = d == (i == j ? f.neg(1) : 0);
      }
    if (!ok) continue;
    std::vector<std::size_t> perm(2 * k);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<mqss::Vec> rows(k, mqss::Vec(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      rows[i][perm[i]] = 1;
      for (std::size_t j = 0; j < k; ++j) rows[i][perm[k + j]] = a[i][j];
    }
    return mqss::LinearCode(mqss::Matrix::from_rows(f, rows, 2 * k));
  }
  return std::nullopt;
}

// Runs `fn`, expecting an mqss::Error whose message contains `needle`.
inline void expect_error(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
  } catch (const mqss::Error& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << "message was: " << e.what();
    return;
  }
  ADD_FAILURE() << "expected an error containing '" << needle << "'";
}

}  // namespace fixtures
