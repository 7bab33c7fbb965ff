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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mqss/simulator.hpp"

namespace mqss {

/// Largest share count accepted by classify_all_subsets.
inline constexpr std::size_t kMaxClassifyShares = 10;

struct TestSecret {
  std::string label;
  std::vector<Complex> amps;
};

/// basis-0 .. basis-(q-1), then sup-a = (3/5, 4/5) and sup-b = (4/5, 3i/5)
/// on the first two levels.
std::vector<TestSecret> test_secrets(const Field& f);

struct CheckLine {
  std::string subset;
  std::string label;
  bool pass = false;
};

struct Report {
  std::vector<CheckLine> lines;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  void append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }
};

/// "<subset> <label> PASS|FAIL" per line, then "TOTAL <pass> <fail>".
void write_report(std::ostream& os, const Report& r);

/// Runs the reconstruction plan on every test secret and compares the target
/// qudit with the pure secret state. Throws Error("set is not authorized").
Report check_recovery(const QssScheme& scheme, Subset authorized);

/// Compares reduced states on B for every unordered pair of test secrets.
/// Throws Error("set is authorized; privacy check inapplicable").
Report check_privacy(const QssScheme& scheme, Subset unauthorized);

struct Classification {
  std::vector<Subset> authorized;    // recovered by simulation
  std::vector<Subset> unauthorized;  // identical reduced states for all secrets
  /// Every subset landed in exactly one class.
  bool exclusive = true;
  /// Authorized class equals the up-closure of the scheme's minimal sets.
  bool matches_access = true;
  /// X authorized iff its complement is unauthorized.
  bool complement_exchange = true;
  Report report;
};

/// Simulates every subset of the shares (at most kMaxClassifyShares).
Classification classify_all_subsets(const QssScheme& scheme);

/// Recovery on every minimal set followed by the full classification.
Report verify_all(const QssScheme& scheme);

}  // namespace mqss
