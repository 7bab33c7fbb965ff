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
#include <optional>
#include <vector>

#include "mqss/access.hpp"
#include "mqss/code.hpp"
#include "mqss/matroid.hpp"

namespace mqss {

/// CSS stabilizer tableau on n shares. Each row is [x | z] of length 2n.
struct StabilizerTableau {
  Field field;
  std::size_t shares = 0;
  Matrix rows;  // (n-1) x 2n: [G_short | 0] over [0 | G_punctured_dual]
  Vec logical_x;
  Vec logical_z;
};

/// x.z' - z.x' for [x|z] vectors of length 2n.
Elem symplectic_product(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

enum class GateKind { kAdd, kMul, kSwap };

/// Share indices are 0-based positions (share label - 1).
///   kAdd:  a_target += scalar * a_control   (first = control, second = target)
///   kMul:  a_first  *= scalar
///   kSwap: exchange a_first and a_second
struct Gate {
  GateKind kind = GateKind::kAdd;
  Elem scalar = 1;
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct GatePlan {
  std::size_t target = 0;
  std::vector<Gate> gates;
};

/// Pure-state scheme built from a code whose column matroid is identically
/// self-dual. Share j (0-based) holds coordinate j of the code if j < dealer,
/// coordinate j+1 otherwise.
class QssScheme {
 public:
  const LinearCode& code() const { return code_; }
  std::size_t dealer() const { return dealer_; }
  std::size_t shares() const { return code_.length() - 1; }
  const DealerSplit& split() const { return split_; }
  const StabilizerTableau& tableau() const { return tableau_; }
  const AccessStructure& minimal_access() const { return access_; }
  const Field& field() const { return code_.field(); }
  /// Information rate: every share has the dimension of the secret.
  static constexpr int rate() { return 1; }

  const std::vector<MinimalCodeword>& code_minimal() const { return code_minimal_; }
  const std::vector<MinimalCodeword>& dual_minimal() const { return dual_minimal_; }

  /// Code coordinate held by share position j.
  std::size_t coordinate_of(std::size_t share) const { return share < dealer_ ? share : share + 1; }

 private:
  friend QssScheme construct_scheme(const LinearCode& c, std::size_t dealer);

  QssScheme(LinearCode code, std::size_t dealer, DealerSplit split, StabilizerTableau tableau,
            AccessStructure access, std::vector<MinimalCodeword> code_minimal,
            std::vector<MinimalCodeword> dual_minimal);

  LinearCode code_;
  std::size_t dealer_;
  DealerSplit split_;
  StabilizerTableau tableau_;
  AccessStructure access_;
  std::vector<MinimalCodeword> code_minimal_;
  std::vector<MinimalCodeword> dual_minimal_;
};

/// Self-dual code and a dealer coordinate. Throws Error("code is not
/// self-dual") or Error("dealer coordinate not covered").
QssScheme build_scheme(const LinearCode& c, std::size_t dealer);

/// Identically self-dual matroid with a representation; the represented code
/// need not be self-dual.
QssScheme build_scheme_from_matroid(const Matroid& m, std::size_t dealer);

/// Unchecked construction shared by both entry points.
QssScheme construct_scheme(const LinearCode& c, std::size_t dealer);

/// Coset { s*g + x : x in shortened code }, sorted.
std::vector<Vec> encode_basis(const QssScheme& scheme, Elem s);

AccessStructure access_structure(const QssScheme& scheme);

/// Witness data behind a plan: the minimal set used, the dual codeword c'
/// (unit dealer entry) whose support is that set plus the dealer, and the
/// logical X representative l (shares only) that the plan maps to e_target.
struct RecoveryWitness {
  Subset minimal_set = 0;
  Vec dual_word;
  Vec logical;
};

RecoveryWitness recovery_witness(const QssScheme& scheme, Subset authorized);

/// Gate sequence moving the secret onto the smallest share of `authorized`.
/// Throws Error("set is not authorized").
GatePlan reconstruction_plan(const QssScheme& scheme, Subset authorized);

/// Column action of the plan on a tableau / on one [x|z] vector.
StabilizerTableau apply_plan(const StabilizerTableau& t, const GatePlan& plan);
Vec apply_plan(const Field& f, std::span<const Elem> xz, const GatePlan& plan);
/// Gates executed up to (not including) index `count`.
GatePlan plan_prefix(const GatePlan& plan, std::size_t count);
/// Number of gates in the first phase (MUL on the pivot share plus the ADDs into it).
std::size_t phase_one_length(const GatePlan& plan);

// Scheme export sections: code, dealer, g, stabilizer, logical_x, logical_z,
// minimal_access. read_scheme rebuilds the scheme from `code` and `dealer` and
// rejects files whose other sections disagree.
void write_scheme(std::ostream& os, const QssScheme& scheme);
QssScheme read_scheme(std::istream& is);

// Plan export: "target <t>" then one gate per line:
//   ADD <lambda> <control> <target> | MUL <beta> <share> | SWAP <i> <j>
// with 1-based share indices.
void write_plan(std::ostream& os, const GatePlan& plan);
GatePlan read_plan(std::istream& is, const Field& f, std::size_t shares);

}  // namespace mqss
