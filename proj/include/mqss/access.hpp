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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mqss/matroid.hpp"
#include "mqss/subset.hpp"

namespace mqss {

/// Guard for operations that materialize the full family 2^P.
inline constexpr std::size_t kMaxFamilyPlayers = 20;
/// Guard for the matroid-relatedness construction.
inline constexpr std::size_t kMaxMatroidRelatedPlayers = 12;
/// Guard for the forbidden-minor search.
inline constexpr std::size_t kMaxMinorSearchPlayers = 10;

/// Monotone access structure over labelled players, stored as its minimal
/// authorized sets (bitmasks over player positions). The empty structure and
/// the structure whose only minimal set is empty are rejected.
class AccessStructure {
 public:
  /// Players labelled 1..player_count.
  AccessStructure(std::size_t player_count, std::vector<Subset> sets);
  /// Players with explicit labels (strictly increasing positive integers).
  AccessStructure(std::vector<int> labels, std::vector<Subset> sets);

  /// Sets given by player labels.
  static AccessStructure from_labels(std::size_t player_count, const std::vector<std::vector<int>>& sets);

  std::size_t player_count() const { return labels_.size(); }
  const std::vector<int>& players() const { return labels_; }
  const std::vector<Subset>& minimal_sets() const { return minimal_; }
  Subset all_players() const { return full_set(labels_.size()); }

  /// Throws on a label that is not a player.
  Subset mask_of(const std::vector<int>& labels) const;
  std::vector<int> labels_of(Subset s) const;
  std::string format(Subset s) const { return format_subset(s, labels_); }

  bool is_authorized(Subset s) const;
  bool is_authorized(const std::vector<int>& labels) const { return is_authorized(mask_of(labels)); }

  friend bool operator==(const AccessStructure& a, const AccessStructure& b) {
    return a.labels_ == b.labels_ && a.minimal_ == b.minimal_;
  }

 private:
  std::vector<int> labels_;
  std::vector<Subset> minimal_;
};

/// Dual structure: X authorized iff the complement of X is unauthorized.
AccessStructure dual(const AccessStructure& a);

enum class OrthogonalityTest {
  kPairwiseIntersection,  // no two authorized sets are disjoint
  kContainedInDual,       // family inclusion Gamma within Gamma*
  kDualAdversary,         // family inclusion A* within A (adversary structure)
};

bool is_self_orthogonal(const AccessStructure& a, OrthogonalityTest test);
bool is_self_dual(const AccessStructure& a);
bool is_connected(const AccessStructure& a);
std::uint64_t authorized_count(const AccessStructure& a);

/// Authorized sets avoiding Z, on players P \ Z.
AccessStructure delete_players(const AccessStructure& a, const std::vector<int>& z);
/// X authorized iff X u Z authorized, on players P \ Z.
AccessStructure contract_players(const AccessStructure& a, const std::vector<int>& z);

struct MatroidRelation {
  bool related = false;
  /// Candidate circuit family on P u {D}; D is ground element 0 and the
  /// player at position j is ground element j+1.
  std::vector<Subset> circuits;
  std::optional<Matroid> matroid;
};

/// Builds the candidate circuits from the extended structure {A u D} and the
/// sets J(A,B), and tests the circuit axioms.
MatroidRelation matroid_relation(const AccessStructure& a);

struct ForbiddenMinor {
  std::string name;  // "a", "b", "c" or "d(s=<s>)"
  std::vector<int> deleted;
  std::vector<int> contracted;
};

/// Smallest minor (by |Z_del| + |Z_con|, deletions first, then
/// lexicographic) isomorphic to one of the excluded structures.
std::optional<ForbiddenMinor> seymour_forbidden_minor(const AccessStructure& a);

/// Minimal sets of the excluded structures, players 1..4 (a, b, c) or 1..s+1.
AccessStructure excluded_minor_a();
AccessStructure excluded_minor_b();
AccessStructure excluded_minor_c();
AccessStructure excluded_minor_d(std::size_t s);

/// Player relabelling equivalence (same player count required).
bool isomorphic(const AccessStructure& a, const AccessStructure& b);

// Access-structure file:
//   players <n>
//   [labels <l1> ... <ln>]      only when labels differ from 1..n
//   <one minimal set per line, space-separated labels>
void write_access(std::ostream& os, const AccessStructure& a);
AccessStructure read_access(std::istream& is);

}  // namespace mqss
