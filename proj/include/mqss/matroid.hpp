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

#include "mqss/matrix.hpp"
#include "mqss/subset.hpp"

namespace mqss {

class AccessStructure;

/// Subset-enumeration guard for matroid operations.
inline constexpr std::size_t kMaxGroundSize = 20;

/// Matroid on the ground set {0, ..., ground_size-1}, given by its circuits.
/// Circuits are kept sorted (size, then lexicographic) so that equality of
/// matroids is equality of the stored families.
class Matroid {
 public:
  /// Throws unless the family satisfies the circuit axioms.
  Matroid(std::size_t ground_size, std::vector<Subset> circuits);

  /// Attaches a representing matrix (columns indexed by the ground set). Every
  /// circuit and every basis is checked against the matrix.
  Matroid(std::size_t ground_size, std::vector<Subset> circuits, Matrix representation);

  /// Column matroid: circuits are the minimal dependent column sets.
  static Matroid from_matrix(const Matrix& m);

  std::size_t ground_size() const { return ground_; }
  const std::vector<Subset>& circuits() const { return circuits_; }
  const std::optional<Matrix>& representation() const { return representation_; }

  bool is_independent(Subset s) const;
  std::size_t rank(Subset s) const;
  std::size_t rank() const { return rank(full_set(ground_)); }
  /// All maximal independent sets, sorted.
  std::vector<Subset> bases() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.circuits_ == b.circuits_;
  }

 private:
  std::size_t ground_ = 0;
  std::vector<Subset> circuits_;
  std::optional<Matrix> representation_;
};

/// M1 (no circuit contains another, circuits nonempty) and M2 (circuit
/// elimination) over every pair of distinct circuits.
bool verify_circuit_axioms(const std::vector<Subset>& circuits);

/// Dual matroid, bases complemented. A representation, if present, is carried
/// over as its null space.
Matroid dual(const Matroid& m);
bool is_identically_self_dual(const Matroid& m);

/// Access structure with `dealer` removed from the ground set: minimal sets
/// are C \ {dealer} for every circuit C through the dealer. Players are the
/// remaining ground elements in order, labelled 1..n.
AccessStructure induced_access_structure(const Matroid& m, std::size_t dealer);

// Matroid file: either
//   ground <size>
//   <circuit elements, 0-based, one circuit per line>
// or
//   matrix
//   <matrix text format>
void write_matroid(std::ostream& os, const Matroid& m);
Matroid read_matroid(std::istream& is);

}  // namespace mqss
