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
#include <functional>
#include <span>
#include <vector>

#include "mqss/matrix.hpp"

namespace mqss {

/// Upper bound on q^k for codeword enumeration.
inline constexpr std::uint64_t kMaxEnumeratedCodewords = std::uint64_t{1} << 24;

/// Subspace of GF(q)^n. The canonical generator is kept in reduced
/// row-echelon form; the presentation keeps the independent rows in the order
/// they were supplied, which fixes the dealer row chosen by dealer_split.
class LinearCode {
 public:
  /// Code spanned by the rows of `generator` (rows may be dependent).
  explicit LinearCode(const Matrix& generator);
  static LinearCode zero(Field field, std::size_t length);

  const Field& field() const { return gen_.field(); }
  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return gen_.rows(); }
  const Matrix& generator() const { return gen_; }
  const Matrix& presentation() const { return presentation_; }

  bool contains(std::span<const Elem> word) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.field() == b.field() && a.gen_ == b.gen_ && a.length() == b.length();
  }

 private:
  Matrix gen_;
  Matrix presentation_;
};

LinearCode dual(const LinearCode& c);
/// Deletes coordinate i from every codeword.
LinearCode puncture(const LinearCode& c, std::size_t i);
/// Codewords vanishing at i, with coordinate i deleted.
LinearCode shorten(const LinearCode& c, std::size_t i);
bool is_subcode(const LinearCode& sub, const LinearCode& super);
bool is_self_dual(const LinearCode& c);

/// Visits all q^k codewords (message vectors in lexicographic order).
/// Throws Error("code too large to enumerate") past kMaxEnumeratedCodewords.
void for_each_codeword(const LinearCode& c, const std::function<void(std::span<const Elem>)>& visit);
std::vector<Vec> codewords(const LinearCode& c);

std::vector<std::size_t> support(std::span<const Elem> v);
/// Scales v so that its leftmost nonzero entry is 1.
Vec normalize_leading(const Field& f, std::span<const Elem> v);

struct MinimalCodeword {
  Vec word;
  std::vector<std::size_t> support;
};

/// Codewords with inclusion-minimal support, one normalized representative
/// (leading entry 1) per support, sorted lexicographically by word.
std::vector<MinimalCodeword> minimal_codewords(const LinearCode& c);

/// Generator of a code split around a dealer coordinate:
///   [ 1 | g         ]
///   [ 0 | gen_short ]
/// with the dealer column moved to the front.
struct DealerSplit {
  Vec g;
  Matrix gen_short;
  std::size_t dealer = 0;
};

/// The dealer row is the first presentation row covering the dealer,
/// scaled to a unit dealer entry and not reduced against the other rows.
/// Throws Error("dealer coordinate not covered") for an all-zero column.
DealerSplit dealer_split(const LinearCode& c, std::size_t dealer);

/// [1 g; 0 gen_short] (dealer column first).
Matrix reassemble(const Field& f, const DealerSplit& split);

void write_code(std::ostream& os, const LinearCode& c);
LinearCode read_code(std::istream& is);

}  // namespace mqss
