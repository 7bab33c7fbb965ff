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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mqss {

/// Bitmask over at most 32 positions.
using Subset = std::uint32_t;

inline constexpr Subset bit(std::size_t i) { return Subset{1} << i; }
inline constexpr Subset full_set(std::size_t n) { return n >= 32 ? ~Subset{0} : bit(n) - 1; }
inline constexpr bool contains(Subset s, std::size_t i) { return (s >> i) & 1u; }
inline constexpr bool is_subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
inline int size_of(Subset s) { return std::popcount(s); }

std::vector<std::size_t> elements(Subset s);
Subset subset_of(const std::vector<std::size_t>& elems);

/// Order by size, then lexicographically by ascending element list.
bool subset_less(Subset a, Subset b);
void sort_family(std::vector<Subset>& family);

/// Inclusion-minimal members, deduplicated and sorted.
std::vector<Subset> minimal_members(std::vector<Subset> family);

/// "{1,2,7}" with the given labels (labels[i] names position i).
std::string format_subset(Subset s, const std::vector<int>& labels);

}  // namespace mqss
