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

#include "mqss/subset.hpp"

#include <algorithm>

namespace mqss {

std::vector<std::size_t> elements(Subset s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

Subset subset_of(const std::vector<std::size_t>& elems) {
  Subset s = 0;
  for (std::size_t e : elems) s |= bit(e);
  return s;
}

bool subset_less(Subset a, Subset b) {
  const int sa = size_of(a);
  const int sb = size_of(b);
  if (sa != sb) return sa < sb;
  const Subset diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

void sort_family(std::vector<Subset>& family) { std::sort(family.begin(), family.end(), subset_less); }

std::vector<Subset> minimal_members(std::vector<Subset> family) {
  sort_family(family);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Subset> out;
  for (Subset s : family) {
    bool dominated = false;
    for (Subset m : out)
      if (is_subset_of(m, s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::string format_subset(Subset s, const std::vector<int>& labels) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : elements(s)) {
    if (!first) out += ',';
    out += std::to_string(labels.at(i));
    first = false;
  }
  return out + "}";
}

}  // namespace mqss
