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

#include "mqss/matroid.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "mqss/access.hpp"
#include "mqss/error.hpp"

namespace mqss {
namespace {

void check_ground(std::size_t n) {
  if (n > kMaxGroundSize)
    fail("ground set of size " + std::to_string(n) + " exceeds the limit of " + std::to_string(kMaxGroundSize));
}

std::size_t column_rank(const Matrix& m, Subset cols) {
  const auto idx = elements(cols);
  return rank(m.select_columns(idx));
}

// Circuits of the matroid whose independent sets are flagged in `independent`
// (indexed by subset mask).
std::vector<Subset> circuits_from_independence(std::size_t n, const std::vector<char>& independent) {
  std::vector<Subset> out;
  const Subset limit = full_set(n);
  for (Subset s = 1; s != 0 && s <= limit; ++s) {
    if (independent[s]) continue;
    bool minimal = true;
    for (Subset rest = s; rest; rest &= rest - 1) {
      const Subset without = s & ~(rest & (~rest + 1));
      if (!independent[without]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
    if (s == limit) break;
  }
  sort_family(out);
  return out;
}

}  // namespace

bool verify_circuit_axioms(const std::vector<Subset>& circuits) {
  for (Subset c : circuits)
    if (c == 0) return false;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      const Subset a = circuits[i];
      const Subset b = circuits[j];
      if (a == b || is_subset_of(a, b)) return false;
      for (std::size_t x : elements(a & b)) {
        const Subset pool = (a | b) & ~bit(x);
        const bool found = std::any_of(circuits.begin(), circuits.end(),
                                       [&](Subset c) { return is_subset_of(c, pool); });
        if (!found) return false;
      }
    }
  }
  return true;
}

Matroid::Matroid(std::size_t ground_size, std::vector<Subset> circuits) : ground_(ground_size) {
  check_ground(ground_size);
  for (Subset c : circuits)
    if (!is_subset_of(c, full_set(ground_size))) fail("circuit element outside the ground set");
  sort_family(circuits);
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  if (!verify_circuit_axioms(circuits)) fail("family violates the circuit axioms");
  circuits_ = std::move(circuits);
}

Matroid::Matroid(std::size_t ground_size, std::vector<Subset> circuits, Matrix representation)
    : Matroid(ground_size, std::move(circuits)) {
  if (representation.cols() != ground_size) fail("representation has the wrong number of columns");
  for (Subset c : circuits_) {
    const std::size_t size = static_cast<std::size_t>(size_of(c));
    if (column_rank(representation, c) != size - 1) fail("circuit is not minimally dependent in the representation");
  }
  const std::size_t r = mqss::rank(representation);
  for (Subset b : bases())
    if (static_cast<std::size_t>(size_of(b)) != r || column_rank(representation, b) != r)
      fail("basis is not independent in the representation");
  representation_ = std::move(representation);
}

Matroid Matroid::from_matrix(const Matrix& m) {
  const std::size_t n = m.cols();
  check_ground(n);
  std::vector<char> independent(std::size_t{1} << n, 0);
  independent[0] = 1;
  std::vector<Subset> circuits;
  const Subset limit = full_set(n);
  for (Subset s = 1; n > 0 && s <= limit; ++s) {
    bool candidate = true;
    for (Subset rest = s; rest; rest &= rest - 1) {
      if (!independent[s & ~(rest & (~rest + 1))]) {
        candidate = false;
        break;
      }
    }
    if (candidate) {
      if (column_rank(m, s) == static_cast<std::size_t>(size_of(s)))
        independent[s] = 1;
      else
        circuits.push_back(s);
    }
    if (s == limit) break;
  }
  Matroid out(n, std::move(circuits));
  out.representation_ = m;
  return out;
}

bool Matroid::is_independent(Subset s) const {
  return std::none_of(circuits_.begin(), circuits_.end(), [&](Subset c) { return is_subset_of(c, s); });
}

std::size_t Matroid::rank(Subset s) const {
  Subset chosen = 0;
  for (std::size_t e : elements(s))
    if (is_independent(chosen | bit(e))) chosen |= bit(e);
  return static_cast<std::size_t>(size_of(chosen));
}

std::vector<Subset> Matroid::bases() const {
  const int r = static_cast<int>(rank());
  std::vector<Subset> out;
  const Subset limit = full_set(ground_);
  for (Subset s = 0;; ++s) {
    if (size_of(s) == r && is_independent(s)) out.push_back(s);
    if (s == limit) break;
  }
  sort_family(out);
  return out;
}

Matroid dual(const Matroid& m) {
  const std::size_t n = m.ground_size();
  check_ground(n);
  const Subset all = full_set(n);
  // X is independent in the dual iff X avoids some basis.
  std::vector<char> independent(std::size_t{1} << n, 0);
  for (Subset b : m.bases()) independent[all & ~b] = 1;
  for (Subset s = all;; --s) {
    if (independent[s])
      for (Subset rest = s; rest; rest &= rest - 1) independent[s & ~(rest & (~rest + 1))] = 1;
    if (s == 0) break;
  }
  std::vector<Subset> circuits = circuits_from_independence(n, independent);
  if (m.representation()) return Matroid(n, std::move(circuits), null_space(*m.representation()));
  return Matroid(n, std::move(circuits));
}

bool is_identically_self_dual(const Matroid& m) { return dual(m).circuits() == m.circuits(); }

AccessStructure induced_access_structure(const Matroid& m, std::size_t dealer) {
  if (dealer >= m.ground_size()) fail("dealer " + std::to_string(dealer) + " outside the ground set");
  const std::size_t n = m.ground_size();
  std::vector<Subset> sets;
  for (Subset c : m.circuits()) {
    if (!contains(c, dealer)) continue;
    if (c == bit(dealer)) fail("dealer is a loop; induced structure is trivial");
    // Compress: ground element e > dealer becomes player position e-1.
    const Subset rest = c & ~bit(dealer);
    const Subset low = rest & (bit(dealer) - 1);
    const Subset high = (rest >> 1) & ~(bit(dealer) - 1);
    sets.push_back(low | high);
  }
  if (sets.empty()) fail("dealer is a coloop; induced structure empty");
  return AccessStructure(n - 1, std::move(sets));
}

void write_matroid(std::ostream& os, const Matroid& m) {
  if (m.representation()) {
    os << "matrix\n";
    write_matrix(os, *m.representation());
    return;
  }
  os << "ground " << m.ground_size() << '\n';
  for (Subset c : m.circuits()) {
    bool first = true;
    for (std::size_t e : elements(c)) {
      os << (first ? "" : " ") << e;
      first = false;
    }
    os << '\n';
  }
}

Matroid read_matroid(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos && line[0] != '#') break;
  }
  std::istringstream head(line);
  std::string tag;
  head >> tag;
  if (tag == "matrix") return Matroid::from_matrix(read_matrix(is));
  long n = -1;
  if (tag != "ground" || !(head >> n) || n < 0) fail("expected 'ground <size>' or 'matrix', got '" + line + "'");
  check_ground(static_cast<std::size_t>(n));
  std::vector<Subset> circuits;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    std::istringstream ss(line);
    Subset c = 0;
    long e = 0;
    while (ss >> e) {
      if (e < 0 || e >= n) fail("circuit element " + std::to_string(e) + " outside the ground set");
      c |= bit(static_cast<std::size_t>(e));
    }
    if (!ss.eof()) fail("malformed circuit line '" + line + "'");
    circuits.push_back(c);
  }
  return Matroid(static_cast<std::size_t>(n), std::move(circuits));
}

}  // namespace mqss
