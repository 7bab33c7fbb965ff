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

#include "mqss/access.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "mqss/error.hpp"

namespace mqss {
namespace {

std::vector<int> default_labels(std::size_t n) {
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i + 1);
  return labels;
}

void check_family_guard(std::size_t n) {
  if (n > kMaxFamilyPlayers)
    fail("family comparison limited to " + std::to_string(kMaxFamilyPlayers) + " players");
}

// Membership table of the monotone closure of `minimal` over n positions.
std::vector<char> up_closure(const std::vector<Subset>& minimal, std::size_t n) {
  std::vector<char> member(std::size_t{1} << n, 0);
  for (Subset s : minimal) member[s] = 1;
  const Subset all = full_set(n);
  for (Subset s = 0;; ++s) {
    if (member[s])
      for (std::size_t i = 0; i < n; ++i) member[s | bit(i)] = 1;
    if (s == all) break;
  }
  return member;
}

// Dual of an arbitrary family of subsets of an n-set: { X : complement(X) not in F }.
std::vector<char> family_dual(const std::vector<char>& family, std::size_t n) {
  const Subset all = full_set(n);
  std::vector<char> out(family.size());
  for (Subset s = 0;; ++s) {
    out[s] = !family[all & ~s];
    if (s == all) break;
  }
  return out;
}

bool family_included(const std::vector<char>& a, const std::vector<char>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// Minimal transversals (blocker) of a family.
std::vector<Subset> blocker(const std::vector<Subset>& family) {
  std::vector<Subset> partial{0};
  for (Subset edge : family) {
    std::vector<Subset> next;
    for (Subset t : partial) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (std::size_t e : elements(edge)) next.push_back(t | bit(e));
    }
    partial = minimal_members(std::move(next));
  }
  return partial;
}

// Keeps the positions in `keep` and renumbers them consecutively.
Subset compress(Subset s, Subset keep) {
  Subset out = 0;
  std::size_t j = 0;
  for (std::size_t i : elements(keep)) {
    if (contains(s, i)) out |= bit(j);
    ++j;
  }
  return out;
}

struct RawMinor {
  std::vector<Subset> sets;  // over compressed positions
  std::size_t players = 0;
  bool degenerate = false;
};

RawMinor raw_minor(const std::vector<Subset>& minimal, std::size_t n, Subset deleted, Subset contracted) {
  std::vector<Subset> kept;
  for (Subset s : minimal)
    if ((s & deleted) == 0) kept.push_back(s & ~contracted);
  RawMinor out;
  const Subset remaining = full_set(n) & ~(deleted | contracted);
  out.players = static_cast<std::size_t>(size_of(remaining));
  kept = minimal_members(std::move(kept));
  if (kept.empty() || kept.front() == 0) {
    out.degenerate = true;
    return out;
  }
  for (Subset s : kept) out.sets.push_back(compress(s, remaining));
  sort_family(out.sets);
  return out;
}

std::vector<std::vector<int>> signatures(const std::vector<Subset>& sets, std::size_t n) {
  std::vector<std::vector<int>> sig(n);
  for (Subset s : sets)
    for (std::size_t i : elements(s)) sig[i].push_back(size_of(s));
  for (auto& v : sig) std::sort(v.begin(), v.end());
  return sig;
}

bool isomorphic_raw(const std::vector<Subset>& a, const std::vector<Subset>& b, std::size_t n) {
  if (a.size() != b.size()) return false;
  std::vector<int> sa, sb;
  for (Subset s : a) sa.push_back(size_of(s));
  for (Subset s : b) sb.push_back(size_of(s));
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  const auto sig_a = signatures(a, n);
  const auto sig_b = signatures(b, n);
  std::vector<Subset> target = b;
  sort_family(target);
  std::vector<std::size_t> perm(n);
  std::vector<char> used(n, 0);

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) {
      std::vector<Subset> mapped;
      for (Subset s : a) {
        Subset m = 0;
        for (std::size_t e : elements(s)) m |= bit(perm[e]);
        mapped.push_back(m);
      }
      sort_family(mapped);
      return mapped == target;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sig_a[i] != sig_b[j]) continue;
      used[j] = 1;
      perm[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return search(search, 0);
}

std::vector<Subset> raw_sets(std::initializer_list<std::initializer_list<std::size_t>> sets) {
  std::vector<Subset> out;
  for (auto s : sets) {
    Subset m = 0;
    for (std::size_t e : s) m |= bit(e - 1);
    out.push_back(m);
  }
  return out;
}

std::vector<Subset> raw_d(std::size_t s) {
  std::vector<Subset> out{full_set(s)};
  for (std::size_t i = 0; i < s; ++i) out.push_back(bit(i) | bit(s));
  return out;
}

}  // namespace

AccessStructure::AccessStructure(std::size_t player_count, std::vector<Subset> sets)
    : AccessStructure(default_labels(player_count), std::move(sets)) {}

AccessStructure::AccessStructure(std::vector<int> labels, std::vector<Subset> sets) : labels_(std::move(labels)) {
  if (labels_.size() > 32) fail("at most 32 players are supported");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 1) fail("player labels must be positive");
    if (i > 0 && labels_[i] <= labels_[i - 1]) fail("player labels must be strictly increasing");
  }
  for (Subset s : sets)
    if (!is_subset_of(s, all_players())) fail("authorized set mentions an unknown player");
  minimal_ = minimal_members(std::move(sets));
  if (minimal_.empty()) fail("access structure has no authorized sets");
  if (minimal_.front() == 0) fail("access structure authorizes the empty set");
}

AccessStructure AccessStructure::from_labels(std::size_t player_count, const std::vector<std::vector<int>>& sets) {
  std::vector<Subset> masks;
  for (const auto& s : sets) {
    Subset m = 0;
    for (int label : s) {
      if (label < 1 || static_cast<std::size_t>(label) > player_count)
        fail("player " + std::to_string(label) + " outside 1.." + std::to_string(player_count));
      m |= bit(static_cast<std::size_t>(label - 1));
    }
    masks.push_back(m);
  }
  return AccessStructure(player_count, std::move(masks));
}

Subset AccessStructure::mask_of(const std::vector<int>& labels) const {
  Subset m = 0;
  for (int label : labels) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) fail("player " + std::to_string(label) + " is not in the structure");
    m |= bit(static_cast<std::size_t>(it - labels_.begin()));
  }
  return m;
}

std::vector<int> AccessStructure::labels_of(Subset s) const {
  std::vector<int> out;
  for (std::size_t i : elements(s)) out.push_back(labels_.at(i));
  return out;
}

bool AccessStructure::is_authorized(Subset s) const {
  if (!is_subset_of(s, all_players())) fail("subset mentions an unknown player");
  return std::any_of(minimal_.begin(), minimal_.end(), [&](Subset m) { return is_subset_of(m, s); });
}

AccessStructure dual(const AccessStructure& a) { return AccessStructure(a.players(), blocker(a.minimal_sets())); }

bool is_self_orthogonal(const AccessStructure& a, OrthogonalityTest test) {
  const auto& sets = a.minimal_sets();
  const std::size_t n = a.player_count();
  switch (test) {
    case OrthogonalityTest::kPairwiseIntersection:
      for (Subset x : sets)
        for (Subset y : sets)
          if ((x & y) == 0) return false;
      return true;
    case OrthogonalityTest::kContainedInDual: {
      check_family_guard(n);
      const auto gamma = up_closure(sets, n);
      return family_included(gamma, family_dual(gamma, n));
    }
    case OrthogonalityTest::kDualAdversary: {
      check_family_guard(n);
      auto adversary = up_closure(sets, n);
      for (char& c : adversary) c = !c;
      return family_included(family_dual(adversary, n), adversary);
    }
  }
  return false;
}

bool is_self_dual(const AccessStructure& a) { return dual(a) == a; }

bool is_connected(const AccessStructure& a) {
  Subset covered = 0;
  for (Subset s : a.minimal_sets()) covered |= s;
  return covered == a.all_players();
}

std::uint64_t authorized_count(const AccessStructure& a) {
  check_family_guard(a.player_count());
  const auto gamma = up_closure(a.minimal_sets(), a.player_count());
  return static_cast<std::uint64_t>(std::count(gamma.begin(), gamma.end(), 1));
}

namespace {

AccessStructure minor_of(const AccessStructure& a, Subset deleted, Subset contracted) {
  RawMinor raw = raw_minor(a.minimal_sets(), a.player_count(), deleted, contracted);
  if (raw.degenerate) fail("minor is degenerate (no authorized set, or the empty set is authorized)");
  const Subset remaining = a.all_players() & ~(deleted | contracted);
  return AccessStructure(a.labels_of(remaining), std::move(raw.sets));
}

}  // namespace

AccessStructure delete_players(const AccessStructure& a, const std::vector<int>& z) {
  return minor_of(a, a.mask_of(z), 0);
}

AccessStructure contract_players(const AccessStructure& a, const std::vector<int>& z) {
  return minor_of(a, 0, a.mask_of(z));
}

MatroidRelation matroid_relation(const AccessStructure& a) {
  const std::size_t n = a.player_count();
  if (n > kMaxMatroidRelatedPlayers)
    fail("matroid-relatedness limited to " + std::to_string(kMaxMatroidRelatedPlayers) + " players");
  std::vector<Subset> extended;
  for (Subset s : a.minimal_sets()) extended.push_back((s << 1) | 1u);

  std::vector<Subset> joins;
  for (std::size_t i = 0; i < extended.size(); ++i) {
    for (std::size_t j = i + 1; j < extended.size(); ++j) {
      const Subset both = extended[i] | extended[j];
      Subset common = both;
      for (Subset c : extended)
        if (is_subset_of(c, both)) common &= c;
      joins.push_back(both & ~common);
    }
  }

  // Minimal J-sets plus the extended sets themselves; the two families are
  // not minimized against each other, so a J-set inside some A u D breaks M1.
  std::vector<Subset> candidates = minimal_members(std::move(joins));
  candidates.insert(candidates.end(), extended.begin(), extended.end());
  sort_family(candidates);

  MatroidRelation out;
  out.circuits = std::move(candidates);
  out.related = verify_circuit_axioms(out.circuits);
  if (out.related) out.matroid = Matroid(n + 1, out.circuits);
  return out;
}

AccessStructure excluded_minor_a() { return AccessStructure(4, raw_sets({{1, 2}, {2, 3}, {3, 4}})); }
AccessStructure excluded_minor_b() { return AccessStructure(4, raw_sets({{1, 2}, {1, 3}, {1, 4}, {2, 3}})); }
AccessStructure excluded_minor_c() { return AccessStructure(4, raw_sets({{1, 2}, {1, 3}, {2, 3, 4}})); }
AccessStructure excluded_minor_d(std::size_t s) {
  if (s < 3) fail("excluded structure d needs s >= 3");
  return AccessStructure(s + 1, raw_d(s));
}

bool isomorphic(const AccessStructure& a, const AccessStructure& b) {
  if (a.player_count() != b.player_count()) return false;
  return isomorphic_raw(a.minimal_sets(), b.minimal_sets(), a.player_count());
}

std::optional<ForbiddenMinor> seymour_forbidden_minor(const AccessStructure& a) {
  const std::size_t n = a.player_count();
  if (n > kMaxMinorSearchPlayers)
    fail("minor search limited to " + std::to_string(kMaxMinorSearchPlayers) + " players");
  if (n < 4) return std::nullopt;

  const std::vector<std::pair<std::string, std::vector<Subset>>> four = {
      {"a", excluded_minor_a().minimal_sets()},
      {"b", excluded_minor_b().minimal_sets()},
      {"c", excluded_minor_c().minimal_sets()},
      {"d(s=3)", raw_d(3)},
  };

  std::vector<std::vector<Subset>> by_size(n + 1);
  for (Subset s = 0;; ++s) {
    by_size[static_cast<std::size_t>(size_of(s))].push_back(s);
    if (s == full_set(n)) break;
  }
  for (auto& v : by_size) sort_family(v);

  auto match = [&](const RawMinor& m) -> std::optional<std::string> {
    if (m.degenerate || m.players < 4) return std::nullopt;
    if (m.players == 4) {
      for (const auto& [name, sets] : four)
        if (isomorphic_raw(m.sets, sets, 4)) return name;
      return std::nullopt;
    }
    const std::size_t s = m.players - 1;
    if (isomorphic_raw(m.sets, raw_d(s), m.players)) return "d(s=" + std::to_string(s) + ")";
    return std::nullopt;
  };

  for (std::size_t total = 0; total + 4 <= n; ++total) {
    for (std::size_t del = total + 1; del-- > 0;) {
      const std::size_t con = total - del;
      for (Subset zd : by_size[del]) {
        for (Subset zc : by_size[con]) {
          if (zd & zc) continue;
          const RawMinor m = raw_minor(a.minimal_sets(), n, zd, zc);
          if (auto name = match(m)) return ForbiddenMinor{*name, a.labels_of(zd), a.labels_of(zc)};
        }
      }
    }
  }
  return std::nullopt;
}

void write_access(std::ostream& os, const AccessStructure& a) {
  os << "players " << a.player_count() << '\n';
  bool plain = true;
  for (std::size_t i = 0; i < a.player_count(); ++i)
    if (a.players()[i] != static_cast<int>(i + 1)) plain = false;
  if (!plain) {
    os << "labels";
    for (int l : a.players()) os << ' ' << l;
    os << '\n';
  }
  for (Subset s : a.minimal_sets()) {
    bool first = true;
    for (int l : a.labels_of(s)) {
      os << (first ? "" : " ") << l;
      first = false;
    }
    os << '\n';
  }
}

AccessStructure read_access(std::istream& is) {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) fail("empty access-structure file");
  std::istringstream head(lines[0]);
  std::string tag;
  long n = -1;
  if (!(head >> tag) || tag != "players" || !(head >> n) || n < 0)
    fail("expected 'players <n>', got '" + lines[0] + "'");
  std::vector<int> labels = default_labels(static_cast<std::size_t>(n));
  std::size_t next = 1;
  if (lines.size() > 1 && lines[1].rfind("labels", 0) == 0) {
    std::istringstream ls(lines[1].substr(6));
    labels.clear();
    int l = 0;
    while (ls >> l) labels.push_back(l);
    if (labels.size() != static_cast<std::size_t>(n)) fail("label count does not match player count");
    next = 2;
  }
  const AccessStructure shell(labels, {full_set(labels.size())});
  std::vector<Subset> sets;
  for (std::size_t i = next; i < lines.size(); ++i) {
    std::istringstream ss(lines[i]);
    std::vector<int> members;
    long v = 0;
    while (ss >> v) members.push_back(static_cast<int>(v));
    if (!ss.eof()) fail("malformed set line '" + lines[i] + "'");
    sets.push_back(shell.mask_of(members));
  }
  return AccessStructure(labels, std::move(sets));
}

}  // namespace mqss
