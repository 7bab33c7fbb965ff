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

#include "mqss/scheme.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "mqss/error.hpp"

namespace mqss {

namespace {

// Minimal sets over share positions, from codewords with a nonzero dealer entry.
std::vector<Subset> dealer_supports(const std::vector<MinimalCodeword>& words, std::size_t dealer) {
  std::vector<Subset> sets;
  for (const MinimalCodeword& w : words) {
    if (w.word[dealer] == 0) continue;
    Subset s = 0;
    for (std::size_t i : w.support) {
      if (i == dealer) continue;
      s |= bit(i < dealer ? i : i - 1);
    }
    sets.push_back(s);
  }
  return sets;
}

// Minimal codeword with the given full-coordinate support, scaled so the
// dealer entry is 1. Among several, the lexicographically smallest.
std::optional<Vec> word_with_support(const Field& f, const std::vector<MinimalCodeword>& words, Subset full_support,
                                     std::size_t dealer) {
  std::optional<Vec> best;
  for (const MinimalCodeword& w : words) {
    Subset s = 0;
    for (std::size_t i : w.support) s |= bit(i);
    if (s != full_support) continue;
    Vec v = scaled(f, w.word, f.inv(w.word[dealer]));
    if (!best || v < *best) best = std::move(v);
  }
  return best;
}

// Share part of a word (1 | g') in C-perp with supp(g') = supp(g). For a
// self-dual code (1 | g) itself qualifies. If no such word exists the dealer
// row of C-perp is used; g . g' = -1 holds either way.
Vec logical_z_word(const LinearCode& cd, const DealerSplit& split, std::size_t dealer) {
  Vec full = split.g;
  full.insert(full.begin() + static_cast<std::ptrdiff_t>(dealer), Elem{1});
  auto strip = [&](Vec v) {
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(dealer));
    return v;
  };
  if (cd.contains(full)) return split.g;
  std::optional<Vec> best;
  for_each_codeword(cd, [&](std::span<const Elem> w) {
    if (w[dealer] != 1) return;
    for (std::size_t i = 0; i < w.size(); ++i)
      if ((w[i] == 0) != (full[i] == 0)) return;
    Vec v(w.begin(), w.end());
    if (!best || v < *best) best = std::move(v);
  });
  if (best) return strip(*best);
  return dealer_split(cd, dealer).g;
}

void check_share(std::size_t i, std::size_t shares) {
  if (i >= shares) fail("share index " + std::to_string(i + 1) + " out of range");
}

Elem gate_scalar(const Gate& g) { return g.kind == GateKind::kSwap ? Elem{1} : g.scalar; }

}  // namespace

Elem symplectic_product(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size() || a.size() % 2 != 0) fail("symplectic product needs equal even lengths");
  const std::size_t n = a.size() / 2;
  Elem xz = 0;
  Elem zx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    xz = f.add(xz, f.mul(a[i], b[n + i]));
    zx = f.add(zx, f.mul(a[n + i], b[i]));
  }
  return f.sub(xz, zx);
}

QssScheme::QssScheme(LinearCode code, std::size_t dealer, DealerSplit split, StabilizerTableau tableau,
                     AccessStructure access, std::vector<MinimalCodeword> code_minimal,
                     std::vector<MinimalCodeword> dual_minimal)
    : code_(std::move(code)),
      dealer_(dealer),
      split_(std::move(split)),
      tableau_(std::move(tableau)),
      access_(std::move(access)),
      code_minimal_(std::move(code_minimal)),
      dual_minimal_(std::move(dual_minimal)) {}

QssScheme construct_scheme(const LinearCode& c, std::size_t dealer) {
  if (c.length() < 2) fail("code needs at least one share besides the dealer");
  if (c.length() - 1 > 32) fail("at most 32 shares are supported");
  const Field& f = c.field();
  DealerSplit split = dealer_split(c, dealer);
  const LinearCode cd = dual(c);
  const Vec zbar = logical_z_word(cd, split, dealer);
  const std::size_t n = c.length() - 1;

  const Matrix xs = shorten(c, dealer).generator();
  const Matrix zs = dual(puncture(c, dealer)).generator();
  StabilizerTableau t;
  t.field = f;
  t.shares = n;
  const Matrix top = xs.concat(Matrix(f, xs.rows(), n));
  const Matrix bottom = Matrix(f, zs.rows(), n).concat(zs);
  t.rows = top.stack(bottom);
  t.logical_x = split.g;
  t.logical_x.resize(2 * n, 0);
  t.logical_z = Vec(n, 0);
  t.logical_z.insert(t.logical_z.end(), zbar.begin(), zbar.end());

  std::vector<MinimalCodeword> cm = minimal_codewords(c);
  std::vector<MinimalCodeword> dm = minimal_codewords(cd);
  // The proof reads the access structure off C-perp; for a self-dual code
  // the two families coincide.
  AccessStructure access(n, dealer_supports(c == cd ? cm : dm, dealer));
  return QssScheme(c, dealer, std::move(split), std::move(t), std::move(access), std::move(cm), std::move(dm));
}

QssScheme build_scheme(const LinearCode& c, std::size_t dealer) {
  if (dealer >= c.length()) fail("dealer coordinate " + std::to_string(dealer) + " out of range");
  if (!is_self_dual(c)) fail("code is not self-dual");
  return construct_scheme(c, dealer);
}

QssScheme build_scheme_from_matroid(const Matroid& m, std::size_t dealer) {
  if (!m.representation()) fail("matroid has no representation");
  if (dealer >= m.ground_size()) fail("dealer coordinate " + std::to_string(dealer) + " out of range");
  if (!is_identically_self_dual(m)) fail("matroid is not identically self-dual");
  const Matrix& rep = *m.representation();
  if (!(Matroid::from_matrix(rep) == m)) fail("circuits do not match the representation");
  return construct_scheme(LinearCode(rep), dealer);
}

std::vector<Vec> encode_basis(const QssScheme& scheme, Elem s) {
  const Field& f = scheme.field();
  if (!f.contains(s)) fail("secret symbol outside the field");
  const Vec offset = scaled(f, scheme.split().g, s);
  std::vector<Vec> out;
  for_each_codeword(shorten(scheme.code(), scheme.dealer()),
                    [&](std::span<const Elem> x) { out.push_back(added(f, offset, x)); });
  std::sort(out.begin(), out.end());
  return out;
}

AccessStructure access_structure(const QssScheme& scheme) { return scheme.minimal_access(); }

RecoveryWitness recovery_witness(const QssScheme& scheme, Subset authorized) {
  const AccessStructure& access = scheme.minimal_access();
  if (authorized & ~access.all_players()) fail("set contains an unknown share");
  const auto& sets = access.minimal_sets();
  auto found = std::find_if(sets.begin(), sets.end(), [&](Subset m) { return is_subset_of(m, authorized); });
  if (found == sets.end()) fail("set is not authorized");

  const Field& f = scheme.field();
  const std::size_t d = scheme.dealer();
  Subset full = bit(d);
  for (std::size_t j : elements(*found)) full |= bit(scheme.coordinate_of(j));
  auto dual_word = word_with_support(f, scheme.dual_minimal(), full, d);
  auto word = word_with_support(f, scheme.code_minimal(), full, d);
  if (!dual_word || !word) fail("no minimal codeword matches the authorized set");

  RecoveryWitness w;
  w.minimal_set = *found;
  w.dual_word = std::move(*dual_word);
  w.logical = std::move(*word);
  w.logical.erase(w.logical.begin() + static_cast<std::ptrdiff_t>(d));
  return w;
}

GatePlan reconstruction_plan(const QssScheme& scheme, Subset authorized) {
  const RecoveryWitness w = recovery_witness(scheme, authorized);
  const Field& f = scheme.field();
  const std::vector<std::size_t> m = elements(w.minimal_set);
  if (m.empty()) fail("dual codeword has no support on the shares");

  // Share-indexed view of c'.
  Vec c(scheme.shares());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = w.dual_word[scheme.coordinate_of(j)];

  // s = -c'_D s = sum c'_i s_i on the code, so the combination is rescaled to
  // pick out s exactly (for q = 2 the rescaling is the identity).
  Elem pairing = 0;
  for (std::size_t i : m) pairing = f.add(pairing, f.mul(c[i], w.logical[i]));
  if (pairing == 0) fail("dual codeword does not pair with the logical operator");
  const Elem mu = f.inv(pairing);

  GatePlan plan;
  const std::size_t pivot = m.front();
  plan.target = std::countr_zero(authorized);
  const Elem lead = f.mul(mu, c[pivot]);
  if (lead != 1) plan.gates.push_back({GateKind::kMul, lead, pivot, pivot});
  for (std::size_t i : m)
    if (i != pivot) plan.gates.push_back({GateKind::kAdd, f.mul(mu, c[i]), i, pivot});
  for (std::size_t j : m)
    if (j != pivot) plan.gates.push_back({GateKind::kAdd, f.neg(w.logical[j]), pivot, j});
  if (plan.target != pivot) plan.gates.push_back({GateKind::kSwap, 1, pivot, plan.target});
  return plan;
}

Vec apply_plan(const Field& f, std::span<const Elem> xz, const GatePlan& plan) {
  if (xz.size() % 2 != 0) fail("symplectic vector has odd length");
  const std::size_t n = xz.size() / 2;
  Vec v(xz.begin(), xz.end());
  for (const Gate& g : plan.gates) {
    check_share(g.first, n);
    check_share(g.second, n);
    if (gate_scalar(g) == 0) fail("gate scalar must be nonzero");
    switch (g.kind) {
      case GateKind::kAdd:
        if (g.first == g.second) fail("ADD needs distinct shares");
        v[g.second] = f.add(v[g.second], f.mul(g.scalar, v[g.first]));
        v[n + g.first] = f.sub(v[n + g.first], f.mul(g.scalar, v[n + g.second]));
        break;
      case GateKind::kMul:
        v[g.first] = f.mul(v[g.first], g.scalar);
        v[n + g.first] = f.mul(v[n + g.first], f.inv(g.scalar));
        break;
      case GateKind::kSwap:
        std::swap(v[g.first], v[g.second]);
        std::swap(v[n + g.first], v[n + g.second]);
        break;
    }
  }
  return v;
}

StabilizerTableau apply_plan(const StabilizerTableau& t, const GatePlan& plan) {
  StabilizerTableau out = t;
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < t.rows.rows(); ++r) rows.push_back(apply_plan(t.field, t.rows.row(r), plan));
  out.rows = Matrix::from_rows(t.field, rows, 2 * t.shares);
  out.logical_x = apply_plan(t.field, t.logical_x, plan);
  out.logical_z = apply_plan(t.field, t.logical_z, plan);
  return out;
}

GatePlan plan_prefix(const GatePlan& plan, std::size_t count) {
  GatePlan out;
  out.target = plan.target;
  out.gates.assign(plan.gates.begin(), plan.gates.begin() + static_cast<std::ptrdiff_t>(std::min(count, plan.gates.size())));
  return out;
}

std::size_t phase_one_length(const GatePlan& plan) {
  // Phase one ends at the first gate not writing into the pivot share.
  if (plan.gates.empty()) return 0;
  const Gate& first = plan.gates.front();
  const std::size_t pivot = first.kind == GateKind::kMul ? first.first : first.second;
  std::size_t k = 0;
  while (k < plan.gates.size()) {
    const Gate& g = plan.gates[k];
    const bool into_pivot = (g.kind == GateKind::kMul && g.first == pivot) ||
                            (g.kind == GateKind::kAdd && g.second == pivot);
    if (!into_pivot) break;
    ++k;
  }
  return k;
}

void write_scheme(std::ostream& os, const QssScheme& scheme) {
  const StabilizerTableau& t = scheme.tableau();
  os << "code\n";
  write_code(os, scheme.code());
  os << "dealer " << scheme.dealer() << "\n";
  os << "g\n" << vector_text(scheme.split().g) << "\n";
  os << "stabilizer\n";
  write_matrix(os, t.rows);
  os << "logical_x\n" << vector_text(t.logical_x) << "\n";
  os << "logical_z\n" << vector_text(t.logical_z) << "\n";
  os << "minimal_access\n";
  write_access(os, scheme.minimal_access());
}

QssScheme read_scheme(std::istream& is) {
  static const std::vector<std::string> kSections = {"code", "g", "stabilizer", "logical_x", "logical_z",
                                                     "minimal_access"};
  std::map<std::string, std::string> blocks;
  std::optional<std::size_t> dealer;
  std::string current;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("dealer", 0) == 0) {
      std::istringstream ls(line.substr(6));
      long long d = -1;
      if (!(ls >> d) || d < 0) fail("malformed dealer line");
      dealer = static_cast<std::size_t>(d);
      current.clear();
      continue;
    }
    if (std::find(kSections.begin(), kSections.end(), line) != kSections.end()) {
      if (blocks.count(line)) fail("duplicate section " + line);
      current = line;
      blocks[current];
      continue;
    }
    if (current.empty()) {
      if (line.empty() || line[0] == '#') continue;
      fail("unexpected line in scheme file: " + line);
    }
    blocks[current] += line + "\n";
  }
  for (const std::string& s : kSections)
    if (!blocks.count(s)) fail("scheme file lacks section " + s);
  if (!dealer) fail("scheme file lacks the dealer line");

  std::istringstream code_text(blocks["code"]);
  const LinearCode code = read_code(code_text);
  const QssScheme scheme = is_self_dual(code)
                               ? build_scheme(code, *dealer)
                               : build_scheme_from_matroid(Matroid::from_matrix(code.presentation()), *dealer);

  auto single_line = [&](const std::string& name) {
    std::istringstream in(blocks[name]);
    std::string l;
    while (std::getline(in, l))
      if (!l.empty()) return l;
    return std::string();
  };
  const Field& f = code.field();
  const StabilizerTableau& t = scheme.tableau();
  if (parse_vector(f, single_line("g")) != scheme.split().g) fail("scheme file: g disagrees with the code");
  if (!(matrix_from_text(blocks["stabilizer"]) == t.rows)) fail("scheme file: stabilizer disagrees with the code");
  if (parse_vector(f, single_line("logical_x")) != t.logical_x) fail("scheme file: logical_x disagrees with the code");
  if (parse_vector(f, single_line("logical_z")) != t.logical_z) fail("scheme file: logical_z disagrees with the code");
  std::istringstream access_text(blocks["minimal_access"]);
  if (!(read_access(access_text) == scheme.minimal_access()))
    fail("scheme file: minimal_access disagrees with the code");
  return scheme;
}

void write_plan(std::ostream& os, const GatePlan& plan) {
  os << "target " << plan.target + 1 << "\n";
  for (const Gate& g : plan.gates) {
    switch (g.kind) {
      case GateKind::kAdd:
        os << "ADD " << unsigned{g.scalar} << ' ' << g.first + 1 << ' ' << g.second + 1 << "\n";
        break;
      case GateKind::kMul:
        os << "MUL " << unsigned{g.scalar} << ' ' << g.first + 1 << "\n";
        break;
      case GateKind::kSwap:
        os << "SWAP " << g.first + 1 << ' ' << g.second + 1 << "\n";
        break;
    }
  }
}

GatePlan read_plan(std::istream& is, const Field& f, std::size_t shares) {
  GatePlan plan;
  bool have_target = false;
  std::string line;
  auto share = [&](long long v) {
    if (v < 1 || static_cast<std::size_t>(v) > shares) fail("plan share index out of range");
    return static_cast<std::size_t>(v - 1);
  };
  auto scalar = [&](long long v) {
    if (v <= 0 || !f.contains(static_cast<unsigned>(v))) fail("plan scalar must be a nonzero field element");
    return static_cast<Elem>(v);
  };
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op) || op[0] == '#') continue;
    long long a = 0, b = 0, c = 0;
    if (op == "target") {
      if (!(ls >> a)) fail("malformed target line");
      plan.target = share(a);
      have_target = true;
    } else if (op == "ADD") {
      if (!(ls >> a >> b >> c)) fail("malformed ADD gate");
      if (b == c) fail("ADD needs distinct shares");
      plan.gates.push_back({GateKind::kAdd, scalar(a), share(b), share(c)});
    } else if (op == "MUL") {
      if (!(ls >> a >> b)) fail("malformed MUL gate");
      const std::size_t i = share(b);
      plan.gates.push_back({GateKind::kMul, scalar(a), i, i});
    } else if (op == "SWAP") {
      if (!(ls >> a >> b)) fail("malformed SWAP gate");
      plan.gates.push_back({GateKind::kSwap, 1, share(a), share(b)});
    } else {
      fail("unknown gate " + op);
    }
    std::string extra;
    if (ls >> extra) fail("trailing text in plan line: " + line);
  }
  if (!have_target) fail("plan lacks a target line");
  return plan;
}

}  // namespace mqss
