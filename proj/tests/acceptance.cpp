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

// Acceptance runner: one PASS/FAIL line per criterion with its wall time.
// Exit status is nonzero if any criterion fails or overruns its time limit.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "mqss/access.hpp"
#include "mqss/cli.hpp"
#include "mqss/matroid.hpp"
#include "mqss/scheme.hpp"
#include "mqss/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace mqss;

// Collects failed expectations so a criterion can report why it failed.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

Matrix bin(std::vector<Vec> rows) { return Matrix::from_rows(Field(), rows, rows[0].size()); }

Matrix block(const Matrix& rows, std::size_t r0, std::size_t c0, std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t r = r0; r < r0 + 3; ++r) {
    Vec v;
    for (std::size_t c = c0; c < c0 + n; ++c) v.push_back(rows(r, c));
    out.push_back(v);
  }
  return bin(out);
}

// 1. Example reproduction through the command-line front end.
void hamming_example(Check& c) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mqss_acceptance";
  fs::create_directories(dir);
  const std::string code = (dir / "h.mat").string(), scheme = (dir / "scheme.txt").string();
  std::ofstream(code) << fixtures::kHamming8;
  std::ostringstream out, err;
  c.expect(cli::run({"build-scheme", "--in", code, "--dealer", "0", "--out", scheme}, out, err) == 0,
           "build-scheme failed: " + err.str());
  std::ifstream in(scheme);
  const QssScheme s = read_scheme(in);
  fs::remove_all(dir);

  const Matrix sigma = matrix_from_text(fixtures::kSigma0);
  const Matrix& rows = s.tableau().rows;
  c.expect(row_space_equal(shorten(s.code(), 0).generator(), sigma), "shortened code");
  c.expect(row_space_equal(puncture(s.code(), 0).generator(), matrix_from_text(fixtures::kRho0)), "punctured code");
  c.expect(block(rows, 0, 0, 7) == sigma && block(rows, 3, 7, 7) == sigma, "stabilizer blocks");

  const std::vector<Vec> zero = {{0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 0, 1, 1},
                                 {0, 0, 1, 1, 1, 1, 0}, {1, 1, 0, 1, 1, 0, 0}, {1, 0, 1, 1, 0, 0, 1},
                                 {0, 1, 1, 0, 1, 0, 1}, {1, 1, 1, 0, 0, 1, 0}};
  const std::vector<Vec> one = {{1, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 1, 0, 0, 0}, {1, 0, 1, 0, 1, 0, 0},
                                {1, 1, 0, 0, 0, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 1, 0},
                                {1, 0, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 1, 0, 1}};
  auto as_set = [](const std::vector<Vec>& v) { return std::set<Vec>(v.begin(), v.end()); };
  c.expect(as_set(encode_basis(s, 0)) == as_set(zero), "encoding of |0>");
  c.expect(as_set(encode_basis(s, 1)) == as_set(one), "encoding of |1>");

  const GatePlan p = reconstruction_plan(s, s.minimal_access().mask_of({1, 2, 7}));
  const StabilizerTableau t1 = apply_plan(s.tableau(), plan_prefix(p, phase_one_length(p)));
  const StabilizerTableau t2 = apply_plan(s.tableau(), p);
  const Matrix x1 = bin({{0, 0, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 1, 1, 1, 0}});
  const Matrix z1 = bin({{1, 1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 1, 1, 1, 0}});
  const Matrix z2 = bin({{0, 1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 1, 1, 1, 0}});
  c.expect(block(t1.rows, 0, 0, 7) == x1 && block(t1.rows, 3, 7, 7) == z1, "first transformed tableau");
  c.expect(block(t2.rows, 0, 0, 7) == x1 && block(t2.rows, 3, 7, 7) == z2, "second transformed tableau");
  c.expect(block(t1.rows, 0, 7, 7).is_zero() && block(t1.rows, 3, 0, 7).is_zero(), "off-diagonal blocks stay zero");

  const std::vector<Vec> residual = {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1}, {1, 0, 1, 0, 1, 1}, {0, 1, 1, 1, 1, 0},
                                     {1, 0, 1, 1, 0, 0}, {0, 1, 1, 0, 0, 1}, {1, 1, 0, 1, 0, 1}, {1, 1, 0, 0, 1, 0}};
  for (unsigned v = 0; v < 2; ++v) {
    std::vector<Complex> amps(2);
    amps[v] = Rational(1);
    const SparseState after = apply_plan(prepare_secret(s, amps), p);
    std::set<Vec> got, expect;
    for (const auto& [x, coeff] : after.coefficients()) got.insert(x);
    for (Vec r : residual) {
      r.insert(r.begin(), static_cast<Elem>(v));
      expect.insert(r);
    }
    c.expect(got == expect, "residual state for secret " + std::to_string(v));
  }
}

// 2. Exact recovery on every minimal set.
void recovery(Check& c) {
  const QssScheme s = build_scheme(fixtures::hamming8(), 0);
  c.expect(s.minimal_access().minimal_sets().size() == 7, "seven minimal sets");
  for (Subset m : s.minimal_access().minimal_sets()) {
    const Report r = check_recovery(s, m);
    c.expect(r.ok() && r.lines.size() == 4, "recovery on " + s.minimal_access().format(m));
  }
}

// 3. Privacy and completeness over all 128 subsets.
void privacy(Check& c) {
  const QssScheme s = build_scheme(fixtures::hamming8(), 0);
  const Classification cl = classify_all_subsets(s);
  c.expect(cl.authorized.size() == 64 && cl.unauthorized.size() == 64, "64 / 64 split");
  c.expect(cl.exclusive, "every subset either recovers or hides");
  c.expect(cl.matches_access, "partition equals the up-closure of the triples");
  c.expect(cl.complement_exchange, "complement exchange");
  for (Subset b : cl.unauthorized) c.expect(check_privacy(s, b).ok(), "privacy on " + s.minimal_access().format(b));
  for (Subset a : cl.authorized)
    for (Subset b : cl.authorized) c.expect((a & b) != 0, "disjoint authorized sets");
}

void orthogonality_one(Check& c, std::size_t n, const std::vector<Subset>& sets) {
  const AccessStructure a(n, sets);
  const bool p = is_self_orthogonal(a, OrthogonalityTest::kPairwiseIntersection);
  const bool q = is_self_orthogonal(a, OrthogonalityTest::kContainedInDual);
  const bool r = is_self_orthogonal(a, OrthogonalityTest::kDualAdversary);
  const std::string name = a.format(a.all_players());
  c.expect(p == q && q == r, "three predicates disagree");
  c.expect(p == oracle::no_disjoint_pair(oracle::up_closure(sets, n)), "predicate differs from brute force");
  const std::vector<Subset> dm = oracle::minimal_of(oracle::dual_family(oracle::up_closure(sets, n), n));
  if (dm.empty() || dm.front() == 0) return;  // the dual is degenerate
  c.expect(dual(dual(a)) == a, "dual is not an involution");
  if (is_self_dual(a)) c.expect(authorized_count(a) == (std::uint64_t{1} << (n - 1)), "self-dual count");
}

// 4. Self-orthogonality equivalences.
void orthogonality(Check& c) {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& sets : oracle::all_antichains(n)) {
      orthogonality_one(c, n, sets);
      ++count;
    }
  c.expect(count == 1 + 4 + 18 + 166, "antichain count");
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 5 + i % 2;
    orthogonality_one(c, n, oracle::random_antichain(rng, n));
  }
}

// 5. Port of the dual matroid equals the dual of the port.
void port_duality(Check& c) {
  const std::vector<std::pair<std::string, Matroid>> cases = {
      {"extended Hamming", Matroid::from_matrix(fixtures::hamming8().generator())},
      {"tetracode", Matroid::from_matrix(fixtures::tetracode().generator())},
      {"two-element", Matroid::from_matrix(fixtures::repetition2().generator())}};
  for (const auto& [name, m] : cases) {
    c.expect(is_identically_self_dual(m), name + " is ISD");
    for (std::size_t d = 0; d < m.ground_size(); ++d)
      c.expect(induced_access_structure(dual(m), d) == dual(induced_access_structure(m, d)),
               name + " dealer " + std::to_string(d));
  }
}

// 6. Shortening/puncturing duality on random codes.
void shorten_puncture(Check& c) {
  std::mt19937 rng(6);
  for (int t = 0; t < 500; ++t) {
    const unsigned q = std::vector<unsigned>{2, 3, 4}[t % 3];
    const std::size_t n = 2 + rng() % 9;
    const std::size_t k = 1 + rng() % n;
    std::vector<Elem> e(k * n);
    for (auto& x : e) x = static_cast<Elem>(rng() % q);
    const LinearCode code(Matrix(Field::of_order(q), k, n, e));
    const LinearCode d = dual(code);
    for (std::size_t i = 0; i < n; ++i) {
      const LinearCode s = shorten(code, i);
      c.expect(dual(s) == puncture(d, i), "dual of shortened code");
      c.expect(is_subcode(s, puncture(code, i)), "shortened inside punctured");
      if (n <= 5) {
        // Independent check on explicit codeword sets.
        const oracle::Gf g = oracle::gf_of(code.field());
        const oracle::WordSet words = oracle::span(code.generator());
        c.expect(oracle::dual(g, oracle::shorten(words, i), n - 1) == oracle::puncture(oracle::dual(g, words, n), i),
                 "brute-force duality");
      }
    }
  }
}

// 7. Forbidden minors and matroid relatedness.
void seymour(Check& c) {
  const std::vector<std::pair<std::string, AccessStructure>> excluded = {
      {"a", excluded_minor_a()}, {"b", excluded_minor_b()}, {"c", excluded_minor_c()},
      {"d(s=3)", excluded_minor_d(3)}, {"d(s=4)", excluded_minor_d(4)}};
  for (const auto& [name, a] : excluded) {
    const auto w = seymour_forbidden_minor(a);
    c.expect(w && w->name == name && w->deleted.empty() && w->contracted.empty(), "self witness " + name);
  }
  const AccessStructure g = AccessStructure::from_labels(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
  const AccessStructure con = contract_players(g, {3});
  c.expect(con.minimal_sets() == std::vector<Subset>{con.mask_of({1, 2}), con.mask_of({2, 4}), con.mask_of({4, 5})},
           "contraction example");
  c.expect(!is_self_orthogonal(con, OrthogonalityTest::kPairwiseIntersection), "contraction loses orthogonality");
  const AccessStructure fano = induced_access_structure(Matroid::from_matrix(fixtures::hamming8().generator()), 0);
  c.expect(!seymour_forbidden_minor(fano) && matroid_relation(fano).related, "Fano structure");
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& sets : oracle::all_antichains(n)) {
      const AccessStructure a(n, sets);
      c.expect(!seymour_forbidden_minor(a).has_value() == matroid_relation(a).related,
               "relatedness mismatch on " + std::to_string(n) + " players");
    }
}

// 8. Ternary threshold scheme end to end.
void tetracode(Check& c) {
  const QssScheme s = build_scheme(fixtures::tetracode(), 0);
  c.expect(access_structure(s) == AccessStructure::from_labels(3, {{1, 2}, {1, 3}, {2, 3}}), "((2,3)) threshold");
  for (Subset x = 0; x < 8; ++x) {
    const Report r = s.minimal_access().is_authorized(x) ? check_recovery(s, x) : check_privacy(s, x);
    c.expect(r.ok(), "checks on " + s.minimal_access().format(x));
  }
  const Classification cl = classify_all_subsets(s);
  c.expect(cl.authorized.size() == 4 && cl.unauthorized.size() == 4, "4 / 4 split");
  c.expect(cl.exclusive && cl.matches_access && cl.complement_exchange, "classification flags");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no limit
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "extended Hamming example: blocks, encodings, transformed tableaux, residual state", 1.0, hamming_example},
      {2, "exact recovery on all 7 minimal sets", 5.0, recovery},
      {3, "privacy and completeness over all 128 subsets", 60.0, privacy},
      {4, "self-orthogonality equivalences, dual involution, self-dual counts", 0.0, orthogonality},
      {5, "port of the dual matroid equals the dual port", 0.0, port_duality},
      {6, "shortening/puncturing duality on 500 random codes", 0.0, shorten_puncture},
      {7, "forbidden minors versus matroid relatedness", 0.0, seymour},
      {8, "tetracode ((2,3)) threshold end to end", 5.0, tetracode},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_s > 0 && secs >= cr.limit_s) check.expect(false, "time limit exceeded");
    const bool ok = check.ok();
    failed += !ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " (" << std::fixed;
    line.precision(3);
    line << secs << " s";
    if (cr.limit_s > 0) line << ", limit " << cr.limit_s << " s";
    line << ")";
    std::cout << line.str() << "\n";
    for (const std::string& f : check.failures) std::cout << "    " << f << "\n";
  }
  return failed == 0 ? 0 : 1;
}
