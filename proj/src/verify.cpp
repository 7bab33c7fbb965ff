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

#include "mqss/verify.hpp"

#include <algorithm>
#include <ostream>

#include "mqss/error.hpp"

namespace mqss {

namespace {

struct Encoded {
  std::vector<TestSecret> secrets;
  std::vector<SparseState> states;
};

Encoded encode_all(const QssScheme& scheme) {
  Encoded e;
  e.secrets = test_secrets(scheme.field());
  for (const TestSecret& s : e.secrets) e.states.push_back(prepare_secret(scheme, s.amps));
  return e;
}

std::vector<bool> recovery_results(const QssScheme& scheme, const Encoded& e, Subset a) {
  const GatePlan plan = reconstruction_plan(scheme, a);
  std::vector<bool> out;
  for (std::size_t i = 0; i < e.secrets.size(); ++i) {
    const SparseState after = apply_plan(e.states[i], plan);
    out.push_back(reduced_state(after, bit(plan.target)) == pure_density(plan.target, e.secrets[i].amps));
  }
  return out;
}

struct PairResult {
  std::string label;
  bool equal;
};

std::vector<PairResult> privacy_results(const Encoded& e, Subset b) {
  std::vector<DensityBlock> blocks;
  for (const SparseState& s : e.states) blocks.push_back(reduced_state(s, b));
  std::vector<PairResult> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      out.push_back({e.secrets[i].label + "/" + e.secrets[j].label, blocks[i] == blocks[j]});
  return out;
}

bool all_equal(const std::vector<PairResult>& r) {
  return std::all_of(r.begin(), r.end(), [](const PairResult& p) { return p.equal; });
}

}  // namespace

std::vector<TestSecret> test_secrets(const Field& f) {
  const unsigned q = f.order();
  std::vector<TestSecret> out;
  for (unsigned s = 0; s < q; ++s) {
    std::vector<Complex> amps(q);
    amps[s] = Rational(1);
    out.push_back({"basis-" + std::to_string(s), std::move(amps)});
  }
  std::vector<Complex> a(q), b(q);
  a[0] = Rational(3, 5);
  a[1] = Rational(4, 5);
  b[0] = Rational(4, 5);
  b[1] = Complex(0, Rational(3, 5));
  out.push_back({"sup-a", std::move(a)});
  out.push_back({"sup-b", std::move(b)});
  return out;
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; }));
}

std::size_t Report::failed() const { return lines.size() - passed(); }

void write_report(std::ostream& os, const Report& r) {
  for (const CheckLine& l : r.lines) os << l.subset << ' ' << l.label << ' ' << (l.pass ? "PASS" : "FAIL") << "\n";
  os << "TOTAL " << r.passed() << ' ' << r.failed() << "\n";
}

Report check_recovery(const QssScheme& scheme, Subset authorized) {
  if (!scheme.minimal_access().is_authorized(authorized)) fail("set is not authorized");
  const Encoded e = encode_all(scheme);
  const std::vector<bool> ok = recovery_results(scheme, e, authorized);
  Report r;
  const std::string name = scheme.minimal_access().format(authorized);
  for (std::size_t i = 0; i < ok.size(); ++i) r.lines.push_back({name, e.secrets[i].label, ok[i]});
  return r;
}

Report check_privacy(const QssScheme& scheme, Subset unauthorized) {
  if (unauthorized & ~scheme.minimal_access().all_players()) fail("set contains an unknown share");
  if (scheme.minimal_access().is_authorized(unauthorized)) fail("set is authorized; privacy check inapplicable");
  const Encoded e = encode_all(scheme);
  Report r;
  const std::string name = scheme.minimal_access().format(unauthorized);
  for (const PairResult& p : privacy_results(e, unauthorized)) r.lines.push_back({name, p.label, p.equal});
  return r;
}

Classification classify_all_subsets(const QssScheme& scheme) {
  const std::size_t n = scheme.shares();
  if (n > kMaxClassifyShares) fail("classification supports at most 10 shares");
  const AccessStructure& access = scheme.minimal_access();
  const Encoded e = encode_all(scheme);

  std::vector<Subset> all;
  for (Subset x = 0; x <= full_set(n); ++x) all.push_back(x);
  sort_family(all);

  Classification out;
  std::vector<char> authorized(std::size_t{1} << n, 0);
  for (Subset x : all) {
    const std::string name = access.format(x);
    // Recovery is attempted whenever a minimal set lies inside x; privacy is
    // always measured, so a subset that both leaks and hides shows up here.
    bool recoverable = false;
    if (access.is_authorized(x)) {
      const std::vector<bool> ok = recovery_results(scheme, e, x);
      recoverable = std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
    }
    const std::vector<PairResult> pairs = privacy_results(e, x);
    const bool hidden = all_equal(pairs);
    if (recoverable == hidden) out.exclusive = false;
    if (recoverable) {
      out.authorized.push_back(x);
      authorized[x] = 1;
      out.report.lines.push_back({name, "classify-authorized", !hidden});
    } else {
      out.unauthorized.push_back(x);
      for (const PairResult& p : pairs) out.report.lines.push_back({name, p.label, p.equal});
      out.report.lines.push_back({name, "classify-unauthorized", hidden});
    }
    if (recoverable != access.is_authorized(x)) out.matches_access = false;
  }
  for (Subset x = 0; x <= full_set(n); ++x)
    if (authorized[x] == authorized[full_set(n) & ~x]) out.complement_exchange = false;
  out.report.lines.push_back({"all", "complement-exchange", out.complement_exchange});
  out.report.lines.push_back({"all", "partition", out.exclusive && out.matches_access});
  return out;
}

Report verify_all(const QssScheme& scheme) {
  Report r;
  for (Subset m : scheme.minimal_access().minimal_sets()) r.append(check_recovery(scheme, m));
  r.append(classify_all_subsets(scheme).report);
  return r;
}

}  // namespace mqss
