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

#include "mqss/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "mqss/access.hpp"
#include "mqss/code.hpp"
#include "mqss/error.hpp"
#include "mqss/matroid.hpp"
#include "mqss/scheme.hpp"
#include "mqss/verify.hpp"

namespace mqss::cli {

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string scheme;
  std::string set;
  std::string del;
  std::string con;
  int dealer = 0;
  unsigned field = 0;
  bool all = false;
};

std::string slurp(const std::string& path) {
  if (path.empty()) fail("missing input file (--in)");
  std::ifstream f(path);
  if (!f) fail("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void check_field(const Options& o, const Field& f) {
  if (o.field != 0 && f.order() != o.field)
    fail("input is over GF(" + std::to_string(f.order()) + "), expected GF(" + std::to_string(o.field) + ")");
}

std::size_t dealer_of(const Options& o) {
  if (o.dealer < 0) fail("dealer must be nonnegative");
  return static_cast<std::size_t>(o.dealer);
}

std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail("bad index list '" + text + "'");
    }
    if (used != item.size() || v < 1) fail("bad index list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

// Code file in matrix format; self-dual codes take the direct route, other
// codes go through their column matroid.
QssScheme scheme_from_code(const LinearCode& c, std::size_t dealer) {
  if (is_self_dual(c)) return build_scheme(c, dealer);
  const Matroid m = Matroid::from_matrix(c.presentation());
  if (!is_identically_self_dual(m)) fail("code is not self-dual and its matroid is not identically self-dual");
  return build_scheme_from_matroid(m, dealer);
}

QssScheme load_scheme(const Options& o) {
  const std::string path = o.scheme.empty() ? o.in : o.scheme;
  std::istringstream is(slurp(path));
  QssScheme s = read_scheme(is);
  check_field(o, s.field());
  return s;
}

Matroid load_matroid(const Options& o) {
  const std::string text = slurp(o.in);
  std::istringstream probe(text);
  std::string tag;
  probe >> tag;
  std::istringstream is(text);
  Matroid m = tag == "q" ? Matroid::from_matrix(read_matrix(is)) : read_matroid(is);
  if (m.representation()) check_field(o, m.representation()->field());
  return m;
}

class Sink {
 public:
  Sink(const Options& o, std::ostream& out) : path_(o.out), out_(out) {}
  std::ostream& stream() { return path_.empty() ? out_ : buf_; }
  void flush() {
    if (path_.empty()) return;
    std::ofstream f(path_);
    if (!f) fail("cannot write " + path_);
    f << buf_.str();
  }

 private:
  std::string path_;
  std::ostream& out_;
  std::ostringstream buf_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int analyze_code(const Options& o, std::ostream& out) {
  std::istringstream is(slurp(o.in));
  const LinearCode c(read_matrix(is));
  check_field(o, c.field());
  const std::vector<MinimalCodeword> words = minimal_codewords(c);
  Sink sink(o, out);
  std::ostream& os = sink.stream();
  os << "field: GF(" << c.field().order() << ")\n";
  os << "n: " << c.length() << "\n";
  os << "k: " << c.dimension() << "\n";
  os << "self-dual: " << yes_no(is_self_dual(c)) << "\n";
  os << "self-orthogonal: " << yes_no(is_subcode(c, dual(c))) << "\n";
  os << "minimal-codewords: " << words.size() << "\n";
  for (const MinimalCodeword& w : words) os << vector_text(w.word) << "\n";
  sink.flush();
  return kExitOk;
}

int build(const Options& o, std::ostream& out) {
  std::istringstream is(slurp(o.in));
  const LinearCode c(read_matrix(is));
  check_field(o, c.field());
  const QssScheme s = scheme_from_code(c, dealer_of(o));
  Sink sink(o, out);
  write_scheme(sink.stream(), s);
  sink.flush();
  return kExitOk;
}

int list_access(const Options& o, std::ostream& out) {
  std::optional<AccessStructure> a;
  std::size_t dealer = 0;
  if (!o.scheme.empty()) {
    const QssScheme s = load_scheme(o);
    a = access_structure(s);
    dealer = s.dealer();
  } else {
    dealer = dealer_of(o);
    a = induced_access_structure(load_matroid(o), dealer);
  }
  Sink sink(o, out);
  std::ostream& os = sink.stream();
  os << "# dealer " << dealer << ", authorized sets " << authorized_count(*a) << "\n";
  write_access(os, *a);
  sink.flush();
  return kExitOk;
}

int check_access(const Options& o, std::ostream& out) {
  std::istringstream is(slurp(o.in));
  const AccessStructure a = read_access(is);
  Sink sink(o, out);
  std::ostream& os = sink.stream();
  os << "players: " << a.player_count() << "\n";
  os << "minimal-sets: " << a.minimal_sets().size() << "\n";
  os << "authorized: " << authorized_count(a) << "\n";
  os << "self-orthogonal (pairwise intersection): "
     << yes_no(is_self_orthogonal(a, OrthogonalityTest::kPairwiseIntersection)) << "\n";
  os << "self-orthogonal (contained in dual): "
     << yes_no(is_self_orthogonal(a, OrthogonalityTest::kContainedInDual)) << "\n";
  os << "self-orthogonal (dual adversary): " << yes_no(is_self_orthogonal(a, OrthogonalityTest::kDualAdversary))
     << "\n";
  os << "self-dual: " << yes_no(is_self_dual(a)) << "\n";
  os << "connected: " << yes_no(is_connected(a)) << "\n";
  if (a.player_count() <= kMaxMatroidRelatedPlayers)
    os << "matroid-related: " << yes_no(matroid_relation(a).related) << "\n";
  if (a.player_count() <= kMaxMinorSearchPlayers) {
    const auto minor = seymour_forbidden_minor(a);
    if (!minor) {
      os << "forbidden-minor: none\n";
    } else {
      auto list = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
      };
      os << "forbidden-minor: " << minor->name << " delete " << list(minor->deleted) << " contract "
         << list(minor->contracted) << "\n";
    }
  }
  sink.flush();
  return kExitOk;
}

int minors(const Options& o, std::ostream& out) {
  std::istringstream is(slurp(o.in));
  AccessStructure a = read_access(is);
  if (o.del.empty() && o.con.empty()) fail("minors needs --delete and/or --contract");
  // Deletion and contraction commute on disjoint sets; apply deletion first.
  if (!o.del.empty()) a = delete_players(a, parse_labels(o.del));
  if (!o.con.empty()) a = contract_players(a, parse_labels(o.con));
  Sink sink(o, out);
  write_access(sink.stream(), a);
  sink.flush();
  return kExitOk;
}

int matroid_info(const Options& o, std::ostream& out) {
  const Matroid m = load_matroid(o);
  Sink sink(o, out);
  std::ostream& os = sink.stream();
  os << "ground: " << m.ground_size() << "\n";
  os << "rank: " << m.rank() << "\n";
  os << "bases: " << m.bases().size() << "\n";
  os << "identically-self-dual: " << yes_no(is_identically_self_dual(m)) << "\n";
  os << "circuits: " << m.circuits().size() << "\n";
  for (Subset c : m.circuits()) {
    bool first = true;
    for (std::size_t e : elements(c)) {
      os << (first ? "" : " ") << e;
      first = false;
    }
    os << "\n";
  }
  sink.flush();
  return kExitOk;
}

Subset set_of(const Options& o, const QssScheme& s) {
  if (o.set.empty()) fail("missing --set");
  return s.minimal_access().mask_of(parse_labels(o.set));
}

int plan(const Options& o, std::ostream& out) {
  const QssScheme s = load_scheme(o);
  const GatePlan p = reconstruction_plan(s, set_of(o, s));
  Sink sink(o, out);
  write_plan(sink.stream(), p);
  sink.flush();
  return kExitOk;
}

int verify(const Options& o, std::ostream& out) {
  const QssScheme s = load_scheme(o);
  if (o.all == !o.set.empty()) fail("verify needs exactly one of --set and --all");
  Report r;
  if (o.all) {
    r = verify_all(s);
  } else {
    const Subset x = set_of(o, s);
    r = s.minimal_access().is_authorized(x) ? check_recovery(s, x) : check_privacy(s, x);
  }
  Sink sink(o, out);
  write_report(sink.stream(), r);
  sink.flush();
  return r.ok() ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum secret sharing from self-dual codes and identically self-dual matroids", "mqss"};
  app.require_subcommand(1);
  Options o;

  auto add_in = [&](CLI::App* c, const std::string& what) { c->add_option("--in", o.in, what); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Output file (default: standard output)"); };
  auto add_field = [&](CLI::App* c) { c->add_option("--field", o.field, "Expected field order q"); };
  auto add_scheme = [&](CLI::App* c) { c->add_option("--scheme", o.scheme, "Scheme file from build-scheme"); };

  std::vector<std::pair<CLI::App*, std::function<int()>>> verbs;

  auto* ac = app.add_subcommand("analyze-code", "Code parameters, self-duality and minimal codewords");
  add_in(ac, "Code generator matrix");
  add_out(ac);
  add_field(ac);
  verbs.emplace_back(ac, [&] { return analyze_code(o, out); });

  auto* bs = app.add_subcommand("build-scheme", "Build the secret sharing scheme of a code");
  add_in(bs, "Code generator matrix");
  add_out(bs);
  add_field(bs);
  bs->add_option("--dealer", o.dealer, "Dealer coordinate (0-based)");
  verbs.emplace_back(bs, [&] { return build(o, out); });

  auto* la = app.add_subcommand("list-access", "Minimal authorized sets of a scheme or matroid port");
  add_in(la, "Matroid file or matrix");
  add_scheme(la);
  add_out(la);
  add_field(la);
  la->add_option("--dealer", o.dealer, "Dealer element (0-based) for --in");
  verbs.emplace_back(la, [&] { return list_access(o, out); });

  auto* ca = app.add_subcommand("check-access", "Self-orthogonality, self-duality, connectivity and minors");
  add_in(ca, "Access structure file");
  add_out(ca);
  verbs.emplace_back(ca, [&] { return check_access(o, out); });

  auto* mi = app.add_subcommand("minors", "Delete and/or contract players of an access structure");
  add_in(mi, "Access structure file");
  add_out(mi);
  mi->add_option("--delete", o.del, "Players to delete (comma-separated)");
  mi->add_option("--contract", o.con, "Players to contract (comma-separated)");
  verbs.emplace_back(mi, [&] { return minors(o, out); });

  auto* mt = app.add_subcommand("matroid-info", "Rank, circuits and self-duality of a matroid");
  add_in(mt, "Matroid file or matrix");
  add_out(mt);
  add_field(mt);
  verbs.emplace_back(mt, [&] { return matroid_info(o, out); });

  auto* pl = app.add_subcommand("plan", "Reconstruction gate plan for an authorized set");
  add_in(pl, "Scheme file (same as --scheme)");
  add_scheme(pl);
  add_out(pl);
  add_field(pl);
  pl->add_option("--set", o.set, "Shares (comma-separated, 1-based)");
  verbs.emplace_back(pl, [&] { return plan(o, out); });

  auto* vf = app.add_subcommand("verify", "Simulate recovery and privacy");
  add_in(vf, "Scheme file (same as --scheme)");
  add_scheme(vf);
  add_out(vf);
  add_field(vf);
  vf->add_option("--set", o.set, "Shares (comma-separated, 1-based)");
  vf->add_flag("--all", o.all, "Every minimal set and every subset");
  verbs.emplace_back(vf, [&] { return verify(o, out); });

  std::vector<std::string> argv_storage{"mqss"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    for (auto& [cmd, action] : verbs)
      if (cmd->parsed()) return action();
  } catch (const std::exception& e) {
    err << "ERROR: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace mqss::cli
