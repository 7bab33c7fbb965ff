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

#include "mqss/simulator.hpp"

#include <sstream>

#include "mqss/error.hpp"

namespace mqss {

namespace {

std::uint64_t register_dimension(unsigned q, std::size_t qudits, std::uint64_t limit) {
  std::uint64_t dim = 1;
  for (std::size_t i = 0; i < qudits; ++i) {
    dim *= q;
    if (dim > limit) return limit + 1;
  }
  return dim;
}

}  // namespace

std::string to_string(const Complex& c) {
  std::ostringstream os;
  os << c.re;
  if (c.im != 0) os << (c.im > 0 ? "+" : "") << c.im << "i";
  return os.str();
}

SparseState::SparseState(Field field, std::size_t qudits, std::map<Vec, Complex> coefficients, Rational normalizer)
    : field_(std::move(field)), qudits_(qudits), norm_(std::move(normalizer)) {
  if (register_dimension(field_.order(), qudits_, kMaxStateDimension) > kMaxStateDimension)
    fail("state register exceeds q^n <= 2^22");
  if (norm_ <= 0) fail("state normalizer must be positive");
  Rational total = 0;
  for (auto& [basis, c] : coefficients) {
    if (basis.size() != qudits_) fail("basis string has the wrong length");
    for (Elem e : basis)
      if (!field_.contains(e)) fail("basis symbol outside the field");
    if (c.is_zero()) continue;
    total += c.norm();
    coeffs_.emplace(basis, c);
  }
  if (total != norm_) fail("state is not normalized");
}

Complex SparseState::coefficient(const Vec& basis) const {
  auto it = coeffs_.find(basis);
  return it == coeffs_.end() ? Complex() : it->second;
}

Rational SparseState::norm_squared() const {
  Rational total = 0;
  for (const auto& [basis, c] : coeffs_) total += c.norm();
  return total / norm_;
}

Complex DensityBlock::at(std::uint64_t r, std::uint64_t c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Complex() : it->second;
}

Rational DensityBlock::trace() const {
  Rational t = 0;
  for (const auto& [rc, v] : entries)
    if (rc.first == rc.second) t += v.re;
  return t;
}

bool DensityBlock::is_hermitian() const {
  for (const auto& [rc, v] : entries)
    if (!(at(rc.second, rc.first) == v.conj())) return false;
  return true;
}

bool DensityBlock::has_nonnegative_minors() const {
  for (const auto& [rc, v] : entries) {
    if (rc.first == rc.second) {
      if (v.re < 0 || v.im != 0) return false;
      continue;
    }
    // Minors with a zero off-diagonal pair reduce to products of diagonals.
    if (at(rc.first, rc.first).re * at(rc.second, rc.second).re < v.norm()) return false;
  }
  return true;
}

DensityBlock pure_density(std::size_t qudit, const std::vector<Complex>& amps) {
  DensityBlock out;
  out.subset = {qudit};
  out.dim = amps.size();
  for (std::size_t r = 0; r < amps.size(); ++r)
    for (std::size_t c = 0; c < amps.size(); ++c) {
      Complex v = amps[r] * amps[c].conj();
      if (!v.is_zero()) out.entries.emplace(std::make_pair(r, c), v);
    }
  return out;
}

SparseState prepare_secret(const QssScheme& scheme, const std::vector<Complex>& amps) {
  const Field& f = scheme.field();
  if (amps.size() != f.order()) fail("expected " + std::to_string(f.order()) + " secret amplitudes");
  Rational total = 0;
  for (const Complex& a : amps) total += a.norm();
  if (total != 1) fail("secret amplitudes are not normalized");

  std::map<Vec, Complex> coeffs;
  Rational coset_size = 0;
  for (unsigned s = 0; s < f.order(); ++s) {
    const std::vector<Vec> coset = encode_basis(scheme, static_cast<Elem>(s));
    coset_size = static_cast<long long>(coset.size());
    if (amps[s].is_zero()) continue;
    for (const Vec& x : coset) coeffs.emplace(x, amps[s]);
  }
  return SparseState(f, scheme.shares(), std::move(coeffs), coset_size);
}

SparseState apply_plan(const SparseState& state, const GatePlan& plan) {
  const Field& f = state.field();
  const std::size_t n = state.qudits();
  for (const Gate& g : plan.gates) {
    if (g.first >= n || g.second >= n) fail("gate index out of range");
    if (g.kind != GateKind::kSwap && g.scalar == 0) fail("gate scalar must be nonzero");
    if (g.kind == GateKind::kAdd && g.first == g.second) fail("ADD needs distinct shares");
  }
  std::map<Vec, Complex> out;
  for (const auto& [basis, c] : state.coefficients()) {
    Vec x = basis;
    for (const Gate& g : plan.gates) {
      switch (g.kind) {
        case GateKind::kAdd:
          x[g.second] = f.add(x[g.second], f.mul(g.scalar, x[g.first]));
          break;
        case GateKind::kMul:
          x[g.first] = f.mul(g.scalar, x[g.first]);
          break;
        case GateKind::kSwap:
          std::swap(x[g.first], x[g.second]);
          break;
      }
    }
    out.emplace(std::move(x), c);
  }
  return SparseState(f, n, std::move(out), state.normalizer());
}

DensityBlock reduced_state(const SparseState& state, Subset subset) {
  const std::size_t n = state.qudits();
  if (n < 32 && (subset >> n) != 0) fail("subset index out of range");
  const unsigned q = state.field().order();
  DensityBlock out;
  out.subset = elements(subset);
  out.dim = register_dimension(q, out.subset.size(), kMaxDensityDimension);
  if (out.dim > kMaxDensityDimension) fail("density block exceeds 4096 x 4096");

  // Group amplitudes by the traced-out symbols.
  std::map<Vec, std::vector<std::pair<std::uint64_t, const Complex*>>> groups;
  for (const auto& [basis, c] : state.coefficients()) {
    std::uint64_t index = 0;
    Vec rest;
    rest.reserve(n - out.subset.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (contains(subset, i))
        index = index * q + basis[i];
      else
        rest.push_back(basis[i]);
    }
    groups[rest].emplace_back(index, &c);
  }
  std::map<std::pair<std::uint64_t, std::uint64_t>, Complex> sums;
  for (const auto& [rest, members] : groups)
    for (const auto& [r, a] : members)
      for (const auto& [c, b] : members) {
        Complex& e = sums[{r, c}];
        e = e + (*a) * b->conj();
      }
  for (auto& [rc, v] : sums) {
    if (v.is_zero()) continue;
    out.entries.emplace(rc, v / state.normalizer());
  }
  return out;
}

}  // namespace mqss
