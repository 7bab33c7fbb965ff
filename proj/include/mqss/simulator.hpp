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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mqss/scheme.hpp"

namespace mqss {

using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational re + i*im.
struct Complex {
  Rational re;
  Rational im;

  Complex() = default;
  Complex(Rational r) : re(std::move(r)) {}  // NOLINT: implicit on purpose
  Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Complex conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Rational& d) { return {a.re / d, a.im / d}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const Complex& c);

inline constexpr std::uint64_t kMaxStateDimension = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kMaxDensityDimension = 4096;

/// Pure state sum_x coeff(x)/sqrt(D) |x>. Coefficients are exact Gaussian
/// rationals; D is a positive rational normalizer shared by every amplitude.
class SparseState {
 public:
  /// Throws unless sum |coeff|^2 == D exactly and the register fits the guard.
  SparseState(Field field, std::size_t qudits, std::map<Vec, Complex> coefficients, Rational normalizer = 1);

  const Field& field() const { return field_; }
  std::size_t qudits() const { return qudits_; }
  const std::map<Vec, Complex>& coefficients() const { return coeffs_; }
  const Rational& normalizer() const { return norm_; }
  Complex coefficient(const Vec& basis) const;
  /// sum |amplitude|^2, always 1 for a constructed state.
  Rational norm_squared() const;

 private:
  Field field_;
  std::size_t qudits_;
  std::map<Vec, Complex> coeffs_;
  Rational norm_;
};

/// Reduced density matrix on a set of qudits. Row/column index: the first
/// qudit of the subset is the most significant base-q digit. Only nonzero
/// entries are stored.
struct DensityBlock {
  std::vector<std::size_t> subset;
  std::uint64_t dim = 1;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Complex> entries;

  Complex at(std::uint64_t r, std::uint64_t c) const;
  Rational trace() const;
  bool is_hermitian() const;
  /// All 1x1 and 2x2 principal minors nonnegative.
  bool has_nonnegative_minors() const;

  friend bool operator==(const DensityBlock& a, const DensityBlock& b) {
    return a.subset == b.subset && a.dim == b.dim && a.entries == b.entries;
  }
};

/// |psi><psi| for a single-qudit pure state.
DensityBlock pure_density(std::size_t qudit, const std::vector<Complex>& amps);

/// sum_s amps[s] * (uniform superposition over encode_basis(scheme, s)).
/// Throws Error("secret amplitudes are not normalized").
SparseState prepare_secret(const QssScheme& scheme, const std::vector<Complex>& amps);

/// Basis permutation induced by the plan (ADD: a_t += lambda a_c; MUL: a_i *= beta).
SparseState apply_plan(const SparseState& state, const GatePlan& plan);

/// Exact partial trace over the complement of `subset`.
DensityBlock reduced_state(const SparseState& state, Subset subset);

}  // namespace mqss
