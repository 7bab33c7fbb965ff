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

#include <cstdint>
#include <memory>
#include <vector>

namespace mqss {

/// Field element. Elements of GF(p^m) are the integers 0..q-1; for m > 1 the
/// base-p digits of an element are the coefficients (low to high) of its
/// polynomial representative.
using Elem = std::uint8_t;

/// Finite field GF(q), q = p^m <= 256, backed by full addition and
/// multiplication tables. Copies share the tables.
///
/// Default defining polynomials (coefficients low to high) are the Conway
/// polynomials for q in {4, 8, 9, 16}:
///   GF(4)  x^2 + x + 1      -> 1 1 1
///   GF(8)  x^3 + x + 1      -> 1 1 0 1
///   GF(9)  x^2 + 2x + 2     -> 2 2 1
///   GF(16) x^4 + x + 1      -> 1 1 0 0 1
/// Other extension orders default to the first monic irreducible polynomial
/// in order of its base-p encoding.
class Field {
 public:
  /// GF(2).
  Field();

  /// Field of order q with the default defining polynomial.
  static Field of_order(unsigned q);

  /// GF(p^m) defined by `modulus` (monic, degree m, low-to-high coefficients).
  static Field with_modulus(unsigned p, std::vector<unsigned> modulus);

  unsigned characteristic() const { return t_->p; }
  unsigned degree() const { return t_->m; }
  unsigned order() const { return t_->q; }
  bool is_prime() const { return t_->m == 1; }
  /// Defining polynomial, low to high; empty for prime fields.
  const std::vector<unsigned>& modulus() const { return t_->modulus; }

  bool contains(unsigned a) const { return a < t_->q; }

  Elem add(Elem a, Elem b) const { return t_->add[index(a, b)]; }
  Elem sub(Elem a, Elem b) const { return t_->add[index(a, t_->neg[b])]; }
  Elem neg(Elem a) const { return t_->neg[a]; }
  Elem mul(Elem a, Elem b) const { return t_->mul[index(a, b)]; }
  /// Throws Error("division by zero") for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned e) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    unsigned p = 2;
    unsigned m = 1;
    unsigned q = 2;
    std::vector<unsigned> modulus;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::vector<Elem> inv;
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::size_t index(Elem a, Elem b) const { return std::size_t{a} * t_->q + b; }

  static std::shared_ptr<const Tables> build(unsigned p, std::vector<unsigned> modulus);

  std::shared_ptr<const Tables> t_;
};

bool is_prime_number(unsigned n);

/// True iff the monic polynomial (low-to-high coefficients over GF(p)) has no
/// monic factor of degree 1..deg/2.
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);

}  // namespace mqss
