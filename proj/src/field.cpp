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

#include "mqss/field.hpp"

#include <map>
#include <string>

#include "mqss/error.hpp"

namespace mqss {
namespace {

using Poly = std::vector<unsigned>;  // low to high, over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  fail("division by zero");
}

// Remainder of a modulo b (b nonzero).
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const unsigned lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p * p - factor * b[i]) % p;
    trim(a);
  }
  return a;
}

Poly digits(unsigned value, unsigned p, unsigned m) {
  Poly d(m);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

unsigned encode(const Poly& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

bool prime_power(unsigned q, unsigned& p, unsigned& m) {
  if (q < 2) return false;
  for (unsigned c = 2; c <= q; ++c) {
    if (q % c != 0) continue;
    p = c;
    m = 0;
    while (q % c == 0) {
      q /= c;
      ++m;
    }
    return q == 1;
  }
  return false;
}

const std::map<unsigned, Poly>& conway() {
  static const std::map<unsigned, Poly> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {9, {2, 2, 1}},
      {16, {1, 1, 0, 0, 1}},
  };
  return table;
}

}  // namespace

bool is_prime_number(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned low = 0; low < count; ++low) {
      Poly g = digits(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field() : t_(build(2, {})) {}

Field Field::of_order(unsigned q) {
  unsigned p = 0, m = 0;
  if (q > 256 || !prime_power(q, p, m)) fail("unsupported field order " + std::to_string(q));
  if (m == 1) return Field(build(p, {}));
  if (auto it = conway().find(q); it != conway().end()) return Field(build(p, it->second));
  for (unsigned low = 0; low < q; ++low) {
    Poly g = digits(low, p, m);
    g.push_back(1);
    if (is_irreducible(p, g)) return Field(build(p, g));
  }
  fail("no irreducible polynomial found");  // unreachable for prime powers
}

Field Field::with_modulus(unsigned p, std::vector<unsigned> modulus) {
  if (!is_prime_number(p)) fail("field characteristic " + std::to_string(p) + " is not prime");
  trim(modulus);
  if (modulus.size() <= 2) {
    if (modulus.empty() || modulus.size() == 2) return Field(build(p, {}));
    fail("defining polynomial must have degree >= 1");
  }
  return Field(build(p, std::move(modulus)));
}

std::shared_ptr<const Field::Tables> Field::build(unsigned p, std::vector<unsigned> modulus) {
  if (!is_prime_number(p)) fail("field characteristic " + std::to_string(p) + " is not prime");
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = modulus.empty() ? 1 : static_cast<unsigned>(modulus.size() - 1);
  t->q = 1;
  for (unsigned i = 0; i < t->m; ++i) t->q *= p;
  if (t->q > 256) fail("field order exceeds 256");
  if (t->m > 1) {
    for (unsigned c : modulus)
      if (c >= p) fail("polynomial coefficient out of range");
    if (modulus.back() != 1) fail("defining polynomial must be monic");
    if (!is_irreducible(p, modulus)) fail("defining polynomial is not irreducible");
    t->modulus = modulus;
  }
  const unsigned q = t->q;
  const unsigned m = t->m;
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const Poly da = digits(a, p, m);
    for (unsigned b = 0; b < q; ++b) {
      const Poly db = digits(b, p, m);
      Poly sum(m);
      for (unsigned i = 0; i < m; ++i) sum[i] = (da[i] + db[i]) % p;
      t->add[a * q + b] = static_cast<Elem>(encode(sum, p));
      if (m == 1) {
        t->mul[a * q + b] = static_cast<Elem>((a * b) % p);
      } else {
        Poly prod(2 * m - 1, 0);
        for (unsigned i = 0; i < m; ++i)
          for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        Poly r = poly_mod(prod, t->modulus, p);
        r.resize(m, 0);
        t->mul[a * q + b] = static_cast<Elem>(encode(r, p));
      }
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (t->add[a * q + b] == 0) t->neg[a] = static_cast<Elem>(b);
      if (t->mul[a * q + b] == 1) t->inv[a] = static_cast<Elem>(b);
    }
  }
  return t;
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail("division by zero");
  return t_->inv[a];
}

Elem Field::pow(Elem a, unsigned e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace mqss
