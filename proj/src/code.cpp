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

#include "mqss/code.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "mqss/error.hpp"

namespace mqss {

LinearCode::LinearCode(const Matrix& generator) {
  const RowReduction red = rref(generator);
  std::vector<Vec> kept(red.reduced.row_vectors());
  kept.resize(red.rank);
  gen_ = Matrix::from_rows(generator.field(), kept, generator.cols());

  std::vector<Vec> independent;
  std::size_t current = 0;
  for (std::size_t r = 0; r < generator.rows() && current < red.rank; ++r) {
    std::vector<Vec> trial = independent;
    trial.push_back(generator.row_vector(r));
    const std::size_t rk = rank(Matrix::from_rows(generator.field(), trial, generator.cols()));
    if (rk > current) {
      independent = std::move(trial);
      current = rk;
    }
  }
  presentation_ = Matrix::from_rows(generator.field(), independent, generator.cols());
}

LinearCode LinearCode::zero(Field field, std::size_t length) {
  return LinearCode(Matrix(std::move(field), 0, length));
}

bool LinearCode::contains(std::span<const Elem> word) const {
  if (word.size() != length()) return false;
  return in_row_space(gen_, word);
}

LinearCode dual(const LinearCode& c) { return LinearCode(null_space(c.generator())); }

LinearCode puncture(const LinearCode& c, std::size_t i) {
  if (i >= c.length()) fail("coordinate " + std::to_string(i) + " out of range");
  return LinearCode(c.generator().remove_column(i));
}

LinearCode shorten(const LinearCode& c, std::size_t i) {
  if (i >= c.length()) fail("coordinate " + std::to_string(i) + " out of range");
  const Field& f = c.field();
  std::vector<Vec> rows = c.generator().row_vectors();
  auto pivot = std::find_if(rows.begin(), rows.end(), [&](const Vec& r) { return r[i] != 0; });
  if (pivot != rows.end()) {
    const Vec p = *pivot;
    const Elem pinv = f.inv(p[i]);
    rows.erase(pivot);
    for (Vec& r : rows) {
      const Elem factor = f.mul(r[i], pinv);
      if (factor != 0) r = added(f, r, scaled(f, p, f.neg(factor)));
    }
  }
  return LinearCode(Matrix::from_rows(f, rows, c.length()).remove_column(i));
}

bool is_subcode(const LinearCode& sub, const LinearCode& super) {
  if (sub.length() != super.length()) return false;
  for (std::size_t r = 0; r < sub.dimension(); ++r)
    if (!super.contains(sub.generator().row(r))) return false;
  return true;
}

bool is_self_dual(const LinearCode& c) {
  if (c.length() != 2 * c.dimension()) return false;
  return c.generator().multiply(c.generator().transpose()).is_zero();
}

void for_each_codeword(const LinearCode& c, const std::function<void(std::span<const Elem>)>& visit) {
  const Field& f = c.field();
  const std::size_t k = c.dimension();
  const std::size_t n = c.length();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= f.order();
    if (total > kMaxEnumeratedCodewords) fail("code too large to enumerate");
  }
  std::vector<Elem> msg(k, 0);
  Vec word(n, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    std::fill(word.begin(), word.end(), Elem{0});
    for (std::size_t r = 0; r < k; ++r) {
      if (msg[r] == 0) continue;
      auto row = c.generator().row(r);
      for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(msg[r], row[j]));
    }
    visit(word);
    for (std::size_t r = k; r-- > 0;) {
      if (++msg[r] < f.order()) break;
      msg[r] = 0;
    }
  }
}

std::vector<Vec> codewords(const LinearCode& c) {
  std::vector<Vec> out;
  for_each_codeword(c, [&](std::span<const Elem> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

std::vector<std::size_t> support(std::span<const Elem> v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

Vec normalize_leading(const Field& f, std::span<const Elem> v) {
  for (Elem e : v)
    if (e != 0) return scaled(f, v, f.inv(e));
  return Vec(v.begin(), v.end());
}

std::vector<MinimalCodeword> minimal_codewords(const LinearCode& c) {
  if (c.length() > 64) fail("minimal codeword search supports length <= 64");
  std::vector<std::pair<std::uint64_t, Vec>> normalized;
  for_each_codeword(c, [&](std::span<const Elem> w) {
    std::uint64_t mask = 0;
    Elem lead = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0) continue;
      if (mask == 0) lead = w[i];
      mask |= std::uint64_t{1} << i;
    }
    if (mask != 0 && lead == 1) normalized.emplace_back(mask, Vec(w.begin(), w.end()));
  });

  std::set<std::uint64_t> distinct;
  for (const auto& [mask, word] : normalized) distinct.insert(mask);
  std::vector<std::uint64_t> masks(distinct.begin(), distinct.end());
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::set<std::uint64_t> minimal;
  for (std::uint64_t m : masks) {
    bool dominated = false;
    for (std::uint64_t k : minimal)
      if ((k & m) == k) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.insert(m);
  }

  std::vector<MinimalCodeword> out;
  for (auto& [mask, word] : normalized)
    if (minimal.count(mask)) out.push_back({word, support(word)});
  std::sort(out.begin(), out.end(), [](const MinimalCodeword& a, const MinimalCodeword& b) { return a.word < b.word; });
  return out;
}

DealerSplit dealer_split(const LinearCode& c, std::size_t dealer) {
  if (dealer >= c.length()) fail("dealer coordinate " + std::to_string(dealer) + " out of range");
  const Field& f = c.field();
  std::vector<Vec> rows = c.presentation().row_vectors();
  auto lead = std::find_if(rows.begin(), rows.end(), [&](const Vec& r) { return r[dealer] != 0; });
  if (lead == rows.end()) fail("dealer coordinate not covered");
  const Vec dealer_row = scaled(f, *lead, f.inv((*lead)[dealer]));
  rows.erase(lead);
  for (Vec& r : rows)
    if (r[dealer] != 0) r = added(f, r, scaled(f, dealer_row, f.neg(r[dealer])));

  DealerSplit split;
  split.dealer = dealer;
  split.g = dealer_row;
  split.g.erase(split.g.begin() + static_cast<std::ptrdiff_t>(dealer));
  const Matrix rest = Matrix::from_rows(f, rows, c.length()).remove_column(dealer);
  split.gen_short = rref(rest).reduced.drop_zero_rows();
  return split;
}

Matrix reassemble(const Field& f, const DealerSplit& split) {
  Vec top{1};
  top.insert(top.end(), split.g.begin(), split.g.end());
  const std::size_t n = split.g.size();
  Matrix head(f, 1, n + 1, top);
  if (split.gen_short.rows() == 0) return head;
  const Matrix zeros(f, split.gen_short.rows(), 1);
  return head.stack(zeros.concat(split.gen_short));
}

void write_code(std::ostream& os, const LinearCode& c) { write_matrix(os, c.presentation()); }

LinearCode read_code(std::istream& is) { return LinearCode(read_matrix(is)); }

}  // namespace mqss
