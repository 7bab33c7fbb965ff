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

#include "mqss/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "mqss/error.hpp"

namespace mqss {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) fail("matrix entry count does not match shape");
  for (Elem e : entries_)
    if (!field_.contains(e)) fail("matrix entry " + std::to_string(e) + " outside field");
}

Matrix Matrix::from_rows(Field field, const std::vector<Vec>& rows, std::size_t cols) {
  std::vector<Elem> entries;
  entries.reserve(rows.size() * cols);
  for (const Vec& r : rows) {
    if (r.size() != cols) fail("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(entries));
}

Matrix Matrix::identity(Field field, std::size_t n) {
  std::vector<Elem> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return Matrix(std::move(field), n, n, std::move(e));
}

Vec Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec Matrix::column_vector(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> Matrix::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

Matrix Matrix::transpose() const {
  std::vector<Elem> e(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = (*this)(r, c);
  return Matrix(field_, cols_, rows_, std::move(e));
}

Matrix Matrix::multiply(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) fail("matrix shapes do not compose");
  std::vector<Elem> e(rows_ * rhs.cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        Elem& out = e[r * rhs.cols_ + c];
        out = field_.add(out, field_.mul(a, rhs(k, c)));
      }
    }
  return Matrix(field_, rows_, rhs.cols_, std::move(e));
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  std::vector<Elem> e;
  e.reserve(rows_ * cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c : cols) {
      if (c >= cols_) fail("column index out of range");
      e.push_back((*this)(r, c));
    }
  return Matrix(field_, rows_, cols.size(), std::move(e));
}

Matrix Matrix::remove_column(std::size_t c) const {
  if (c >= cols_) fail("column index out of range");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < cols_; ++i)
    if (i != c) keep.push_back(i);
  return select_columns(keep);
}

Matrix Matrix::column_to_front(std::size_t c) const {
  if (c >= cols_) fail("column index out of range");
  std::vector<std::size_t> order{c};
  for (std::size_t i = 0; i < cols_; ++i)
    if (i != c) order.push_back(i);
  return select_columns(order);
}

Matrix Matrix::stack(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) fail("cannot stack matrices with different column counts");
  std::vector<Elem> e = entries_;
  e.insert(e.end(), below.entries_.begin(), below.entries_.end());
  return Matrix(field_, rows_ + below.rows_, cols_, std::move(e));
}

Matrix Matrix::concat(const Matrix& right) const {
  if (rows_ != right.rows_) fail("cannot concatenate matrices with different row counts");
  std::vector<Elem> e;
  e.reserve(rows_ * (cols_ + right.cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    auto a = row(r);
    auto b = right.row(r);
    e.insert(e.end(), a.begin(), a.end());
    e.insert(e.end(), b.begin(), b.end());
  }
  return Matrix(field_, rows_, cols_ + right.cols_, std::move(e));
}

Matrix Matrix::drop_zero_rows() const {
  std::vector<Vec> keep;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!mqss::is_zero(row(r))) keep.push_back(row_vector(r));
  return from_rows(field_, keep, cols_);
}

bool Matrix::is_zero() const {
  for (Elem e : entries_)
    if (e != 0) return false;
  return true;
}

RowReduction rref(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Vec> a = m.row_vectors();
  RowReduction out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    const Elem s = f.inv(a[r][c]);
    for (Elem& e : a[r]) e = f.mul(e, s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Elem factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = Matrix::from_rows(f, a, cols);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix null_space(const Matrix& m) {
  const Field& f = m.field();
  const RowReduction red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : red.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = f.neg(red.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(f, basis, cols);
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) fail("row space comparison needs equal column counts");
  if (a.rows() != 0 && b.rows() != 0 && !(a.field() == b.field()))
    fail("row space comparison needs a common field");
  return rref(a).reduced.drop_zero_rows() == rref(b).reduced.drop_zero_rows();
}

bool in_row_space(const Matrix& m, std::span<const Elem> v) {
  if (v.size() != m.cols()) fail("vector length does not match matrix");
  if (is_zero(v)) return true;
  const Matrix extended = m.stack(Matrix(m.field(), 1, m.cols(), Vec(v.begin(), v.end())));
  return rank(extended) == rank(m);
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) fail("dot product of vectors with different lengths");
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Vec scaled(const Field& f, std::span<const Elem> v, Elem s) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(v[i], s);
  return out;
}

Vec added(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) fail("sum of vectors with different lengths");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

bool is_zero(std::span<const Elem> v) {
  for (Elem e : v)
    if (e != 0) return false;
  return true;
}

std::string field_header(const Field& f) {
  std::string s = "q " + std::to_string(f.order());
  if (!f.is_prime()) {
    s += " poly";
    for (unsigned c : f.modulus()) s += " " + std::to_string(c);
  }
  return s;
}

namespace {

bool is_skippable(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#';
}

bool next_content_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!is_skippable(line)) return true;
  }
  return false;
}

std::vector<long> parse_ints(std::istringstream& ss, const std::string& what) {
  std::vector<long> out;
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail("malformed " + what + ": '" + tok + "'");
    }
  }
  return out;
}

Field field_from(unsigned q, const std::vector<long>& poly) {
  Field f = Field::of_order(q);
  if (poly.empty()) return f;
  std::vector<unsigned> coeffs;
  for (long c : poly) {
    if (c < 0) fail("negative polynomial coefficient");
    coeffs.push_back(static_cast<unsigned>(c));
  }
  Field g = Field::with_modulus(f.characteristic(), coeffs);
  if (g.order() != q) fail("defining polynomial degree does not match field order");
  return g;
}

}  // namespace

Field parse_field_header(const std::string& line) {
  std::istringstream ss(line);
  std::string tag;
  long q = 0;
  if (!(ss >> tag) || tag != "q" || !(ss >> q) || q < 2 || q > 256)
    fail("expected field header 'q <order>', got '" + line + "'");
  std::vector<long> poly;
  if (ss >> tag) {
    if (tag != "poly") fail("unexpected token '" + tag + "' in field header");
    poly = parse_ints(ss, "polynomial");
  }
  return field_from(static_cast<unsigned>(q), poly);
}

void write_matrix(std::ostream& os, const Matrix& m) {
  os << field_header(m.field()) << '\n' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) os << vector_text(m.row(r)) << '\n';
}

std::string to_text(const Matrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

Matrix read_matrix(std::istream& is) {
  std::string line;
  if (!next_content_line(is, line)) fail("missing matrix header");
  Field f = parse_field_header(line);
  if (!next_content_line(is, line)) fail("missing matrix dimensions");
  if (line.rfind("poly", 0) == 0) {
    std::istringstream ps(line.substr(4));
    f = field_from(f.order(), parse_ints(ps, "polynomial"));
    if (!next_content_line(is, line)) fail("missing matrix dimensions");
  }
  std::istringstream ds(line);
  const std::vector<long> dims = parse_ints(ds, "matrix dimensions");
  if (dims.size() != 2 || dims[0] < 0 || dims[1] < 0) fail("expected '<rows> <cols>', got '" + line + "'");
  const auto rows = static_cast<std::size_t>(dims[0]);
  const auto cols = static_cast<std::size_t>(dims[1]);
  std::vector<Vec> data;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!next_content_line(is, line)) fail("matrix has fewer rows than declared");
    data.push_back(parse_vector(f, line));
    if (data.back().size() != cols) fail("matrix row " + std::to_string(r) + " has wrong length");
  }
  return Matrix::from_rows(f, data, cols);
}

Matrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

std::string vector_text(std::span<const Elem> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

Vec parse_vector(const Field& f, const std::string& line) {
  std::istringstream ss(line);
  Vec v;
  for (long x : parse_ints(ss, "field element")) {
    if (x < 0 || !f.contains(static_cast<unsigned>(x)))
      fail("element " + std::to_string(x) + " outside GF(" + std::to_string(f.order()) + ")");
    v.push_back(static_cast<Elem>(x));
  }
  return v;
}

}  // namespace mqss
