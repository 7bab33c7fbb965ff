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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mqss/field.hpp"

namespace mqss {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field. Values are immutable: every
/// operation returns a new matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  /// Builds a matrix from rows of equal length `cols`.
  static Matrix from_rows(Field field, const std::vector<Vec>& rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  Vec row_vector(std::size_t r) const;
  Vec column_vector(std::size_t c) const;
  std::vector<Vec> row_vectors() const;

  Matrix transpose() const;
  Matrix multiply(const Matrix& rhs) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix remove_column(std::size_t c) const;
  /// Moves column `c` to position 0, keeping the order of the others.
  Matrix column_to_front(std::size_t c) const;
  /// Rows of *this followed by rows of `below`.
  Matrix stack(const Matrix& below) const;
  /// [*this | right]
  Matrix concat(const Matrix& right) const;
  Matrix drop_zero_rows() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ &&
           (a.rows_ * a.cols_ == 0 || a.field_ == b.field_);
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> entries_;
};

struct RowReduction {
  Matrix reduced;  // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form: pivots equal 1, pivot columns are unit vectors.
RowReduction rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis (as rows) of {x : m * x^T = 0}, one row per free column of rref(m)
/// with a 1 at that column.
Matrix null_space(const Matrix& m);

/// Row spaces compared through their reduced forms. Throws on column-count
/// mismatch.
bool row_space_equal(const Matrix& a, const Matrix& b);

/// True iff v lies in the row space of m.
bool in_row_space(const Matrix& m, std::span<const Elem> v);

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec scaled(const Field& f, std::span<const Elem> v, Elem s);
Vec added(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
bool is_zero(std::span<const Elem> v);

// Matrix text format:
//   q <order> [poly <c0 c1 ... cm>]
//   <rows> <cols>
//   one row per line, entries separated by single spaces
// The `poly` clause may also appear on its own line before the dimensions.

std::string field_header(const Field& f);
Field parse_field_header(const std::string& line);

void write_matrix(std::ostream& os, const Matrix& m);
std::string to_text(const Matrix& m);
/// Reads one matrix; blank lines and lines starting with '#' before the
/// header are skipped.
Matrix read_matrix(std::istream& is);
Matrix matrix_from_text(const std::string& text);

std::string vector_text(std::span<const Elem> v);
Vec parse_vector(const Field& f, const std::string& line);

}  // namespace mqss
