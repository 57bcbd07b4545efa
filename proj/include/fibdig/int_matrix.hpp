#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "fibdig/bigint.hpp"

namespace fibdig {

/// Dense exact integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  /// The all-ones row vector `j` as a 1 x n matrix.
  static IntMatrix ones_row(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const;

  IntMatrix transpose() const;
  BigInt trace() const;
  BigInt entry_sum() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact A^m by repeated squaring. A^0 is the identity.
IntMatrix matrix_power(const IntMatrix& a, unsigned long long m);

}  // namespace fibdig
