#include "fibdig/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fibdig {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::ones_row(std::size_t n) {
  IntMatrix m(1, n);
  for (std::size_t i = 0; i < n; ++i) m(0, i) = 1;
  return m;
}

const BigInt& IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
  return (*this)(r, c);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

BigInt IntMatrix::trace() const {
  if (!square()) throw std::invalid_argument("trace of a non-square matrix");
  BigInt t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

BigInt IntMatrix::entry_sum() const {
  BigInt s = 0;
  for (const auto& v : data_) s += v;
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const BigInt& ail = a(i, l);
      if (ail == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const BigInt& blj = b(l, j);
        if (blj != 0) out(i, j) += ail * blj;
      }
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix matrix_power(const IntMatrix& a, unsigned long long m) {
  if (!a.square()) throw std::invalid_argument("matrix_power: matrix must be square");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (m > 0) {
    if (m & 1ULL) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return result;
}

}  // namespace fibdig
