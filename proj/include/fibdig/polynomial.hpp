#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fibdig/bigint.hpp"

namespace fibdig {

/// Integer polynomial, coefficients stored constant term first with no
/// trailing zeros. The zero polynomial has no degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  /// x^n.
  static IntPolynomial monomial(std::size_t n);

  std::optional<std::size_t> degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^i (zero past the degree).
  BigInt coefficient(std::size_t i) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Multiplicity of x as a factor; 0 for the zero polynomial.
  std::size_t low_order() const;
  /// The polynomial divided by x^low_order().
  IntPolynomial without_x_power() const;

  BigInt evaluate(const BigInt& x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "x^2 - x - 1"; "0" for the zero polynomial.
  std::string to_string() const;
  /// Pulls out the power of x: "x^6 (x^2 - x - 1)".
  std::string to_factored_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace fibdig
