#pragma once

// Digit words over [0, d-1] and the Fibonacci successor rule: after a 0 any
// digit may follow, after a nonzero digit x only (x + 1) mod d may follow.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fibdig/digraph.hpp"
#include "fibdig/errors.hpp"

namespace fibdig {

/// A digit string over the alphabet [0, d-1]. Construction checks digit range
/// only; admissibility under the successor rule is a separate query.
class Word {
 public:
  Word(std::vector<int> digits, int alphabet);

  /// Parses "0101", or "3,10,11" when the alphabet exceeds 10 symbols.
  static Word parse(std::string_view text, int alphabet);

  int alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return digits_.size(); }
  const std::vector<int>& digits() const noexcept { return digits_; }
  int operator[](std::size_t i) const { return digits_.at(i); }
  int back() const { return digits_.back(); }

  /// Plain digit string; comma-separated decimals for alphabets larger than 10.
  std::string to_string() const;

  friend auto operator<=>(const Word& a, const Word& b) = default;

 private:
  std::vector<int> digits_;
  int alphabet_;
};

/// Digits allowed to follow `x`: all of [0, d-1] after 0, else {(x + 1) mod d}.
std::vector<int> admissible_successors(int x, int d);

bool is_admissible(const Word& w);

/// All admissible words of length k in lexicographic order.
/// Throws CapExceeded once more than `cap` words have been produced.
std::vector<Word> enumerate_words(int d, int k, std::size_t cap = caps::kWordEnumeration);

/// F(d,k): admissible words, x_1..x_k -> x_2..x_k y for each admissible y.
Digraph build_fibonacci_digraph(int d, int k, std::size_t cap = caps::kWordEnumeration);

/// B(d,k): all d^k words, each with the d shift successors.
Digraph build_de_bruijn(int d, int k, std::size_t cap = caps::kWordEnumeration);

/// Vertex map F(d_small, k) -> F(d_big, k) sending digit 0 to 0 and j >= 1 to
/// d_big - d_small + j. Entry i is the image of vertex i of F(d_small, k).
std::vector<std::size_t> digit_embedding(int d_small, int d_big, int k);

/// Vertex map F(d, k) -> F(d, k_short) keeping the last k_short digits.
std::vector<std::size_t> suffix_map(int d, int k, int k_short);

/// Vertex map F(d, k) -> F(d, k) reversing each word; meant for comparing
/// F(2,k) with its converse.
std::vector<std::size_t> reversal_map(int d, int k);

}  // namespace fibdig
