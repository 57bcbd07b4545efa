#include "fibdig/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace fibdig {
namespace {

void check_alphabet(int d) {
  if (d < 2) throw std::invalid_argument("alphabet size must be at least 2, got " + std::to_string(d));
}

void check_length(int k) {
  if (k < 1) throw std::invalid_argument("word length must be at least 1, got " + std::to_string(k));
}

int successor_of_nonzero(int x, int d) { return (x + 1) % d; }

// Index of `w` in the lexicographically sorted vertex list of a digraph built
// from words; labels were produced by Word::to_string.
std::size_t vertex_of(const Digraph& g, const Word& w) {
  auto idx = g.index_of(w.to_string());
  if (!idx) throw LibraryDefect("word '" + w.to_string() + "' is not a vertex");
  return *idx;
}

}  // namespace

Word::Word(std::vector<int> digits, int alphabet) : digits_(std::move(digits)), alphabet_(alphabet) {
  check_alphabet(alphabet_);
  for (int x : digits_) {
    if (x < 0 || x >= alphabet_)
      throw std::invalid_argument("digit " + std::to_string(x) + " outside [0," +
                                  std::to_string(alphabet_ - 1) + "]");
  }
}

Word Word::parse(std::string_view text, int alphabet) {
  check_alphabet(alphabet);
  std::vector<int> digits;
  if (alphabet <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("non-digit character in word");
      digits.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      int value = 0;
      auto field = text.substr(pos, comma - pos);
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
        throw std::invalid_argument("malformed digit field '" + std::string(field) + "'");
      digits.push_back(value);
      pos = comma + 1;
    }
  }
  return Word(std::move(digits), alphabet);
}

std::string Word::to_string() const {
  std::string out;
  if (alphabet_ <= 10) {
    out.reserve(digits_.size());
    for (int x : digits_) out.push_back(static_cast<char>('0' + x));
  } else {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(digits_[i]);
    }
  }
  return out;
}

std::vector<int> admissible_successors(int x, int d) {
  check_alphabet(d);
  if (x < 0 || x >= d)
    throw std::invalid_argument("digit " + std::to_string(x) + " outside alphabet of size " +
                                std::to_string(d));
  if (x != 0) return {successor_of_nonzero(x, d)};
  std::vector<int> all(static_cast<std::size_t>(d));
  for (int y = 0; y < d; ++y) all[static_cast<std::size_t>(y)] = y;
  return all;
}

bool is_admissible(const Word& w) {
  const auto& x = w.digits();
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] != 0 && x[i + 1] != successor_of_nonzero(x[i], w.alphabet())) return false;
  }
  return true;
}

std::vector<Word> enumerate_words(int d, int k, std::size_t cap) {
  check_alphabet(d);
  check_length(k);
  std::vector<Word> words;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(k));

  // Depth-first in ascending digit order yields lexicographic output.
  auto extend = [&](auto&& self) -> void {
    if (prefix.size() == static_cast<std::size_t>(k)) {
      if (words.size() == cap)
        throw CapExceeded("F(" + std::to_string(d) + "," + std::to_string(k) +
                          ") has more than " + std::to_string(cap) + " vertices");
      words.emplace_back(prefix, d);
      return;
    }
    if (prefix.empty()) {
      for (int y = 0; y < d; ++y) {
        prefix.push_back(y);
        self(self);
        prefix.pop_back();
      }
      return;
    }
    for (int y : admissible_successors(prefix.back(), d)) {
      prefix.push_back(y);
      self(self);
      prefix.pop_back();
    }
  };
  extend(extend);
  return words;
}

Digraph build_fibonacci_digraph(int d, int k, std::size_t cap) {
  std::vector<Word> words = enumerate_words(d, k, cap);
  std::vector<std::string> labels;
  labels.reserve(words.size());
  for (const Word& w : words) labels.push_back(w.to_string());

  std::vector<Arc> arcs;
  std::vector<int> shifted(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < words.size(); ++v) {
    const auto& x = words[v].digits();
    std::copy(x.begin() + 1, x.end(), shifted.begin());
    for (int y : admissible_successors(x.back(), d)) {
      shifted.back() = y;
      // Words are sorted, so the head index is a binary search away.
      Word head(shifted, d);
      auto it = std::lower_bound(words.begin(), words.end(), head);
      if (it == words.end() || *it != head) throw LibraryDefect("shift left the vertex set");
      arcs.push_back({v, static_cast<std::size_t>(it - words.begin()), 1});
    }
  }
  return Digraph(std::move(labels), std::move(arcs));
}

Digraph build_de_bruijn(int d, int k, std::size_t cap) {
  check_alphabet(d);
  check_length(k);
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > cap / static_cast<std::size_t>(d))
      throw CapExceeded("B(" + std::to_string(d) + "," + std::to_string(k) + ") has more than " +
                        std::to_string(cap) + " vertices");
    n *= static_cast<std::size_t>(d);
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<int> digits(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t rest = v;
    for (int i = k - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    labels.push_back(Word(digits, d).to_string());
  }

  // In base-d numbering the successors of v are (v * d) mod d^k + y.
  std::vector<Arc> arcs;
  arcs.reserve(n * static_cast<std::size_t>(d));
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t base = (v * static_cast<std::size_t>(d)) % n;
    for (int y = 0; y < d; ++y) arcs.push_back({v, base + static_cast<std::size_t>(y), 1});
  }
  return Digraph(std::move(labels), std::move(arcs));
}

std::vector<std::size_t> digit_embedding(int d_small, int d_big, int k) {
  check_alphabet(d_small);
  if (d_big < d_small) throw std::invalid_argument("digit_embedding requires d_small <= d_big");
  const Digraph big = build_fibonacci_digraph(d_big, k);
  std::vector<std::size_t> map;
  for (const Word& w : enumerate_words(d_small, k)) {
    std::vector<int> image = w.digits();
    for (int& x : image)
      if (x != 0) x += d_big - d_small;
    map.push_back(vertex_of(big, Word(std::move(image), d_big)));
  }
  return map;
}

std::vector<std::size_t> suffix_map(int d, int k, int k_short) {
  check_length(k_short);
  if (k_short > k) throw std::invalid_argument("suffix_map requires k_short <= k");
  const Digraph target = build_fibonacci_digraph(d, k_short);
  std::vector<std::size_t> map;
  for (const Word& w : enumerate_words(d, k)) {
    std::vector<int> tail(w.digits().end() - k_short, w.digits().end());
    map.push_back(vertex_of(target, Word(std::move(tail), d)));
  }
  return map;
}

std::vector<std::size_t> reversal_map(int d, int k) {
  const Digraph g = build_fibonacci_digraph(d, k);
  std::vector<std::size_t> map;
  for (const Word& w : enumerate_words(d, k)) {
    std::vector<int> rev(w.digits().rbegin(), w.digits().rend());
    Word r(std::move(rev), d);
    auto idx = g.index_of(r.to_string());
    if (!idx)
      throw std::invalid_argument("reversal of '" + w.to_string() + "' is not a vertex of F(" +
                                  std::to_string(d) + "," + std::to_string(k) + ")");
    map.push_back(*idx);
  }
  return map;
}

}  // namespace fibdig
