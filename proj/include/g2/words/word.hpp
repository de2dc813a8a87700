#pragma once

#include <string>
#include <vector>

#include "g2/error.hpp"
#include "g2/octonion/octonion.hpp"

namespace g2 {

/// A non-associative word: a binary tree whose leaves are letters x_1, x_2, ...
/// Stored in prefix order, 0 for a product node and i > 0 for the letter x_i.
class NAWord {
 public:
  static NAWord letter(int i);
  static NAWord product(const NAWord& lhs, const NAWord& rhs);
  /// Parses "x1", "(x1x2)", "((x3x1)x2)", ... (whitespace ignored).
  static NAWord parse(const std::string& text);

  bool is_letter() const { return tokens_.size() == 1; }
  int letter_index() const;
  NAWord left() const;
  NAWord right() const;

  int degree() const { return static_cast<int>((tokens_.size() + 1) / 2); }
  int max_letter() const;
  /// Leaf-index histogram over letters 1..n.
  std::vector<int> multidegree(int n) const;
  bool is_multilinear() const;
  /// (...((x_{i1} x_{i2}) x_{i3}) ...) x_{ik}; letters count as left-normed.
  bool is_left_normed() const;
  /// Leaf indices from left to right.
  std::vector<int> letters() const;

  const std::vector<int>& tokens() const { return tokens_; }
  std::string to_string() const;

  auto operator<=>(const NAWord&) const = default;

 private:
  explicit NAWord(std::vector<int> tokens) : tokens_(std::move(tokens)) {}
  std::size_t left_end() const;

  std::vector<int> tokens_;
};

NAWord left_normed(const std::vector<int>& indices);

/// All bracketings with `degree` leaves, leaves labelled 1..degree in order.
std::vector<NAWord> word_shapes(int degree);

/// Replaces leaf k (0-based, left to right) of `shape` by x_{labels[k]}.
NAWord relabel(const NAWord& shape, const std::vector<int>& labels);

template <RingElement T>
Octonion<T> evaluate(const NAWord& w, const Tuple<T>& tuple) {
  std::size_t pos = 0;
  const auto& tokens = w.tokens();
  auto rec = [&](auto&& self) -> Octonion<T> {
    int t = tokens[pos++];
    if (t > 0) {
      if (static_cast<std::size_t>(t) > tuple.size()) {
        throw DomainError("letter x" + std::to_string(t) + " exceeds tuple length " + std::to_string(tuple.size()));
      }
      return tuple[static_cast<std::size_t>(t - 1)];
    }
    auto lhs = self(self);
    auto rhs = self(self);
    return lhs * rhs;
  };
  return rec(rec);
}

}  // namespace g2
