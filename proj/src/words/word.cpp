#include "g2/words/word.hpp"

#include <algorithm>
#include <cctype>

namespace g2 {

NAWord NAWord::letter(int i) {
  if (i < 1) throw DomainError("letter index must be positive, got " + std::to_string(i));
  return NAWord({i});
}

NAWord NAWord::product(const NAWord& lhs, const NAWord& rhs) {
  std::vector<int> tokens;
  tokens.reserve(1 + lhs.tokens_.size() + rhs.tokens_.size());
  tokens.push_back(0);
  tokens.insert(tokens.end(), lhs.tokens_.begin(), lhs.tokens_.end());
  tokens.insert(tokens.end(), rhs.tokens_.begin(), rhs.tokens_.end());
  return NAWord(std::move(tokens));
}

NAWord NAWord::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) { throw DomainError("cannot parse word '" + text + "': " + why); };
  auto rec = [&](auto&& self) -> NAWord {
    if (pos >= s.size()) fail("unexpected end");
    if (s[pos] == 'x') {
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("letter without index");
      return letter(std::stoi(s.substr(start, pos - start)));
    }
    if (s[pos] != '(') fail("expected 'x' or '('");
    ++pos;
    NAWord lhs = self(self);
    NAWord rhs = self(self);
    if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
    ++pos;
    return product(lhs, rhs);
  };
  NAWord w = rec(rec);
  if (pos != s.size()) fail("trailing characters");
  return w;
}

int NAWord::letter_index() const {
  if (!is_letter()) throw DomainError("word " + to_string() + " is not a letter");
  return tokens_[0];
}

std::size_t NAWord::left_end() const {
  int need = 1;
  std::size_t i = 1;
  for (; need > 0; ++i) need += tokens_[i] == 0 ? 1 : -1;
  return i;
}

NAWord NAWord::left() const {
  if (is_letter()) throw DomainError("a letter has no factors");
  return NAWord({tokens_.begin() + 1, tokens_.begin() + static_cast<std::ptrdiff_t>(left_end())});
}

NAWord NAWord::right() const {
  if (is_letter()) throw DomainError("a letter has no factors");
  return NAWord({tokens_.begin() + static_cast<std::ptrdiff_t>(left_end()), tokens_.end()});
}

int NAWord::max_letter() const { return *std::max_element(tokens_.begin(), tokens_.end()); }

std::vector<int> NAWord::multidegree(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int t : tokens_) {
    if (t > n) throw DomainError("letter x" + std::to_string(t) + " exceeds n = " + std::to_string(n));
    if (t > 0) ++out[static_cast<std::size_t>(t - 1)];
  }
  return out;
}

bool NAWord::is_multilinear() const {
  auto l = letters();
  std::sort(l.begin(), l.end());
  return std::adjacent_find(l.begin(), l.end()) == l.end();
}

bool NAWord::is_left_normed() const {
  // Prefix form of a left comb: k-1 product tokens followed by k letters.
  std::size_t k = static_cast<std::size_t>(degree());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if ((tokens_[i] == 0) != (i + 1 < k)) return false;
  }
  return true;
}

std::vector<int> NAWord::letters() const {
  std::vector<int> out;
  for (int t : tokens_) {
    if (t > 0) out.push_back(t);
  }
  return out;
}

std::string NAWord::to_string() const {
  std::string out;
  std::vector<int> pending;
  for (int t : tokens_) {
    if (t == 0) {
      out += "(";
      pending.push_back(2);
      continue;
    }
    out += "x" + std::to_string(t);
    while (!pending.empty() && --pending.back() == 0) {
      out += ")";
      pending.pop_back();
    }
  }
  return out;
}

NAWord left_normed(const std::vector<int>& indices) {
  if (indices.empty()) throw DomainError("left_normed needs at least one index");
  NAWord w = NAWord::letter(indices[0]);
  for (std::size_t k = 1; k < indices.size(); ++k) w = NAWord::product(w, NAWord::letter(indices[k]));
  return w;
}

namespace {

std::vector<NAWord> shapes_from(int first, int count) {
  if (count == 1) return {NAWord::letter(first)};
  std::vector<NAWord> out;
  for (int left = 1; left < count; ++left) {
    for (const auto& l : shapes_from(first, left)) {
      for (const auto& r : shapes_from(first + left, count - left)) out.push_back(NAWord::product(l, r));
    }
  }
  return out;
}

}  // namespace

std::vector<NAWord> word_shapes(int degree) {
  if (degree < 1) throw DomainError("word degree must be positive");
  return shapes_from(1, degree);
}

NAWord relabel(const NAWord& shape, const std::vector<int>& labels) {
  if (labels.size() != static_cast<std::size_t>(shape.degree())) throw DomainError("relabel: wrong label count");
  std::vector<int> tokens = shape.tokens();
  std::size_t k = 0;
  for (int& t : tokens) {
    if (t > 0) t = labels[k++];
  }
  // Rebuild through the public constructors to validate the labels.
  std::size_t pos = 0;
  auto rec = [&](auto&& self) -> NAWord {
    int t = tokens[pos++];
    if (t > 0) return NAWord::letter(t);
    NAWord lhs = self(self);
    NAWord rhs = self(self);
    return NAWord::product(lhs, rhs);
  };
  return rec(rec);
}

}  // namespace g2
