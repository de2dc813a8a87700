#include "g2/words/normalize.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

namespace g2 {

namespace {

using Desc = InvariantDescriptor;

TraceExpr tr_symbol(std::vector<int> indices) { return TraceExpr::symbol(Desc::trace(std::move(indices))); }

/// tr(x_a x_b) for letters a, b.
TraceExpr tr_pair(int a, int b) {
  if (a == b) {
    return tr_symbol({a}) * tr_symbol({a}) - TraceExpr::symbol(Desc::norm(a)).scaled(Integer(2));
  }
  return tr_symbol({std::min(a, b), std::max(a, b)});
}

NAWord without(const std::vector<int>& seq, std::size_t first, std::size_t count) {
  std::vector<int> rest;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k < first || k >= first + count) rest.push_back(seq[k]);
  }
  return left_normed(rest);
}

class Normalizer {
 public:
  TraceExpr tr(const NAWord& w) {
    auto it = memo_.find(w.tokens());
    if (it != memo_.end()) return it->second;
    TraceExpr out = compute(w);
    memo_.emplace(w.tokens(), out);
    return out;
  }

 private:
  TraceExpr compute(const NAWord& w) {
    if (w.is_letter()) return tr_symbol({w.letter_index()});
    NAWord l = w.left();
    NAWord r = w.right();
    if (w.degree() == 2) return tr_pair(l.letter_index(), r.letter_index());

    // tr(L(R1R2)) = tr((LR1)R2).
    if (!r.is_letter()) return tr(NAWord::product(NAWord::product(l, r.left()), r.right()));

    std::vector<NAWord> rights;
    NAWord cur = w;
    while (!cur.is_letter()) {
      rights.push_back(cur.right());
      cur = cur.left();
    }
    std::size_t spine = rights.size();
    std::size_t deepest = spine;
    for (std::size_t i = spine; i-- > 1;) {
      if (!rights[i].is_letter()) {
        deepest = i;
        break;
      }
    }
    if (deepest == spine) return left_normed_trace(w.letters());
    return exchange(cur, rights, deepest);
  }

  /// Node N = U(V1V2) at spine depth i >= 1, with U left-normed:
  ///   U(V1V2) = (UV2)V1 - tr(UV2) V1 + (tr(V1)tr(UV2) - tr(V1(UV2))) 1
  ///             + tr(U) V1V2 + (tr(UV1) - tr(U)tr(V1)) V2.
  TraceExpr exchange(const NAWord& base, const std::vector<NAWord>& rights, std::size_t i) {
    NAWord u = base;
    for (std::size_t j = rights.size(); j-- > i + 1;) u = NAWord::product(u, rights[j]);
    const NAWord& v = rights[i];
    NAWord v1 = v.left();
    NAWord v2 = v.right();

    auto context = [&](const std::optional<NAWord>& x) {
      std::optional<NAWord> acc = x;
      for (std::size_t j = i; j-- > 0;) acc = acc ? NAWord::product(*acc, rights[j]) : rights[j];
      return tr(*acc);
    };

    NAWord uv2 = NAWord::product(u, v2);
    NAWord uv1 = NAWord::product(u, v1);
    TraceExpr t_uv2 = tr(uv2);
    TraceExpr t_u = tr(u);
    TraceExpr t_v1 = tr(v1);

    TraceExpr out = context(NAWord::product(uv2, v1));
    out -= t_uv2 * context(v1);
    out += (t_v1 * t_uv2 - tr(NAWord::product(v1, uv2))) * context(std::nullopt);
    out += t_u * context(v);
    out += (tr(uv1) - t_u * t_v1) * context(v2);
    return out;
  }

  /// Left-normed word of degree >= 3: sort by adjacent exchanges using right
  /// alternativity and its linearization.
  TraceExpr left_normed_trace(const std::vector<int>& seq) {
    std::size_t j = 0;
    while (j + 1 < seq.size() && seq[j] < seq[j + 1]) ++j;
    if (j + 1 == seq.size()) return tr_symbol(seq);

    int a = seq[j];
    int b = seq[j + 1];
    if (a == b) {
      // (Pa)a = tr(a) Pa - n(a) P
      return tr_symbol({a}) * tr(without(seq, j + 1, 1)) - TraceExpr::symbol(Desc::norm(a)) * tr(without(seq, j, 2));
    }
    // (Pa)b = -(Pb)a + tr(a) Pb + tr(b) Pa + (tr(ab) - tr(a)tr(b)) P
    std::vector<int> swapped = seq;
    std::swap(swapped[j], swapped[j + 1]);
    TraceExpr out = -tr(left_normed(swapped));
    out += tr_symbol({a}) * tr(without(seq, j, 1));
    out += tr_symbol({b}) * tr(without(seq, j + 1, 1));
    out += (tr_pair(a, b) - tr_symbol({a}) * tr_symbol({b})) * tr(without(seq, j, 2));
    return out;
  }

  std::map<std::vector<int>, TraceExpr> memo_;
};

}  // namespace

TraceExpr normalize_trace(const NAWord& w) {
  static Normalizer normalizer;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  return normalizer.tr(w);
}

TraceExpr normalize_trace(const NAWord& w, int characteristic) {
  if (characteristic < 0) throw DomainError("negative characteristic");
  TraceExpr e = normalize_trace(w);
  return characteristic == 0 ? e : e.reduced_mod(static_cast<unsigned long>(characteristic));
}

int permutation_sign(const std::vector<int>& sequence) {
  int inversions = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::size_t j = i + 1; j < sequence.size(); ++j) {
      if (sequence[i] == sequence[j]) throw DomainError("permutation_sign: repeated entry");
      if (sequence[i] > sequence[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

MultilinearSign multilinear_sign(const NAWord& w) {
  std::vector<int> sorted = w.letters();
  std::sort(sorted.begin(), sorted.end());
  if (!w.is_multilinear()) {
    if (w.degree() == 2) return {MultilinearSign::Kind::Square, 0, {sorted.front()}};
    return {MultilinearSign::Kind::Decomposable, 0, {}};
  }
  Integer c = normalize_trace(w).coefficient({Desc::trace(sorted)});
  if (c != 1 && c != -1) throw DomainError("leading coefficient of " + w.to_string() + " is " + c.get_str());
  return {MultilinearSign::Kind::Multilinear, c == 1 ? 1 : -1, sorted};
}

}  // namespace g2
