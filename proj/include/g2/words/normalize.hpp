#pragma once

#include <vector>

#include "g2/words/trace_expr.hpp"
#include "g2/words/word.hpp"

namespace g2 {

/// Exact expansion of tr(w(Z_1, ..., Z_n)) in norms n(Z_i) and traces of
/// left-normed words with strictly increasing indices. The identity holds over
/// the integers, hence in every characteristic.
TraceExpr normalize_trace(const NAWord& w);

/// Same expansion with coefficients reduced modulo `characteristic` (no-op
/// for characteristic 0).
TraceExpr normalize_trace(const NAWord& w, int characteristic);

struct MultilinearSign {
  enum class Kind {
    Multilinear,   // tr(w) = sign * tr(indices) + decomposable terms
    Decomposable,  // repeated letter in degree > 2
    Square,        // tr(x_i x_i) = tr(x_i)^2 - 2 n(x_i)
  };
  Kind kind;
  int sign = 0;
  std::vector<int> indices;
};

MultilinearSign multilinear_sign(const NAWord& w);

/// (-1)^inv of a sequence of distinct integers.
int permutation_sign(const std::vector<int>& sequence);

}  // namespace g2
