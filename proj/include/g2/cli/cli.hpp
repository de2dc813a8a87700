#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "g2/group/group.hpp"
#include "g2/invariants/invariants.hpp"
#include "g2/octonion/octonion.hpp"
#include "g2/scalars/scalars.hpp"

namespace g2 {

/// Parsed tuple file. Exactly one of the two tuples is populated, selected by
/// `modulus` (nullopt for the rationals).
struct TupleFile {
  std::optional<std::uint64_t> modulus;
  Tuple<Rational> rational;
  Tuple<PrimeFieldElement> residues;

  std::size_t size() const { return modulus ? residues.size() : rational.size(); }
  std::string field_name() const;
};

/// Format:
///   field q            (or: field p=<prime>)
///   a u1 u2 u3 v1 v2 v3 b
///   ...
/// Scalars are integers or fractions num/den, possibly negative; `#` starts a
/// comment. Throws ParseError carrying the offending line number.
TupleFile parse_tuple_file(std::istream& in);
TupleFile read_tuple_file(const std::string& path);

std::string render_octonion(const Octonion<Rational>& a);
std::string render_octonion(const Octonion<PrimeFieldElement>& a);

/// Each command writes its report to `out` and returns the exit code.
int cmd_eval(const TupleFile& file, Family family, int degree, std::ostream& out);
/// 0 if separated, 1 if not.
int cmd_separate(const TupleFile& a, const TupleFile& b, Family family, int degree, std::ostream& out);
/// 0 if the limit exists, 1 if not.
int cmd_limit(const TupleFile& file, const OneParamSubgroup& lambda, std::ostream& out);
int cmd_verify(std::ostream& out);
/// Elapsed time goes to `timing` so that `out` stays deterministic.
int cmd_group(std::uint64_t q, std::ostream& out, std::ostream& timing);
int cmd_examples(std::ostream& out);

struct ExampleResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Worked examples with known values, each recomputed from scratch.
std::vector<ExampleResult> reference_examples();

OneParamSubgroup parse_lambda(const std::string& text);

}  // namespace g2
