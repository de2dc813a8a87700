#include <chrono>
#include <ostream>
#include <sstream>

#include "g2/cli/cli.hpp"
#include "g2/group/enumerate.hpp"
#include "g2/orbits/orbits.hpp"
#include "g2/symbolic/symbolic.hpp"

namespace g2 {

namespace {

template <RingElement T>
void eval_rows(const Tuple<T>& tuple, Family family, int degree, std::ostream& out) {
  std::ostringstream table;
  for (const auto& d : enumerate_set(family, static_cast<int>(tuple.size()), degree)) {
    table << d.to_string() << " = " << eval_descriptor(d, tuple).to_string() << '\n';
  }
  out << table.str();
}

template <RingElement T>
int separate_report(const Tuple<T>& a, const Tuple<T>& b, Family family, int degree, std::ostream& out) {
  auto report = separate(a, b, family, degree);
  std::ostringstream text;
  text << "family " << family_name(family) << ", degree " << degree << '\n';
  if (!report.separated) {
    text << "not separated\n";
    out << text.str();
    return 1;
  }
  text << "separated by " << report.witness->to_string() << ": " << report.values->first.to_string() << " vs "
       << report.values->second.to_string() << '\n';
  out << text.str();
  return 0;
}

template <RingElement T>
int limit_report(const Tuple<T>& tuple, const OneParamSubgroup& lambda, std::ostream& out) {
  auto lim = limit(lambda, tuple);
  std::ostringstream text;
  text << "lambda " << lambda.to_string() << '\n';
  text << "rank before " << rank(tuple) << '\n';
  if (!lim.exists) {
    text << "limit does not exist\n";
    out << text.str();
    return 1;
  }
  text << "limit\n";
  for (const auto& a : lim.value) text << "  " << render_octonion(a) << '\n';
  text << "rank after " << rank(lim.value) << '\n';
  out << text.str();
  return 0;
}

}  // namespace

int cmd_eval(const TupleFile& file, Family family, int degree, std::ostream& out) {
  if (file.modulus) {
    eval_rows(file.residues, family, degree, out);
  } else {
    eval_rows(file.rational, family, degree, out);
  }
  return 0;
}

int cmd_separate(const TupleFile& a, const TupleFile& b, Family family, int degree, std::ostream& out) {
  if (a.modulus != b.modulus) throw RingMismatch("tuples over " + a.field_name() + " and " + b.field_name());
  if (a.modulus) return separate_report(a.residues, b.residues, family, degree, out);
  return separate_report(a.rational, b.rational, family, degree, out);
}

int cmd_limit(const TupleFile& file, const OneParamSubgroup& lambda, std::ostream& out) {
  if (file.modulus) return limit_report(file.residues, lambda, out);
  return limit_report(file.rational, lambda, out);
}

int cmd_verify(std::ostream& out) {
  std::ostringstream text;
  bool all = true;
  for (Identity id : all_identities()) {
    text << identity_name(id);
    for (int p : {0, 2, 5}) {
      auto r = verify_identity(id, p);
      all = all && r.passed;
      text << "  " << r.field << ' ' << (r.passed ? "pass" : "FAIL");
      if (!r.passed) text << " [" << r.failing_monomial << ']';
    }
    text << '\n';
  }
  auto q = verify_lemmaQ();
  bool ok = q.passed && q.coefficients_in_z_half && q.specialization_passed;
  all = all && ok;
  text << "lemmaQ  Q " << (ok ? "pass" : "FAIL") << "  Z[1/2] " << (q.coefficients_in_z_half ? "yes" : "no")
       << "  specialization " << (q.specialization_passed ? "pass" : "FAIL") << '\n';
  out << text.str();
  return all ? 0 : 1;
}

int cmd_group(std::uint64_t q, std::ostream& out, std::ostream& timing) {
  auto start = std::chrono::steady_clock::now();
  auto table = enumerate_group(q);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  bool agrees = Integer(static_cast<unsigned long>(table.size())) == g2_order_formula(q);
  out << "order " << table.size() << '\n';
  out << "formula " << g2_order_formula(q).get_str() << (agrees ? " (agrees)" : " (DISAGREES)") << '\n';
  timing << "enumeration took " << ms << " ms\n";
  return agrees ? 0 : 1;
}

int cmd_examples(std::ostream& out) {
  std::ostringstream text;
  int failures = 0;
  auto results = reference_examples();
  for (const auto& r : results) {
    if (!r.passed) ++failures;
    text << (r.passed ? "pass  " : "FAIL  ") << r.name;
    if (!r.detail.empty()) text << "  (" << r.detail << ')';
    text << '\n';
  }
  text << results.size() << " examples, " << failures << " failures\n";
  out << text.str();
  return failures == 0 ? 0 : 1;
}

}  // namespace g2
