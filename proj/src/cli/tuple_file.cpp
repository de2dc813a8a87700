#include <fstream>
#include <regex>
#include <sstream>

#include "g2/cli/cli.hpp"

namespace g2 {

namespace {

std::string strip(const std::string& line) {
  auto cut = line.substr(0, line.find('#'));
  auto first = cut.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = cut.find_last_not_of(" \t\r");
  return cut.substr(first, last - first + 1);
}

Rational parse_scalar(const std::string& token, int line) {
  static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(token, pattern)) throw ParseError(line, "not a scalar: '" + token + "'");
  auto slash = token.find('/');
  std::string num = token.substr(0, slash);
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  Integer n(num);
  Integer d(1);
  if (slash != std::string::npos) {
    d = Integer(token.substr(slash + 1));
    if (d == 0) throw ParseError(line, "zero denominator in '" + token + "'");
  }
  return Rational(n, d);
}

}  // namespace

std::string TupleFile::field_name() const { return modulus ? "GF(" + std::to_string(*modulus) + ")" : "Q"; }

TupleFile parse_tuple_file(std::istream& in) {
  TupleFile file;
  std::optional<PrimeField> field;
  bool have_header = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = strip(raw);
    if (text.empty()) continue;
    std::istringstream tokens(text);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);

    if (!have_header) {
      if (parts.size() != 2 || parts[0] != "field") throw ParseError(line, "expected 'field q' or 'field p=<prime>'");
      have_header = true;
      if (parts[1] == "q") continue;
      static const std::regex prime(R"(p=([0-9]+))");
      std::smatch m;
      if (!std::regex_match(parts[1], m, prime)) throw ParseError(line, "unknown field '" + parts[1] + "'");
      try {
        field.emplace(std::stoull(m[1].str()));
      } catch (const std::exception& e) {
        throw ParseError(line, e.what());
      }
      file.modulus = field->modulus();
      continue;
    }

    if (parts.size() != 8) {
      throw ParseError(line, "expected 8 scalars, found " + std::to_string(parts.size()));
    }
    std::vector<Rational> q;
    for (const auto& p : parts) q.push_back(parse_scalar(p, line));
    if (!field) {
      file.rational.push_back(Octonion<Rational>::from_coords(q));
      continue;
    }
    std::vector<PrimeFieldElement> z;
    for (const auto& x : q) {
      auto den = field->from_integer(x.denominator());
      if (den.is_zero()) throw ParseError(line, "denominator of " + x.to_string() + " vanishes in " + field->name());
      z.push_back(field->from_integer(x.numerator()) * den.inverse());
    }
    file.residues.push_back(Octonion<PrimeFieldElement>::from_coords(z));
  }
  if (!have_header) throw ParseError(line, "missing field header");
  if (file.size() == 0) throw ParseError(line, "no octonions");
  return file;
}

TupleFile read_tuple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_tuple_file(in);
}

namespace {

template <RingElement T>
std::string render(const Octonion<T>& a) {
  std::string out;
  for (const auto& c : a.coords()) {
    if (!out.empty()) out += ' ';
    out += c.to_string();
  }
  return out;
}

}  // namespace

std::string render_octonion(const Octonion<Rational>& a) { return render(a); }
std::string render_octonion(const Octonion<PrimeFieldElement>& a) { return render(a); }

OneParamSubgroup parse_lambda(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?[0-9]+)\s*,\s*([+-]?[0-9]+)\s*,\s*([+-]?[0-9]+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw DomainError("lambda must be three integers l1,l2,l3");
  return OneParamSubgroup({std::stoi(m[1].str()), std::stoi(m[2].str()), std::stoi(m[3].str())});
}

}  // namespace g2
