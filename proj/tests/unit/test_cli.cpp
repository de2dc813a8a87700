#include <algorithm>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "g2/cli/cli.hpp"
#include "g2/orbits/orbits.hpp"

using namespace g2;

namespace {

std::string fixture(const std::string& name) { return std::string(G2_FIXTURES_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(G2SEP_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TupleFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_tuple_file(in);
}

}  // namespace

TEST_CASE("tuple file parsing") {
  auto f = parse("# header follows\nfield q\n1/2 -3 0 0 0 0 0 4  # trailing\n\n");
  REQUIRE(f.rational.size() == 1);
  CHECK_FALSE(f.modulus.has_value());
  CHECK(f.rational[0].alpha() == Rational(Integer(1), Integer(2)));
  CHECK(f.rational[0].u()[0] == Rational(-3));
  CHECK(f.rational[0].beta() == Rational(4));

  auto p = read_tuple_file(fixture("fractions_p2.txt"));
  REQUIRE(p.modulus == 2U);
  CHECK(render_octonion(p.residues[0]) == "1 1 0 0 0 0 0 1");
  CHECK(parse("field p=7\n-1 0 0 0 0 0 0 1/2\n").residues[0].alpha().residue() == 6);
  CHECK(parse("field p=7\n-1 0 0 0 0 0 0 1/2\n").residues[0].beta().residue() == 4);

  auto line_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("field q\n0 1 0\n") == 2);
  CHECK(line_of("field p=7\n# c\n0 1 0 0 x 0 0 0\n") == 3);
  CHECK(line_of("field p=6\n") == 1);
  CHECK(line_of("field r\n") == 1);
  CHECK(line_of("0 0 0 0 0 0 0 0\n") == 1);
  CHECK(line_of("field q\n") == 1);
  CHECK(line_of("field q\n1/0 0 0 0 0 0 0 0\n") == 2);
  CHECK(line_of("field p=3\n1/3 0 0 0 0 0 0 0\n") == 2);
  CHECK_THROWS_AS(read_tuple_file(fixture("missing.txt")), Error);
}

TEST_CASE("lambda parsing") {
  CHECK(parse_lambda("1,-1,0").lambda == std::array<int, 3>{1, -1, 0});
  CHECK_THROWS_AS(parse_lambda("1,1,1"), DomainError);
  CHECK_THROWS_AS(parse_lambda("1,-1"), DomainError);
}

TEST_CASE("eval command") {
  auto r = run("eval " + fixture("u1_plus_v1_p5.txt") + " --degree 2");
  CHECK(r.code == 0);
  CHECK(r.out == "tr(1) = 0\nn(1) = 4\n");
  CHECK(run("eval " + fixture("e1.txt") + " -d 2").out == "tr(1) = 1\nn(1) = 0\n");
  auto empty = run("eval " + fixture("e1.txt") + " --family S0 --degree 1");
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  CHECK(run("eval " + fixture("bad_width.txt")).code == 2);
  CHECK(run("eval " + fixture("e1.txt") + " --family T").code == 2);
}

TEST_CASE("separate command") {
  auto p1 = run("separate " + fixture("pair1_a.txt") + " " + fixture("pair1_b.txt") + " --degree 2");
  CHECK(p1.code == 0);
  CHECK(p1.out.find("separated by tr(1,2): 0 vs 1") != std::string::npos);
  CHECK(run("separate " + fixture("pair2_a.txt") + " " + fixture("pair2_b.txt") + " -d 2").code == 1);
  auto p2 = run("separate " + fixture("pair2_a.txt") + " " + fixture("pair2_b.txt") + " -d 3");
  CHECK(p2.code == 0);
  CHECK(p2.out.find("tr(1,2,3): 0 vs -1") != std::string::npos);
  CHECK(run("separate " + fixture("pair3_a.txt") + " " + fixture("pair3_b.txt") + " -d 3").code == 1);
  auto p3 = run("separate " + fixture("pair3_a.txt") + " " + fixture("pair3_b.txt") + " -d 4");
  CHECK(p3.code == 0);
  CHECK(p3.out.find("tr(1,2,3,4): 0 vs -1") != std::string::npos);
  CHECK(run("separate " + fixture("bad_scalar.txt") + " " + fixture("pair1_b.txt")).code == 2);
  CHECK(run("separate " + fixture("pair1_a.txt") + " " + fixture("pair2_b.txt")).code == 2);
  CHECK(run("separate " + fixture("u1_plus_v1_p5.txt") + " " + fixture("e1.txt")).code == 2);
  // Byte-identical output on repeated runs.
  CHECK(run("separate " + fixture("pair3_a.txt") + " " + fixture("pair3_b.txt") + " -d 4").out == p3.out);
}

TEST_CASE("limit command") {
  auto a = run("limit " + fixture("u1.txt") + " --lambda 1,-1,0");
  CHECK(a.code == 0);
  CHECK(a.out == "lambda 1,-1,0\nrank before 1\nlimit\n  0 0 0 0 0 0 0 0\nrank after 0\n");
  auto b = run("limit " + fixture("one_u1.txt") + " --lambda 1,-1,0");
  CHECK(b.out.find("limit\n  1 0 0 0 0 0 0 1\n  0 0 0 0 0 0 0 0\nrank after 1\n") != std::string::npos);
  auto c = run("limit " + fixture("v1.txt") + " --lambda 1,-1,0");
  CHECK(c.code == 1);
  CHECK(c.out.find("limit does not exist") != std::string::npos);
  CHECK(run("limit " + fixture("v1.txt") + " --lambda 1,1,0").code == 2);
}

TEST_CASE("verify, group and examples commands") {
  auto v = run("verify");
  CHECK(v.code == 0);
  CHECK(std::count(v.out.begin(), v.out.end(), '\n') == 12);
  CHECK(v.out.find("FAIL") == std::string::npos);
  auto g = run("group --q 2");
  CHECK(g.code == 0);
  CHECK(g.out.rfind("order 12096\n", 0) == 0);
  CHECK(run("group --q 3").code == 2);
  CHECK(run("group --q 4").code == 2);
  auto e = run("paper-examples");
  CHECK(e.code == 0);
  CHECK(e.out.find(" 0 failures") != std::string::npos);
  CHECK(run("").code != 0);
}
