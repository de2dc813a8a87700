#include <iostream>

#include "CLI11.hpp"
#include "g2/cli/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Invariants of G2 acting on tuples of split octonions"};
  app.require_subcommand(1);

  std::string file, file_b, family = "S", lambda;
  int degree = 8;
  std::uint64_t q = 2;

  auto* eval = app.add_subcommand("eval", "evaluate every invariant of S_n^(d) or S0_n^(d) on a tuple");
  eval->add_option("file", file, "tuple file")->required();
  eval->add_option("--family", family, "S or S0")->capture_default_str();
  eval->add_option("--degree,-d", degree, "degree bound d")->capture_default_str();

  auto* sep = app.add_subcommand("separate", "look for an invariant separating two tuples (exit 0 separated, 1 not)");
  sep->add_option("a", file, "first tuple file")->required();
  sep->add_option("b", file_b, "second tuple file")->required();
  sep->add_option("--family", family, "S or S0")->capture_default_str();
  sep->add_option("--degree,-d", degree, "degree bound d")->capture_default_str();

  auto* lim = app.add_subcommand("limit", "limit of theta_lambda(t) a as t -> 0 (exit 1 if it does not exist)");
  lim->add_option("file", file, "tuple file")->required();
  lim->add_option("--lambda", lambda, "l1,l2,l3 with l1 + l2 + l3 = 0")->required();

  auto* verify = app.add_subcommand("verify", "expand the polynomial identity suite");
  auto* group = app.add_subcommand("group", "enumerate G2(F_q)");
  group->add_option("--q", q, "prime")->capture_default_str();
  auto* examples = app.add_subcommand("paper-examples", "recompute the built-in worked examples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return g2::cmd_eval(g2::read_tuple_file(file), g2::parse_family(family), degree, std::cout);
    if (sep->parsed()) {
      return g2::cmd_separate(g2::read_tuple_file(file), g2::read_tuple_file(file_b), g2::parse_family(family), degree,
                              std::cout);
    }
    if (lim->parsed()) return g2::cmd_limit(g2::read_tuple_file(file), g2::parse_lambda(lambda), std::cout);
    if (verify->parsed()) return g2::cmd_verify(std::cout);
    if (group->parsed()) return g2::cmd_group(q, std::cout, std::cerr);
    if (examples->parsed()) return g2::cmd_examples(std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
