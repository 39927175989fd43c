// Command-line front end: products, maps, intervals, fibers, Hasse
// diagrams, and verification suites over the three graded families.
//
// Exit codes: 0 success, 1 property violation, 2 usage/parse error.

#include <cstddef>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordalg/algebra.hpp"
#include "ordalg/coxeter.hpp"
#include "ordalg/cube.hpp"
#include "ordalg/free_module.hpp"
#include "ordalg/permutation.hpp"
#include "ordalg/tree.hpp"
#include "ordalg/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int run_product(const std::string& family, const std::string& op, const std::string& lhs,
                const std::string& rhs) {
  using namespace ordalg;
  if (family == "perm") {
    const Permutation a = parse_permutation(lhs), b = parse_permutation(rhs);
    if (op == "over") std::cout << to_string(over(a, b)) << '\n';
    else if (op == "under") std::cout << to_string(under(a, b)) << '\n';
    else if (op == "star") std::cout << to_string(star(a, b));
    else if (op == "prec") std::cout << to_string(prec(a, b));
    else if (op == "succ") std::cout << to_string(succ(a, b));
    else throw UsageError("unknown op '" + op + "'");
  } else if (family == "tree") {
    const Tree a = parse_tree(lhs), b = parse_tree(rhs);
    if (op == "over") std::cout << to_string(over(a, b)) << '\n';
    else if (op == "under") std::cout << to_string(under(a, b)) << '\n';
    else if (op == "star") std::cout << to_string(star(a, b));
    else if (op == "prec") std::cout << to_string(prec(a, b));
    else if (op == "succ") std::cout << to_string(succ(a, b));
    else throw UsageError("unknown op '" + op + "'");
  } else if (family == "cube") {
    const SignVector a = parse_sign_vector(lhs), b = parse_sign_vector(rhs);
    if (op == "over") std::cout << to_string(over(a, b)) << '\n';
    else if (op == "under") std::cout << to_string(under(a, b)) << '\n';
    else if (op == "star") std::cout << to_string(star(a, b));
    else throw UsageError("op '" + op + "' is not defined for family cube");
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  return 0;
}

int run_map(const std::string& which, const std::string& arg) {
  using namespace ordalg;
  if (which == "psi") std::cout << to_string(psi(parse_permutation(arg))) << '\n';
  else if (which == "phi") std::cout << to_string(phi(parse_tree(arg))) << '\n';
  else if (which == "psistar") std::cout << to_string(psi_star(parse_tree(arg)));
  else if (which == "phistar") std::cout << to_string(phi_star(parse_sign_vector(arg)));
  else if (which == "minperm") std::cout << to_string(min_perm(parse_tree(arg))) << '\n';
  else if (which == "maxperm") std::cout << to_string(max_perm(parse_tree(arg))) << '\n';
  else if (which == "mintree") std::cout << to_string(min_tree(parse_sign_vector(arg))) << '\n';
  else if (which == "maxtree") std::cout << to_string(max_tree(parse_sign_vector(arg))) << '\n';
  else throw UsageError("unknown map '" + which + "'");
  return 0;
}

int run_interval(const std::string& family, const std::string& low, const std::string& high) {
  using namespace ordalg;
  if (family == "perm") {
    for (const auto& x : interval(parse_permutation(low), parse_permutation(high)))
      std::cout << to_string(x) << '\n';
  } else if (family == "tree") {
    for (const auto& x : tree_interval(parse_tree(low), parse_tree(high)))
      std::cout << to_string(x) << '\n';
  } else if (family == "cube") {
    for (const auto& x : cube_interval(parse_sign_vector(low), parse_sign_vector(high)))
      std::cout << to_string(x) << '\n';
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  return 0;
}

int run_fiber(const std::string& which, const std::string& arg) {
  using namespace ordalg;
  if (which == "psi") {
    for (const auto& x : fiber(parse_tree(arg))) std::cout << to_string(x) << '\n';
  } else if (which == "phi") {
    for (const auto& x : tree_fiber(parse_sign_vector(arg))) std::cout << to_string(x) << '\n';
  } else {
    throw UsageError("unknown fiber map '" + which + "'");
  }
  return 0;
}

void emit_dot(const std::vector<std::pair<std::string, std::vector<std::string>>>& nodes) {
  std::cout << "digraph hasse {\n";
  for (const auto& [name, covers] : nodes) std::cout << "  \"" << name << "\";\n";
  for (const auto& [name, covers] : nodes)
    for (const auto& c : covers) std::cout << "  \"" << name << "\" -> \"" << c << "\";\n";
  std::cout << "}\n";
}

int run_hasse(const std::string& family, std::size_t n, const std::string& format) {
  using namespace ordalg;
  if (format != "dot") throw UsageError("unknown format '" + format + "'");
  std::vector<std::pair<std::string, std::vector<std::string>>> nodes;
  if (family == "perm") {
    for (const Permutation& p : symmetric_group(n)) {
      std::vector<std::string> covers;
      for (const Permutation& c : up_covers(p)) covers.push_back(to_string(c));
      nodes.emplace_back(to_string(p), std::move(covers));
    }
  } else if (family == "tree") {
    for (const Tree& t : enumerate_trees(static_cast<int>(n))) {
      std::vector<std::string> covers;
      for (const Tree& c : rotation_covers(t)) covers.push_back(to_string(c));
      nodes.emplace_back(to_string(t), std::move(covers));
    }
  } else if (family == "cube") {
    for (const SignVector& eps : enumerate_sign_vectors(n)) {
      std::vector<std::string> covers;
      for (std::size_t i = 0; i < eps.signs().size(); ++i)
        if (eps.signs()[i] == -1) {
          std::vector<int> s = eps.signs();
          s[i] = +1;
          covers.push_back(to_string(SignVector(std::move(s))));
        }
      nodes.emplace_back(to_string(eps), std::move(covers));
    }
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  emit_dot(nodes);
  return 0;
}

int run_verify(const std::string& suite, std::size_t max_degree) {
  ordalg::VerifyResult r;
  if (!ordalg::run_suite(suite, max_degree, r)) throw UsageError("unknown suite '" + suite + "'");
  if (!r.ok) {
    std::cout << "FAIL " << suite << ": " << r.failure << '\n';
    return 1;
  }
  std::cout << "PASS " << suite << " (" << r.checks << " checks)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orders and products on permutations, planar binary trees, and cube vertices"};
  app.require_subcommand(1);

  std::string family, op, which, lhs, rhs, suite, format = "dot";
  std::size_t n = 3, max_degree = 6;

  auto* product = app.add_subcommand("product", "Product of two basis elements");
  product->add_option("--family", family, "perm|tree|cube")->required();
  product->add_option("--op", op, "star|prec|succ|over|under")->required();
  product->add_option("lhs", lhs, "left operand")->required();
  product->add_option("rhs", rhs, "right operand")->required();

  auto* map = app.add_subcommand("map", "Apply one of the order-preserving maps");
  map->add_option("--which", which,
                  "psi|phi|psistar|phistar|minperm|maxperm|mintree|maxtree")
      ->required();
  map->add_option("arg", lhs, "argument")->required();

  auto* interval = app.add_subcommand("interval", "Order interval [low, high]");
  interval->add_option("--family", family, "perm|tree|cube")->required();
  interval->add_option("low", lhs, "lower end")->required();
  interval->add_option("high", rhs, "upper end")->required();

  auto* fiber = app.add_subcommand("fiber", "Fiber of psi or phi");
  fiber->add_option("--which", which, "psi|phi")->required();
  fiber->add_option("arg", lhs, "argument")->required();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of one grade, as DOT");
  hasse->add_option("--family", family, "perm|tree|cube")->required();
  hasse->add_option("--n", n, "grade")->required();
  hasse->add_option("--format", format, "dot");

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", suite, "thm4.1|thm5.1|thm6.1|thm2.5|thm2.9|prop3.5|prop4.5|"
                                       "prop4.6|prop5.3|propA.2|corA.4|lemmas")
      ->required();
  verify->add_option("--max-degree", max_degree, "sweep bound (default 6)");

  try {
    app.parse(argc, argv);
    if (product->parsed()) return run_product(family, op, lhs, rhs);
    if (map->parsed()) return run_map(which, lhs);
    if (interval->parsed()) return run_interval(family, lhs, rhs);
    if (fiber->parsed()) return run_fiber(which, lhs);
    if (hasse->parsed()) return run_hasse(family, n, format);
    if (verify->parsed()) return run_verify(suite, max_degree);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
