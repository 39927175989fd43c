#include <catch2/catch_amalgamated.hpp>

#include "ordalg/algebra.hpp"
#include "ordalg/verify.hpp"

using namespace ordalg;

namespace {

Permutation p(const std::string& s) { return parse_permutation(s); }
Tree t(const std::string& s) { return parse_tree(s); }
SignVector q(const std::string& s) { return parse_sign_vector(s); }

template <typename B>
FreeElement<B> sum(std::initializer_list<B> xs) {
  FreeElement<B> out;
  for (const B& x : xs) out.add_term(x, 1);
  return out;
}

}  // namespace

TEST_CASE("free elements") {
  PermElement e;
  CHECK(e.is_zero());
  e.add_term(p("1 2"), 2);
  e.add_term(p("2 1"), -1);
  e.add_term(p("1 2"), -2);
  CHECK(e.term_count() == 1);
  CHECK(e.coefficient(p("2 1")) == -1);
  CHECK(e.coefficient(p("1 2")) == 0);
  e *= 3;
  CHECK(e.coefficient(p("2 1")) == -3);
  CHECK(to_string(PermElement(p("2 1"), 5)) == "5 2 1\n");
}

TEST_CASE("permutation products") {
  CHECK(star(p("1"), p("1")) == sum({p("1 2"), p("2 1")}));
  CHECK(star(p("2 1"), p("1")) == sum({p("2 1 3"), p("3 1 2"), p("3 2 1")}));
  CHECK(star(Permutation(), p("3 1 2")) == PermElement(p("3 1 2")));
  CHECK(star_interval(p("1"), p("1")) == sum({p("1 2"), p("2 1")}));
  CHECK(succ(p("1"), p("1")) == PermElement(p("1 2")));
  CHECK(prec(p("1"), p("1")) == PermElement(p("2 1")));
  CHECK_THROWS_AS(prec(Permutation(), p("1")), std::invalid_argument);
  CHECK_THROWS_AS(succ(p("1"), Permutation()), std::invalid_argument);
  // star = prec + succ on positive grades.
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; a + b <= 5; ++b)
      for (const Permutation& x : symmetric_group(a))
        for (const Permutation& y : symmetric_group(b))
          CHECK(star(x, y) == prec(x, y) + succ(x, y));
}

TEST_CASE("tree products") {
  const Tree y1 = t("(|,|)");
  CHECK(star(y1, y1) == sum({left_comb(2), right_comb(2)}));
  CHECK(star(Tree(), t("((|,|),|)")) == TreeElement(t("((|,|),|)")));
  CHECK(star(t("((|,|),|)"), Tree()) == TreeElement(t("((|,|),|)")));
  CHECK(star_interval(y1, y1) == sum({left_comb(2), right_comb(2)}));
  CHECK(prec(y1, y1) == TreeElement(right_comb(2)));
  CHECK(succ(y1, y1) == TreeElement(left_comb(2)));
  CHECK_THROWS_AS(prec(Tree(), y1), std::invalid_argument);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; a + b <= 5; ++b)
      for (const Tree& x : enumerate_trees(a))
        for (const Tree& y : enumerate_trees(b))
          CHECK(star(x, y) == prec(x, y) + succ(x, y));
}

TEST_CASE("cube products") {
  CHECK(star(q("+"), q("-")) == sum({q("+--"), q("++-")}));
  CHECK(star(SignVector(), SignVector()) == sum({q("-"), q("+")}));
}

TEST_CASE("products are associative, including the unit") {
  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t b = 0; a + b <= 4; ++b)
      for (std::size_t c = 0; a + b + c <= 4; ++c)
        for (const Permutation& x : symmetric_group(a))
          for (const Permutation& y : symmetric_group(b))
            for (const Permutation& z : symmetric_group(c))
              CHECK(star(star(x, y), PermElement(z)) == star(PermElement(x), star(y, z)));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (int c = 0; a + b + c <= 5; ++c)
        for (const Tree& x : enumerate_trees(a))
          for (const Tree& y : enumerate_trees(b))
            for (const Tree& z : enumerate_trees(c))
              CHECK(star(star(x, y), TreeElement(z)) == star(TreeElement(x), star(y, z)));
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; a + b <= 6; ++b)
      for (std::size_t c = 1; a + b + c <= 7; ++c)
        for (const SignVector& x : enumerate_sign_vectors(a))
          for (const SignVector& y : enumerate_sign_vectors(b))
            for (const SignVector& z : enumerate_sign_vectors(c))
              CHECK(star(star(x, y), CubeElement(z)) == star(CubeElement(x), star(y, z)));
}

TEST_CASE("embeddings") {
  CHECK(psi_star(t("(|,|)")) == PermElement(p("1")));
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(phi_star(SignVector::constant(-1, n)) ==
          TreeElement(left_comb(static_cast<int>(n))));
  // Dimensions: fiber sizes over Q_n sum to the Catalan number.
  Coefficient total = 0;
  for (const SignVector& e : enumerate_sign_vectors(6))
    total += phi_star(e).coefficient_sum();
  CHECK(total == 132);  // Catalan(6)
}

TEST_CASE("interval product theorems at reduced degree") {
  for (const auto* name : {"thm4.1", "thm5.1", "thm6.1", "prop4.6"}) {
    VerifyResult r;
    REQUIRE(run_suite(name, 5, r));
    INFO(name << ": " << r.failure);
    CHECK(r.ok);
  }
}

TEST_CASE("dendriform axioms and homomorphisms at reduced degree") {
  for (const auto* name : {"prop4.5", "prop5.3"}) {
    VerifyResult r;
    REQUIRE(run_suite(name, 5, r));
    INFO(name << ": " << r.failure);
    CHECK(r.ok);
  }
}
