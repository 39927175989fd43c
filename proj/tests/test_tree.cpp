#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "ordalg/tree.hpp"
#include "ordalg/verify.hpp"

using namespace ordalg;

namespace {

Tree t(const std::string& s) { return parse_tree(s); }
Permutation p(const std::string& s) { return parse_permutation(s); }

}  // namespace

TEST_CASE("tree construction and serialization") {
  CHECK(Tree().grade() == 0);
  CHECK(graft(Tree(), Tree()).grade() == 1);
  CHECK(to_string(t("(|,(|,|))")) == "(|,(|,|))");
  CHECK(parse_tree(" ( | , ( | , | ) ) ") == t("(|,(|,|))"));
  CHECK_THROWS_AS(parse_tree("(|,|"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree("(|)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree("||"), std::invalid_argument);
  for (int n = 0; n <= 5; ++n)
    for (const Tree& w : enumerate_trees(n)) CHECK(parse_tree(to_string(w)) == w);
}

TEST_CASE("tree counts are Catalan") {
  CHECK(enumerate_trees(0).size() == 1);
  CHECK(enumerate_trees(3).size() == 5);
  CHECK(enumerate_trees(8).size() == 1430);
}

TEST_CASE("combs, over, under") {
  CHECK(left_comb(2) == t("((|,|),|)"));
  CHECK(right_comb(2) == t("(|,(|,|))"));
  CHECK(graft(graft(Tree(), Tree()), Tree()) == left_comb(2));
  const Tree y1 = t("(|,|)");
  CHECK(over(t("((|,|),|)"), Tree()) == t("((|,|),|)"));
  CHECK(over(y1, y1) == left_comb(2));
  CHECK(under(y1, y1) == right_comb(2));
  // Grades add under all three operations.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const Tree& u : enumerate_trees(a))
        for (const Tree& v : enumerate_trees(b)) {
          CHECK(graft(u, v).grade() == a + b + 1);
          CHECK(over(u, v).grade() == a + b);
          CHECK(under(u, v).grade() == a + b);
        }
}

TEST_CASE("tree order") {
  const Tree y2l = left_comb(2), y2r = right_comb(2);
  CHECK(leq_tree(y2l, y2r));
  CHECK(!leq_tree(y2r, y2l));
  for (int n = 1; n <= 8; ++n)
    for (const Tree& w : enumerate_trees(n)) {
      CHECK(leq_tree(left_comb(n), w));
      CHECK(leq_tree(w, right_comb(n)));
    }
  // One right rotation goes up: (u v v) v w  ->  u v (v v w).
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 4; ++c)
        for (const Tree& u : enumerate_trees(a))
          for (const Tree& v : enumerate_trees(b))
            for (const Tree& w : enumerate_trees(c))
              CHECK(leq_tree(graft(graft(u, v), w), graft(u, graft(v, w))));
  // Antisymmetry and transitivity at one grade.
  for (const Tree& a : enumerate_trees(4))
    for (const Tree& b : enumerate_trees(4)) {
      if (leq_tree(a, b) && leq_tree(b, a)) CHECK(a == b);
      for (const Tree& c : enumerate_trees(4))
        if (leq_tree(a, b) && leq_tree(b, c)) CHECK(leq_tree(a, c));
    }
}

TEST_CASE("tree order is the image of the weak order") {
  // The transitive closure of { (psi(s), psi(t)) : s <= t }
  // coincides with the rotation order, and psi is monotone.
  for (std::size_t n = 1; n <= 6; ++n) {
    const TamariOrder& ord = TamariOrder::at(static_cast<int>(n));
    const std::size_t m = ord.trees().size();
    std::vector<bool> image(m * m, false);
    for (const Permutation& a : symmetric_group(n))
      for (const Permutation& b : symmetric_group(n))
        if (leq_weak(a, b)) {
          image[static_cast<std::size_t>(ord.index(psi(a))) * m +
                static_cast<std::size_t>(ord.index(psi(b)))] = true;
          CHECK(leq_tree(psi(a), psi(b)));
        }
    // Close the image relation.
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i)
        if (image[i * m + k])
          for (std::size_t j = 0; j < m; ++j)
            if (image[k * m + j]) image[i * m + j] = true;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        CHECK(image[i * m + j] ==
              ord.leq(static_cast<int>(i), static_cast<int>(j)));
  }
}

TEST_CASE("psi") {
  CHECK(psi(p("1")) == t("(|,|)"));
  CHECK(psi(p("1 2")) == left_comb(2));
  CHECK(psi(p("2 1")) == right_comb(2));
  const Permutation ex = p("3 4 1 6 2 5");
  CHECK(psi(ex) == graft(psi(p("2 3 1")), psi(p("1 2"))));
}

TEST_CASE("min and max of a fiber") {
  CHECK(min_perm(left_comb(2)) == p("1 2"));
  CHECK(max_perm(left_comb(2)) == p("1 2"));
  CHECK(min_perm(right_comb(2)) == p("2 1"));
  CHECK(max_perm(right_comb(2)) == p("2 1"));
  CHECK(fiber(t("(|,|)")) == std::vector<Permutation>{p("1")});
  CHECK_THROWS_AS(min_perm(Tree()), std::invalid_argument);
  // Oracle: fibers computed as preimages of psi.
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<Tree, std::set<Permutation>> pre;
    for (const Permutation& w : symmetric_group(n)) pre[psi(w)].insert(w);
    for (const Tree& w : enumerate_trees(static_cast<int>(n))) {
      const auto f = fiber(w);
      CHECK(pre.at(w) == std::set<Permutation>(f.begin(), f.end()));
      CHECK(psi(min_perm(w)) == w);
      CHECK(psi(max_perm(w)) == w);
    }
  }
}

TEST_CASE("psi exchanges over and under") {
  const VerifyResult r = verify_thm_2_9(5);
  INFO(r.failure);
  CHECK(r.ok);
}
