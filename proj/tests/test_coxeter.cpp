#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "ordalg/coxeter.hpp"
#include "ordalg/verify.hpp"

using namespace ordalg;

namespace {

// Word-length oracle in any system: breadth-first distance from the unit.
template <CoxeterSystem S>
std::map<typename S::Element, std::size_t> word_lengths(const S& sys) {
  std::map<typename S::Element, std::size_t> dist{{sys.unit(), 0}};
  std::vector<typename S::Element> frontier{sys.unit()};
  while (!frontier.empty()) {
    std::vector<typename S::Element> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < sys.rank(); ++i) {
        auto ws = sys.multiply(w, sys.generator(i));
        if (dist.emplace(ws, dist.at(w) + 1).second) next.push_back(std::move(ws));
      }
    frontier = std::move(next);
  }
  return dist;
}

template <CoxeterSystem S>
void check_axioms(const S& sys) {
  const auto carrier = enumerate_elements(sys);
  const auto dist = word_lengths(sys);
  REQUIRE(dist.size() == carrier.size());
  for (const auto& w : carrier) {
    CHECK(sys.length(w) == dist.at(w));
    CHECK(sys.multiply(w, sys.inverse(w)) == sys.unit());
    CHECK(weak_leq(sys, sys.unit(), w));
  }
  const auto w0 = longest_element(sys, carrier);
  for (const auto& w : carrier) CHECK(weak_leq(sys, w, w0));
  for (std::size_t i = 0; i < sys.rank(); ++i)
    CHECK(sys.multiply(sys.generator(i), sys.generator(i)) == sys.unit());
}

}  // namespace

TEST_CASE("symmetric system") {
  for (std::size_t n = 2; n <= 5; ++n) {
    SymmetricSystem sys(n);
    const auto carrier = enumerate_elements(sys);
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    CHECK(carrier.size() == fact);
    check_axioms(sys);
  }
  // X_J for J missing only s_p is the set of (p,q)-shuffles, with xi on top.
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; p + q <= 5; ++q) {
      SymmetricSystem sys(p + q);
      const auto carrier = enumerate_elements(sys);
      std::vector<std::size_t> J;
      for (std::size_t i = 0; i + 1 < p + q; ++i)
        if (i != p - 1) J.push_back(i);
      const auto xj = x_j_set(sys, J, carrier);
      const auto sh = shuffles(p, q);
      CHECK(std::set<Permutation>(xj.begin(), xj.end()) ==
            std::set<Permutation>(sh.begin(), sh.end()));
      CHECK(x_j_0(sys, J, carrier) == xi(p, q));
    }
  // Degenerate choices of J.
  SymmetricSystem s4(4);
  const auto carrier = enumerate_elements(s4);
  CHECK(x_j_set(s4, {}, carrier).size() == carrier.size());
  CHECK(x_j_set(s4, {0, 1, 2}, carrier) ==
        std::vector<Permutation>{Permutation::identity(4)});
  CHECK(x_j_0(s4, {0, 1, 2}, carrier) == Permutation::identity(4));
  for (const Permutation& w : parabolic_subgroup(s4, {0, 1}))
    CHECK(parabolic_factor(s4, w, {0, 1}) == std::make_pair(s4.unit(), w));
  for (const Permutation& x : x_j_set(s4, {0, 1}, carrier))
    CHECK(parabolic_factor(s4, x, {0, 1}) == std::make_pair(x, s4.unit()));
}

TEST_CASE("signed permutation system") {
  for (std::size_t n = 1; n <= 3; ++n) {
    SignedPermutationSystem sys(n);
    const auto carrier = enumerate_elements(sys);
    std::size_t order = 1;
    for (std::size_t k = 1; k <= n; ++k) order *= 2 * k;
    CHECK(carrier.size() == order);
    check_axioms(sys);
    // The longest element is -id, of length n^2.
    std::vector<int> neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -static_cast<int>(i) - 1;
    CHECK(longest_element(sys, carrier) == neg);
    CHECK(sys.length(neg) == n * n);
  }
}

TEST_CASE("dihedral system") {
  for (int m = 2; m <= 8; ++m) {
    DihedralSystem sys(m);
    const auto carrier = enumerate_elements(sys);
    CHECK(carrier.size() == static_cast<std::size_t>(2 * m));
    check_axioms(sys);
    CHECK(sys.length(longest_element(sys, carrier)) == static_cast<std::size_t>(m));
    // The product of the two generators has order m.
    auto r = sys.multiply(sys.generator(0), sys.generator(1));
    auto acc = sys.unit();
    for (int k = 0; k < m; ++k) acc = sys.multiply(acc, r);
    CHECK(acc == sys.unit());
  }
}

TEST_CASE("parabolic factorization theorems at reduced size") {
  const VerifyResult a2 = verify_prop_a_2(4);
  INFO(a2.failure);
  CHECK(a2.ok);
  const VerifyResult a4 = verify_cor_a_4(4);
  INFO(a4.failure);
  CHECK(a4.ok);
}
