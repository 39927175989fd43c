#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/coxeter.hpp"
#include "ordalg/cube.hpp"
#include "ordalg/free_module.hpp"
#include "ordalg/permutation.hpp"
#include "ordalg/tree.hpp"

namespace ordalg {

/// Outcome of one verification sweep.  `failure` holds the first
/// counterexample found, empty on success.
struct VerifyResult {
  bool ok = true;
  std::size_t checks = 0;
  std::string failure;

  void fail(const std::string& what) {
    if (ok) {
      ok = false;
      failure = what;
    }
  }
};

namespace detail {

template <typename F>
void for_grade_pairs(std::size_t max_total, bool positive_grades, F&& body) {
  const std::size_t lo = positive_grades ? 1 : 0;
  for (std::size_t p = lo; p <= max_total; ++p)
    for (std::size_t q = lo; p + q <= max_total; ++q) body(p, q);
}

inline std::string pair_str(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

}  // namespace detail

/// Formula (1): the shuffle product equals the weak-order interval sum.
inline VerifyResult verify_thm_4_1(std::size_t max_degree) {
  VerifyResult r;
  detail::for_grade_pairs(max_degree, false, [&](std::size_t p, std::size_t q) {
    for (const Permutation& sigma : symmetric_group(p))
      for (const Permutation& tau : symmetric_group(q)) {
        ++r.checks;
        if (star(sigma, tau) != star_interval(sigma, tau))
          r.fail("thm4.1 mismatch at " + detail::pair_str(to_string(sigma), to_string(tau)));
      }
  });
  return r;
}

/// Formula (2): the recursive tree product equals the Tamari interval sum.
inline VerifyResult verify_thm_5_1(std::size_t max_degree) {
  VerifyResult r;
  detail::for_grade_pairs(max_degree, false, [&](std::size_t p, std::size_t q) {
    for (const Tree& t : enumerate_trees(static_cast<int>(p)))
      for (const Tree& w : enumerate_trees(static_cast<int>(q))) {
        ++r.checks;
        if (star(t, w) != star_interval(t, w))
          r.fail("thm5.1 mismatch at " + detail::pair_str(to_string(t), to_string(w)));
      }
  });
  return r;
}

/// Formula (3): eps * delta has exactly the terms eps/delta and eps\delta,
/// and the boolean interval between them contains nothing else.
inline VerifyResult verify_thm_6_1(std::size_t max_degree) {
  VerifyResult r;
  detail::for_grade_pairs(max_degree, true, [&](std::size_t p, std::size_t q) {
    for (const SignVector& eps : enumerate_sign_vectors(p))
      for (const SignVector& delta : enumerate_sign_vectors(q)) {
        ++r.checks;
        CubeElement prod = star(eps, delta);
        const SignVector lo = over(eps, delta), hi = under(eps, delta);
        bool good = prod.term_count() == 2 && prod.coefficient(lo) == 1 &&
                    prod.coefficient(hi) == 1;
        if (good) {
          auto iv = cube_interval(lo, hi);
          good = iv.size() == 2;
        }
        if (!good)
          r.fail("thm6.1 mismatch at " + detail::pair_str(to_string(eps), to_string(delta)));
      }
  });
  return r;
}

/// Fibers of psi are exactly the intervals [Min(t), Max(t)] and partition S_n.
inline VerifyResult verify_thm_2_5(std::size_t max_n) {
  VerifyResult r;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::map<Tree, std::set<Permutation>> preimage;
    std::size_t total = 0;
    for (const Permutation& sigma : symmetric_group(n)) {
      preimage[psi(sigma)].insert(sigma);
      ++total;
    }
    std::size_t covered = 0;
    for (const Tree& t : enumerate_trees(static_cast<int>(n))) {
      ++r.checks;
      auto iv = fiber(t);
      std::set<Permutation> via_interval(iv.begin(), iv.end());
      auto it = preimage.find(t);
      if (it == preimage.end() || it->second != via_interval) {
        r.fail("thm2.5 fiber mismatch at tree " + to_string(t));
        continue;
      }
      covered += via_interval.size();
    }
    if (covered != total) r.fail("thm2.5: fibers do not partition S_" + std::to_string(n));
  }
  return r;
}

/// Fibers of phi are exactly the tree intervals [min(eps), max(eps)] and
/// partition Y_n.
inline VerifyResult verify_prop_3_5(std::size_t max_n) {
  VerifyResult r;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::map<SignVector, std::set<Tree>> preimage;
    std::size_t total = 0;
    for (const Tree& t : enumerate_trees(static_cast<int>(n))) {
      preimage[phi(t)].insert(t);
      ++total;
    }
    std::size_t covered = 0;
    for (const SignVector& eps : enumerate_sign_vectors(n)) {
      ++r.checks;
      auto iv = tree_fiber(eps);
      std::set<Tree> via_interval(iv.begin(), iv.end());
      auto it = preimage.find(eps);
      if (it == preimage.end() || it->second != via_interval) {
        r.fail("prop3.5 fiber mismatch at " + to_string(eps));
        continue;
      }
      covered += via_interval.size();
    }
    if (covered != total) r.fail("prop3.5: fibers do not partition Y_" + std::to_string(n));
  }
  return r;
}

namespace detail {

// The three dendriform relations on generic free elements.
template <typename E, typename Prec, typename Succ>
bool dendriform_holds(const E& a, const E& b, const E& c, Prec&& pr, Succ&& su) {
  return pr(pr(a, b), c) == pr(a, pr(b, c)) + pr(a, su(b, c)) &&
         su(a, pr(b, c)) == pr(su(a, b), c) &&
         su(a, su(b, c)) == su(pr(a, b), c) + su(su(a, b), c);
}

template <typename F>
void for_grade_triples(std::size_t max_total, F&& body) {
  for (std::size_t p = 1; p <= max_total; ++p)
    for (std::size_t q = 1; p + q <= max_total; ++q)
      for (std::size_t s = 1; p + q + s <= max_total; ++s) body(p, q, s);
}

}  // namespace detail

/// Dendriform axioms (i)-(iii) on basis triples, in both the permutation
/// and the tree algebra.
inline VerifyResult verify_prop_4_5(std::size_t max_degree) {
  VerifyResult r;
  auto pr_s = [](const PermElement& a, const PermElement& b) { return prec(a, b); };
  auto su_s = [](const PermElement& a, const PermElement& b) { return succ(a, b); };
  auto pr_y = [](const TreeElement& a, const TreeElement& b) { return prec(a, b); };
  auto su_y = [](const TreeElement& a, const TreeElement& b) { return succ(a, b); };
  detail::for_grade_triples(max_degree, [&](std::size_t p, std::size_t q, std::size_t s) {
    for (const Permutation& a : symmetric_group(p))
      for (const Permutation& b : symmetric_group(q))
        for (const Permutation& c : symmetric_group(s)) {
          ++r.checks;
          if (!detail::dendriform_holds(PermElement(a), PermElement(b), PermElement(c), pr_s,
                                        su_s))
            r.fail("prop4.5 fails in Q[S] at (" + to_string(a) + ", " + to_string(b) + ", " +
                   to_string(c) + ")");
        }
    for (const Tree& a : enumerate_trees(static_cast<int>(p)))
      for (const Tree& b : enumerate_trees(static_cast<int>(q)))
        for (const Tree& c : enumerate_trees(static_cast<int>(s))) {
          ++r.checks;
          if (!detail::dendriform_holds(TreeElement(a), TreeElement(b), TreeElement(c), pr_y,
                                        su_y))
            r.fail("prop4.5 fails in Q[Y] at (" + to_string(a) + ", " + to_string(b) + ", " +
                   to_string(c) + ")");
        }
  });
  return r;
}

/// The interval descriptions of prec and succ match the shuffle-subset
/// definitions.
inline VerifyResult verify_prop_4_6(std::size_t max_degree) {
  VerifyResult r;
  detail::for_grade_pairs(max_degree, true, [&](std::size_t p, std::size_t q) {
    for (const Permutation& sigma : symmetric_group(p))
      for (const Permutation& tau : symmetric_group(q)) {
        ++r.checks;
        if (prec(sigma, tau) != prec_interval(sigma, tau) ||
            succ(sigma, tau) != succ_interval(sigma, tau))
          r.fail("prop4.6 mismatch at " + detail::pair_str(to_string(sigma), to_string(tau)));
      }
  });
  return r;
}

/// psi* preserves *, prec and succ; phi* preserves *.
inline VerifyResult verify_prop_5_3(std::size_t max_degree) {
  VerifyResult r;
  detail::for_grade_pairs(max_degree, true, [&](std::size_t p, std::size_t q) {
    for (const Tree& t : enumerate_trees(static_cast<int>(p)))
      for (const Tree& w : enumerate_trees(static_cast<int>(q))) {
        ++r.checks;
        if (psi_star(star(t, w)) != star(psi_star(t), psi_star(w)) ||
            psi_star(prec(t, w)) != prec(psi_star(t), psi_star(w)) ||
            psi_star(succ(t, w)) != succ(psi_star(t), psi_star(w)))
          r.fail("prop5.3 psi* mismatch at " + detail::pair_str(to_string(t), to_string(w)));
      }
    for (const SignVector& eps : enumerate_sign_vectors(p))
      for (const SignVector& delta : enumerate_sign_vectors(q)) {
        ++r.checks;
        if (phi_star(star(eps, delta)) != star(phi_star(eps), phi_star(delta)))
          r.fail("prop5.3 phi* mismatch at " + detail::pair_str(to_string(eps), to_string(delta)));
      }
  });
  return r;
}

/// psi turns over/under of permutations into over/under of trees.
inline VerifyResult verify_thm_2_9(std::size_t max_degree) {
  VerifyResult r;
  detail::for_grade_pairs(max_degree, false, [&](std::size_t p, std::size_t q) {
    for (const Permutation& sigma : symmetric_group(p))
      for (const Permutation& tau : symmetric_group(q)) {
        ++r.checks;
        if (psi(over(sigma, tau)) != over(psi(sigma), psi(tau)) ||
            psi(under(sigma, tau)) != under(psi(sigma), psi(tau)))
          r.fail("thm2.9 mismatch at " + detail::pair_str(to_string(sigma), to_string(tau)));
      }
  });
  return r;
}

namespace detail {

template <CoxeterSystem S>
void check_appendix_instance(const S& sys, const std::string& name, bool uniqueness,
                             VerifyResult& r) {
  const auto carrier = enumerate_elements(sys);
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t bits = 0; bits < (std::size_t{1} << sys.rank()); ++bits) {
    std::vector<std::size_t> J;
    for (std::size_t i = 0; i < sys.rank(); ++i)
      if ((bits >> i) & 1) J.push_back(i);
    subsets.push_back(std::move(J));
  }
  for (const auto& J : subsets) {
    const auto xj = x_j_set(sys, J, carrier);
    const auto wj = parabolic_subgroup(sys, J);
    ++r.checks;
    if (xj.size() * wj.size() != carrier.size()) {
      r.fail("|X_J|*|W_J| != |W| in " + name);
      continue;
    }
    if (uniqueness) {
      // Uniqueness by brute force: exactly one reconstruction per element.
      std::map<typename S::Element, std::size_t> hits;
      for (const auto& x : xj)
        for (const auto& y : wj) ++hits[sys.multiply(x, y)];
      for (const auto& w : carrier) {
        if (hits[w] != 1) r.fail("propA.2 uniqueness fails in " + name);
        auto [x, y] = parabolic_factor(sys, w, J);
        if (sys.multiply(x, y) != w ||
            sys.length(x) + sys.length(y) != sys.length(w))
          r.fail("propA.2 factorization fails in " + name);
      }
    } else {
      // Lower-set identity: X_J = { w : w <= x_J^0 } in the weak order.
      const auto x0 = x_j_0(sys, J, carrier);
      std::set<typename S::Element> expect(xj.begin(), xj.end());
      std::set<typename S::Element> below;
      for (const auto& w : carrier)
        if (weak_leq(sys, w, x0)) below.insert(w);
      if (expect != below) r.fail("corA.4 fails in " + name);
    }
  }
}

template <typename F>
void for_appendix_instances(std::size_t max_n, F&& body) {
  for (std::size_t n = 2; n <= max_n; ++n) body(SymmetricSystem(n), "S_" + std::to_string(n));
  body(SignedPermutationSystem(3), std::string("B_3"));
  for (int m = 2; m <= 12; ++m) body(DihedralSystem(m), "I2(" + std::to_string(m) + ")");
}

}  // namespace detail

/// propA.2 suite: unique parabolic factorization on every instance and J.
inline VerifyResult verify_prop_a_2(std::size_t max_n) {
  VerifyResult r;
  detail::for_appendix_instances(max_n, [&](const auto& sys, const std::string& name) {
    detail::check_appendix_instance(sys, name, true, r);
  });
  return r;
}

/// corA.4 suite: X_J is the weak-order lower set of its longest element.
inline VerifyResult verify_cor_a_4(std::size_t max_n) {
  VerifyResult r;
  detail::for_appendix_instances(max_n, [&](const auto& sys, const std::string& name) {
    detail::check_appendix_instance(sys, name, false, r);
  });
  return r;
}

/// The small structural lemmas of the permutation section.
inline VerifyResult verify_lemmas(std::size_t max_degree) {
  VerifyResult r;
  const std::size_t d = max_degree;

  // Sh(p,q) is the weak-order lower set of xi_{p,q}.
  detail::for_grade_pairs(d + 1, true, [&](std::size_t p, std::size_t q) {
    ++r.checks;
    const auto sh = shuffles(p, q);
    std::set<Permutation> expect(sh.begin(), sh.end());
    std::set<Permutation> below;
    const Permutation top = xi(p, q);
    for (const Permutation& w : symmetric_group(p + q))
      if (leq_weak(w, top)) below.insert(w);
    if (expect != below) r.fail("shuffle lower-set identity fails at p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
    if (length(top) != p * q) r.fail("length(xi) != p*q");
  });

  // Direct product and grafting are monotone in both arguments.
  const std::size_t small = std::min<std::size_t>(3, d / 2);
  for (std::size_t p = 1; p <= small; ++p)
    for (std::size_t q = 1; q <= small; ++q)
      for (const Permutation& s1 : symmetric_group(p))
        for (const Permutation& s2 : symmetric_group(p)) {
          if (!leq_weak(s1, s2)) continue;
          for (const Permutation& t1 : symmetric_group(q))
            for (const Permutation& t2 : symmetric_group(q)) {
              if (!leq_weak(t1, t2)) continue;
              ++r.checks;
              if (!leq_weak(direct_product(s1, t1), direct_product(s2, t2)))
                r.fail("direct product is not monotone");
              if (!leq_weak(graft(s1, t1), graft(s2, t2))) r.fail("grafting is not monotone");
            }
        }

  // Right multiplication by sigma x tau is strictly monotone on shuffles.
  detail::for_grade_pairs(d >= 1 ? d - 1 : 0, true, [&](std::size_t p, std::size_t q) {
    const auto sh = shuffles(p, q);
    for (const Permutation& sigma : symmetric_group(p))
      for (const Permutation& tau : symmetric_group(q)) {
        const Permutation block = direct_product(sigma, tau);
        for (const Permutation& w1 : sh)
          for (const Permutation& w2 : sh) {
            if (w1 == w2 || !leq_weak(w1, w2)) continue;
            ++r.checks;
            const Permutation a = compose(w1, block), b = compose(w2, block);
            if (!(leq_weak(a, b) && a != b)) r.fail("shuffle translation is not strictly monotone");
          }
      }
  });

  // The xi identity behind associativity of under.
  for (std::size_t p = 1; p + 2 <= d + 3; ++p)
    for (std::size_t q = 1; p + q + 1 <= d + 3; ++q)
      for (std::size_t s = 1; p + q + s <= d + 3; ++s) {
        ++r.checks;
        const Permutation lhs = compose(xi(p + q, s), direct_product(xi(p, q), Permutation::identity(s)));
        const Permutation rhs = compose(xi(p, q + s), direct_product(Permutation::identity(p), xi(q, s)));
        if (lhs != rhs) r.fail("xi identity fails");
      }

  // Identity (2.6.1): (tau x 1_2).s_{m+1}..s_1 = s_{m+1}..s_1.(1_1 x tau x 1_1).
  for (std::size_t m = 0; m + 1 <= d; ++m) {
    Permutation chain = Permutation::identity(m + 2);
    for (std::size_t i = m + 1; i >= 1; --i) chain = compose(chain, transposition(i, m + 2));
    for (const Permutation& tau : symmetric_group(m)) {
      ++r.checks;
      const Permutation lhs =
          compose(direct_product(tau, Permutation::identity(2)), chain);
      const Permutation rhs = compose(
          chain, direct_product(Permutation::identity(1),
                                direct_product(tau, Permutation::identity(1))));
      if (lhs != rhs) r.fail("identity (2.6.1) fails at m=" + std::to_string(m));
    }
  }

  // Shuffle associativity as a set identity.
  detail::for_grade_triples(d, [&](std::size_t p, std::size_t q, std::size_t s) {
    ++r.checks;
    std::set<Permutation> lhs, rhs;
    for (const Permutation& a : shuffles(p, q + s))
      for (const Permutation& b : shuffles(q, s))
        lhs.insert(compose(a, direct_product(Permutation::identity(p), b)));
    for (const Permutation& a : shuffles(p + q, s))
      for (const Permutation& b : shuffles(p, q))
        rhs.insert(compose(a, direct_product(b, Permutation::identity(s))));
    if (lhs != rhs) r.fail("shuffle associativity set identity fails");
  });

  // The maximum-splitting triple (gamma, left, right) is unique.
  for (std::size_t n = 1; n <= d; ++n)
    for (const Permutation& sigma : symmetric_group(n)) {
      ++r.checks;
      std::size_t hits = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        if (sigma(static_cast<int>(i)) != static_cast<int>(n)) continue;
        for (const Permutation& gamma : shuffles(i - 1, n - i))
          for (const Permutation& l : symmetric_group(i - 1))
            for (const Permutation& rt : symmetric_group(n - i))
              if (compose(direct_product(gamma, Permutation::identity(1)), graft(l, rt)) ==
                  sigma)
                ++hits;
      }
      MaxDecomposition dec = decompose_max(sigma);
      if (hits != 1 ||
          compose(direct_product(dec.gamma, Permutation::identity(1)),
                  graft(dec.left, dec.right)) != sigma)
        r.fail("maximum-splitting uniqueness fails at " + to_string(sigma));
    }

  return r;
}

/// Structural counts: shuffle binomials, Catalan numbers, length of xi.
inline VerifyResult verify_counts(std::size_t max_shuffle_degree, std::size_t max_catalan) {
  VerifyResult r;
  // Pascal-triangle oracle.
  std::vector<std::vector<Coefficient>> binom(max_shuffle_degree + 1);
  for (std::size_t i = 0; i <= max_shuffle_degree; ++i) {
    binom[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  detail::for_grade_pairs(max_shuffle_degree, false, [&](std::size_t p, std::size_t q) {
    ++r.checks;
    if (Coefficient(shuffles(p, q).size()) != binom[p + q][p])
      r.fail("|Sh(p,q)| != C(p+q,p)");
    if (length(xi(p, q)) != p * q) r.fail("length(xi) != p*q");
  });
  // Catalan via the closed form (2n)!/(n!(n+1)!), exactly.
  for (std::size_t n = 0; n <= max_catalan; ++n) {
    ++r.checks;
    Coefficient num = 1, den = 1;
    for (std::size_t k = 1; k <= 2 * n; ++k) num *= static_cast<unsigned>(k);
    for (std::size_t k = 1; k <= n; ++k) den *= static_cast<unsigned>(k);
    for (std::size_t k = 1; k <= n + 1; ++k) den *= static_cast<unsigned>(k);
    if (Coefficient(enumerate_trees(static_cast<int>(n)).size()) != num / den)
      r.fail("|Y_n| != Catalan(n) at n=" + std::to_string(n));
  }
  return r;
}

/// The worked splitting of 341625 into relabelled parts 231 and 12.
inline VerifyResult verify_worked_example() {
  VerifyResult r;
  ++r.checks;
  const Permutation sigma = parse_permutation("3 4 1 6 2 5");
  MaxDecomposition d = decompose_max(sigma);
  if (d.left != parse_permutation("2 3 1") || d.right != parse_permutation("1 2"))
    r.fail("decompose_max(341625) does not give (231) and (12)");
  if (psi(sigma) != graft(psi(d.left), psi(d.right)))
    r.fail("psi(341625) is not the graft of the part images");
  return r;
}

/// Named suite lookup for the CLI; returns false for an unknown name.
inline bool run_suite(const std::string& name, std::size_t max_degree, VerifyResult& out) {
  if (name == "thm4.1") out = verify_thm_4_1(max_degree);
  else if (name == "thm5.1") out = verify_thm_5_1(max_degree);
  else if (name == "thm6.1") out = verify_thm_6_1(max_degree);
  else if (name == "thm2.5") out = verify_thm_2_5(max_degree);
  else if (name == "thm2.9") out = verify_thm_2_9(max_degree);
  else if (name == "prop3.5") out = verify_prop_3_5(max_degree);
  else if (name == "prop4.5") out = verify_prop_4_5(max_degree);
  else if (name == "prop4.6") out = verify_prop_4_6(max_degree);
  else if (name == "prop5.3") out = verify_prop_5_3(max_degree);
  else if (name == "propA.2") out = verify_prop_a_2(std::min<std::size_t>(max_degree, 5));
  else if (name == "corA.4") out = verify_cor_a_4(std::min<std::size_t>(max_degree, 5));
  else if (name == "lemmas") out = verify_lemmas(max_degree);
  else return false;
  return true;
}

}  // namespace ordalg
