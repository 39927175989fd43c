#pragma once

#include <stdexcept>

#include "ordalg/cube.hpp"
#include "ordalg/free_module.hpp"
#include "ordalg/permutation.hpp"
#include "ordalg/tree.hpp"

namespace ordalg {

using PermElement = FreeElement<Permutation>;
using TreeElement = FreeElement<Tree>;
using CubeElement = FreeElement<SignVector>;

// ---- permutations ----

/// Shuffle product: sigma * tau = sum over x in Sh(p,q) of x.(sigma x tau).
inline PermElement star(const Permutation& sigma, const Permutation& tau) {
  PermElement out;
  const Permutation block = direct_product(sigma, tau);
  for (const Permutation& x : shuffles(sigma.grade(), tau.grade()))
    out.add_term(compose(x, block), 1);
  return out;
}

/// The same product through the order: sum over [sigma/tau, sigma\tau].
inline PermElement star_interval(const Permutation& sigma, const Permutation& tau) {
  return sum_of<Permutation>(interval(over(sigma, tau), under(sigma, tau)));
}

namespace detail {
inline void require_augmentation(std::size_t p, std::size_t q, const char* op) {
  if (p == 0 || q == 0)
    throw std::invalid_argument(std::string(op) + ": grade-0 argument outside the augmentation ideal");
}
}  // namespace detail

/// sigma < tau: sum over the shuffles sending p to p+q.
inline PermElement prec(const Permutation& sigma, const Permutation& tau) {
  detail::require_augmentation(sigma.grade(), tau.grade(), "prec");
  PermElement out;
  const std::size_t p = sigma.grade(), q = tau.grade();
  const Permutation block = direct_product(sigma, tau);
  for (const Permutation& x : shuffles(p, q))
    if (x.word()[p - 1] == static_cast<int>(p + q)) out.add_term(compose(x, block), 1);
  return out;
}

/// sigma > tau: sum over the shuffles fixing p+q.
inline PermElement succ(const Permutation& sigma, const Permutation& tau) {
  detail::require_augmentation(sigma.grade(), tau.grade(), "succ");
  PermElement out;
  const std::size_t p = sigma.grade(), q = tau.grade();
  const Permutation block = direct_product(sigma, tau);
  for (const Permutation& x : shuffles(p, q))
    if (x.word()[p + q - 1] == static_cast<int>(p + q)) out.add_term(compose(x, block), 1);
  return out;
}

/// Interval form of prec: [ (1_{p-1} v 1_q).(sigma x tau), sigma\tau ].
inline PermElement prec_interval(const Permutation& sigma, const Permutation& tau) {
  detail::require_augmentation(sigma.grade(), tau.grade(), "prec_interval");
  const std::size_t p = sigma.grade(), q = tau.grade();
  const Permutation block = direct_product(sigma, tau);
  const Permutation low = compose(
      graft(Permutation::identity(p - 1), Permutation::identity(q)), block);
  return sum_of<Permutation>(interval(low, under(sigma, tau)));
}

/// Interval form of succ: [ sigma/tau, (xi_{p,q-1} x 1_1).(sigma x tau) ].
inline PermElement succ_interval(const Permutation& sigma, const Permutation& tau) {
  detail::require_augmentation(sigma.grade(), tau.grade(), "succ_interval");
  const std::size_t p = sigma.grade(), q = tau.grade();
  const Permutation block = direct_product(sigma, tau);
  const Permutation high =
      compose(direct_product(xi(p, q - 1), Permutation::identity(1)), block);
  return sum_of<Permutation>(interval(block, high));
}

// ---- trees ----

namespace detail {
inline TreeElement graft_each_right(const TreeElement& sum, const Tree& r) {
  TreeElement out;
  for (const auto& [u, c] : sum.terms()) out.add_term(graft(u, r), c);
  return out;
}
inline TreeElement graft_each_left(const Tree& l, const TreeElement& sum) {
  TreeElement out;
  for (const auto& [u, c] : sum.terms()) out.add_term(graft(l, u), c);
  return out;
}
}  // namespace detail

/// Recursive product: t*w = (t*w^l) v w^r + t^l v (t^r*w), unit the leaf.
inline TreeElement star(const Tree& t, const Tree& w) {
  if (t.is_leaf()) return TreeElement(w);
  if (w.is_leaf()) return TreeElement(t);
  return detail::graft_each_right(star(t, w.left()), w.right()) +
         detail::graft_each_left(t.left(), star(t.right(), w));
}

/// The same product through the order: sum over [t/w, t\w].
inline TreeElement star_interval(const Tree& t, const Tree& w) {
  return sum_of<Tree>(tree_interval(over(t, w), under(t, w)));
}

/// t < w = t^l v (t^r * w).
inline TreeElement prec(const Tree& t, const Tree& w) {
  detail::require_augmentation(static_cast<std::size_t>(t.grade()),
                               static_cast<std::size_t>(w.grade()), "prec");
  return detail::graft_each_left(t.left(), star(t.right(), w));
}

/// t > w = (t * w^l) v w^r.
inline TreeElement succ(const Tree& t, const Tree& w) {
  detail::require_augmentation(static_cast<std::size_t>(t.grade()),
                               static_cast<std::size_t>(w.grade()), "succ");
  return detail::graft_each_right(star(t, w.left()), w.right());
}

// ---- cube vertices ----

/// eps * delta = eps/delta + eps\delta; there is nothing in between.
inline CubeElement star(const SignVector& eps, const SignVector& delta) {
  CubeElement out;
  out.add_term(over(eps, delta), 1);
  out.add_term(under(eps, delta), 1);
  return out;
}

// ---- embeddings ----

/// psi*: sum of the psi-fiber of t; extends to an algebra embedding.
inline PermElement psi_star(const Tree& t) {
  if (t.grade() == 0) return PermElement(Permutation());
  return sum_of<Permutation>(fiber(t));
}

inline PermElement psi_star(const TreeElement& e) {
  PermElement out;
  for (const auto& [t, c] : e.terms()) {
    PermElement f = psi_star(t);
    f *= c;
    out += f;
  }
  return out;
}

/// phi*: sum of the phi-fiber of eps, computed as a tree interval.
inline TreeElement phi_star(const SignVector& eps) {
  return sum_of<Tree>(tree_fiber(eps));
}

inline TreeElement phi_star(const CubeElement& e) {
  TreeElement out;
  for (const auto& [eps, c] : e.terms()) {
    TreeElement f = phi_star(eps);
    f *= c;
    out += f;
  }
  return out;
}

// FreeElement-level products, linearly extended.

inline PermElement star(const PermElement& a, const PermElement& b) {
  return bilinear_extend<Permutation>(
      [](const Permutation& x, const Permutation& y) { return star(x, y); }, a, b);
}
inline PermElement prec(const PermElement& a, const PermElement& b) {
  return bilinear_extend<Permutation>(
      [](const Permutation& x, const Permutation& y) { return prec(x, y); }, a, b);
}
inline PermElement succ(const PermElement& a, const PermElement& b) {
  return bilinear_extend<Permutation>(
      [](const Permutation& x, const Permutation& y) { return succ(x, y); }, a, b);
}
inline TreeElement star(const TreeElement& a, const TreeElement& b) {
  return bilinear_extend<Tree>([](const Tree& x, const Tree& y) { return star(x, y); }, a, b);
}
inline TreeElement prec(const TreeElement& a, const TreeElement& b) {
  return bilinear_extend<Tree>([](const Tree& x, const Tree& y) { return prec(x, y); }, a, b);
}
inline TreeElement succ(const TreeElement& a, const TreeElement& b) {
  return bilinear_extend<Tree>([](const Tree& x, const Tree& y) { return succ(x, y); }, a, b);
}
inline CubeElement star(const CubeElement& a, const CubeElement& b) {
  return bilinear_extend<SignVector>(
      [](const SignVector& x, const SignVector& y) { return star(x, y); }, a, b);
}

}  // namespace ordalg
