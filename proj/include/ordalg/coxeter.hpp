#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordalg/permutation.hpp"

namespace ordalg {

/// A finite Coxeter system: generators as elements, group law, length.
/// The generic algorithms below use nothing else.
template <typename S>
concept CoxeterSystem = requires(const S& sys, const typename S::Element& a,
                                 const typename S::Element& b, std::size_t i) {
  { sys.rank() } -> std::convertible_to<std::size_t>;
  { sys.unit() } -> std::convertible_to<typename S::Element>;
  { sys.generator(i) } -> std::convertible_to<typename S::Element>;
  { sys.multiply(a, b) } -> std::convertible_to<typename S::Element>;
  { sys.inverse(a) } -> std::convertible_to<typename S::Element>;
  { sys.length(a) } -> std::convertible_to<std::size_t>;
};

/// Full carrier, by breadth-first closure from the unit.
template <CoxeterSystem S>
std::vector<typename S::Element> enumerate_elements(const S& sys) {
  std::set<typename S::Element> seen{sys.unit()};
  std::vector<typename S::Element> frontier{sys.unit()};
  while (!frontier.empty()) {
    std::vector<typename S::Element> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < sys.rank(); ++i) {
        auto ws = sys.multiply(w, sys.generator(i));
        if (seen.insert(ws).second) next.push_back(std::move(ws));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// X_J: elements with no descent in J (right multiplication by any s in J
/// raises the length).
template <CoxeterSystem S>
std::vector<typename S::Element> x_j_set(const S& sys, const std::vector<std::size_t>& J,
                                         const std::vector<typename S::Element>& carrier) {
  std::vector<typename S::Element> out;
  for (const auto& w : carrier) {
    bool ok = true;
    for (std::size_t j : J)
      if (sys.length(sys.multiply(w, sys.generator(j))) <= sys.length(w)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
  }
  return out;
}

/// Unique factorization w = x.y with x in X_J and y in W_J; strips right
/// descents lying in J.
template <CoxeterSystem S>
std::pair<typename S::Element, typename S::Element> parabolic_factor(
    const S& sys, const typename S::Element& w, const std::vector<std::size_t>& J) {
  typename S::Element x = w;
  typename S::Element y = sys.unit();
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t j : J) {
      auto s = sys.generator(j);
      if (sys.length(sys.multiply(x, s)) < sys.length(x)) {
        x = sys.multiply(x, s);
        y = sys.multiply(s, y);
        moved = true;
        break;
      }
    }
  }
  return {std::move(x), std::move(y)};
}

/// Weak Bruhat order: a <= b iff b = y.a with lengths adding.
template <CoxeterSystem S>
bool weak_leq(const S& sys, const typename S::Element& a, const typename S::Element& b) {
  return sys.length(sys.multiply(b, sys.inverse(a))) + sys.length(a) == sys.length(b);
}

/// The unique maximal-length element.
template <CoxeterSystem S>
typename S::Element longest_element(const S& sys,
                                    const std::vector<typename S::Element>& carrier) {
  const typename S::Element* best = nullptr;
  std::size_t count = 0;
  for (const auto& w : carrier) {
    if (!best || sys.length(w) > sys.length(*best)) {
      best = &w;
      count = 1;
    } else if (sys.length(w) == sys.length(*best)) {
      ++count;
    }
  }
  if (!best || count != 1) throw std::logic_error("longest_element: not unique");
  return *best;
}

/// The parabolic subgroup W_J, by closure from the unit inside J.
template <CoxeterSystem S>
std::vector<typename S::Element> parabolic_subgroup(const S& sys,
                                                    const std::vector<std::size_t>& J) {
  std::set<typename S::Element> seen{sys.unit()};
  std::vector<typename S::Element> frontier{sys.unit()};
  while (!frontier.empty()) {
    std::vector<typename S::Element> next;
    for (const auto& w : frontier)
      for (std::size_t j : J) {
        auto ws = sys.multiply(w, sys.generator(j));
        if (seen.insert(ws).second) next.push_back(std::move(ws));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Longest element of X_J: the shuffle factor of w^0 = x_J^0 . w_J^0.
template <CoxeterSystem S>
typename S::Element x_j_0(const S& sys, const std::vector<std::size_t>& J,
                          const std::vector<typename S::Element>& carrier) {
  return parabolic_factor(sys, longest_element(sys, carrier), J).first;
}

/// Longest element of W_J: the parabolic factor of w^0.
template <CoxeterSystem S>
typename S::Element w_j_0(const S& sys, const std::vector<std::size_t>& J,
                          const std::vector<typename S::Element>& carrier) {
  return parabolic_factor(sys, longest_element(sys, carrier), J).second;
}

// ---- type A: the symmetric group, reusing Permutation ----

class SymmetricSystem {
 public:
  using Element = Permutation;

  explicit SymmetricSystem(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("SymmetricSystem: n must be >= 1");
  }

  std::size_t rank() const { return n_ - 1; }
  Element unit() const { return Permutation::identity(n_); }
  Element generator(std::size_t i) const { return transposition(i + 1, n_); }
  Element multiply(const Element& a, const Element& b) const { return compose(a, b); }
  Element inverse(const Element& a) const { return ordalg::inverse(a); }
  std::size_t length(const Element& a) const { return ordalg::length(a); }

 private:
  std::size_t n_;
};

// ---- type B: signed permutations ----

/// Element of B_n: a word of n values with distinct absolute values 1..n,
/// each carrying a sign.  Generator 0 flips the sign in position 1;
/// generators i >= 1 swap positions i, i+1.
class SignedPermutationSystem {
 public:
  using Element = std::vector<int>;

  explicit SignedPermutationSystem(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("SignedPermutationSystem: n must be >= 1");
  }

  std::size_t rank() const { return n_; }

  Element unit() const {
    Element e(n_);
    std::iota(e.begin(), e.end(), 1);
    return e;
  }

  Element generator(std::size_t i) const {
    Element e = unit();
    if (i == 0) e[0] = -1;
    else std::swap(e[i - 1], e[i]);
    return e;
  }

  Element multiply(const Element& a, const Element& b) const {
    Element c(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      int v = b[i];
      c[i] = v > 0 ? a[static_cast<std::size_t>(v) - 1] : -a[static_cast<std::size_t>(-v) - 1];
    }
    return c;
  }

  Element inverse(const Element& a) const {
    Element c(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      int v = a[i];
      if (v > 0) c[static_cast<std::size_t>(v) - 1] = static_cast<int>(i) + 1;
      else c[static_cast<std::size_t>(-v) - 1] = -(static_cast<int>(i) + 1);
    }
    return c;
  }

  /// inv(w) on the signed values plus the sum of the flipped values.
  std::size_t length(const Element& a) const {
    std::size_t l = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j)
        if (a[i] > a[j]) ++l;
      if (a[i] < 0) l += static_cast<std::size_t>(-a[i]);
    }
    return l;
  }

 private:
  std::size_t n_;
};

// ---- dihedral I2(m) ----

/// Element (k, reflected): rotation r^k, or r^k followed by the base
/// reflection.  Generators are the reflections s = (0,1) and rs = (1,1);
/// their product has order m.
class DihedralSystem {
 public:
  struct Element {
    int rotation = 0;
    bool reflected = false;
    friend bool operator==(const Element&, const Element&) = default;
    friend std::strong_ordering operator<=>(const Element&, const Element&) = default;
  };

  explicit DihedralSystem(int m) : m_(m) {
    if (m < 2) throw std::invalid_argument("DihedralSystem: m must be >= 2");
  }

  std::size_t rank() const { return 2; }
  Element unit() const { return {0, false}; }
  Element generator(std::size_t i) const { return {i == 0 ? 0 : 1, true}; }

  Element multiply(const Element& a, const Element& b) const {
    int rot = a.rotation + (a.reflected ? -b.rotation : b.rotation);
    rot %= m_;
    if (rot < 0) rot += m_;
    return {rot, a.reflected != b.reflected};
  }

  Element inverse(const Element& a) const {
    if (a.reflected) return a;
    return {a.rotation == 0 ? 0 : m_ - a.rotation, false};
  }

  /// Closed-form word length of the alternating normal form.
  std::size_t length(const Element& a) const {
    const int k = a.rotation;
    if (!a.reflected) return static_cast<std::size_t>(std::min(2 * k, 2 * (m_ - k)));
    if (k == 0) return 1;
    return static_cast<std::size_t>(std::min(2 * k - 1, 2 * (m_ - k) + 1));
  }

 private:
  int m_;
};

}  // namespace ordalg
