#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordalg/tree.hpp"

namespace ordalg {

/// Vertex of the (n-1)-cube: a sequence of n-1 signs; grade 1 is the empty
/// sequence.
class SignVector {
 public:
  SignVector() = default;  // grade 1

  explicit SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
      if (s != -1 && s != 1) throw std::invalid_argument("SignVector: entries must be +-1");
  }

  static SignVector constant(int sign, std::size_t grade) {
    if (grade == 0) throw std::invalid_argument("SignVector: grade must be >= 1");
    return SignVector(std::vector<int>(grade - 1, sign));
  }

  std::size_t grade() const { return signs_.size() + 1; }
  const std::vector<int>& signs() const { return signs_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) {
    if (a.grade() != b.grade()) return a.grade() <=> b.grade();
    // Entrywise with -1 < +1, so term order refines the boolean order.
    for (std::size_t i = 0; i < a.signs_.size(); ++i)
      if (a.signs_[i] != b.signs_[i]) return a.signs_[i] <=> b.signs_[i];
    return std::strong_ordering::equal;
  }

 private:
  std::vector<int> signs_;
};

/// Componentwise order with -1 < +1.
inline bool leq_cube(const SignVector& eps, const SignVector& eta) {
  if (eps.grade() != eta.grade()) throw std::invalid_argument("leq_cube: grade mismatch");
  for (std::size_t i = 0; i < eps.signs().size(); ++i)
    if (eps.signs()[i] > eta.signs()[i]) return false;
  return true;
}

/// eps v eta: concatenation with (-1,+1) inserted.
inline SignVector graft(const SignVector& eps, const SignVector& eta) {
  std::vector<int> s = eps.signs();
  s.push_back(-1);
  s.push_back(+1);
  s.insert(s.end(), eta.signs().begin(), eta.signs().end());
  return SignVector(std::move(s));
}

inline SignVector over(const SignVector& eps, const SignVector& eta) {
  std::vector<int> s = eps.signs();
  s.push_back(-1);
  s.insert(s.end(), eta.signs().begin(), eta.signs().end());
  return SignVector(std::move(s));
}

inline SignVector under(const SignVector& eps, const SignVector& eta) {
  std::vector<int> s = eps.signs();
  s.push_back(+1);
  s.insert(s.end(), eta.signs().begin(), eta.signs().end());
  return SignVector(std::move(s));
}

inline std::vector<SignVector> enumerate_sign_vectors(std::size_t grade) {
  if (grade == 0) throw std::invalid_argument("enumerate_sign_vectors: grade must be >= 1");
  const std::size_t k = grade - 1;
  std::vector<SignVector> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
    std::vector<int> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = (bits >> i) & 1 ? -1 : +1;
    out.emplace_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Interval [eps, eta] in the boolean order.
inline std::vector<SignVector> cube_interval(const SignVector& eps, const SignVector& eta) {
  if (eps.grade() != eta.grade()) throw std::invalid_argument("cube_interval: grade mismatch");
  if (!leq_cube(eps, eta)) return {};
  std::vector<std::size_t> free_pos;
  for (std::size_t i = 0; i < eps.signs().size(); ++i)
    if (eps.signs()[i] < eta.signs()[i]) free_pos.push_back(i);
  std::vector<SignVector> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << free_pos.size()); ++bits) {
    std::vector<int> s = eps.signs();
    for (std::size_t i = 0; i < free_pos.size(); ++i)
      if ((bits >> i) & 1) s[free_pos[i]] = +1;
    out.emplace_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
// Leaves numbered left to right; a right child slants SW-NE (-1), a left
// child SE-NW (+1).  The two extreme leaves are skipped.
inline void leaf_orientations(const Tree& t, bool is_right_child, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(is_right_child ? -1 : +1);
    return;
  }
  leaf_orientations(t.left(), false, out);
  leaf_orientations(t.right(), true, out);
}
}  // namespace detail

/// phi: record the orientation of each interior leaf.
inline SignVector phi(const Tree& t) {
  if (t.grade() == 0) throw std::invalid_argument("phi: grade 0 tree has no sign vector");
  std::vector<int> leaves;
  detail::leaf_orientations(t, false, leaves);
  return SignVector({leaves.begin() + 1, leaves.end() - 1});
}

namespace detail {
inline std::size_t leading_run(const std::vector<int>& s, int sign) {
  std::size_t j = 0;
  while (j < s.size() && s[j] == sign) ++j;
  return j;
}
}  // namespace detail

/// Minimal tree of the phi-fiber of eps: peel the leading sign run and
/// recurse through over.
inline Tree min_tree(const SignVector& eps) {
  const auto& s = eps.signs();
  if (s.empty()) return left_comb(1);
  if (s[0] == -1) {
    std::size_t k = detail::leading_run(s, -1);
    if (k == s.size()) return left_comb(static_cast<int>(eps.grade()));
    return over(left_comb(static_cast<int>(k)),
                min_tree(SignVector({s.begin() + static_cast<long>(k), s.end()})));
  }
  std::size_t run = detail::leading_run(s, +1);
  if (run == s.size()) return right_comb(static_cast<int>(eps.grade()));
  std::size_t k = run + 1;  // the run plus the -1 swallowed by over
  return over(right_comb(static_cast<int>(k)),
              min_tree(SignVector({s.begin() + static_cast<long>(k), s.end()})));
}

/// Maximal tree of the phi-fiber of eps: peel the trailing sign run and
/// recurse through under.
inline Tree max_tree(const SignVector& eps) {
  const auto& s = eps.signs();
  if (s.empty()) return left_comb(1);
  if (s.back() == +1) {
    std::size_t k = 0;
    while (k < s.size() && s[s.size() - 1 - k] == +1) ++k;
    if (k == s.size()) return right_comb(static_cast<int>(eps.grade()));
    return under(max_tree(SignVector({s.begin(), s.end() - static_cast<long>(k)})),
                 right_comb(static_cast<int>(k)));
  }
  std::size_t run = 0;
  while (run < s.size() && s[s.size() - 1 - run] == -1) ++run;
  if (run == s.size()) return left_comb(static_cast<int>(eps.grade()));
  std::size_t k = run + 1;  // the run plus the +1 swallowed by under
  return under(max_tree(SignVector({s.begin(), s.end() - static_cast<long>(k)})),
               left_comb(static_cast<int>(k)));
}

/// The phi-fiber of eps, as the tree interval [min_tree, max_tree].
inline std::vector<Tree> tree_fiber(const SignVector& eps) {
  return tree_interval(min_tree(eps), max_tree(eps));
}

inline std::string to_string(const SignVector& eps) {
  std::string s;
  for (int v : eps.signs()) s += v > 0 ? '+' : '-';
  return s;
}

/// Format: string over '+'/'-'; the empty string is the grade-1 vertex.
inline SignVector parse_sign_vector(const std::string& text) {
  std::vector<int> s;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == '+') s.push_back(+1);
    else if (c == '-') s.push_back(-1);
    else throw std::invalid_argument("parse_sign_vector: bad character in '" + text + "'");
  }
  return SignVector(std::move(s));
}

}  // namespace ordalg
