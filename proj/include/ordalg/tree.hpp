#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordalg/permutation.hpp"

namespace ordalg {

namespace detail {
struct TreeNode;
}

/// Planar binary tree: a leaf, or an ordered pair of subtrees joined at a
/// new root.  Grade = number of internal nodes.  Shared immutable
/// structure, value semantics.
class Tree {
 public:
  Tree() = default;  // leaf
  inline Tree(const Tree& left, const Tree& right);

  bool is_leaf() const { return node_ == nullptr; }
  inline int grade() const;
  inline const Tree& left() const;
  inline const Tree& right() const;

  friend bool operator==(const Tree& a, const Tree& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  std::shared_ptr<const detail::TreeNode> node_;
  static inline int compare(const Tree& a, const Tree& b);
};

namespace detail {
struct TreeNode {
  Tree l, r;
  int grade;
};
}  // namespace detail

inline Tree::Tree(const Tree& left, const Tree& right)
    : node_(std::make_shared<const detail::TreeNode>(
          detail::TreeNode{left, right, left.grade() + right.grade() + 1})) {}

inline int Tree::grade() const { return node_ ? node_->grade : 0; }

inline const Tree& Tree::left() const {
  if (!node_) throw std::invalid_argument("Tree::left on a leaf");
  return node_->l;
}

inline const Tree& Tree::right() const {
  if (!node_) throw std::invalid_argument("Tree::right on a leaf");
  return node_->r;
}

// Grade first, then lexicographic on the serialized form "|"/"(L,R)".
// '(' < '|' in ASCII, so structural comparison with nodes before leaves
// matches the string order.
inline int Tree::compare(const Tree& a, const Tree& b) {
  if (a.grade() != b.grade()) return a.grade() < b.grade() ? -1 : 1;
  if (a.node_ == b.node_) return 0;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() ? (b.is_leaf() ? 0 : 1) : -1;
  if (int c = compare(a.left(), b.left()); c != 0) return c;
  return compare(a.right(), b.right());
}

inline Tree graft(const Tree& u, const Tree& v) { return Tree(u, v); }

inline std::string to_string(const Tree& t) {
  if (t.is_leaf()) return "|";
  return "(" + to_string(t.left()) + "," + to_string(t.right()) + ")";
}

namespace detail {
inline Tree parse_tree_at(const std::string& s, std::size_t& i) {
  auto skip = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip();
  if (i >= s.size()) throw std::invalid_argument("parse_tree: unexpected end of input");
  if (s[i] == '|') {
    ++i;
    return Tree();
  }
  if (s[i] != '(') throw std::invalid_argument("parse_tree: expected '|' or '('");
  ++i;
  Tree l = parse_tree_at(s, i);
  skip();
  if (i >= s.size() || s[i] != ',') throw std::invalid_argument("parse_tree: expected ','");
  ++i;
  Tree r = parse_tree_at(s, i);
  skip();
  if (i >= s.size() || s[i] != ')') throw std::invalid_argument("parse_tree: expected ')'");
  ++i;
  return graft(l, r);
}
}  // namespace detail

/// Grammar: T ::= "|" | "(" T "," T ")", whitespace-insensitive.
inline Tree parse_tree(const std::string& text) {
  std::size_t i = 0;
  Tree t = detail::parse_tree_at(text, i);
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  if (i != text.size()) throw std::invalid_argument("parse_tree: trailing input");
  return t;
}

/// All trees of grade n, in serialization order.
inline const std::vector<Tree>& enumerate_trees(int n) {
  static std::map<int, std::vector<Tree>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Fill grades 0..n bottom up; Y_n = |_| Y_i x Y_{n-1-i}.
  for (int g = 0; g <= n; ++g) {
    if (cache.contains(g)) continue;
    std::vector<Tree> out;
    if (g == 0) {
      out.emplace_back();
    } else {
      for (int i = 0; i < g; ++i)
        for (const Tree& l : cache.at(i))
          for (const Tree& r : cache.at(g - 1 - i)) out.push_back(graft(l, r));
      std::sort(out.begin(), out.end());
    }
    cache.emplace(g, std::move(out));
  }
  return cache.at(n);
}

/// Left comb of grade n: every interior leaf is a right child.
inline Tree left_comb(int n) {
  Tree t;
  for (int i = 0; i < n; ++i) t = graft(t, Tree());
  return t;
}

/// Right comb of grade n: every interior leaf is a left child.
inline Tree right_comb(int n) {
  Tree t;
  for (int i = 0; i < n; ++i) t = graft(Tree(), t);
  return t;
}

/// u/v: identify the root of u with the leftmost leaf of v.
inline Tree over(const Tree& u, const Tree& v) {
  if (v.is_leaf()) return u;
  return graft(over(u, v.left()), v.right());
}

/// u\v: identify the rightmost leaf of u with the root of v.
inline Tree under(const Tree& u, const Tree& v) {
  if (u.is_leaf()) return v;
  return graft(u.left(), under(u.right(), v));
}

/// Trees reachable from t by one right rotation (u v v) v w -> u v (v v w)
/// applied at any subtree: the covers of t going up.
inline std::vector<Tree> rotation_covers(const Tree& t) {
  std::vector<Tree> out;
  if (t.is_leaf()) return out;
  if (!t.left().is_leaf())
    out.push_back(graft(t.left().left(), graft(t.left().right(), t.right())));
  for (const Tree& l : rotation_covers(t.left())) out.push_back(graft(l, t.right()));
  for (const Tree& r : rotation_covers(t.right())) out.push_back(graft(t.left(), r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Reflexive-transitive closure of the rotation covers at one grade,
/// built once and then shared read-only.
class TamariOrder {
 public:
  static const TamariOrder& at(int n) {
    static std::map<int, std::unique_ptr<TamariOrder>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
      it = cache.emplace(n, std::unique_ptr<TamariOrder>(new TamariOrder(n))).first;
    return *it->second;
  }

  const std::vector<Tree>& trees() const { return trees_; }
  int index(const Tree& t) const { return index_.at(t); }
  const std::vector<int>& covers(int i) const { return up_[i]; }
  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * trees_.size() + j]; }
  bool leq(const Tree& t, const Tree& w) const { return leq(index(t), index(w)); }

 private:
  explicit TamariOrder(int n) : trees_(enumerate_trees(n)) {
    const std::size_t m = trees_.size();
    for (std::size_t i = 0; i < m; ++i) index_[trees_[i]] = static_cast<int>(i);
    up_.resize(m);
    for (std::size_t i = 0; i < m; ++i)
      for (const Tree& c : rotation_covers(trees_[i])) up_[i].push_back(index_.at(c));
    leq_.assign(m * m, false);
    std::vector<bool> done(m, false);
    for (std::size_t i = 0; i < m; ++i) close(i, done);
  }

  void close(std::size_t i, std::vector<bool>& done) {
    if (done[i]) return;
    const std::size_t m = trees_.size();
    leq_[i * m + i] = true;
    for (int c : up_[i]) {
      close(static_cast<std::size_t>(c), done);
      for (std::size_t j = 0; j < m; ++j)
        if (leq_[static_cast<std::size_t>(c) * m + j]) leq_[i * m + j] = true;
    }
    done[i] = true;
  }

  std::vector<Tree> trees_;
  std::map<Tree, int> index_;
  std::vector<std::vector<int>> up_;
  std::vector<bool> leq_;
};

/// Weak (Tamari-type) order on Y_n.
inline bool leq_tree(const Tree& t, const Tree& w) {
  if (t.grade() != w.grade()) throw std::invalid_argument("leq_tree: grade mismatch");
  return TamariOrder::at(t.grade()).leq(t, w);
}

/// Interval [low, high] in the tree order, in serialization order.
inline std::vector<Tree> tree_interval(const Tree& low, const Tree& high) {
  if (low.grade() != high.grade()) throw std::invalid_argument("tree_interval: grade mismatch");
  const TamariOrder& ord = TamariOrder::at(low.grade());
  const int i = ord.index(low), j = ord.index(high);
  std::vector<Tree> out;
  for (std::size_t k = 0; k < ord.trees().size(); ++k)
    if (ord.leq(i, static_cast<int>(k)) && ord.leq(static_cast<int>(k), j))
      out.push_back(ord.trees()[k]);
  return out;
}

/// psi: split the word at its maximum, relabel, recurse, graft.
inline Tree psi(const Permutation& sigma) {
  if (sigma.grade() == 0) return Tree();
  MaxDecomposition d = decompose_max(sigma);
  return graft(psi(d.left), psi(d.right));
}

namespace detail {
// Extremes of the psi-fiber, through the uniform parabolic form:
// the fiber of t^l v t^r is Sh(l,r) x fiber(t^l) x fiber(t^r) glued by
// (gamma x 1_1).(sigma v tau), so the extremes take gamma = 1 and
// gamma = xi_{l,r}.
inline Permutation min_perm_rec(const Tree& t) {
  if (t.is_leaf()) return Permutation();
  return graft(min_perm_rec(t.left()), min_perm_rec(t.right()));
}
inline Permutation max_perm_rec(const Tree& t) {
  if (t.is_leaf()) return Permutation();
  const std::size_t l = static_cast<std::size_t>(t.left().grade());
  const std::size_t r = static_cast<std::size_t>(t.right().grade());
  return compose(direct_product(xi(l, r), Permutation::identity(1)),
                 graft(max_perm_rec(t.left()), max_perm_rec(t.right())));
}
}  // namespace detail

inline Permutation min_perm(const Tree& t) {
  if (t.grade() == 0) throw std::invalid_argument("min_perm: grade 0 has no permutation");
  return detail::min_perm_rec(t);
}

inline Permutation max_perm(const Tree& t) {
  if (t.grade() == 0) throw std::invalid_argument("max_perm: grade 0 has no permutation");
  return detail::max_perm_rec(t);
}

/// The psi-fiber of t, as the weak-order interval [Min(t), Max(t)].
inline std::vector<Permutation> fiber(const Tree& t) {
  if (t.grade() == 0) throw std::invalid_argument("fiber: grade 0 has no permutations");
  return interval(min_perm(t), max_perm(t));
}

}  // namespace ordalg
