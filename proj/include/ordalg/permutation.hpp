#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordalg {

/// A permutation of {1,..,n} in one-line notation; grade 0 is the empty
/// permutation, the unit of the graded algebra.  Immutable after
/// construction.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<int> sorted = word_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i) + 1)
        throw std::invalid_argument("permutation word is not a bijection on 1..n");
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    Permutation p;
    p.word_ = std::move(w);
    return p;
  }

  std::size_t grade() const { return word_.size(); }

  /// sigma(i), 1-based.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }

  const std::vector<int>& word() const { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Order by grade, then lexicographically on the one-line word.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.grade() != b.grade()) return a.grade() <=> b.grade();
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

/// Group law, (sigma.tau)(i) = sigma(tau(i)).
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.grade() != tau.grade())
    throw std::invalid_argument("compose: grade mismatch");
  std::vector<int> w(sigma.grade());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = sigma(tau.word()[i]);
  return Permutation(std::move(w));
}

inline Permutation inverse(const Permutation& sigma) {
  std::vector<int> w(sigma.grade());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[static_cast<std::size_t>(sigma.word()[i]) - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(w));
}

/// Coxeter length, computed as the inversion count.
inline std::size_t length(const Permutation& sigma) {
  std::size_t inv = 0;
  const auto& w = sigma.word();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

/// { i : sigma(i) > sigma(i+1) }.
inline std::set<int> descents(const Permutation& sigma) {
  std::set<int> d;
  const auto& w = sigma.word();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

/// The adjacent transposition s_i as an element of S_n.
inline Permutation transposition(std::size_t i, std::size_t n) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition: index out of range");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

/// Weak Bruhat order: omega <= sigma iff sigma = tau.omega with lengths
/// adding; tau is forced to be sigma.omega^{-1}.
inline bool leq_weak(const Permutation& omega, const Permutation& sigma) {
  if (omega.grade() != sigma.grade())
    throw std::invalid_argument("leq_weak: grade mismatch");
  return length(compose(sigma, inverse(omega))) + length(omega) == length(sigma);
}

/// Covers of omega going up: s_i.omega with length raised by one.  Left
/// multiplication by s_i swaps the values i and i+1 in the word.
inline std::vector<Permutation> up_covers(const Permutation& omega) {
  std::vector<Permutation> out;
  const std::size_t n = omega.grade();
  const std::size_t len = length(omega);
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<int> w = omega.word();
    for (auto& v : w) {
      if (v == static_cast<int>(i)) v = static_cast<int>(i) + 1;
      else if (v == static_cast<int>(i) + 1) v = static_cast<int>(i);
    }
    Permutation c(std::move(w));
    if (length(c) == len + 1) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The interval [low, high] in the weak order, by upward search from low
/// pruned at high.  Empty when low is not below high.
inline std::vector<Permutation> interval(const Permutation& low, const Permutation& high) {
  if (low.grade() != high.grade())
    throw std::invalid_argument("interval: grade mismatch");
  if (!leq_weak(low, high)) return {};
  std::set<Permutation> seen{low};
  std::vector<Permutation> frontier{low};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (auto& c : up_covers(p)) {
        if (!seen.contains(c) && leq_weak(c, high)) {
          seen.insert(c);
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// All (p,q)-shuffles: permutations of S_{p+q} whose only possible descent
/// is at p.
inline std::vector<Permutation> shuffles(std::size_t p, std::size_t q) {
  // Choose the set of values filling the first p positions; both position
  // blocks stay increasing.
  const std::size_t n = p + q;
  std::vector<bool> in_first(n, false);
  std::fill(in_first.begin(), in_first.begin() + static_cast<long>(p), true);
  std::sort(in_first.begin(), in_first.end());
  std::vector<Permutation> out;
  do {
    std::vector<int> w;
    w.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
      if (in_first[v]) w.push_back(static_cast<int>(v) + 1);
    for (std::size_t v = 0; v < n; ++v)
      if (!in_first[v]) w.push_back(static_cast<int>(v) + 1);
    out.emplace_back(std::move(w));
  } while (std::next_permutation(in_first.begin(), in_first.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// The longest (p,q)-shuffle, xi_{p,q} = (q+1 .. q+p 1 .. q).
inline Permutation xi(std::size_t p, std::size_t q) {
  std::vector<int> w(p + q);
  for (std::size_t i = 0; i < p; ++i) w[i] = static_cast<int>(q + i) + 1;
  for (std::size_t i = 0; i < q; ++i) w[p + i] = static_cast<int>(i) + 1;
  return Permutation(std::move(w));
}

/// sigma x tau: sigma acts on {1..p}, tau on {p+1..p+q}.
inline Permutation direct_product(const Permutation& sigma, const Permutation& tau) {
  std::vector<int> w;
  w.reserve(sigma.grade() + tau.grade());
  for (int v : sigma.word()) w.push_back(v);
  for (int v : tau.word()) w.push_back(v + static_cast<int>(sigma.grade()));
  return Permutation(std::move(w));
}

/// Unique factorization sigma = xi.omega with xi a (p,q)-shuffle and omega
/// in S_p x S_q; strips descents away from p on the right.
inline std::pair<Permutation, Permutation> factorize_parabolic(const Permutation& sigma,
                                                               std::size_t p, std::size_t q) {
  if (sigma.grade() != p + q)
    throw std::invalid_argument("factorize_parabolic: grade mismatch");
  Permutation x = sigma;
  Permutation y = Permutation::identity(p + q);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 1; i < p + q; ++i) {
      if (i == p) continue;
      if (x.word()[i - 1] > x.word()[i]) {
        Permutation s = transposition(i, p + q);
        x = compose(x, s);
        y = compose(s, y);
        moved = true;
      }
    }
  }
  return {x, y};
}

/// Grafting of sigma in S_p and tau in S_q: sigma, then the new maximum
/// p+q+1, then tau shifted by p.
inline Permutation graft(const Permutation& sigma, const Permutation& tau) {
  const std::size_t p = sigma.grade(), q = tau.grade();
  std::vector<int> w;
  w.reserve(p + q + 1);
  for (int v : sigma.word()) w.push_back(v);
  w.push_back(static_cast<int>(p + q) + 1);
  for (int v : tau.word()) w.push_back(v + static_cast<int>(p));
  return Permutation(std::move(w));
}

struct MaxDecomposition {
  Permutation gamma;    // shuffle of the two block sizes
  Permutation left;     // relabelled word left of the maximum
  Permutation right;    // relabelled word right of the maximum
};

inline Permutation relabel_subword(const std::vector<int>& part) {
  std::vector<int> sorted = part;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> w(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), part[i]);
    w[i] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return Permutation(std::move(w));
}

/// The unique triple with sigma = (gamma x 1_1).(left v right); the
/// maximum splits the word.
inline MaxDecomposition decompose_max(const Permutation& sigma) {
  const std::size_t n = sigma.grade();
  if (n == 0) throw std::invalid_argument("decompose_max: empty permutation");
  const auto& w = sigma.word();
  const std::size_t pos = static_cast<std::size_t>(
      std::find(w.begin(), w.end(), static_cast<int>(n)) - w.begin());
  Permutation left = relabel_subword({w.begin(), w.begin() + static_cast<long>(pos)});
  Permutation right = relabel_subword({w.begin() + static_cast<long>(pos) + 1, w.end()});
  Permutation gamma1 = compose(sigma, inverse(graft(left, right)));
  if (gamma1.word().back() != static_cast<int>(n))
    throw std::logic_error("decompose_max: reconstruction failed");
  Permutation gamma = relabel_subword({gamma1.word().begin(), gamma1.word().end() - 1});
  return {std::move(gamma), std::move(left), std::move(right)};
}

/// over: sigma/tau = sigma x tau.
inline Permutation over(const Permutation& sigma, const Permutation& tau) {
  return direct_product(sigma, tau);
}

/// under: sigma\tau = xi_{p,q}.(sigma x tau).
inline Permutation under(const Permutation& sigma, const Permutation& tau) {
  return compose(xi(sigma.grade(), tau.grade()), direct_product(sigma, tau));
}

inline std::vector<Permutation> symmetric_group(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::string to_string(const Permutation& sigma) {
  if (sigma.grade() == 0) return "()";
  std::string s;
  for (std::size_t i = 0; i < sigma.grade(); ++i) {
    if (i) s += ' ';
    s += std::to_string(sigma.word()[i]);
  }
  return s;
}

/// Parses one-line notation, comma- or space-separated; "" or "()" is the
/// empty permutation.
inline Permutation parse_permutation(const std::string& text) {
  std::string t = text;
  for (auto& c : t)
    if (c == ',') c = ' ';
  std::erase_if(t, [](char c) { return c == '(' || c == ')'; });
  std::istringstream in(t);
  std::vector<int> w;
  int v;
  while (in >> v) w.push_back(v);
  if (!in.eof()) throw std::invalid_argument("parse_permutation: bad token in '" + text + "'");
  return Permutation(std::move(w));
}

}  // namespace ordalg
