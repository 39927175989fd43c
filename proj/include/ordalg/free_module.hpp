#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordalg {

using Coefficient = boost::multiprecision::cpp_int;

/// Finite formal sum of basis elements with exact integer coefficients.
/// Zero coefficients are never stored; equality is term-set equality.
/// B must be ordered by grade first, then canonical serialization.
template <typename B>
class FreeElement {
 public:
  FreeElement() = default;

  explicit FreeElement(const B& basis, Coefficient coeff = 1) {
    if (coeff != 0) terms_[basis] = std::move(coeff);
  }

  const std::map<B, Coefficient>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coefficient(const B& basis) const {
    auto it = terms_.find(basis);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  void add_term(const B& basis, const Coefficient& coeff) {
    auto it = terms_.find(basis);
    if (it == terms_.end()) {
      if (coeff != 0) terms_.emplace(basis, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FreeElement& operator+=(const FreeElement& other) {
    for (const auto& [b, c] : other.terms_) add_term(b, c);
    return *this;
  }

  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }

  FreeElement& operator*=(const Coefficient& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) c *= scalar;
    }
    return *this;
  }

  friend FreeElement operator*(const Coefficient& scalar, FreeElement a) { return a *= scalar; }

  Coefficient coefficient_sum() const {
    Coefficient s = 0;
    for (const auto& [b, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const FreeElement&, const FreeElement&) = default;

 private:
  std::map<B, Coefficient> terms_;
};

/// Sum of distinct basis elements, coefficient 1 each.
template <typename B, typename Range>
FreeElement<B> sum_of(const Range& basis_elements) {
  FreeElement<B> out;
  for (const B& b : basis_elements) out.add_term(b, 1);
  return out;
}

/// Linear extension of a product defined on basis elements.
template <typename B, typename Product>
FreeElement<B> bilinear_extend(Product&& product, const FreeElement<B>& a,
                               const FreeElement<B>& b) {
  FreeElement<B> out;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      FreeElement<B> p = product(x, y);
      p *= cx * cy;
      out += p;
    }
  return out;
}

/// One term per line: "<coefficient> <basis>", in canonical term order.
template <typename B>
std::string to_string(const FreeElement<B>& e) {
  std::string out;
  for (const auto& [b, c] : e.terms()) {
    out += c.str();
    out += ' ';
    out += to_string(b);
    out += '\n';
  }
  return out;
}

}  // namespace ordalg
