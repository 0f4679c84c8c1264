#pragma once

#include <cstdlib>
#include <map>
#include <numeric>
#include <ostream>
#include <string>

namespace kmosaic {

// Sparse Laurent polynomial with integer coefficients in one formal variable.
// The variable is a compile-time tag so values in different variables cannot
// be combined by accident. Zero coefficients are never stored; equality is
// term-map equality.
template <class Var>
class laurent {
 public:
  laurent() = default;

  static laurent monomial(int exponent, long long coefficient) {
    laurent p;
    if (coefficient != 0) p.terms_[exponent] = coefficient;
    return p;
  }

  static laurent constant(long long c) { return monomial(0, c); }

  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_one() const noexcept {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
  }

  long long coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<int, long long>& terms() const noexcept { return terms_; }

  laurent& operator+=(const laurent& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  laurent& operator-=(const laurent& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  friend laurent operator+(laurent a, const laurent& b) { return a += b; }
  friend laurent operator-(laurent a, const laurent& b) { return a -= b; }

  laurent operator-() const {
    laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend laurent operator*(const laurent& a, const laurent& b) {
    laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  laurent& operator*=(const laurent& other) { return *this = *this * other; }

  laurent& operator*=(long long scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= scalar;
    }
    return *this;
  }

  // Multiply by x^delta.
  laurent shifted(int delta) const {
    laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e + delta] = c;
    return r;
  }

  // Substitute x -> 1/x.
  laurent mirrored() const {
    laurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  laurent pow(unsigned k) const {
    laurent r = constant(1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const laurent&, const laurent&) = default;

 private:
  void add_term(int e, long long c) {
    if (c == 0) return;
    const auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  std::map<int, long long> terms_;
};

// State-sum variable of the Kauffman bracket.
struct bracket_var {};
// The Jones variable t, with exponents stored in quarter-integer units.
struct t_quarter_var {};

using bracket_poly = laurent<bracket_var>;
using jones_poly = laurent<t_quarter_var>;

namespace detail {

// Renders a power of the base variable; exponents are in quarter units when
// quarters is 4, in whole units when it is 1.
inline std::string power_string(const std::string& base, int exponent, int quarters) {
  const int g = std::gcd(std::abs(exponent), quarters);
  const int num = std::abs(exponent) / g;
  const int den = quarters / g;
  if (den == 1) return num == 1 ? base : base + "^" + std::to_string(num);
  return base + "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

inline std::string display_poly(const std::map<int, long long>& terms, const std::string& base,
                                int quarters) {
  if (terms.empty()) return "0";
  std::string out;
  // Descending exponents.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto [e, c] = *it;
    const long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
    } else if (e > 0) {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += power_string(base, e, quarters);
    } else {
      out += std::to_string(mag) + "/" + power_string(base, e, quarters);
    }
  }
  return out;
}

}  // namespace detail

// Human-readable Jones polynomial in descending powers of t, e.g.
// "1/t - 1/t^2 + 2/t^3". Quarter-unit exponents that are not whole powers
// render as reduced fractions such as "t^(1/2)".
inline std::string to_display_string(const jones_poly& p) {
  return detail::display_poly(p.terms(), "t", 4);
}

inline std::string to_display_string(const bracket_poly& p) {
  return detail::display_poly(p.terms(), "A", 1);
}

inline std::ostream& operator<<(std::ostream& os, const jones_poly& p) {
  return os << to_display_string(p);
}

inline std::ostream& operator<<(std::ostream& os, const bracket_poly& p) {
  return os << to_display_string(p);
}

}  // namespace kmosaic
