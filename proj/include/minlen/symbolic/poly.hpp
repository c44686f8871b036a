#pragma once

// Commutative polynomials with exact rational coefficients.
//
// Exponent slots are fixed across every ring so monomials from different metrics compare
// consistently: slots [0, kMaxComponents) hold momentum components in metric order, the
// remaining slots hold the central symbols below. Monomials compare lexicographically with
// slot 0 most significant.

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace minlen::sym {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxComponents = 8;
inline constexpr std::size_t kSlots = 16;

/// Central (commuting) symbols.
enum class Symbol : std::uint8_t {
  h = kMaxComponents,  // i hbar, kept as one symbol
  beta,
  beta_prime,
  gamma,
  u,    // (1 - beta s)^(-1)
  eps,  // first-order bookkeeping, eps^2 = 0
};

inline constexpr std::size_t slot(Symbol s) { return static_cast<std::size_t>(s); }

using Monomial = std::array<std::uint8_t, kSlots>;

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial m{};
  for (std::size_t i = 0; i < kSlots; ++i) m[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return m;
}

inline bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < kSlots; ++i)
    if (d[i] > m[i]) return false;
  return true;
}

inline Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
  Monomial q{};
  for (std::size_t i = 0; i < kSlots; ++i) q[i] = static_cast<std::uint8_t>(m[i] - d[i]);
  return q;
}

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;

  static Poly constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
  }

  static Poly variable(std::size_t slot_index, unsigned power = 1) {
    Monomial m{};
    m[slot_index] = static_cast<std::uint8_t>(power);
    Poly p;
    p.terms_.emplace(m, Rational(1));
    return p;
  }

  static Poly symbol(Symbol s, unsigned power = 1) { return variable(slot(s), power); }

  static Poly term(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }

  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m[slot(Symbol::eps)] > 1) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Poly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Coefficient of eps^k (k = 0 or 1) as a polynomial free of eps.
  Poly eps_part(unsigned k) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
      if (m[slot(Symbol::eps)] != k) continue;
      Monomial stripped = m;
      stripped[slot(Symbol::eps)] = 0;
      out.add_term(stripped, c);
    }
    return out;
  }

  /// Exact evaluation with every slot assigned a value.
  Rational evaluate(const std::array<Rational, kSlots>& values) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < kSlots; ++i)
        for (unsigned e = 0; e < m[i]; ++e) t *= values[i];
      total += t;
    }
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[] = {"h", "b", "b'", "g", "u", "eps"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      Rational a = c < 0 ? Rational(-c) : c;
      bool any = false;
      std::ostringstream body;
      for (std::size_t i = 0; i < kSlots; ++i) {
        if (m[i] == 0) continue;
        if (any) body << "*";
        any = true;
        if (i < kMaxComponents) body << "p" << i;
        else body << names[i - kMaxComponents];
        if (m[i] > 1) body << "^" << int(m[i]);
      }
      if (!any) os << a;
      else if (a != 1) os << a << "*" << body.str();
      else os << body.str();
    }
    return os.str();
  }

 private:
  Terms terms_;
};

}  // namespace minlen::sym
