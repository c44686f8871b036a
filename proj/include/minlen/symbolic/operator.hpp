#pragma once

// Linear differential operators in momentum space kept in normal order: a finite sum of
// coefficient * d^{a_0}/dp^0 ... d^{a_D}/dp^D with every derivative to the right.
//
// Terms are keyed by the derivative multi-index (lexicographic, first slot most
// significant) and coefficients are canonical ring elements, so two operators are equal
// iff their term maps are identical.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minlen/symbolic/ring.hpp"

namespace minlen::sym {

using DerivIndex = std::array<std::uint8_t, kMaxComponents>;

inline DerivIndex unit_index(std::size_t slot_index) {
  DerivIndex d{};
  d[slot_index] = 1;
  return d;
}

class Operator {
 public:
  using Terms = std::map<DerivIndex, Poly>;

  Operator() = default;

  /// Multiplication by a coefficient.
  static Operator multiply(const Poly& c) {
    Operator op;
    op.add_term(DerivIndex{}, c);
    return op;
  }

  static Operator derivative(std::size_t slot_index, unsigned order = 1) {
    DerivIndex d{};
    d[slot_index] = static_cast<std::uint8_t>(order);
    Operator op;
    op.add_term(d, Poly::constant(1));
    return op;
  }

  static Operator term(const DerivIndex& d, const Poly& c) {
    Operator op;
    op.add_term(d, c);
    return op;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Number of (derivative, monomial) pairs: the size of a residual.
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& [d, c] : terms_) n += c.size();
    return n;
  }

  void add_term(const DerivIndex& d, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Operator& operator+=(const Operator& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }

  Operator& operator-=(const Operator& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
  }

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator-(Operator a) {
    for (auto& [d, c] : a.terms_) c *= Rational(-1);
    return a;
  }
  friend bool operator==(const Operator&, const Operator&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      for (std::size_t i = 0; i < kMaxComponents; ++i)
        if (d[i]) out += "*d" + std::to_string(i) + (d[i] > 1 ? "^" + std::to_string(d[i]) : "");
    }
    return out;
  }

 private:
  Terms terms_;
};

namespace detail {

inline Rational binomial(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Visits every gamma <= alpha componentwise.
template <class F>
void for_each_sub_index(const DerivIndex& alpha, F&& f) {
  DerivIndex gamma{};
  while (true) {
    f(gamma);
    std::size_t i = 0;
    while (i < kMaxComponents) {
      if (gamma[i] < alpha[i]) {
        ++gamma[i];
        break;
      }
      gamma[i] = 0;
      ++i;
    }
    if (i == kMaxComponents) return;
  }
}

}  // namespace detail

/// Left multiplication of every coefficient by c.
inline Operator scale(const Ring& ring, const Poly& c, const Operator& a) {
  Operator out;
  for (const auto& [d, coeff] : a.terms()) out.add_term(d, ring.mul(c, coeff));
  return out;
}

inline Operator scale(const Rational& c, const Operator& a) {
  Operator out;
  for (const auto& [d, coeff] : a.terms()) out.add_term(d, coeff * c);
  return out;
}

/// Repeated partial derivative of a coefficient.
inline Poly derivative(const Ring& ring, Poly c, const DerivIndex& order) {
  const auto& metric = ring.metric();
  for (std::size_t k = 0; k < metric.size(); ++k)
    for (unsigned r = 0; r < order[k]; ++r) {
      c = ring.derivative(c, metric.first_label() + int(k));
      if (c.is_zero()) return c;
    }
  return c;
}

/// Normal form of A o B. Moving d^alpha past a coefficient b uses the Leibniz rule
/// d^alpha b = sum_{gamma <= alpha} C(alpha, gamma) (d^gamma b) d^{alpha - gamma}.
inline Operator compose(const Ring& ring, const Operator& a, const Operator& b) {
  Operator out;
  for (const auto& [db, cb] : b.terms()) {
    std::map<DerivIndex, Poly> cache;
    for (const auto& [da, ca] : a.terms()) {
      detail::for_each_sub_index(da, [&](const DerivIndex& gamma) {
        auto it = cache.find(gamma);
        if (it == cache.end()) it = cache.emplace(gamma, derivative(ring, cb, gamma)).first;
        if (it->second.is_zero()) return;
        Rational weight = 1;
        DerivIndex d{};
        for (std::size_t i = 0; i < kMaxComponents; ++i) {
          weight *= detail::binomial(da[i], gamma[i]);
          d[i] = static_cast<std::uint8_t>(da[i] - gamma[i] + db[i]);
        }
        out.add_term(d, ring.mul(ca, it->second) * weight);
      });
    }
  }
  return out;
}

inline Operator commutator(const Ring& ring, const Operator& a, const Operator& b) {
  return compose(ring, a, b) - compose(ring, b, a);
}

/// Action on a coefficient function: sum_alpha c_alpha d^alpha phi.
inline Poly apply(const Ring& ring, const Operator& a, const Poly& phi) {
  Poly out;
  for (const auto& [d, c] : a.terms()) out += ring.mul(c, derivative(ring, phi, d));
  return out;
}

/// Brings every coefficient back to canonical form (needed after external edits only).
inline Operator reduce(const Ring& ring, const Operator& a) {
  Operator out;
  for (const auto& [d, c] : a.terms()) out.add_term(d, ring.reduce(c));
  return out;
}

/// Terms of order eps^k with eps stripped.
inline Operator eps_part(const Operator& a, unsigned k) {
  Operator out;
  for (const auto& [d, c] : a.terms()) out.add_term(d, c.eps_part(k));
  return out;
}

}  // namespace minlen::sym
