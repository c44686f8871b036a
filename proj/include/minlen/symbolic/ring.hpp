#pragma once

// Coefficient ring for momentum-space operators: polynomials in the momentum components,
// h = i hbar, the deformation constants and u = (1 - beta s)^(-1), taken modulo the single
// relation u (1 - beta s) = 1 with s = p_nu p^nu.
//
// Canonical form. The ideal is principal, so its generator is a Groebner basis under any
// monomial order. Under the lexicographic order with the first momentum slot most
// significant the leading monomial of u - beta u s - 1 is u beta p_f^2 (f = first slot);
// every monomial divisible by it is rewritten until none is. The resulting normal form is
// unique, and a polynomial is zero in the quotient ring (isomorphic to the localisation at
// 1 - beta s) iff its normal form has no terms.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minlen/core/error.hpp"
#include "minlen/symbolic/poly.hpp"

namespace minlen::sym {

/// Diagonal metric over the momentum components that carry an index.
///
/// minkowski(D): labels 0..D, signature (+, -, ..., -).
/// euclidean(D): labels 1..D, every entry -1, i.e. the spatial block of the Minkowski
/// metric. With that choice x^i = -h g^{ij} d_j = +h d_i and 1 - beta s = 1 + beta p^2,
/// so the covariant builders reproduce the original Euclidean representation unchanged.
class Metric {
 public:
  static Metric minkowski(int spatial_dims) {
    check_dims(spatial_dims, spatial_dims + 1);
    std::vector<int> signs(static_cast<std::size_t>(spatial_dims) + 1, -1);
    signs[0] = 1;
    return Metric(0, std::move(signs), false);
  }

  static Metric euclidean(int spatial_dims) {
    check_dims(spatial_dims, spatial_dims);
    return Metric(1, std::vector<int>(static_cast<std::size_t>(spatial_dims), -1), true);
  }

  std::size_t size() const { return signs_.size(); }
  int first_label() const { return first_label_; }
  int last_label() const { return first_label_ + static_cast<int>(signs_.size()) - 1; }
  bool is_euclidean() const { return euclidean_; }
  int spatial_dims() const { return euclidean_ ? int(size()) : int(size()) - 1; }

  std::size_t slot_of(int label) const {
    if (label < first_label_ || label > last_label())
      throw dimension_error("index " + std::to_string(label) + " outside metric range");
    return static_cast<std::size_t>(label - first_label_);
  }

  /// g^{mu mu} (equal to g_{mu mu}).
  int sign(int label) const { return signs_[slot_of(label)]; }
  int sign_at(std::size_t slot_index) const { return signs_[slot_index]; }

  int g(int mu, int nu) const { return mu == nu ? sign(mu) : 0; }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (int l = first_label_; l <= last_label(); ++l) out.push_back(l);
    return out;
  }

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  Metric(int first, std::vector<int> signs, bool euclidean)
      : first_label_(first), signs_(std::move(signs)), euclidean_(euclidean) {}

  static void check_dims(int spatial_dims, int components) {
    if (spatial_dims < 1) throw dimension_error("spatial dimension must be positive");
    if (components > int(kMaxComponents)) throw dimension_error("too many components");
  }

  int first_label_;
  std::vector<int> signs_;
  bool euclidean_;
};

/// Each deformation constant is either a free symbol (nullopt) or a fixed rational.
struct SymbolicParams {
  std::optional<Rational> beta;
  std::optional<Rational> beta_prime;
  std::optional<Rational> gamma;

  static SymbolicParams symbolic() { return {}; }
  static SymbolicParams undeformed() { return {Rational(0), Rational(0), Rational(0)}; }
};

class Ring {
 public:
  Ring(Metric metric, SymbolicParams params) : metric_(std::move(metric)), params_(params) {
    if ((params.beta && *params.beta < 0) || (params.beta_prime && *params.beta_prime < 0))
      throw std::invalid_argument("beta and beta' must be nonnegative");
    beta_ = param_poly(params.beta, Symbol::beta);
    beta_prime_ = param_poly(params.beta_prime, Symbol::beta_prime);
    gamma_ = param_poly(params.gamma, Symbol::gamma);
    build_rule();
  }

  const Metric& metric() const { return metric_; }
  const SymbolicParams& params() const { return params_; }

  const Poly& beta() const { return beta_; }
  const Poly& beta_prime() const { return beta_prime_; }
  const Poly& gamma() const { return gamma_; }
  Poly h() const { return Poly::symbol(Symbol::h); }
  Poly one() const { return Poly::constant(1); }
  Poly eps() const { return Poly::symbol(Symbol::eps); }

  /// u = (1 - beta s)^(-1), already reduced (it is 1 when beta = 0).
  Poly u() const { return reduce(Poly::symbol(Symbol::u)); }

  /// Contravariant component p^mu.
  Poly p(int label) const { return Poly::variable(metric_.slot_of(label)); }

  /// Covariant component p_mu = g_{mu mu} p^mu.
  Poly p_lower(int label) const { return p(label) * Rational(metric_.sign(label)); }

  /// s = p_nu p^nu.
  Poly s() const {
    Poly out;
    for (int l : metric_.labels()) out += p_lower(l) * p(l);
    return out;
  }

  /// 1 - beta s.
  Poly one_minus_beta_s() const { return reduce(one() - beta_ * s()); }

  /// Canonical form modulo u (1 - beta s) = 1.
  Poly reduce(const Poly& in) const {
    if (!rule_) return in;
    const auto& [lead, replacement] = *rule_;
    std::vector<std::pair<Monomial, Rational>> work(in.terms().begin(), in.terms().end());
    Poly out;
    while (!work.empty()) {
      auto [m, c] = std::move(work.back());
      work.pop_back();
      if (!divides(lead, m)) {
        out.add_term(m, c);
        continue;
      }
      const Monomial q = monomial_quotient(m, lead);
      for (const auto& [rm, rc] : replacement.terms())
        work.emplace_back(monomial_product(q, rm), c * rc);
    }
    return out;
  }

  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

  /// d/dp^mu of a coefficient; u obeys d u / dp^mu = 2 beta p_mu u^2.
  Poly derivative(const Poly& a, int label) const {
    const std::size_t k = metric_.slot_of(label);
    const Poly du_factor = beta_ * p_lower(label) * Rational(2) * Poly::symbol(Symbol::u, 2);
    Poly out;
    for (const auto& [m, c] : a.terms()) {
      if (m[k] > 0) {
        Monomial d = m;
        --d[k];
        out.add_term(d, c * m[k]);
      }
      const auto eu = m[slot(Symbol::u)];
      if (eu > 0) {
        Monomial d = m;
        --d[slot(Symbol::u)];
        out += Poly::term(d, c * eu) * du_factor;
      }
    }
    return reduce(out);
  }

  /// Exact value of a coefficient at a point. `momenta` are indexed by slot; u is
  /// substituted by 1 / (1 - beta s) computed from the same values.
  Rational evaluate(const Poly& a, const std::vector<Rational>& momenta, const Rational& h_value,
                    const Rational& beta_value, const Rational& beta_prime_value,
                    const Rational& gamma_value, const Rational& eps_value = 0) const {
    std::array<Rational, kSlots> v{};
    for (std::size_t i = 0; i < metric_.size(); ++i) v[i] = momenta.at(i);
    v[slot(Symbol::h)] = h_value;
    v[slot(Symbol::beta)] = beta_value;
    v[slot(Symbol::beta_prime)] = beta_prime_value;
    v[slot(Symbol::gamma)] = gamma_value;
    v[slot(Symbol::eps)] = eps_value;
    Rational s = 0;
    for (std::size_t i = 0; i < metric_.size(); ++i) s += Rational(metric_.sign_at(i)) * v[i] * v[i];
    const Rational b = params_.beta ? *params_.beta : beta_value;
    v[slot(Symbol::u)] = 1 / (1 - b * s);
    return a.evaluate(v);
  }

 private:
  static Poly param_poly(const std::optional<Rational>& value, Symbol s) {
    return value ? Poly::constant(*value) : Poly::symbol(s);
  }

  void build_rule() {
    const Poly u = Poly::symbol(Symbol::u);
    if (params_.beta && *params_.beta == 0) {
      rule_.emplace(u.terms().begin()->first, Poly::constant(1));
      return;
    }
    const int f = metric_.first_label();
    const Rational sf(metric_.sign(f));
    Poly rest;  // sum over k != f of sign_k p_k^2
    for (int l : metric_.labels())
      if (l != f) rest += p(l) * p(l) * Rational(metric_.sign(l));
    Monomial lead = (u * p(f) * p(f)).terms().begin()->first;
    Poly replacement;
    if (params_.beta) {
      const Rational b = *params_.beta;
      replacement = (u - one() - u * rest * b) * (sf / b);
    } else {
      lead = monomial_product(lead, Poly::symbol(Symbol::beta).terms().begin()->first);
      replacement = (u - one() - u * Poly::symbol(Symbol::beta) * rest) * sf;
    }
    rule_.emplace(lead, std::move(replacement));
  }

  Metric metric_;
  SymbolicParams params_;
  Poly beta_, beta_prime_, gamma_;
  std::optional<std::pair<Monomial, Poly>> rule_;
};

}  // namespace minlen::sym
