#pragma once

// Exact verification suites for the covariant deformed algebra, its deformed Poincare
// generators, the infinitesimal transformations that leave it invariant, and its
// Snyder / Euclidean reductions. Every check builds (lhs - rhs) as a normal-ordered
// operator and passes iff no terms survive.

#include <optional>
#include <stdexcept>
#include <vector>

#include "minlen/symbolic/builders.hpp"
#include "minlen/symbolic/report.hpp"

namespace minlen::sym {

/// Right-hand-side ingredients of the algebra. Verification compares against these so
/// tests can perturb one coefficient and watch the corresponding identity fail.
///
///   [X^mu, P^nu] = -h [ metric_coeff g^{mu nu} - pp_coeff P^mu P^nu ]
///   metric_coeff [X^mu, X^nu] = xx_prefactor xx_numerator (P^mu X^nu - P^nu X^mu)
struct AlgebraTargets {
  Poly metric_coeff;
  Poly pp_coeff;
  Poly xx_numerator;
  Poly xx_prefactor;

  static AlgebraTargets standard(const Ring& ring) {
    const Poly& b = ring.beta();
    const Poly& bp = ring.beta_prime();
    AlgebraTargets t;
    t.metric_coeff = ring.one_minus_beta_s();
    t.pp_coeff = bp;
    t.xx_numerator =
        ring.reduce(b * Rational(2) - bp - (b * Rational(2) + bp) * b * ring.s());
    t.xx_prefactor = ring.h();
    return t;
  }
};

namespace detail {

inline std::vector<Operator> positions(const Ring& ring) {
  std::vector<Operator> out;
  for (int mu : ring.metric().labels()) out.push_back(build_position(ring, mu));
  return out;
}

inline std::vector<Operator> momenta(const Ring& ring) {
  std::vector<Operator> out;
  for (int mu : ring.metric().labels()) out.push_back(build_momentum(ring, mu));
  return out;
}

/// Residuals of the three defining relations for arbitrary operator families X, P whose
/// coefficient functions of P are formed by operator products (so primed operators can
/// be substituted). Relations are written with denominators cleared.
struct RelationResiduals {
  std::vector<Operator> xp, xx, pp;
};

inline RelationResiduals relation_residuals(const Ring& ring, const std::vector<Operator>& X,
                                            const std::vector<Operator>& P,
                                            const AlgebraTargets* targets = nullptr) {
  const auto& g = ring.metric();
  const auto labels = g.labels();
  const std::size_t n = labels.size();

  Operator s_op;
  for (std::size_t k = 0; k < n; ++k)
    s_op += scale(Rational(g.sign(labels[k])), compose(ring, P[k], P[k]));
  const Operator one = Operator::multiply(ring.one());
  const Operator h = Operator::multiply(ring.h());
  const Operator beta = Operator::multiply(ring.beta());
  const Operator bp = Operator::multiply(ring.beta_prime());

  Operator metric_coeff = one - compose(ring, beta, s_op);
  Operator numerator =
      scale(Rational(2), beta) - bp -
      compose(ring, compose(ring, scale(Rational(2), beta) + bp, beta), s_op);
  Operator prefactor = h;
  Operator pp_coeff = bp;
  if (targets) {
    metric_coeff = Operator::multiply(targets->metric_coeff);
    numerator = Operator::multiply(targets->xx_numerator);
    prefactor = Operator::multiply(targets->xx_prefactor);
    pp_coeff = Operator::multiply(targets->pp_coeff);
  }

  RelationResiduals r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Operator rhs = scale(Rational(g.g(labels[i], labels[j])), metric_coeff) -
                     compose(ring, pp_coeff, compose(ring, P[i], P[j]));
      r.xp.push_back(commutator(ring, X[i], P[j]) + compose(ring, h, rhs));
      if (i < j) {
        Operator antisym = compose(ring, P[i], X[j]) - compose(ring, P[j], X[i]);
        r.xx.push_back(compose(ring, metric_coeff, commutator(ring, X[i], X[j])) -
                       compose(ring, compose(ring, prefactor, numerator), antisym));
        r.pp.push_back(commutator(ring, P[i], P[j]));
      }
    }
  return r;
}

}  // namespace detail

inline constexpr const char* kTagXP =
    "[X^{\\mu},P^{\\nu}] = -i\\hbar[(1-\\beta P_{\\rho}P^{\\rho})g^{\\mu\\nu} - \\beta' P^{\\mu}P^{\\nu}]";
inline constexpr const char* kTagXX =
    "[X^{\\mu},X^{\\nu}] = i\\hbar\\frac{2\\beta-\\beta'-(2\\beta+\\beta')\\beta P_{\\rho}P^{\\rho}}"
    "{1-\\beta P_{\\rho}P^{\\rho}}(P^{\\mu}X^{\\nu}-P^{\\nu}X^{\\mu})";
inline constexpr const char* kTagPP = "[P^{\\mu},P^{\\nu}] = 0";

/// The three commutation relations of the covariant algebra, for every index pair.
inline VerificationReport verify_algebra(const Ring& ring, const AlgebraTargets& targets) {
  const auto X = detail::positions(ring);
  const auto P = detail::momenta(ring);
  const auto res = detail::relation_residuals(ring, X, P, &targets);

  // Same relation without clearing the denominator: u carries (1 - beta s)^(-1).
  const auto& g = ring.metric();
  const auto labels = g.labels();
  std::vector<Operator> xx_rational;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      Operator antisym = compose(ring, P[i], X[j]) - compose(ring, P[j], X[i]);
      Poly factor = ring.mul(ring.u(), ring.mul(targets.xx_prefactor, targets.xx_numerator));
      xx_rational.push_back(commutator(ring, X[i], X[j]) - scale(ring, factor, antisym));
    }

  VerificationReport report{"algebra", {}};
  report.record("commutator_X_P", kTagXP, res.xp);
  report.record("commutator_X_X_cleared", kTagXX, res.xx);
  report.record("commutator_X_X_rational", kTagXX, xx_rational);
  report.record("commutator_P_P", kTagPP, res.pp);
  return report;
}

inline VerificationReport verify_algebra(const Ring& ring) {
  return verify_algebra(ring, AlgebraTargets::standard(ring));
}

inline VerificationReport verify_algebra(const SymbolicParams& params, int spatial_dims) {
  return verify_algebra(Ring(Metric::minkowski(spatial_dims), params));
}

// ---------------------------------------------------------------------------------------
// Poincare generators

struct PoincareVariant {
  /// When false, the P^ entering [L^, P^] on the left-hand side is p_a instead of u p_a
  /// while the right-hand side keeps the deformed generator.
  bool u_in_commutator_translation = true;
};

namespace detail {

/// Table L[a][b] over all ordered index pairs (antisymmetric, zero diagonal).
inline std::vector<std::vector<Operator>> lorentz_table(const Ring& ring) {
  const auto labels = ring.metric().labels();
  const std::size_t n = labels.size();
  std::vector<std::vector<Operator>> L(n, std::vector<Operator>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      L[a][b] = build_lorentz_generator(ring, labels[a], labels[b]);
      L[b][a] = -L[a][b];
    }
  return L;
}

}  // namespace detail

inline VerificationReport verify_poincare(const Ring& ring, const PoincareVariant& variant = {}) {
  const auto& g = ring.metric();
  const auto labels = g.labels();
  const std::size_t n = labels.size();
  const auto L = detail::lorentz_table(ring);
  std::vector<Operator> Phat, Phat_lhs;
  for (int a : labels) {
    Phat.push_back(build_translation_generator(ring, a));
    Phat_lhs.push_back(build_translation_generator(ring, a, variant.u_in_commutator_translation));
  }
  auto gl = [&](std::size_t a, std::size_t b) { return Rational(g.g(labels[a], labels[b])); };
  const Poly h = ring.h();

  std::vector<Operator> simplify, so, pp, lp;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      simplify.push_back(L[a][b] - build_undeformed_lorentz_generator(ring, labels[a], labels[b]));

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s) {
          Operator rhs = scale(gl(a, r), L[b][s]) - scale(gl(a, s), L[b][r]) -
                         scale(gl(b, r), L[a][s]) + scale(gl(b, s), L[a][r]);
          so.push_back(commutator(ring, L[a][b], L[r][s]) + scale(ring, h, rhs));
        }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pp.push_back(commutator(ring, Phat[a], Phat[b]));

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t r = 0; r < n; ++r) {
        Operator rhs = scale(gl(b, r), Phat[a]) - scale(gl(a, r), Phat[b]);
        lp.push_back(commutator(ring, L[a][b], Phat_lhs[r]) - scale(ring, h, rhs));
      }

  VerificationReport report{"poincare", {}};
  report.record("lorentz_generator_normal_form",
                "\\hat{L}_{\\alpha\\beta} = x_{\\alpha}p_{\\beta} - x_{\\beta}p_{\\alpha}", simplify);
  report.record("so_commutators",
                "[\\hat{L}_{\\alpha\\beta},\\hat{L}_{\\rho\\sigma}] = -i\\hbar(g_{\\alpha\\rho}\\hat{L}_{\\beta\\sigma}"
                " - g_{\\alpha\\sigma}\\hat{L}_{\\beta\\rho} - g_{\\beta\\rho}\\hat{L}_{\\alpha\\sigma}"
                " + g_{\\beta\\sigma}\\hat{L}_{\\alpha\\rho})",
                so);
  report.record("translation_generators_commute", "[\\hat{P}_{\\alpha},\\hat{P}_{\\beta}] = 0", pp);
  report.record("lorentz_translation_commutators",
                "[\\hat{L}_{\\alpha\\beta},\\hat{P}_{\\rho}] = i\\hbar(g_{\\beta\\rho}\\hat{P}_{\\alpha}"
                " - g_{\\alpha\\rho}\\hat{P}_{\\beta})",
                lp);
  return report;
}

inline VerificationReport verify_poincare(const SymbolicParams& params, int spatial_dims,
                                          const PoincareVariant& variant = {}) {
  return verify_poincare(Ring(Metric::minkowski(spatial_dims), params), variant);
}

// ---------------------------------------------------------------------------------------
// Infinitesimal transformations

struct TransformationSpec {
  enum class Kind { lorentz, translation };
  Kind kind = Kind::lorentz;
  /// delta omega_{mu nu}, lower indices, rows/columns in metric label order.
  std::vector<std::vector<Rational>> omega;
  /// delta a^mu, contravariant.
  std::vector<Rational> shift;
  /// Deformation function of the translated position in u-form; defaults to
  /// g(s) = u^2 [2 beta - beta' - (2 beta + beta') beta s].
  std::optional<Poly> deformation;

  static TransformationSpec lorentz(std::vector<std::vector<Rational>> omega) {
    TransformationSpec t;
    t.kind = Kind::lorentz;
    t.omega = std::move(omega);
    return t;
  }

  static TransformationSpec translation(std::vector<Rational> shift) {
    TransformationSpec t;
    t.kind = Kind::translation;
    t.shift = std::move(shift);
    return t;
  }

  void validate(const Metric& g) const {
    const std::size_t n = g.size();
    if (kind == Kind::lorentz) {
      if (omega.size() != n) throw dimension_error("delta omega has wrong size");
      for (const auto& row : omega)
        if (row.size() != n) throw dimension_error("delta omega has wrong size");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (omega[i][j] != -omega[j][i])
            throw std::invalid_argument("delta omega must be antisymmetric");
    } else if (shift.size() != n) {
      throw dimension_error("delta a has wrong size");
    }
  }
};

inline Poly translation_deformation(const Ring& ring) {
  const Poly& b = ring.beta();
  const Poly& bp = ring.beta_prime();
  Poly numerator = b * Rational(2) - bp - (b * Rational(2) + bp) * b * ring.s();
  return ring.mul(ring.mul(ring.u(), ring.u()), numerator);
}

namespace detail {

/// delta X^mu and delta P^mu given explicitly (not via generators).
inline void explicit_variations(const Ring& ring, const TransformationSpec& spec,
                                const std::vector<Operator>& X, std::vector<Operator>& dX,
                                std::vector<Operator>& dP) {
  const auto& g = ring.metric();
  const auto labels = g.labels();
  const std::size_t n = labels.size();
  dX.assign(n, Operator{});
  dP.assign(n, Operator{});
  if (spec.kind == TransformationSpec::Kind::lorentz) {
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) {
        const Rational w = Rational(g.sign(labels[m])) * spec.omega[m][v];  // delta omega^mu_nu
        if (w == 0) continue;
        dX[m] += scale(w, X[v]);
        dP[m] += Operator::multiply(ring.p(labels[v]) * w);
      }
    return;
  }
  const Poly gfun = spec.deformation ? *spec.deformation : translation_deformation(ring);
  Poly a_dot_p;  // delta a_nu p^nu
  for (std::size_t v = 0; v < n; ++v)
    a_dot_p += ring.p(labels[v]) * (Rational(g.sign(labels[v])) * spec.shift[v]);
  for (std::size_t m = 0; m < n; ++m) {
    Poly c = Poly::constant(-spec.shift[m]) - ring.mul(gfun, ring.mul(a_dot_p, ring.p(labels[m])));
    dX[m] = Operator::multiply(c);
  }
}

}  // namespace detail

inline VerificationReport verify_transformations(const Ring& ring, const TransformationSpec& spec) {
  const auto& g = ring.metric();
  spec.validate(g);
  const auto labels = g.labels();
  const std::size_t n = labels.size();
  const auto X = detail::positions(ring);
  const auto P = detail::momenta(ring);
  const Poly h = ring.h();

  std::vector<Operator> dX, dP;
  detail::explicit_variations(ring, spec, X, dX, dP);

  VerificationReport report{"transformations", {}};
  if (spec.kind == TransformationSpec::Kind::lorentz) {
    const auto L = detail::lorentz_table(ring);
    // delta V^mu = (i / 2 hbar) delta omega^{ab} [L_ab, V^mu]; with h = i hbar this is
    // -(1 / 2h) delta omega^{ab} [L_ab, V^mu], compared after multiplying by -2h.
    std::vector<Operator> on_x, on_p;
    for (std::size_t m = 0; m < n; ++m) {
      Operator gx, gp;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Rational w = Rational(g.sign(labels[a]) * g.sign(labels[b])) * spec.omega[a][b];
          if (w == 0) continue;
          gx += scale(w, commutator(ring, L[a][b], X[m]));
          gp += scale(w, commutator(ring, L[a][b], P[m]));
        }
      on_x.push_back(gx + scale(ring, h * Rational(2), dX[m]));
      on_p.push_back(gp + scale(ring, h * Rational(2), dP[m]));
    }
    report.record("lorentz_action_X",
                  "\\delta X^{\\mu} = \\frac{i}{2\\hbar}\\delta\\omega^{\\alpha\\beta}[\\hat{L}_{\\alpha\\beta},X^{\\mu}]"
                  " = \\delta\\omega^{\\mu}_{\\ \\nu}X^{\\nu}",
                  on_x);
    report.record("lorentz_action_P",
                  "\\delta P^{\\mu} = \\frac{i}{2\\hbar}\\delta\\omega^{\\alpha\\beta}[\\hat{L}_{\\alpha\\beta},P^{\\mu}]"
                  " = \\delta\\omega^{\\mu}_{\\ \\nu}P^{\\nu}",
                  on_p);
  } else {
    std::vector<Operator> on_x, on_x_cleared, on_p;
    const Poly clear = ring.mul(ring.one_minus_beta_s(), ring.one_minus_beta_s());
    for (std::size_t m = 0; m < n; ++m) {
      Operator gx, gp;  // sum_a delta a^a [P^_a, V^mu]
      for (std::size_t a = 0; a < n; ++a) {
        if (spec.shift[a] == 0) continue;
        const Operator ph = build_translation_generator(ring, labels[a]);
        gx += scale(spec.shift[a], commutator(ring, ph, X[m]));
        gp += scale(spec.shift[a], commutator(ring, ph, P[m]));
      }
      // (i / hbar) = -1 / h: delta X = -(1/h) gx, compared as -gx = h delta X.
      Operator lhs = -gx;
      on_x.push_back(lhs - scale(ring, h, dX[m]));
      on_x_cleared.push_back(scale(ring, clear, lhs) - scale(ring, ring.mul(clear, h), dX[m]));
      on_p.push_back(gp);
    }
    report.record("translation_action_X",
                  "\\delta X^{\\mu} = \\frac{i}{\\hbar}\\delta a^{\\alpha}[\\hat{P}_{\\alpha},X^{\\mu}]"
                  " = -\\delta a^{\\mu} - g(P_{\\rho}P^{\\rho})\\delta a_{\\nu}P^{\\nu}P^{\\mu}",
                  on_x);
    report.record("translation_action_X_cleared",
                  "(1-\\beta P_{\\rho}P^{\\rho})^2\\,\\delta X^{\\mu}", on_x_cleared);
    report.record("translation_action_P", "[\\hat{P}_{\\alpha},P^{\\mu}] = 0", on_p);
  }

  // First-order invariance: substitute X + eps dX, P + eps dP into all three relations.
  std::vector<Operator> Xp(n), Pp(n);
  const Poly eps = ring.eps();
  for (std::size_t m = 0; m < n; ++m) {
    Xp[m] = X[m] + scale(ring, eps, dX[m]);
    Pp[m] = P[m] + scale(ring, eps, dP[m]);
  }
  const auto res = detail::relation_residuals(ring, Xp, Pp);
  const std::string kind = spec.kind == TransformationSpec::Kind::lorentz ? "lorentz" : "translation";
  report.record(kind + "_invariance_X_P", kTagXP, res.xp);
  report.record(kind + "_invariance_X_X", kTagXX, res.xx);
  report.record(kind + "_invariance_P_P", kTagPP, res.pp);
  return report;
}

/// Every basis element of delta omega and delta a; by linearity of the first-order
/// variation this covers symbolic parameters.
inline VerificationReport verify_transformations(const Ring& ring) {
  const auto& g = ring.metric();
  const std::size_t n = g.size();
  VerificationReport all{"transformations", {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, Rational(0)));
      w[a][b] = 1;
      w[b][a] = -1;
      all.merge(verify_transformations(ring, TransformationSpec::lorentz(w)));
    }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Rational> shift(n, Rational(0));
    shift[a] = 1;
    all.merge(verify_transformations(ring, TransformationSpec::translation(shift)));
  }
  return all;
}

inline VerificationReport verify_transformations(const SymbolicParams& params, int spatial_dims) {
  return verify_transformations(Ring(Metric::minkowski(spatial_dims), params));
}

// ---------------------------------------------------------------------------------------
// Reductions

/// Snyder case: D = 3, beta = gamma = 0 gives [X^mu, X^nu] = -h beta' (P^mu X^nu - P^nu X^mu).
inline VerificationReport verify_snyder() {
  SymbolicParams params;
  params.beta = Rational(0);
  params.gamma = Rational(0);
  const Ring ring(Metric::minkowski(3), params);
  const auto X = detail::positions(ring);
  const auto P = detail::momenta(ring);
  const std::size_t n = X.size();
  std::vector<Operator> xx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Operator antisym = compose(ring, P[i], X[j]) - compose(ring, P[j], X[i]);
      xx.push_back(commutator(ring, X[i], X[j]) +
                   scale(ring, ring.mul(ring.h(), ring.beta_prime()), antisym));
    }
  VerificationReport report{"snyder", {}};
  report.record("snyder_X_X", "[X^{\\mu},X^{\\nu}] = -i\\hbar\\beta'(P^{\\mu}X^{\\nu}-P^{\\nu}X^{\\mu})", xx);
  auto rest = verify_algebra(ring);
  for (auto& r : rest.identities) r.identity_id = "snyder_" + r.identity_id;
  report.merge(rest);
  return report;
}

/// Euclidean mode: the original D-dimensional representation, written independently of
/// the covariant builders, reproduces the Euclidean deformed algebra
///   [X^i, P^j] = -h [(1 + beta P^2) g^{ij} - beta' P^i P^j],  g^{ij} = -delta^{ij}
///   [X^i, X^j] = h (2 beta - beta' + (2 beta + beta') beta P^2) / (1 + beta P^2) (P^i X^j - P^j X^i)
///   [P^i, P^j] = 0.
inline VerificationReport verify_kempf(int spatial_dims, const SymbolicParams& params = {}) {
  const Ring ring(Metric::euclidean(spatial_dims), params);
  const auto& g = ring.metric();
  const auto labels = g.labels();
  const std::size_t n = labels.size();
  std::vector<Operator> X, P;
  Poly p2;
  for (int i : labels) {
    X.push_back(build_euclidean_position(ring, i));
    P.push_back(build_momentum(ring, i));
    p2 += ring.p(i) * ring.p(i);
  }
  const Poly& b = ring.beta();
  const Poly& bp = ring.beta_prime();
  const Poly h = ring.h();
  const Poly one_plus = ring.reduce(ring.one() + b * p2);
  const Poly numerator = ring.reduce(b * Rational(2) - bp + (b * Rational(2) + bp) * b * p2);

  std::vector<Operator> xp, xx, xx_rational, pp, same;
  for (std::size_t i = 0; i < n; ++i) {
    same.push_back(X[i] - build_position(ring, labels[i]));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational gij = i == j ? Rational(-1) : Rational(0);
      Poly rhs = one_plus * gij - bp * ring.p(labels[i]) * ring.p(labels[j]);
      xp.push_back(commutator(ring, X[i], P[j]) + Operator::multiply(ring.mul(h, rhs)));
      if (i < j) {
        Operator antisym = compose(ring, P[i], X[j]) - compose(ring, P[j], X[i]);
        Operator c = commutator(ring, X[i], X[j]);
        xx.push_back(scale(ring, one_plus, c) - scale(ring, ring.mul(h, numerator), antisym));
        xx_rational.push_back(
            c - scale(ring, ring.mul(ring.u(), ring.mul(h, numerator)), antisym));
        pp.push_back(commutator(ring, P[i], P[j]));
      }
    }
  }
  VerificationReport report{"kempf", {}};
  report.record("kempf_X_P",
                "[X^i,P^j] = -i\\hbar[(1+\\beta\\mathbf{P}^2)g^{ij} - \\beta' P^iP^j]", xp);
  report.record("kempf_X_X_cleared",
                "[X^i,X^j] = i\\hbar\\frac{2\\beta-\\beta'+(2\\beta+\\beta')\\beta\\mathbf{P}^2}"
                "{1+\\beta\\mathbf{P}^2}(P^iX^j-P^jX^i)",
                xx);
  report.record("kempf_X_X_rational", "(u-form)", xx_rational);
  report.record("kempf_P_P", "[P^i,P^j] = 0", pp);
  report.record("kempf_matches_metric_flag",
                "X^i_{\\rm Euclidean} = X^i_{\\rm covariant}|_{g = -\\delta}", same);
  return report;
}

inline VerificationReport verify_reductions(int euclidean_dims = 3,
                                            const SymbolicParams& euclidean_params = {}) {
  VerificationReport report{"reductions", {}};
  report.merge(verify_snyder());
  report.merge(verify_kempf(euclidean_dims, euclidean_params));
  return report;
}

}  // namespace minlen::sym
