#pragma once

// CSV and JSON writers. Every float is printed with 17 significant digits in lowercase
// scientific notation so reruns diff byte for byte; non-finite values become null (JSON)
// or nan/inf (CSV).

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "minlen/dirac/spectrum.hpp"
#include "minlen/dirac/wavefunction.hpp"
#include "minlen/uncertainty/state.hpp"

namespace minlen::io {

using json = nlohmann::ordered_json;

inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

namespace detail {

inline void write(std::ostream& os, const json& j, int indent, int depth) {
  const std::string pad(std::size_t(indent * (depth + 1)), ' ');
  const std::string close(std::size_t(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << json(it.key()).dump() << ": ";
        write(os, it.value(), indent, depth + 1);
      }
      os << "\n" << close << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool scalars = true;
      for (const auto& v : j) scalars = scalars && !v.is_structured();
      os << "[";
      if (!scalars) os << "\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << (scalars ? ", " : ",\n");
        first = false;
        if (!scalars) os << pad;
        write(os, v, indent, depth + 1);
      }
      if (!scalars) os << "\n" << close;
      os << "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      os << (std::isfinite(x) ? format_double(x) : "null");
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace detail

/// Pretty-printed JSON with the fixed float format and a trailing newline.
inline std::string dump(const json& j, int indent = 2) {
  std::ostringstream os;
  detail::write(os, j, indent, 0);
  os << "\n";
  return os.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// ---------------------------------------------------------------------------------------
// Spectrum

inline json to_json(const dirac::SpectrumLevel& l) {
  json j;
  j["n"] = l.qn.n;
  j["tau"] = l.qn.tau;
  j["K"] = l.K;
  j["p0_tilde"] = l.p0_tilde;
  j["e_n"] = l.e_n;
  j["E_over_mc2"] = l.E_over_mc2;
  return j;
}

inline json to_json(const dirac::SpectrumTable& t, const dirac::DOParams& params) {
  json j;
  j["beta_tilde"] = params.beta_tilde;
  j["omega_tilde"] = params.omega_tilde;
  j["physical"] = t.physical;
  j["monotonic"] = t.monotonic;
  j["bounded"] = t.bounded;
  j["monotonicity_violation"] = t.monotonicity_violation();
  j["levels"] = json::array();
  for (const auto& l : t.levels) j["levels"].push_back(to_json(l));
  return j;
}

inline std::string spectrum_csv(const dirac::SpectrumTable& t) {
  std::string out = "n,tau,K,p0_tilde,e_n,E_over_mc2\n";
  for (const auto& l : t.levels)
    out += std::to_string(l.qn.n) + "," + std::to_string(l.qn.tau) + "," + format_double(l.K) + "," +
           format_double(l.p0_tilde) + "," + format_double(l.e_n) + "," + format_double(l.E_over_mc2) + "\n";
  return out;
}

// ---------------------------------------------------------------------------------------
// Wavefunctions

inline std::string wavefunction_csv(const dirac::WavefunctionGrid& g) {
  std::string out = "p_tilde,q,psi1,psi2,f,weight\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    out += format_double(g.p[i]) + "," + format_double(g.q[i]) + "," + format_double(g.psi1[i]) + "," +
           format_double(g.psi2[i]) + "," + format_double(g.f[i]) + "," + format_double(g.weight[i]) + "\n";
  return out;
}

inline json to_json(const dirac::WavefunctionMeta& m) {
  json j;
  j["residual_plus"] = m.residual_plus;
  j["residual_minus"] = m.residual_minus;
  j["discrete_eigenvalue"] = m.discrete_eigenvalue;
  j["node_count"] = m.node_count;
  j["derivative_error"] = m.derivative_error;
  j["resample_error"] = m.resample_error;
  j["warnings"] = m.warnings;
  return j;
}

inline json to_json(const dirac::WavefunctionGrid& g) {
  json j;
  j["level"] = to_json(g.level);
  j["beta_tilde"] = g.beta_tilde;
  j["omega_tilde"] = g.omega_tilde;
  j["frame_c0"] = g.frame_c0;
  j["own_c0"] = g.own_c0;
  j["half_width"] = g.half_width;
  j["spacing"] = g.spacing;
  j["norm_squared"] = g.norm_squared();
  j["meta"] = to_json(g.meta);
  j["p_tilde"] = g.p;
  j["q"] = g.q;
  j["psi1"] = g.psi1;
  j["psi2"] = g.psi2;
  j["f"] = g.f;
  j["weight"] = g.weight;
  return j;
}

// ---------------------------------------------------------------------------------------
// Uncertainty

struct UncertaintyRecord {
  dirac::QuantumNumber level;
  uncertainty::StateMoments state;
  double bound = 0.0;

  double product() const { return state.deltaX * state.deltaP; }
  double slack() const { return product() - bound; }
};

inline json to_json(const uncertainty::MomentSet<double>& m) {
  json j;
  j["D"] = m.D;
  j["mean_P"] = m.mean_P;
  j["spread_P"] = m.spread_P;
  j["meansq_P0"] = m.meansq_P0;
  return j;
}

inline json to_json(const UncertaintyRecord& r) {
  json j;
  j["level"] = {{"n", r.level.n}, {"tau", r.level.tau}};
  j["moments"] = to_json(r.state.moments);
  j["bound"] = r.bound;
  j["deltaX"] = r.state.deltaX;
  j["deltaP"] = r.state.deltaP;
  j["product"] = r.product();
  j["slack"] = r.slack();
  return j;
}

inline std::string uncertainty_csv(const std::vector<UncertaintyRecord>& rows) {
  std::string out = "n,tau,meansq_P0,mean_P,spread_P,bound,deltaX,deltaP,product,slack\n";
  for (const auto& r : rows)
    out += std::to_string(r.level.n) + "," + std::to_string(r.level.tau) + "," +
           format_double(r.state.moments.meansq_P0) + "," + format_double(r.state.moments.mean_P[0]) + "," +
           format_double(r.state.moments.spread_P[0]) + "," + format_double(r.bound) + "," +
           format_double(r.state.deltaX) + "," + format_double(r.state.deltaP) + "," + format_double(r.product()) +
           "," + format_double(r.slack()) + "\n";
  return out;
}

}  // namespace minlen::io
