#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "minlen/symbolic/operator.hpp"

namespace minlen::sym {

struct IdentityResult {
  std::string identity_id;
  std::string latex_tag;
  bool pass = true;
  /// Terms left in the normal form of (lhs - rhs), summed over index values.
  std::size_t residual_term_count = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<IdentityResult> identities;

  bool passed() const {
    for (const auto& r : identities)
      if (!r.pass) return false;
    return !identities.empty();
  }

  const IdentityResult* find(const std::string& id) const {
    for (const auto& r : identities)
      if (r.identity_id == id) return &r;
    return nullptr;
  }

  /// Records one identity family; every residual must vanish for it to pass.
  void record(std::string id, std::string latex, const std::vector<Operator>& residuals) {
    IdentityResult r{std::move(id), std::move(latex), true, 0};
    for (const auto& op : residuals) r.residual_term_count += op.term_count();
    r.pass = r.residual_term_count == 0;
    identities.push_back(std::move(r));
  }

  /// Folds another report in, merging families with the same id.
  void merge(const VerificationReport& other) {
    for (const auto& r : other.identities) {
      auto it = std::find_if(identities.begin(), identities.end(),
                             [&](const IdentityResult& x) { return x.identity_id == r.identity_id; });
      if (it == identities.end()) {
        identities.push_back(r);
      } else {
        it->pass = it->pass && r.pass;
        it->residual_term_count += r.residual_term_count;
      }
    }
  }
};

inline nlohmann::ordered_json to_json(const IdentityResult& r) {
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  j["latex_tag"] = r.latex_tag;
  j["pass"] = r.pass;
  j["residual_term_count"] = r.residual_term_count;
  return j;
}

/// Serialised as a plain list of identity records.
inline nlohmann::ordered_json to_json(const VerificationReport& report) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : report.identities) arr.push_back(to_json(r));
  return arr;
}

}  // namespace minlen::sym
