#include "walklab/check.hpp"

#include <algorithm>
#include <cmath>

namespace walklab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::vacuous:
      return "vacuous";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "fail";
}

CertifiedCheck certify(std::string name, std::string statement, double lhs, double rhs, double tol,
                       bool in_range, nlohmann::json inputs) {
  CertifiedCheck c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  c.inputs = std::move(inputs);
  c.lhs = lhs;
  c.rhs = rhs;
  c.tol = tol;
  c.slack = lhs - rhs;
  if (std::isinf(lhs) && std::isinf(rhs) && lhs == rhs) c.slack = 0.0;
  if (!in_range)
    c.verdict = Verdict::vacuous;
  else
    c.verdict = (!std::isnan(c.slack) && c.slack >= -tol) ? Verdict::pass : Verdict::fail;
  return c;
}

nlohmann::json to_json(const CertifiedCheck& c) {
  return {{"name", c.name},         {"statement", c.statement}, {"lhs", c.lhs},
          {"rhs", c.rhs},           {"slack", c.slack},         {"tol", c.tol},
          {"verdict", to_string(c.verdict)}, {"holds", c.holds()}, {"inputs", c.inputs}};
}

nlohmann::json to_json(std::span<const CertifiedCheck> checks) {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

bool all_acceptable(std::span<const CertifiedCheck> checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.acceptable(); });
}

bool any_failed(std::span<const CertifiedCheck> checks) {
  return std::any_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.verdict == Verdict::fail; });
}

nlohmann::json to_json(const Report& r, const std::string& kind) {
  return {{kind, r.name}, {"params", r.params}, {"checks", to_json(r.checks)}, {"data", r.data}};
}

}  // namespace walklab
