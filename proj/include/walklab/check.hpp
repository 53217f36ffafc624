#pragma once

#include <json.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace walklab {

enum class Verdict { pass, fail, vacuous, inconclusive };

std::string_view to_string(Verdict v);

/// One evaluated instance of an inequality "lhs >= rhs" (slack = lhs - rhs).
/// Both sides are always evaluated; `vacuous` marks an unmet range
/// precondition, and holds() still says whether the inequality held.
struct CertifiedCheck {
  std::string name;
  std::string statement;
  nlohmann::json inputs = nlohmann::json::object();
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  Verdict verdict = Verdict::pass;

  bool holds() const { return slack >= -tol; }
  bool acceptable() const { return verdict == Verdict::pass || verdict == Verdict::vacuous; }
};

inline constexpr double kCertificateTol = 1e-9;

CertifiedCheck certify(std::string name, std::string statement, double lhs, double rhs,
                       double tol = kCertificateTol, bool in_range = true,
                       nlohmann::json inputs = nlohmann::json::object());

nlohmann::json to_json(const CertifiedCheck& c);
nlohmann::json to_json(std::span<const CertifiedCheck> checks);

bool all_acceptable(std::span<const CertifiedCheck> checks);
bool any_failed(std::span<const CertifiedCheck> checks);

/// Named bundle of checks plus raw numbers.
struct Report {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CertifiedCheck> checks;
  nlohmann::json data = nlohmann::json::object();

  bool acceptable() const { return all_acceptable(checks); }
  bool failed() const { return any_failed(checks); }
};

/// {"<kind>": name, "params", "checks", "data"}.
nlohmann::json to_json(const Report& r, const std::string& kind = "experiment");

}  // namespace walklab
