#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "eulerkit/identity.hpp"
#include "eulerkit/verify.hpp"

namespace eulerkit {

/// Report serialization: one object per report with the identity tag, the
/// parameter point (lambda in canonical text), status, canonical residual
/// ("0" when the identity holds) and elapsed milliseconds.
inline nlohmann::json report_to_json(const VerificationReport& rep) {
  nlohmann::json extra = nlohmann::json::object();
  for (const auto& [key, value] : rep.params.extra) extra[key] = value;
  return nlohmann::json{
      {"identity", std::string(identity_tag(rep.id))},
      {"params",
       {{"n", rep.params.n},
        {"l", rep.params.l},
        {"r", rep.params.r},
        {"s", rep.params.s},
        {"lambda", rep.params.lambda.to_string()},
        {"extra", extra}}},
      {"status", rep.status == VerifyStatus::holds ? "holds" : "fails"},
      {"residual", rep.residual.to_string()},
      {"elapsed_ms", rep.elapsed.count() / 1000},
  };
}

/// Aggregate object: per-identity counts per status plus totals.
inline nlohmann::json grid_to_json(const GridResult& result) {
  nlohmann::json reports = nlohmann::json::array();
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& rep : result.reports) {
    reports.push_back(report_to_json(rep));
    auto& slot = counts[std::string(identity_tag(rep.id))];
    rep.status == VerifyStatus::holds ? ++slot.first : ++slot.second;
  }
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [tag, pair] : counts)
    summary[tag] = {{"holds", pair.first}, {"fails", pair.second}};
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& err : result.errors) {
    errors.push_back({{"identity", std::string(identity_tag(err.id))},
                      {"params", err.params.to_string()},
                      {"message", err.message}});
  }
  return nlohmann::json{{"reports", reports},
                        {"summary", summary},
                        {"errors", errors},
                        {"holds", result.holds},
                        {"fails", result.fails}};
}

}  // namespace eulerkit
