#include "stubborn/verifier.hpp"

#include <json.hpp>

namespace stubborn {

VerificationReport verify(Value n, unsigned base, ChangeCount count, MsdPolicy policy) {
  VerificationReport report;
  report.candidate = n;
  report.base = base;
  report.count = count;
  report.policy = policy;

  const DigitString ds(n, base);

  // Exactly-k streams do not include the identity, but the problem still asks
  // for a composite candidate.
  if (count.mode == CountMode::Exactly && !is_composite(n)) {
    report.verdict = false;
    report.counterexample = Counterexample{Alteration{}, n, classify(n)};
    return report;
  }

  report.verdict = for_each_alteration(
      ds, count, policy, [&](const Alteration& alt, Value altered) {
        ++report.tested;
        const PrimalityVerdict verdict = classify(altered);
        if (verdict != PrimalityVerdict::Composite) {
          report.counterexample = Counterexample{alt, altered, verdict};
          return false;
        }
        return true;
      });
  return report;
}

std::string report_json(const VerificationReport& report) {
  nlohmann::json j;
  j["candidate"] = report.candidate;
  j["base"] = report.base;
  j["count"] = to_string(report.count);
  j["policy"] = to_string(report.policy);
  j["verdict"] = report.verdict;
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    nlohmann::json positions = nlohmann::json::array();
    nlohmann::json digits = nlohmann::json::array();
    for (std::size_t i = 0; i < ce.alteration.size(); ++i) {
      positions.push_back(ce.alteration[i].position);
      digits.push_back(ce.alteration[i].new_digit);
    }
    j["counterexample"] = {{"positions", positions},
                           {"new_digits", digits},
                           {"value", ce.altered_value},
                           {"verdict", to_string(ce.verdict)}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["tested"] = report.tested;
  return j.dump();
}

TableSummary verify_table(const std::vector<TableEntry>& entries) {
  TableSummary summary;
  for (const auto& entry : entries) {
    const auto report = verify(entry.value, entry.base, entry.count, entry.policy);
    TableCheck check{entry, report.verdict, report.verdict == entry.expected};
    if (!check.ok) ++summary.mismatches;
    summary.checks.push_back(check);
  }
  return summary;
}

}  // namespace stubborn
