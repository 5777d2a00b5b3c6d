#pragma once

#include "rewardtest/axioms.hpp"
#include "rewardtest/lts.hpp"
#include "rewardtest/observations.hpp"
#include "rewardtest/preorder.hpp"
#include "rewardtest/properties.hpp"
#include "rewardtest/reward.hpp"

#include <string>
#include <vector>

// JSON and text renderings used by the command line front end. Keys are emitted sorted, so
// output is byte-for-byte stable for a given input.
namespace rewardtest::report {

std::string lts_json(const Lts& lts);
std::string verdict_json(const Verdict& v);
std::string verdict_text(const Verdict& v);
std::string apply_json(const Term& test, const Term& proc, Mode mode, const ApplySummary& s);
std::string apply_text(const Term& test, const Term& proc, Mode mode, const ApplySummary& s);
std::string audit_json(const AuditResult& a);
std::string audit_text(const AuditResult& a);
std::string matrix_json(const std::vector<SoundnessReport>& reports);
std::string property_json(const std::vector<NamedProperty>& props, const std::vector<PropertyResult>& results);
std::string property_text(const std::vector<NamedProperty>& props, const std::vector<PropertyResult>& results);
std::string summary_json(const ObservationSummary& s);

}  // namespace rewardtest::report
