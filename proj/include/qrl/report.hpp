#pragma once

#include "qrl/harness.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qrl {

/// Keys are sorted (nlohmann::json is map-backed) and nothing time- or
/// host-dependent is included, so equal reports serialize byte-identically.
nlohmann::json to_json(const VerificationReport& report);

/// One row per fact: kind,key,symbol,class,prime,count,detail. `summary`
/// rows carry tested/complement counts, `by_class` and `complement` rows the
/// outcome tallies, `mismatch` and `anomaly` rows one record each.
std::string to_csv(const VerificationReport& report);

std::string to_text(const VerificationReport& report);

nlohmann::json to_json(const std::vector<ClassTableRow>& rows, ClassFamily family);
std::string to_csv(const std::vector<ClassTableRow>& rows);
std::string to_text(const std::vector<ClassTableRow>& rows, ClassFamily family);

nlohmann::json to_json(const ExampleTable& table);
std::string to_csv(const ExampleTable& table);
std::string to_text(const ExampleTable& table);

/// Lines of "<prime> <+1|-1>", '#' starts a comment. Throws InvalidArgument
/// on malformed lines.
std::vector<GoldenEntry> parse_golden(std::istream& in);

} // namespace qrl
