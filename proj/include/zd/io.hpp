#pragma once

#include "zd/criteria.hpp"
#include "zd/growth.hpp"
#include "zd/log_sums.hpp"
#include "zd/zero_sequence.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace zd {

/// Malformed input file; line is 1-based (0 when not line-specific).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, int line, const std::string& what);
    int line;
};

/// CSV with header `re,im` (one point per row, repetition = multiplicity)
/// or a JSON array of [re, im] pairs; chosen by file content. Non-finite
/// values and the origin are rejected.
ZeroSequence load_zero_sequence(const std::string& path);
void save_zero_sequence_csv(const ZeroSequence& z, const std::string& path);

/// CSV `x,value` preceded by a declaration line `# kind=Q|d tail=...`.
GrowthFunction load_growth_function(const std::string& path);
void save_growth_function_csv(const GrowthFunction& g, const std::string& path);

std::string report_to_json(const CriterionReport& rep,
                           const std::vector<std::pair<std::string, std::string>>& config);
std::string report_surface_csv(const CriterionReport& rep);
std::string log_sum_table_csv(const std::vector<LogSumRow>& rows);

/// Write via temp file + rename in the target directory.
void write_text_atomic(const std::string& path, const std::string& content);

} // namespace zd
