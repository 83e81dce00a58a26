#pragma once

#include <string>
#include <vector>

#include "vectcoh/cohomology.hpp"

namespace vectcoh {

enum class OutputFormat { Text, Json, Csv };

/// One weight of a dimension table.
struct TableRow {
    int lambda = 0;
    bool relative = false;
    CohomologyReport report;
    std::optional<int> reference_dim;
    bool divergent = false;
};

std::vector<TableRow> compute_table(int arity, int lambda_min, int lambda_max, bool relative);

bool any_divergent(const std::vector<TableRow>& rows);

std::string format_table(const std::vector<TableRow>& rows, int arity, OutputFormat format);
std::string format_report(const CohomologyReport& report, OutputFormat format);

}  // namespace vectcoh
