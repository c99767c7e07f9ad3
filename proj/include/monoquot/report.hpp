#pragma once

#include <map>
#include <string>

#include "monoquot/cohomology.hpp"
#include "monoquot/symbolic.hpp"

namespace mq::report {

// JSON emission for the CLI. Key order is fixed and output is
// byte-deterministic for fixed inputs; the layout is documented in
// docs/report-schema.md.
std::string profile_json(const CohomologyProfile& profile);
std::string homology_json(const std::map<int, int>& dims, int p);
std::string discrepancy_json(const DiscrepancyReport& report);
std::string cm_edge_json(const CmEdgeReport& report);
std::string symbolic_rows_json(const std::vector<SymbolicQuotientRow>& rows, bool matroid);
std::string matroid_json(bool is_matroid, bool is_pure, bool locally_matroidal);

// Plain-text tables for the default output mode.
std::string profile_table(const CohomologyProfile& profile);
std::string discrepancy_table(const DiscrepancyReport& report);
std::string cm_edge_table(const CmEdgeReport& report);
std::string symbolic_rows_table(const std::vector<SymbolicQuotientRow>& rows, bool matroid);

} // namespace mq::report
