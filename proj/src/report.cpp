#include "monoquot/report.hpp"

#include <sstream>

#include <json.hpp>

namespace mq::report {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json degree_array(const Multidegree& a) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < a.size(); ++i) arr.push_back(a[i]);
    return arr;
}

ordered_json row_json(const DiscrepancyRow& row) {
    ordered_json j;
    j["t"] = row.t;
    j["zero"] = row.zero;
    j["dim"] = row.dim;
    if (row.is_cm) j["is_CM"] = *row.is_cm;
    return j;
}

} // namespace

std::string profile_json(const CohomologyProfile& profile) {
    ordered_json j;
    j["char"] = profile.p;
    j["dim"] = profile.dim;
    j["depth"] = profile.depth;
    j["is_CM"] = profile.is_cm;
    j["is_gCM"] = profile.is_gcm;
    j["zero_module"] = profile.zero_module;
    if (profile.rigidity_witness)
        j["rigidity_witness"] = degree_array(*profile.rigidity_witness);
    else
        j["rigidity_witness"] = nullptr;
    ordered_json table = ordered_json::array();
    for (const ProfileEntry& e : profile.table) {
        ordered_json entry;
        entry["i"] = e.i;
        entry["a"] = degree_array(e.a);
        entry["h"] = e.h;
        table.push_back(entry);
    }
    j["table"] = table;
    return j.dump();
}

std::string homology_json(const std::map<int, int>& dims, int p) {
    ordered_json j;
    j["char"] = p;
    ordered_json table = ordered_json::array();
    for (auto [i, h] : dims) {
        ordered_json entry;
        entry["i"] = i;
        entry["h"] = h;
        table.push_back(entry);
    }
    j["cohomology"] = table;
    return j.dump();
}

std::string discrepancy_json(const DiscrepancyReport& report) {
    ordered_json j;
    j["c"] = report.c;
    j["bipartite"] = report.bipartite;
    j["perfect"] = report.perfect;
    j["unicyclic"] = report.unicyclic;
    j["odd_cycles_dominate"] = report.neighborhood_condition;
    j["observed_stabilization"] = report.observed_stabilization;
    j["t_max"] = report.t_max;
    ordered_json rows = ordered_json::array();
    for (const DiscrepancyRow& row : report.rows) rows.push_back(row_json(row));
    j["rows"] = rows;
    return j.dump();
}

std::string cm_edge_json(const CmEdgeReport& report) {
    ordered_json j;
    j["criterion"] = report.criterion;
    j["all_zero_or_dim0"] = report.all_zero_or_dim0;
    j["all_CM"] = report.all_cm;
    j["t0_upper"] = report.t0_upper;
    j["threshold_certified"] = report.threshold_certified;
    j["threshold_reached"] = report.threshold_reached;
    ordered_json rows = ordered_json::array();
    for (const DiscrepancyRow& row : report.rows) rows.push_back(row_json(row));
    j["rows"] = rows;
    return j.dump();
}

std::string symbolic_rows_json(const std::vector<SymbolicQuotientRow>& rows, bool matroid) {
    ordered_json j;
    j["is_matroid"] = matroid;
    ordered_json arr = ordered_json::array();
    for (const SymbolicQuotientRow& row : rows) {
        ordered_json entry;
        entry["t"] = row.t;
        entry["dim"] = row.dim;
        entry["is_CM"] = row.is_cm;
        arr.push_back(entry);
    }
    j["rows"] = arr;
    return j.dump();
}

std::string matroid_json(bool is_matroid, bool is_pure, bool locally) {
    ordered_json j;
    j["is_matroid"] = is_matroid;
    j["is_pure"] = is_pure;
    j["locally_matroidal"] = locally;
    return j.dump();
}

std::string profile_table(const CohomologyProfile& profile) {
    std::ostringstream out;
    out << "char " << profile.p << "  dim " << profile.dim << "  depth " << profile.depth
        << "  CM " << (profile.is_cm ? "yes" : "no") << "  gCM " << (profile.is_gcm ? "yes" : "no");
    if (profile.zero_module) out << "  (zero module)";
    out << "\n";
    if (profile.rigidity_witness) {
        out << "rigidity witness at a = (";
        for (int i = 0; i < profile.rigidity_witness->size(); ++i) {
            if (i) out << ",";
            out << (*profile.rigidity_witness)[i];
        }
        out << ")\n";
    }
    for (const ProfileEntry& e : profile.table) {
        out << "  i=" << e.i << "  a=(";
        for (int i = 0; i < e.a.size(); ++i) {
            if (i) out << ",";
            out << e.a[i];
        }
        out << ")  h=" << e.h << "\n";
    }
    return out.str();
}

std::string discrepancy_table(const DiscrepancyReport& report) {
    std::ostringstream out;
    out << "c=" << report.c << " bipartite=" << (report.bipartite ? "yes" : "no")
        << " perfect=" << (report.perfect ? "yes" : "no")
        << " unicyclic=" << (report.unicyclic ? "yes" : "no")
        << " odd-cycles-dominate=" << (report.neighborhood_condition ? "yes" : "no") << "\n";
    out << "observed stabilization <= t_max: t0=" << report.observed_stabilization << "\n";
    out << "  t | zero | dim | CM\n";
    for (const DiscrepancyRow& row : report.rows) {
        out << "  " << row.t << " | " << (row.zero ? "yes" : " no") << " | " << row.dim << " | ";
        if (row.is_cm)
            out << (*row.is_cm ? "yes" : "no");
        else
            out << "-";
        out << "\n";
    }
    return out.str();
}

std::string cm_edge_table(const CmEdgeReport& report) {
    std::ostringstream out;
    out << "odd cycles dominate: " << (report.criterion ? "yes" : "no")
        << "  all zero-or-dim0: " << (report.all_zero_or_dim0 ? "yes" : "no")
        << "  all CM: " << (report.all_cm ? "yes" : "no") << "\n";
    if (report.threshold_certified)
        out << "threshold t0 <= " << report.t0_upper
            << (report.threshold_reached ? " (reached)" : " (not reached)") << "\n";
    out << "  t | zero | dim | CM\n";
    for (const DiscrepancyRow& row : report.rows) {
        out << "  " << row.t << " | " << (row.zero ? "yes" : " no") << " | " << row.dim << " | "
            << (row.is_cm && *row.is_cm ? "yes" : "no") << "\n";
    }
    return out.str();
}

std::string symbolic_rows_table(const std::vector<SymbolicQuotientRow>& rows, bool matroid) {
    std::ostringstream out;
    out << "matroid: " << (matroid ? "yes" : "no") << "\n";
    out << "  t | dim | CM\n";
    for (const SymbolicQuotientRow& row : rows)
        out << "  " << row.t << " | " << row.dim << " | " << (row.is_cm ? "yes" : "no") << "\n";
    return out.str();
}

} // namespace mq::report
