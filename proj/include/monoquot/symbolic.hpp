#pragma once

#include <optional>
#include <vector>

#include "monoquot/cohomology.hpp"
#include "monoquot/graph.hpp"
#include "monoquot/monomial.hpp"
#include "monoquot/simplicial.hpp"

namespace mq {

// t-th symbolic power of a squarefree monomial ideal: intersection of the
// t-th powers of its minimal primes. Warns on stderr once when an
// intermediate generator count passes gen_cap.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int t, std::size_t gen_cap = 50000);

// Membership in the t-th symbolic power without building it.
bool in_symbolic_power(const MonomialIdeal& ideal, const Monomial& m, int t);

struct SymbolicQuotientRow {
    int t;
    int dim;
    bool is_cm;
};

// Per-t Cohen-Macaulay verdicts for the quotients of consecutive symbolic
// powers of the Stanley-Reisner ideal, with the colon and dimension
// identities asserted and the matroid equivalence cross-checked.
std::vector<SymbolicQuotientRow> symbolic_quotient_report(const SimplicialComplex& complex, int t_max,
                                                          int p, const ScanOptions& opts = {});

bool locally_matroidal(const SimplicialComplex& complex);

// I^{t+1} : I = I^t for 1 <= t <= t_max.
bool ratliff_check(const MonomialIdeal& ideal, int t_max);

struct DiscrepancyRow {
    int t;
    bool zero;
    int dim;
    std::optional<bool> is_cm;
};

struct DiscrepancyReport {
    int c = 0;
    bool bipartite = false;
    bool perfect = false;
    bool unicyclic = false;
    bool neighborhood_condition = false; // every induced odd cycle dominates the graph
    int observed_stabilization = 1;      // first index with a constant tail, within t_max
    int t_max = 0;
    std::vector<DiscrepancyRow> rows;
};

// Dimension (and optionally CM) data of the symbolic-ordinary quotients of
// an edge ideal for t = 1..t_max; dimension monotonicity is asserted.
DiscrepancyReport discrepancy_report(const Graph& g, int t_max, int p, bool with_cm,
                                     const ScanOptions& opts = {});

// Stable dimension value of the discrepancy quotients of a unicyclic graph
// with odd cycle: the independence number of the graph minus the closed
// neighborhood of the cycle.
int unicyclic_stable_dim(const Graph& g);

// For a perfect graph: the dimension of the discrepancy quotient is
// constant from t = 2 through t_max.
bool perfect_stable_check(const Graph& g, int t_max);

// N[C] covers all vertices for every induced odd cycle C.
bool cm_edge_criterion(const Graph& g);

struct CmEdgeReport {
    bool criterion = false;
    bool all_zero_or_dim0 = false;
    bool all_cm = false;
    int t0_upper = 0;              // threshold max(stabilization, c) + 3 when certifiable
    bool threshold_certified = false;
    bool threshold_reached = false;
    std::vector<DiscrepancyRow> rows;
};

// Verdicts for t = 1..t_max with the equivalences between the
// neighborhood condition, the all-zero-or-zero-dimensional condition and
// the CM condition asserted on the computed range.
CmEdgeReport cm_edge_report(const Graph& g, int t_max, int p, const ScanOptions& opts = {});

// Exact radical-colon identities for witness monomials built from a
// minimum-length induced odd cycle (plus a neighbor y and its outside
// neighbor z when s allows). t_prime is half the cycle length.
bool colon_radical_identities(const Graph& g, int t_prime, int s);

// Generalized-CM test for the discrepancy quotient via deletions of closed
// neighborhoods of independent sets; nullopt when the criterion does not
// apply (dimension below two). Cross-checked against the direct test.
std::optional<bool> gcm_discrepancy_check(const Graph& g, int t, int p, const ScanOptions& opts = {});

} // namespace mq
