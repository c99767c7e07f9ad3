#include "monoquot/symbolic.hpp"

#include <algorithm>
#include <bit>
#include <iostream>
#include <stdexcept>

#include "monoquot/errors.hpp"

namespace mq {

namespace {

void require_squarefree(const MonomialIdeal& ideal, const char* op) {
    for (const Monomial& g : ideal.generators())
        if (!g.is_squarefree())
            throw std::invalid_argument(std::string(op) + ": ideal is not squarefree");
}

// Generators of P^t for the prime on the variables of mask: all exponent
// vectors supported inside mask with total degree t.
std::vector<Monomial> prime_power_generators(int n, std::uint32_t mask, int t) {
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) vars.push_back(i);
    std::vector<Monomial> out;
    std::vector<int> exp(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == vars.size()) {
            exp[vars[pos]] = remaining;
            out.push_back(Monomial(exp));
            exp[vars[pos]] = 0;
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            exp[vars[pos]] = k;
            self(self, pos + 1, remaining - k);
        }
        exp[vars[pos]] = 0;
    };
    if (!vars.empty()) rec(rec, 0, t);
    return out;
}

} // namespace

bool in_symbolic_power(const MonomialIdeal& ideal, const Monomial& m, int t) {
    require_squarefree(ideal, "in_symbolic_power");
    if (ideal.is_zero()) return m.total_degree() < 0; // never; zero ideal contains nothing
    for (std::uint32_t prime : minimal_primes(ideal)) {
        int total = 0;
        for (int i = 0; i < m.nvars(); ++i)
            if (prime & (1u << i)) total += m[i];
        if (total < t) return false;
    }
    return true;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int t, std::size_t gen_cap) {
    require_squarefree(ideal, "symbolic_power");
    if (t < 1) throw std::invalid_argument("symbolic_power: exponent must be positive");
    if (ideal.is_zero()) return ideal;
    if (ideal.is_unit()) throw std::invalid_argument("symbolic_power: unit ideal has no minimal primes");
    const int n = ideal.ring()->n;
    std::vector<MonomialIdeal> parts;
    for (std::uint32_t prime : minimal_primes(ideal))
        parts.emplace_back(ideal.ring(), prime_power_generators(n, prime, t));
    bool warned = false;
    while (parts.size() > 1) {
        std::vector<MonomialIdeal> next;
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
            next.push_back(intersect(parts[i], parts[i + 1]));
            if (!warned && next.back().generators().size() > gen_cap) {
                std::cerr << "symbolic_power: intermediate generator count "
                          << next.back().generators().size() << " exceeds cap " << gen_cap << "\n";
                warned = true;
            }
        }
        if (parts.size() % 2 == 1) next.push_back(parts.back());
        parts = std::move(next);
    }
    return parts[0];
}

bool locally_matroidal(const SimplicialComplex& complex) {
    for (Face f : complex.faces()) {
        if (f == 0) continue;
        if (!complex.link(f).is_matroid()) return false;
    }
    return true;
}

bool ratliff_check(const MonomialIdeal& ideal, int t_max) {
    if (t_max < 1) throw std::invalid_argument("ratliff_check: range must be positive");
    if (ideal.is_zero()) return true;
    for (int t = 1; t <= t_max; ++t) {
        if (!(colon_ideal(ideal_power(ideal, t + 1), ideal) == ideal_power(ideal, t))) return false;
    }
    return true;
}

std::vector<SymbolicQuotientRow> symbolic_quotient_report(const SimplicialComplex& complex, int t_max,
                                                          int p, const ScanOptions& opts) {
    Ring ring = RingContext::standard(complex.ground_size());
    MonomialIdeal ideal = stanley_reisner_ideal(complex, ring);
    if (ideal.is_zero())
        throw std::invalid_argument("symbolic_quotient_report: zero Stanley-Reisner ideal");
    const int base_dim = dim_quotient(ideal);

    std::vector<SymbolicQuotientRow> rows;
    MonomialIdeal current = symbolic_power(ideal, 1);
    for (int t = 1; t <= t_max; ++t) {
        MonomialIdeal next = symbolic_power(ideal, t + 1);
        if (!(colon_ideal(next, current) == ideal))
            throw theorem_violation("symbolic_quotient_report: colon identity failed");
        CohomologyProfile prof = depth_and_cm(next, current, p, opts);
        if (prof.dim != base_dim)
            throw theorem_violation("symbolic_quotient_report: quotient dimension differs from dim S/I");
        rows.push_back({t, prof.dim, prof.is_cm});
        current = std::move(next);
    }

    bool matroid = complex.is_matroid();
    bool any_cm_t2 = false, all_cm_t2 = true, has_t2 = false;
    for (const SymbolicQuotientRow& r : rows) {
        if (r.t < 2) continue;
        has_t2 = true;
        any_cm_t2 |= r.is_cm;
        all_cm_t2 &= r.is_cm;
    }
    if (has_t2) {
        if (matroid != all_cm_t2 || matroid != any_cm_t2)
            throw theorem_violation("symbolic_quotient_report: matroid equivalence failed");
        if (matroid && !rows[0].is_cm)
            throw theorem_violation("symbolic_quotient_report: matroid with non-CM first quotient");
    }
    return rows;
}

namespace {

DiscrepancyRow discrepancy_row(const MonomialIdeal& ordinary, const MonomialIdeal& symbolic, int t,
                               int p, bool with_cm, const ScanOptions& opts) {
    DiscrepancyRow row;
    row.t = t;
    row.zero = ordinary.contains_ideal(symbolic);
    row.dim = row.zero ? -1 : dim_quotient_pair(ordinary, symbolic);
    if (with_cm)
        row.is_cm = row.zero ? true : depth_and_cm(ordinary, symbolic, p, opts).is_cm;
    return row;
}

int observed_stabilization_index(const std::vector<DiscrepancyRow>& rows) {
    if (rows.empty()) return 1;
    int idx = static_cast<int>(rows.size());
    int last = rows.back().dim;
    while (idx >= 2 && rows[idx - 2].dim == last) --idx;
    return idx; // rows are 1-based in t
}

} // namespace

bool cm_edge_criterion(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("cm_edge_criterion: graph must be connected");
    OddCycleCensus census = odd_cycle_census(g);
    if (census.bipartite) throw std::invalid_argument("cm_edge_criterion: graph must not be bipartite");
    std::uint32_t all = (1u << g.vertex_count()) - 1;
    for (const auto& cycle : census.induced_odd_cycles) {
        std::uint32_t mask = 0;
        for (int v : cycle) mask |= 1u << v;
        if (g.closed_neighborhood(mask) != all) return false;
    }
    return true;
}

DiscrepancyReport discrepancy_report(const Graph& g, int t_max, int p, bool with_cm,
                                     const ScanOptions& opts) {
    if (!g.is_connected()) throw std::invalid_argument("discrepancy_report: graph must be connected");
    if (t_max < 2) throw std::invalid_argument("discrepancy_report: t_max must be at least 2");
    OddCycleCensus census = odd_cycle_census(g);

    DiscrepancyReport report;
    report.c = census.c;
    report.bipartite = census.bipartite;
    report.perfect = census.perfect;
    report.unicyclic = census.unicyclic;
    report.neighborhood_condition = census.bipartite ? false : cm_edge_criterion(g);
    report.t_max = t_max;

    MonomialIdeal ideal = edge_ideal(g);
    for (int t = 1; t <= t_max; ++t) {
        MonomialIdeal ordinary = ideal_power(ideal, t);
        MonomialIdeal symbolic = symbolic_power(ideal, t);
        report.rows.push_back(discrepancy_row(ordinary, symbolic, t, p, with_cm, opts));
        if ((report.rows.back().dim == -1) != report.rows.back().zero)
            throw theorem_violation("discrepancy_report: zero flag and dimension disagree");
        if (t >= 2 && report.rows[t - 2].dim > report.rows.back().dim)
            throw theorem_violation("discrepancy_report: dimension function decreased");
        if (census.bipartite && !report.rows.back().zero)
            throw theorem_violation("discrepancy_report: bipartite graph with nonzero quotient");
    }
    report.observed_stabilization = observed_stabilization_index(report.rows);
    return report;
}

int unicyclic_stable_dim(const Graph& g) {
    OddCycleCensus census = odd_cycle_census(g);
    if (!census.unicyclic || census.unique_cycle.size() % 2 == 0)
        throw std::invalid_argument("unicyclic_stable_dim: graph must be unicyclic with odd cycle");
    std::uint32_t cycle_mask = 0;
    for (int v : census.unique_cycle) cycle_mask |= 1u << v;
    std::uint32_t outside = ((1u << g.vertex_count()) - 1) & ~g.closed_neighborhood(cycle_mask);
    if (outside == 0) return 0; // independence number over the empty vertex set
    return g.induced(outside).independence_number();
}

bool perfect_stable_check(const Graph& g, int t_max) {
    OddCycleCensus census = odd_cycle_census(g);
    if (!census.perfect) throw std::invalid_argument("perfect_stable_check: graph is not perfect");
    if (t_max < 2) throw std::invalid_argument("perfect_stable_check: t_max must be at least 2");
    MonomialIdeal ideal = edge_ideal(g);
    int base = -2;
    for (int t = 2; t <= t_max; ++t) {
        MonomialIdeal ordinary = ideal_power(ideal, t);
        MonomialIdeal symbolic = symbolic_power(ideal, t);
        int d = ordinary.contains_ideal(symbolic) ? -1 : dim_quotient_pair(ordinary, symbolic);
        if (t == 2)
            base = d;
        else if (d != base)
            return false;
    }
    return true;
}

CmEdgeReport cm_edge_report(const Graph& g, int t_max, int p, const ScanOptions& opts) {
    OddCycleCensus census = odd_cycle_census(g);
    if (census.bipartite) throw std::invalid_argument("cm_edge_report: graph must not be bipartite");
    DiscrepancyReport disc = discrepancy_report(g, t_max, p, /*with_cm=*/true, opts);

    CmEdgeReport report;
    report.criterion = disc.neighborhood_condition;
    report.rows = disc.rows;
    report.all_zero_or_dim0 = true;
    report.all_cm = true;
    for (const DiscrepancyRow& r : report.rows) {
        report.all_zero_or_dim0 &= r.zero || r.dim == 0;
        report.all_cm &= r.is_cm.value_or(true);
    }
    if (report.criterion != report.all_zero_or_dim0 || report.criterion != report.all_cm)
        throw theorem_violation("cm_edge_report: equivalence failed on the computed range");

    // The threshold for the "some large t" form is certified only where a
    // closed-form stabilization bound exists (odd unicyclic or perfect).
    bool odd_unicyclic = census.unicyclic && census.unique_cycle.size() % 2 == 1;
    report.threshold_certified = odd_unicyclic || census.perfect;
    int stab_bound = 0;
    if (odd_unicyclic)
        stab_bound = static_cast<int>(census.unique_cycle.size() + 1) / 2; // s + 1
    else if (census.perfect)
        stab_bound = 2;
    report.t0_upper = report.threshold_certified ? std::max(stab_bound, census.c) + 3 : 0;
    report.threshold_reached = report.threshold_certified && t_max >= report.t0_upper;
    if (report.threshold_reached) {
        bool cm_at_large_t = false;
        for (const DiscrepancyRow& r : report.rows)
            if (r.t >= report.t0_upper && r.is_cm.value_or(true)) cm_at_large_t = true;
        if (cm_at_large_t != report.criterion)
            throw theorem_violation("cm_edge_report: threshold form of the equivalence failed");
    }
    return report;
}

namespace {

MonomialIdeal variables_ideal(const Ring& ring, std::uint32_t mask) {
    std::vector<Monomial> gens;
    for (int i = 0; i < ring->n; ++i)
        if (mask & (1u << i)) gens.push_back(Monomial::variable(ring->n, i));
    return MonomialIdeal(ring, std::move(gens));
}

Monomial edge_monomial(int n, int u, int v) {
    return mul(Monomial::variable(n, u), Monomial::variable(n, v));
}

} // namespace

bool colon_radical_identities(const Graph& g, int t_prime, int s) {
    if (s < 1) throw std::invalid_argument("colon_radical_identities: s must be positive");
    OddCycleCensus census = odd_cycle_census(g);
    if (census.bipartite)
        throw std::invalid_argument("colon_radical_identities: graph must not be bipartite");
    int min_length = census.max_odd_length;
    for (const auto& cycle : census.induced_odd_cycles)
        min_length = std::min(min_length, static_cast<int>(cycle.size()));
    if (min_length != 2 * t_prime + 1)
        throw std::invalid_argument("colon_radical_identities: no minimum induced odd cycle of the stated length");

    // canonical minimum cycle: smallest vertex set in mask order
    const std::vector<int>* cycle = nullptr;
    std::uint32_t best_mask = ~0u;
    for (const auto& cand : census.induced_odd_cycles) {
        if (static_cast<int>(cand.size()) != min_length) continue;
        std::uint32_t mask = 0;
        for (int v : cand) mask |= 1u << v;
        if (mask < best_mask) {
            best_mask = mask;
            cycle = &cand;
        }
    }
    const int n = g.vertex_count();
    const int t = t_prime + s;
    MonomialIdeal ideal = edge_ideal(g);
    const Ring& ring = ideal.ring();
    MonomialIdeal ordinary = ideal_power(ideal, t);
    Monomial cycle_monomial = Monomial::from_support(n, best_mask);
    std::uint32_t closed = g.closed_neighborhood(best_mask);

    auto witness_ok = [&](const Monomial& w, const MonomialIdeal& expected_radical) {
        if (!in_symbolic_power(ideal, w, t)) return false;
        if (ordinary.contains(w)) return false;
        return radical(colon(ordinary, w)) == expected_radical;
    };

    // identity at the plain cycle witness
    Monomial cycle_edge = edge_monomial(n, (*cycle)[0], (*cycle)[1]);
    Monomial base_witness = mul(cycle_monomial, power(cycle_edge, s - 1));
    bool ok = witness_ok(base_witness, ideal_sum(ideal, variables_ideal(ring, closed)));

    if (s >= 2) {
        // neighbor y of the cycle, adjacent to cycle vertex u with cycle edge uv
        int y = -1, u = -1, v = -1;
        std::uint32_t outside_nb = closed & ~best_mask;
        for (int cand = 0; cand < n && y < 0; ++cand) {
            if (!(outside_nb & (1u << cand))) continue;
            for (std::size_t k = 0; k < cycle->size(); ++k) {
                if (g.has_edge((*cycle)[k], cand)) {
                    y = cand;
                    u = (*cycle)[k];
                    v = (*cycle)[(k + 1) % cycle->size()];
                    break;
                }
            }
        }
        if (y < 0)
            throw std::invalid_argument("colon_radical_identities: no neighbor of the cycle exists");
        Monomial uv = edge_monomial(n, u, v);
        Monomial w2 = mul(mul(cycle_monomial, power(uv, s - 2)), edge_monomial(n, u, y));
        MonomialIdeal expected2 = ideal_sum(ideal_sum(ideal, variables_ideal(ring, closed)),
                                            variables_ideal(ring, g.neighbors(y)));
        ok = ok && witness_ok(w2, expected2);

        if (s >= 3) {
            std::uint32_t z_candidates = g.neighbors(y) & ~closed;
            if (z_candidates == 0)
                throw std::invalid_argument("colon_radical_identities: no outside neighbor of y exists");
            int z = std::countr_zero(z_candidates);
            Monomial w3 = mul(mul(mul(cycle_monomial, power(uv, s - 3)), edge_monomial(n, u, y)),
                              edge_monomial(n, y, z));
            MonomialIdeal expected3 =
                ideal_sum(ideal_sum(ideal, variables_ideal(ring, closed)),
                          variables_ideal(ring, g.neighbors(y) | g.neighbors(z)));
            ok = ok && witness_ok(w3, expected3);
        }
    }
    return ok;
}

std::optional<bool> gcm_discrepancy_check(const Graph& g, int t, int p, const ScanOptions& opts) {
    MonomialIdeal ideal = edge_ideal(g);
    MonomialIdeal ordinary = ideal_power(ideal, t);
    MonomialIdeal symbolic = symbolic_power(ideal, t);
    if (ordinary.contains_ideal(symbolic)) return std::nullopt;
    if (dim_quotient_pair(ordinary, symbolic) < 2) return std::nullopt;

    const int n = g.vertex_count();
    bool all_cm = true;
    for (std::uint32_t f = 1; f < (1u << n) && all_cm; ++f) {
        if (!g.is_independent_set(f)) continue;
        std::uint32_t rest = ((1u << n) - 1) & ~g.closed_neighborhood(f);
        if (rest == 0) continue; // quotient over the empty graph is zero
        Graph sub = g.induced(rest);
        MonomialIdeal sub_ideal = edge_ideal(sub);
        if (sub_ideal.is_zero()) continue;
        MonomialIdeal sub_ordinary = ideal_power(sub_ideal, t);
        MonomialIdeal sub_symbolic = symbolic_power(sub_ideal, t);
        if (sub_ordinary.contains_ideal(sub_symbolic)) continue;
        all_cm &= depth_and_cm(sub_ordinary, sub_symbolic, p, opts).is_cm;
    }
    if (all_cm != gcm_check(ordinary, symbolic, p, opts))
        throw theorem_violation("gcm_discrepancy_check: neighborhood test and direct test disagree");
    return all_cm;
}

} // namespace mq
