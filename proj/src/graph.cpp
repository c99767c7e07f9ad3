#include "monoquot/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "monoquot/errors.hpp"

namespace mq {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n), adj_(n, 0) {
    if (n < 1 || n > 30) throw std::invalid_argument("Graph: vertex count out of range");
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("Graph: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
    }
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint32_t a : adj_) total += std::popcount(a);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

std::uint32_t Graph::neighbors_of_set(std::uint32_t s) const {
    std::uint32_t out = 0;
    for (int v = 0; v < n_; ++v)
        if (s & (1u << v)) out |= adj_[v];
    return out;
}

std::uint32_t Graph::closed_neighborhood(std::uint32_t s) const {
    return s | neighbors_of_set(s);
}

bool Graph::is_connected() const {
    std::uint32_t seen = 1u;
    while (true) {
        std::uint32_t next = seen | neighbors_of_set(seen);
        if (next == seen) break;
        seen = next;
    }
    return seen == (n_ >= 32 ? ~0u : (1u << n_) - 1);
}

bool Graph::is_independent_set(std::uint32_t s) const {
    return (neighbors_of_set(s) & s) == 0;
}

int Graph::independence_number() const {
    int best = 0;
    // branch on a vertex of the first covered-by-nothing... simple recursion:
    // pick the lowest remaining vertex, either skip it or take it.
    auto rec = [&](auto&& self, std::uint32_t remaining, int count) -> void {
        if (count + std::popcount(remaining) <= best) return;
        if (remaining == 0) {
            best = std::max(best, count);
            return;
        }
        int v = std::countr_zero(remaining);
        self(self, remaining & ~(1u << v), count);                    // skip v
        self(self, remaining & ~(adj_[v] | (1u << v)), count + 1);    // take v
    };
    rec(rec, n_ >= 32 ? ~0u : (1u << n_) - 1, 0);
    return best;
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> comp_edges;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) comp_edges.emplace_back(u, v);
    return Graph(n_, comp_edges);
}

Graph Graph::induced(std::uint32_t w) const {
    std::vector<int> verts;
    for (int v = 0; v < n_; ++v)
        if (w & (1u << v)) verts.push_back(v);
    if (verts.empty()) throw std::invalid_argument("Graph::induced: empty vertex set");
    std::vector<std::pair<int, int>> sub_edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j]))
                sub_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(verts.size()), sub_edges);
}

namespace {

// If the induced subgraph on w is a (chordless) cycle, returns its cyclic
// vertex order; empty vector otherwise.
std::vector<int> induced_cycle_order(const Graph& g, std::uint32_t w) {
    int size = std::popcount(w);
    if (size < 3) return {};
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((w & (1u << v)) && std::popcount(g.neighbors(v) & w) != 2) return {};
    int start = std::countr_zero(w);
    std::vector<int> order = {start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < size) {
        std::uint32_t nb = g.neighbors(cur) & w;
        int next = -1;
        while (nb) {
            int cand = std::countr_zero(nb);
            nb &= nb - 1;
            if (cand != prev) { next = cand; break; }
        }
        if (next < 0 || next == start) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(order.size()) != size) return {}; // two components of degree-2 vertices
    if (!g.has_edge(order.back(), start)) return {};
    return order;
}

bool two_colorable(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            std::uint32_t nb = g.neighbors(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool has_odd_hole(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
        int size = std::popcount(w);
        if (size < 5 || size % 2 == 0) continue;
        if (!induced_cycle_order(g, w).empty()) return true;
    }
    return false;
}

} // namespace

OddCycleCensus odd_cycle_census(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("odd_cycle_census: graph too large for full enumeration");
    OddCycleCensus census;
    std::vector<std::vector<int>> all_cycles;
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
        std::vector<int> order = induced_cycle_order(g, w);
        if (order.empty()) continue;
        all_cycles.push_back(order);
        if (order.size() % 2 == 1) {
            census.max_odd_length = std::max(census.max_odd_length, static_cast<int>(order.size()));
            census.induced_odd_cycles.push_back(std::move(order));
        }
    }
    census.bipartite = census.induced_odd_cycles.empty();
    if (census.bipartite != two_colorable(g))
        throw theorem_violation("odd_cycle_census: induced-odd-cycle and two-coloring tests disagree");
    census.c = census.bipartite ? 0 : (census.max_odd_length - 1) / 2;
    census.perfect = census.max_odd_length < 5 && !has_odd_hole(g.complement());
    census.unicyclic = g.is_connected() && g.edge_count() == n;
    if (census.unicyclic) {
        if (all_cycles.size() != 1)
            throw theorem_violation("odd_cycle_census: unicyclic graph without a unique induced cycle");
        census.unique_cycle = all_cycles[0];
    }
    return census;
}

MonomialIdeal edge_ideal(const Graph& g, Ring ring) {
    if (ring->n != g.vertex_count()) throw std::invalid_argument("edge_ideal: ring size mismatch");
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges())
        gens.push_back(mul(Monomial::variable(ring->n, u), Monomial::variable(ring->n, v)));
    return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) { return edge_ideal(g, RingContext::standard(g.vertex_count())); }

} // namespace mq
