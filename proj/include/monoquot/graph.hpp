#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monoquot/monomial.hpp"

namespace mq {

// Simple graph on vertices 0..n-1, adjacency stored as bitmasks.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list); // loops are errors, duplicates merged

    int vertex_count() const { return n_; }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint32_t neighbors(int v) const { return adj_[v]; }
    std::uint32_t neighbors_of_set(std::uint32_t s) const;     // N(S)
    std::uint32_t closed_neighborhood(std::uint32_t s) const;  // N[S]

    bool is_connected() const;
    bool is_independent_set(std::uint32_t s) const;
    int independence_number() const;

    Graph complement() const;
    Graph induced(std::uint32_t w) const; // vertices relabeled in ascending order

private:
    int n_;
    std::vector<std::uint32_t> adj_;
};

// Full enumeration of induced cycles (desk scale), with the derived
// classification flags.
struct OddCycleCensus {
    std::vector<std::vector<int>> induced_odd_cycles; // cyclic vertex order
    int max_odd_length = 0;
    int c = 0; // (max induced odd cycle length - 1) / 2; 0 when bipartite
    bool bipartite = true;
    bool perfect = false;  // no induced odd cycle of length >= 5 in the graph or its complement
    bool unicyclic = false;
    std::vector<int> unique_cycle; // set when unicyclic
};

OddCycleCensus odd_cycle_census(const Graph& g);

MonomialIdeal edge_ideal(const Graph& g, Ring ring);
MonomialIdeal edge_ideal(const Graph& g); // standard ring x1..xn

} // namespace mq
