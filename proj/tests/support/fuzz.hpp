#pragma once

#include <cstdlib>
#include <vector>

#include "monoquot/graph.hpp"
#include "monoquot/monomial.hpp"
#include "monoquot/simplicial.hpp"
#include "monoquot/util.hpp"

namespace mqtest {

inline std::uint64_t test_seed() {
    if (const char* env = std::getenv("MONOQUOT_TEST_SEED")) return std::strtoull(env, nullptr, 10);
    return 20240611ULL;
}

inline mq::Monomial random_monomial(mq::SplitMix64& rng, int n, int max_exp) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = rng.range(0, max_exp);
    return mq::Monomial(std::move(e));
}

inline mq::MonomialIdeal random_ideal(mq::SplitMix64& rng, const mq::Ring& ring, int gens, int max_exp) {
    std::vector<mq::Monomial> g;
    for (int k = 0; k < gens; ++k) {
        mq::Monomial m = random_monomial(rng, ring->n, max_exp);
        if (m.is_one()) continue; // avoid the unit ideal in fuzz corpora
        g.push_back(std::move(m));
    }
    return mq::MonomialIdeal(ring, std::move(g));
}

inline mq::MonomialIdeal random_squarefree_ideal(mq::SplitMix64& rng, const mq::Ring& ring, int gens) {
    std::vector<mq::Monomial> g;
    for (int k = 0; k < gens; ++k) {
        std::uint32_t mask = static_cast<std::uint32_t>(rng.below(1u << ring->n));
        if (mask == 0) continue;
        g.push_back(mq::Monomial::from_support(ring->n, mask));
    }
    return mq::MonomialIdeal(ring, std::move(g));
}

inline mq::SimplicialComplex random_complex(mq::SplitMix64& rng, int n, int facets) {
    std::vector<mq::Face> f;
    for (int k = 0; k < facets; ++k)
        f.push_back(static_cast<mq::Face>(rng.below(1u << n)));
    return mq::SimplicialComplex::from_facets(n, std::move(f));
}

// random subcomplex of the given complex (subset of faces, closed downward)
inline mq::SimplicialComplex random_subcomplex(mq::SplitMix64& rng, const mq::SimplicialComplex& big) {
    std::vector<mq::Face> kept;
    for (mq::Face f : big.faces())
        if (rng.below(2)) kept.push_back(f);
    return mq::SimplicialComplex::from_facets(big.ground_size(), std::move(kept));
}

inline mq::Multidegree random_multidegree(mq::SplitMix64& rng, int n, int lo, int hi) {
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = rng.range(lo, hi);
    return mq::Multidegree(std::move(a));
}

// connected simple graph: random spanning tree plus extra edges
inline mq::Graph random_connected_graph(mq::SplitMix64& rng, int n, int extra_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, static_cast<int>(rng.below(v)));
    for (int k = 0; k < extra_edges; ++k) {
        int u = rng.range(0, n - 1), v = rng.range(0, n - 1);
        if (u != v) edges.emplace_back(u, v);
    }
    return mq::Graph(n, edges);
}

// all monomials in n variables of total degree <= max_deg
inline std::vector<mq::Monomial> monomials_up_to_degree(int n, int max_deg) {
    std::vector<mq::Monomial> out;
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            out.push_back(mq::Monomial(e));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[pos] = k;
            self(self, pos + 1, remaining - k);
        }
        e[pos] = 0;
    };
    rec(rec, 0, max_deg);
    return out;
}

} // namespace mqtest
