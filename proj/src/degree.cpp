#include "monoquot/degree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "monoquot/errors.hpp"

namespace mq {

namespace {

std::vector<Face> minimize_antichains(std::vector<Face> masks) {
    std::sort(masks.begin(), masks.end(), [](Face a, Face b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Face> kept;
    for (Face m : masks) {
        bool redundant = false;
        for (Face k : kept)
            if ((k & m) == k) { redundant = true; break; }
        if (!redundant) kept.push_back(m);
    }
    return kept;
}

} // namespace

std::vector<Face> degree_nonface_family(const MonomialIdeal& ideal, const Multidegree& a) {
    const int n = ideal.ring()->n;
    if (a.size() != n) throw std::invalid_argument("degree_nonface_family: degree size mismatch");
    std::uint32_t g = a.negative_support();
    std::vector<Face> masks;
    masks.reserve(ideal.generators().size());
    for (const Monomial& b : ideal.generators()) {
        Face d = 0;
        for (int i = 0; i < n; ++i)
            if (!(g & (1u << i)) && b[i] > a[i]) d |= 1u << i;
        if (d == 0) return {0u}; // some generator kills every face
        masks.push_back(d);
    }
    return minimize_antichains(std::move(masks));
}

SimplicialComplex degree_complex(const MonomialIdeal& ideal, const Multidegree& a) {
    const int n = ideal.ring()->n;
    std::vector<Face> nonfaces = degree_nonface_family(ideal, a);
    if (!nonfaces.empty() && nonfaces[0] == 0) return SimplicialComplex::void_complex(n);
    Face vertex_pool = static_cast<Face>((1u << n) - 1) & ~a.negative_support();
    if (nonfaces.empty()) // zero ideal: every admissible subset is a face
        return SimplicialComplex::from_facets(n, {vertex_pool});
    // facets = complements (within the pool) of minimal transversals
    std::vector<std::uint32_t> sets(nonfaces.begin(), nonfaces.end());
    std::vector<Face> facets;
    for (std::uint32_t t : minimal_transversals(std::move(sets), n))
        facets.push_back(vertex_pool & ~t);
    return SimplicialComplex::from_facets(n, std::move(facets));
}

DegreePair relative_degree_pair(const MonomialIdeal& smaller_j, const MonomialIdeal& larger_i,
                                const Multidegree& a) {
    if (!larger_i.contains_ideal(smaller_j))
        throw std::invalid_argument("relative_degree_pair: first ideal is not contained in the second");
    DegreePair out{a, degree_complex(smaller_j, a), degree_complex(larger_i, a), a.negative_support()};
    if (!out.small.is_subcomplex_of(out.big))
        throw theorem_violation("relative_degree_pair: containment of degree complexes failed");
    return out;
}

bool link_reduction_check(const MonomialIdeal& ideal, const Multidegree& a) {
    std::uint32_t g = a.negative_support();
    SimplicialComplex direct = degree_complex(ideal, a);
    std::vector<int> zeroed(a.entries);
    for (int& v : zeroed)
        if (v < 0) v = 0;
    SimplicialComplex at_plus = degree_complex(ideal, Multidegree(std::move(zeroed)));
    if (!at_plus.has_face(g)) return direct.is_void();
    return direct == at_plus.link(g);
}

std::uint64_t EnumerationBox::size() const {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(digits(i));
    return total;
}

int EnumerationBox::digits(int i) const { return std::max(rho[i], 1) + 1; }

Multidegree EnumerationBox::at(std::uint64_t index) const {
    std::vector<int> a(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int d = digits(i);
        a[i] = static_cast<int>(index % d) - 1;
        index /= d;
    }
    if (index != 0) throw std::out_of_range("EnumerationBox::at: index out of range");
    return Multidegree(std::move(a));
}

EnumerationBox enumeration_box(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("enumeration_box: mixed ring contexts");
    EnumerationBox box;
    box.n = a.ring()->n;
    box.rho.assign(box.n, 0);
    for (const MonomialIdeal* ideal : {&a, &b})
        for (const Monomial& g : ideal->generators())
            for (int i = 0; i < box.n; ++i) box.rho[i] = std::max(box.rho[i], g[i]);
    return box;
}

bool certify_outside_vanishing(const MonomialIdeal& smaller_j, const MonomialIdeal& larger_i,
                               const Multidegree& a) {
    EnumerationBox box = enumeration_box(smaller_j, larger_i);
    Multidegree norm = a.normalized_negatives();
    std::uint32_t g = norm.negative_support();
    int apex = -1;
    for (int i = 0; i < box.n; ++i)
        if (!(g & (1u << i)) && norm[i] >= std::max(box.rho[i], 1)) { apex = i; break; }
    if (apex < 0) return false; // inside the box once negatives are normalized
    SimplicialComplex big = degree_complex(smaller_j, a);
    SimplicialComplex small = degree_complex(larger_i, a);
    if (!big.is_cone_with_apex(apex) || !small.is_cone_with_apex(apex))
        throw theorem_violation("certify_outside_vanishing: cone certificate failed");
    return true;
}

} // namespace mq
