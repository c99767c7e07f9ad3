#pragma once

#include <cstdint>
#include <vector>

#include "monoquot/monomial.hpp"
#include "monoquot/simplicial.hpp"

namespace mq {

// Degree complex of a monomial ideal at a multidegree a: the faces F with
// F disjoint from G_a such that every minimal generator x^b has an index
// i outside F and G_a with b_i > a_i. Equivalently, with
// D(b) = {i outside G_a : b_i > a_i}, the faces are the subsets of
// [n] \ G_a containing no D(b); the D(b) are the minimal non-faces.
SimplicialComplex degree_complex(const MonomialIdeal& ideal, const Multidegree& a);

// Minimal antichain of the D(b) masks above; a zero mask means the degree
// complex is void.
std::vector<Face> degree_nonface_family(const MonomialIdeal& ideal, const Multidegree& a);

struct DegreePair {
    Multidegree a;
    SimplicialComplex big;   // degree complex of the smaller ideal J
    SimplicialComplex small; // degree complex of the larger ideal I
    std::uint32_t g_set;

    RelativePair pair() const { return RelativePair(big, small); }
};

// Pair (degree complex of J, degree complex of I) for J contained in I;
// the subcomplex relation is verified.
DegreePair relative_degree_pair(const MonomialIdeal& smaller_j, const MonomialIdeal& larger_i,
                                const Multidegree& a);

// Checks the link identity: the degree complex at a equals the link of
// G_a inside the degree complex at the zeroed-out degree. Expected true
// for every input; exposed as a property probe.
bool link_reduction_check(const MonomialIdeal& ideal, const Multidegree& a);

// Finite search box for multidegrees: coordinates in G (free choice of
// negative support) are fixed at -1, coordinate i outside G ranges over
// 0 .. rho_i - 1 with rho_i the max exponent of x_i over both generator
// sets (rho_i = 0 coordinates contribute the single value 0). Everything
// outside is certified irrelevant: negative coordinates below -1 do not
// change the pair, and a_i >= rho_i makes both complexes cones with apex i.
struct EnumerationBox {
    int n = 0;
    std::vector<int> rho;

    std::uint64_t size() const;
    // Mixed-radix decode; index order is lexicographic in the digit vector
    // with coordinate values ordered -1 < 0 < ... < rho_i - 1.
    Multidegree at(std::uint64_t index) const;
    int digits(int i) const; // number of values coordinate i takes
};

EnumerationBox enumeration_box(const MonomialIdeal& a, const MonomialIdeal& b);

// True iff the (negative-normalized) degree lies outside the box and the
// cone-vanishing certificate holds there; false when the degree is inside
// the box. Throws theorem_violation if a certificate fails.
bool certify_outside_vanishing(const MonomialIdeal& smaller_j, const MonomialIdeal& larger_i,
                               const Multidegree& a);

} // namespace mq
