#pragma once

#include <map>
#include <vector>

#include "monoquot/gfp.hpp"
#include "monoquot/monomial.hpp"

namespace mq {

using Face = std::uint32_t; // vertex subset of [n] as a bitmask

// Simplicial complex on ground set [n], stored by its facets. Two
// degenerate values are distinct and both representable: the void complex
// (no faces at all, empty facet list) and {∅} (single facet ∅).
class SimplicialComplex {
public:
    // Dimension value reported for the void complex (it has no faces).
    static constexpr int void_dim = -2;

    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_complex(int n); // {∅}
    static SimplicialComplex full_simplex(int n);
    // Generates the complex spanned by the given faces (maximalizes).
    static SimplicialComplex from_facets(int n, std::vector<Face> facets);

    int ground_size() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }

    int dim() const; // void_dim for the void complex, |F|-1 of largest facet otherwise
    Face vertex_support() const;

    bool has_face(Face f) const;
    std::vector<Face> faces() const; // all faces, sorted by (cardinality, mask)

    bool is_subcomplex_of(const SimplicialComplex& other) const;

    SimplicialComplex link(Face f) const;   // f must be a face
    SimplicialComplex star(Face f) const;   // f must be a face
    SimplicialComplex restrict(Face w) const;

    bool is_pure() const;
    bool is_matroid() const; // pure + facet exchange axiom
    bool is_cone_with_apex(int v) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) = default;

private:
    SimplicialComplex(int n, std::vector<Face> facets);
    int n_ = 0;
    std::vector<Face> facets_; // inclusion-maximal, sorted by (cardinality, mask)
};

SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal);
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, Ring ring);

// Pair (big, small) with small a subcomplex of big, checked at construction.
struct RelativePair {
    SimplicialComplex big;
    SimplicialComplex small;

    RelativePair(SimplicialComplex big_complex, SimplicialComplex small_complex);

    // Faces of big that are not faces of small, sorted by (cardinality, mask).
    std::vector<Face> relative_faces() const;
    int dim() const; // max dimension of a relative face; void_dim if none
};

// Chain complex of C(big)/C(small) over F_p, augmented: level k holds the
// relative faces of dimension min_dim + k, with min_dim = -1. Boundary
// matrices use the global ascending vertex order for signs.
struct QuotientChainComplex {
    int p = 2;
    int min_dim = -1;
    std::vector<std::vector<Face>> bases;  // bases[k]: faces of dim min_dim + k
    std::vector<gf::Matrix> boundary;      // boundary[k]: C_{min_dim+k} -> C_{min_dim+k-1}

    static QuotientChainComplex build(const RelativePair& pair, int p);

    // dim_{F_p} of reduced relative cohomology per dimension, zero entries
    // included for every level from min_dim to the top.
    std::map<int, int> cohomology_dims() const;
};

// Reduced relative cohomology dimensions of the pair over F_p.
std::map<int, int> relative_cohomology_dims(const RelativePair& pair, int p);
// Absolute case: pair with the void complex.
std::map<int, int> cohomology_dims(const SimplicialComplex& complex, int p);

int cohomology_dim_at(const std::map<int, int>& dims, int i);

} // namespace mq
