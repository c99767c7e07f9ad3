#include "monoquot/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace mq {

namespace {

bool face_less(Face a, Face b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

std::vector<Face> maximalize(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), face_less);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
        bool dominated = false;
        for (Face k : kept)
            if ((*it & k) == *it) { dominated = true; break; }
        if (!dominated) kept.push_back(*it);
    }
    std::sort(kept.begin(), kept.end(), face_less);
    return kept;
}

void check_ground(int n) {
    if (n < 0 || n > 30) throw std::invalid_argument("SimplicialComplex: ground set size out of range");
}

} // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> facets)
    : n_(n), facets_(std::move(facets)) {}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    check_ground(n);
    return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
    check_ground(n);
    return SimplicialComplex(n, {0u});
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    check_ground(n);
    return SimplicialComplex(n, {static_cast<Face>((1u << n) - 1)});
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Face> facets) {
    check_ground(n);
    Face ground = static_cast<Face>((1u << n) - 1);
    for (Face f : facets)
        if (f & ~ground) throw std::invalid_argument("SimplicialComplex: facet outside ground set");
    return SimplicialComplex(n, maximalize(std::move(facets)));
}

int SimplicialComplex::dim() const {
    if (is_void()) return void_dim;
    int d = -1;
    for (Face f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

Face SimplicialComplex::vertex_support() const {
    Face s = 0;
    for (Face f : facets_) s |= f;
    return s;
}

bool SimplicialComplex::has_face(Face f) const {
    for (Face fac : facets_)
        if ((f & fac) == f) return true;
    return false;
}

std::vector<Face> SimplicialComplex::faces() const {
    std::set<Face> all;
    for (Face fac : facets_) {
        Face sub = fac;
        while (true) {
            all.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & fac;
        }
    }
    std::vector<Face> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    if (n_ != other.n_) throw std::invalid_argument("is_subcomplex_of: ground set mismatch");
    for (Face f : facets_)
        if (!other.has_face(f)) return false;
    return true;
}

SimplicialComplex SimplicialComplex::link(Face f) const {
    if (!has_face(f)) throw std::invalid_argument("link: not a face");
    std::vector<Face> out;
    for (Face fac : facets_)
        if ((f & fac) == f) out.push_back(fac & ~f);
    return SimplicialComplex(n_, maximalize(std::move(out)));
}

SimplicialComplex SimplicialComplex::star(Face f) const {
    if (!has_face(f)) throw std::invalid_argument("star: not a face");
    std::vector<Face> out;
    for (Face fac : facets_)
        if ((f & fac) == f) out.push_back(fac);
    return SimplicialComplex(n_, maximalize(std::move(out)));
}

SimplicialComplex SimplicialComplex::restrict(Face w) const {
    std::vector<Face> out;
    out.reserve(facets_.size());
    for (Face fac : facets_) out.push_back(fac & w);
    return SimplicialComplex(n_, maximalize(std::move(out)));
}

bool SimplicialComplex::is_pure() const {
    for (Face f : facets_)
        if (std::popcount(f) != std::popcount(facets_[0])) return false;
    return true;
}

bool SimplicialComplex::is_matroid() const {
    if (!is_pure()) return false;
    for (Face f : facets_)
        for (Face g : facets_) {
            if (f == g) continue;
            Face fg = f & ~g;
            while (fg) {
                Face u = fg & (-fg);
                fg &= fg - 1;
                bool exchanged = false;
                Face gf = g & ~f;
                while (gf) {
                    Face v = gf & (-gf);
                    gf &= gf - 1;
                    Face candidate = (f & ~u) | v;
                    if (std::find(facets_.begin(), facets_.end(), candidate) != facets_.end()) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged) return false;
            }
        }
    return true;
}

bool SimplicialComplex::is_cone_with_apex(int v) const {
    Face bit = 1u << v;
    for (Face fac : facets_)
        if (!has_face(fac | bit)) return false;
    return true;
}

SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal) {
    const int n = ideal.ring()->n;
    std::vector<std::uint32_t> supports;
    for (const Monomial& g : ideal.generators()) {
        if (!g.is_squarefree())
            throw std::invalid_argument("complex_from_squarefree_ideal: ideal is not squarefree");
        supports.push_back(g.support());
    }
    if (ideal.is_zero()) return SimplicialComplex::full_simplex(n);
    Face ground = static_cast<Face>((1u << n) - 1);
    std::vector<Face> facets;
    for (std::uint32_t t : minimal_transversals(std::move(supports), n))
        facets.push_back(ground & ~t);
    return SimplicialComplex::from_facets(n, std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, Ring ring) {
    const int n = complex.ground_size();
    if (ring->n != n) throw std::invalid_argument("stanley_reisner_ideal: ring size mismatch");
    // minimal non-faces: non-faces all of whose proper subsets are faces
    std::vector<Monomial> gens;
    for (Face f = 0; f < (1u << n); ++f) {
        if (complex.has_face(f)) continue;
        bool minimal = true;
        Face g = f;
        while (g && minimal) {
            Face v = g & (-g);
            g &= g - 1;
            if (!complex.has_face(f & ~v)) minimal = false;
        }
        if (minimal) gens.push_back(Monomial::from_support(n, f));
    }
    return MonomialIdeal(std::move(ring), std::move(gens));
}

RelativePair::RelativePair(SimplicialComplex big_complex, SimplicialComplex small_complex)
    : big(std::move(big_complex)), small(std::move(small_complex)) {
    if (!small.is_subcomplex_of(big))
        throw std::invalid_argument("RelativePair: small is not a subcomplex of big");
}

std::vector<Face> RelativePair::relative_faces() const {
    std::vector<Face> out;
    for (Face f : big.faces())
        if (!small.has_face(f)) out.push_back(f);
    return out;
}

int RelativePair::dim() const {
    int d = SimplicialComplex::void_dim;
    for (Face f : relative_faces()) d = std::max(d, std::popcount(f) - 1);
    return d;
}

QuotientChainComplex QuotientChainComplex::build(const RelativePair& pair, int p) {
    if (!gf::is_prime(p)) throw std::invalid_argument("QuotientChainComplex: characteristic must be prime");
    QuotientChainComplex cc;
    cc.p = p;
    cc.min_dim = -1;
    int top = pair.big.dim();
    int levels = top < -1 ? 0 : top + 2; // dimensions -1 .. top
    cc.bases.assign(levels, {});
    for (Face f : pair.relative_faces())
        cc.bases[std::popcount(f) - 1 - cc.min_dim].push_back(f);
    for (auto& level : cc.bases) std::sort(level.begin(), level.end());

    cc.boundary.reserve(levels);
    for (int k = 0; k < levels; ++k) {
        int rows = k == 0 ? 0 : static_cast<int>(cc.bases[k - 1].size());
        gf::Matrix d(rows, static_cast<int>(cc.bases[k].size()), p);
        if (k > 0) {
            const auto& below = cc.bases[k - 1];
            for (int c = 0; c < static_cast<int>(cc.bases[k].size()); ++c) {
                Face f = cc.bases[k][c];
                int sign = 1;
                Face rest = f;
                while (rest) {
                    Face v = rest & (-rest);
                    rest &= rest - 1;
                    auto it = std::lower_bound(below.begin(), below.end(), f & ~v);
                    if (it != below.end() && *it == (f & ~v))
                        d.set(static_cast<int>(it - below.begin()), c, sign);
                    sign = -sign;
                }
            }
        }
        cc.boundary.push_back(std::move(d));
    }
    return cc;
}

std::map<int, int> QuotientChainComplex::cohomology_dims() const {
    // over a field: dim H^k = dim C_k - rank d_k - rank d_{k+1}
    std::map<int, int> out;
    std::vector<int> ranks(bases.size() + 1, 0);
    for (std::size_t k = 0; k < boundary.size(); ++k) ranks[k] = gf::rank(boundary[k]);
    for (std::size_t k = 0; k < bases.size(); ++k) {
        int above = k + 1 < bases.size() ? ranks[k + 1] : 0;
        out[min_dim + static_cast<int>(k)] = static_cast<int>(bases[k].size()) - ranks[k] - above;
    }
    return out;
}

std::map<int, int> relative_cohomology_dims(const RelativePair& pair, int p) {
    return QuotientChainComplex::build(pair, p).cohomology_dims();
}

std::map<int, int> cohomology_dims(const SimplicialComplex& complex, int p) {
    RelativePair pair(complex, SimplicialComplex::void_complex(complex.ground_size()));
    return relative_cohomology_dims(pair, p);
}

int cohomology_dim_at(const std::map<int, int>& dims, int i) {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
}

} // namespace mq
