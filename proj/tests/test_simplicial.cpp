#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "monoquot/simplicial.hpp"
#include "support/fuzz.hpp"

using namespace mq;

namespace {

// independence complex of the 5-cycle: facets are the five independent pairs
SimplicialComplex five_cycle_complex() {
    return SimplicialComplex::from_facets(5, {0b00101, 0b01001, 0b01010, 0b10010, 0b10100});
}

MonomialIdeal five_cycle_edge_ideal(const Ring& ring) {
    std::vector<Monomial> gens;
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})
        gens.push_back(mul(Monomial::variable(5, u), Monomial::variable(5, v)));
    return MonomialIdeal(ring, std::move(gens));
}

int sign_of(int i) { return i % 2 == 0 ? 1 : -1; } // (-1)^i, handles negative i

} // namespace

TEST_CASE("void and empty complexes are distinct values") {
    SimplicialComplex v = SimplicialComplex::void_complex(3);
    SimplicialComplex e = SimplicialComplex::empty_complex(3);
    CHECK(v.is_void());
    CHECK_FALSE(v.is_empty_complex());
    CHECK(e.is_empty_complex());
    CHECK_FALSE(e.is_void());
    CHECK(v.dim() == SimplicialComplex::void_dim);
    CHECK(e.dim() == -1);
    CHECK_FALSE(v.has_face(0));
    CHECK(e.has_face(0));
    CHECK(v != e);
}

TEST_CASE("facets are maximalized") {
    SimplicialComplex c = SimplicialComplex::from_facets(3, {0b001, 0b011, 0b011});
    CHECK(c.facets() == std::vector<Face>{0b011});
    CHECK(c.faces().size() == 4);
}

TEST_CASE("squarefree ideal and complex are mutually inverse") {
    Ring r5 = RingContext::standard(5);
    MonomialIdeal c5 = five_cycle_edge_ideal(r5);
    SimplicialComplex complex = complex_from_squarefree_ideal(c5);
    // oracle: subsets whose support contains no generator support; maximal ones
    std::set<Face> faces;
    for (Face f = 0; f < 32; ++f) {
        bool face = true;
        for (const Monomial& g : c5.generators())
            if ((g.support() & f) == g.support()) { face = false; break; }
        if (face) faces.insert(f);
    }
    std::set<Face> maximal;
    for (Face f : faces) {
        bool is_max = true;
        for (Face g : faces)
            if (g != f && (f & g) == f) { is_max = false; break; }
        if (is_max) maximal.insert(f);
    }
    CHECK(std::set<Face>(complex.facets().begin(), complex.facets().end()) == maximal);
    CHECK(complex == five_cycle_complex());
    CHECK(stanley_reisner_ideal(complex, r5) == c5);

    Ring r3 = RingContext::standard(3);
    CHECK(stanley_reisner_ideal(SimplicialComplex::empty_complex(3), r3) ==
          MonomialIdeal(r3, {Monomial::variable(3, 0), Monomial::variable(3, 1), Monomial::variable(3, 2)}));
    CHECK(stanley_reisner_ideal(SimplicialComplex::full_simplex(3), r3).is_zero());
    CHECK(complex_from_squarefree_ideal(MonomialIdeal::zero(r3)) == SimplicialComplex::full_simplex(3));
    CHECK(complex_from_squarefree_ideal(MonomialIdeal::unit(r3)).is_void());
    CHECK_THROWS_AS(complex_from_squarefree_ideal(MonomialIdeal(r3, {Monomial({2, 0, 0})})),
                    std::invalid_argument);
}

TEST_CASE("property: the Stanley-Reisner correspondence round-trips") {
    mq::SplitMix64 rng(mqtest::test_seed() + 9);
    Ring r5 = RingContext::standard(5);
    for (int round = 0; round < 40; ++round) {
        MonomialIdeal ideal = mqtest::random_squarefree_ideal(rng, r5, 4);
        SimplicialComplex complex = complex_from_squarefree_ideal(ideal);
        CHECK(stanley_reisner_ideal(complex, r5) == ideal);
    }
}

TEST_CASE("link, star, restrict") {
    SimplicialComplex c5 = five_cycle_complex();
    SimplicialComplex lk = c5.link(0b00001); // vertex 1: two isolated vertices
    CHECK(lk.facets() == std::vector<Face>{0b00100, 0b01000});
    CHECK(c5.link(0) == c5);

    SimplicialComplex st = c5.star(0b00001);
    CHECK(st.facets() == std::vector<Face>{0b00101, 0b01001});

    SimplicialComplex path = c5.restrict(0b01111); // drop vertex 5
    CHECK(path.facets() == std::vector<Face>{0b0101, 0b1001, 0b1010});

    CHECK_THROWS_AS(c5.link(0b00011), std::invalid_argument); // {1,2} is not a face
}

TEST_CASE("purity, matroid and cone tests") {
    SimplicialComplex u24 =
        SimplicialComplex::from_facets(4, {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
    CHECK(u24.is_matroid());
    CHECK_FALSE(five_cycle_complex().is_matroid());
    CHECK(SimplicialComplex::from_facets(4, {0b1011}).is_matroid()); // single simplex

    CHECK(SimplicialComplex::full_simplex(3).is_pure());
    CHECK_FALSE(SimplicialComplex::from_facets(3, {0b011, 0b100}).is_pure());
    CHECK(SimplicialComplex::empty_complex(2).is_pure());

    SimplicialComplex star = five_cycle_complex().star(0b00001);
    CHECK(star.is_cone_with_apex(0));
    SimplicialComplex two_points = SimplicialComplex::from_facets(2, {0b01, 0b10});
    CHECK_FALSE(two_points.is_cone_with_apex(0));
    CHECK_FALSE(SimplicialComplex::empty_complex(2).is_cone_with_apex(0));
    CHECK(SimplicialComplex::void_complex(2).is_cone_with_apex(0));
}

TEST_CASE("relative pair construction enforces the subcomplex invariant") {
    SimplicialComplex big = five_cycle_complex();
    CHECK_THROWS_AS(RelativePair(SimplicialComplex::empty_complex(5), big), std::invalid_argument);
    RelativePair ok(big, big.restrict(0b00111));
    CHECK(ok.relative_faces().size() > 0);
}

TEST_CASE("cohomology of basic spaces") {
    for (int p : {2, 3, 5}) {
        SimplicialComplex two_points = SimplicialComplex::from_facets(2, {0b01, 0b10});
        auto dims = cohomology_dims(two_points, p);
        CHECK(cohomology_dim_at(dims, 0) == 1);
        CHECK(cohomology_dim_at(dims, -1) == 0);

        auto empty = cohomology_dims(SimplicialComplex::empty_complex(2), p);
        CHECK(cohomology_dim_at(empty, -1) == 1);

        auto circle = cohomology_dims(five_cycle_complex(), p);
        CHECK(cohomology_dim_at(circle, 1) == 1);
        CHECK(cohomology_dim_at(circle, 0) == 0);
        CHECK(cohomology_dim_at(circle, -1) == 0);

        // cone pair with a common apex is acyclic
        SimplicialComplex cone = SimplicialComplex::from_facets(3, {0b011, 0b101});
        RelativePair pair(cone, cone.star(0b010));
        for (auto [i, h] : relative_cohomology_dims(pair, p)) CHECK(h == 0);
    }
    CHECK_THROWS_AS(cohomology_dims(five_cycle_complex(), 4), std::invalid_argument);
}

TEST_CASE("property: boundary squared vanishes on quotient complexes") {
    mq::SplitMix64 rng(mqtest::test_seed() + 10);
    for (int round = 0; round < 30; ++round) {
        SimplicialComplex big = mqtest::random_complex(rng, 5, 3);
        if (big.is_void()) continue;
        RelativePair pair(big, mqtest::random_subcomplex(rng, big));
        QuotientChainComplex cc = QuotientChainComplex::build(pair, 3);
        for (std::size_t k = 1; k < cc.boundary.size(); ++k)
            CHECK(gf::multiply(cc.boundary[k - 1], cc.boundary[k]).is_zero());
    }
}

TEST_CASE("property: Euler characteristic agrees with cohomology") {
    mq::SplitMix64 rng(mqtest::test_seed() + 11);
    for (int p : {2, 3}) {
        for (int round = 0; round < 30; ++round) {
            SimplicialComplex big = mqtest::random_complex(rng, 5, 3);
            RelativePair pair(big, mqtest::random_subcomplex(rng, big));
            int chi_faces = 0;
            for (Face f : pair.relative_faces()) chi_faces += sign_of(std::popcount(f) - 1);
            int chi_cohom = 0;
            for (auto [i, h] : relative_cohomology_dims(pair, p)) chi_cohom += sign_of(i) * h;
            CHECK(chi_faces == chi_cohom);
        }
    }
}

TEST_CASE("property: long exact sequence of a pair is consistent") {
    mq::SplitMix64 rng(mqtest::test_seed() + 12);
    for (int p : {2, 3}) {
        for (int round = 0; round < 30; ++round) {
            SimplicialComplex big = mqtest::random_complex(rng, 5, 3);
            if (big.is_void()) continue;
            SimplicialComplex small = mqtest::random_subcomplex(rng, big);
            RelativePair pair(big, small);
            auto rel = relative_cohomology_dims(pair, p);
            auto hbig = cohomology_dims(big, p);
            auto hsmall = cohomology_dims(small, p);
            int total = 0;
            for (int i = -1; i <= 5; ++i)
                total += sign_of(i) * (cohomology_dim_at(rel, i) - cohomology_dim_at(hbig, i) +
                                       cohomology_dim_at(hsmall, i));
            CHECK(total == 0);
        }
    }
}

TEST_CASE("property: restriction commutes with links") {
    mq::SplitMix64 rng(mqtest::test_seed() + 13);
    for (int round = 0; round < 60; ++round) {
        SimplicialComplex gamma = mqtest::random_complex(rng, 6, 4);
        if (gamma.is_void()) continue;
        Face fmask = static_cast<Face>(rng.below(1u << 6));
        auto faces = gamma.restrict(fmask).faces();
        if (faces.empty()) continue;
        Face e = faces[rng.below(faces.size())];
        CHECK(gamma.restrict(fmask).link(e) == gamma.link(e).restrict(fmask & ~e));
    }
}

TEST_CASE("property: pair of cones with a common apex is acyclic") {
    mq::SplitMix64 rng(mqtest::test_seed() + 14);
    for (int round = 0; round < 30; ++round) {
        SimplicialComplex base = mqtest::random_complex(rng, 5, 3);
        if (base.is_void()) continue;
        std::vector<Face> coned;
        for (Face f : base.facets()) coned.push_back(f | (1u << 5));
        SimplicialComplex big = SimplicialComplex::from_facets(6, coned);
        SimplicialComplex small_base = mqtest::random_subcomplex(rng, base);
        std::vector<Face> small_facets;
        for (Face f : small_base.facets()) small_facets.push_back(f | (1u << 5));
        SimplicialComplex small = SimplicialComplex::from_facets(6, small_facets);
        REQUIRE(big.is_cone_with_apex(5));
        REQUIRE((small.is_void() || small.is_cone_with_apex(5)));
        for (auto [i, h] : relative_cohomology_dims(RelativePair(big, small), 2)) CHECK(h == 0);
    }
}
