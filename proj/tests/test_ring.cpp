#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "monoquot/monomial.hpp"
#include "support/fuzz.hpp"

using namespace mq;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal_of(const Ring& ring, std::vector<std::vector<int>> exps) {
    std::vector<Monomial> gens;
    for (auto& e : exps) gens.push_back(Monomial(std::move(e)));
    return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal five_cycle_edge_ideal(const Ring& ring) {
    return ideal_of(ring, {{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {1, 0, 0, 0, 1}});
}

} // namespace

TEST_CASE("minimize removes divisible generators") {
    Ring r3 = RingContext::standard(3);
    MonomialIdeal a = ideal_of(r3, {{1, 0, 0}, {1, 1, 0}});
    CHECK(a.generators().size() == 1);
    CHECK(a.generators()[0] == mono({1, 0, 0}));

    CHECK(MonomialIdeal::zero(r3).generators().empty());

    MonomialIdeal b = ideal_of(r3, {{2, 0, 0}, {2, 0, 1}, {0, 1, 0}});
    CHECK(b.generators().size() == 2);
    CHECK(b.contains(mono({2, 0, 1})));
}

TEST_CASE("mixed ring contexts are rejected") {
    Ring r2 = RingContext::standard(2);
    Ring r3 = RingContext::standard(3);
    CHECK_THROWS_AS(MonomialIdeal(r2, {mono({1, 0, 0})}), std::invalid_argument);
    MonomialIdeal a = MonomialIdeal::unit(r2);
    MonomialIdeal b = MonomialIdeal::unit(r3);
    CHECK_THROWS_AS(ideal_sum(a, b), std::invalid_argument);
}

TEST_CASE("containment") {
    Ring r3 = RingContext::standard(3);
    MonomialIdeal a = ideal_of(r3, {{1, 1, 0}});
    CHECK(a.contains(mono({2, 1, 0})));
    CHECK_FALSE(MonomialIdeal::zero(r3).contains(mono({1, 0, 0})));
    MonomialIdeal b = ideal_of(r3, {{1, 1, 0}, {0, 1, 1}});
    CHECK_FALSE(b.contains(mono({1, 0, 1})));
}

TEST_CASE("sum, product, power") {
    Ring r2 = RingContext::standard(2);
    MonomialIdeal x = ideal_of(r2, {{1, 0}});
    MonomialIdeal y = ideal_of(r2, {{0, 1}});
    MonomialIdeal xy = ideal_product(x, y);
    CHECK(xy.generators().size() == 1);
    CHECK(xy.generators()[0] == mono({1, 1}));

    MonomialIdeal m = ideal_of(r2, {{1, 0}, {0, 1}});
    MonomialIdeal m2 = ideal_power(m, 2);
    CHECK(m2.generators().size() == 3);
    CHECK(m2.contains(mono({1, 1})));
    CHECK_FALSE(m2.contains(mono({1, 0})));

    CHECK_THROWS_AS(ideal_power(m, 0), std::invalid_argument);
}

TEST_CASE("square of the five-cycle edge ideal via membership oracle") {
    Ring r5 = RingContext::standard(5);
    MonomialIdeal c5 = five_cycle_edge_ideal(r5);
    MonomialIdeal sq = ideal_power(c5, 2);
    // oracle: m of degree 4 lies in I^2 iff some product of two generators divides it
    std::vector<Monomial> in_square;
    for (const Monomial& m : mqtest::monomials_up_to_degree(5, 4)) {
        if (m.total_degree() != 4) continue;
        bool inside = false;
        for (const Monomial& g : c5.generators()) {
            for (const Monomial& h : c5.generators())
                if (divides(mul(g, h), m)) { inside = true; break; }
            if (inside) break;
        }
        if (inside) in_square.push_back(m);
    }
    std::vector<Monomial> oracle_minimal = minimize_generators(in_square);
    CHECK(oracle_minimal.size() == 15);
    CHECK(sq.generators().size() == 15);
    CHECK(sq == MonomialIdeal(r5, oracle_minimal));
}

TEST_CASE("intersection examples") {
    Ring r3 = RingContext::standard(3);
    MonomialIdeal x = ideal_of(r3, {{1, 0, 0}});
    MonomialIdeal y = ideal_of(r3, {{0, 1, 0}});
    CHECK(intersect(x, y) == ideal_of(r3, {{1, 1, 0}}));

    // (x1,x2) ∩ (x2,x3) = (x2, x1x3), frozen from the membership oracle below
    MonomialIdeal a = ideal_of(r3, {{1, 0, 0}, {0, 1, 0}});
    MonomialIdeal b = ideal_of(r3, {{0, 1, 0}, {0, 0, 1}});
    MonomialIdeal meet = intersect(a, b);
    CHECK(meet == ideal_of(r3, {{0, 1, 0}, {1, 0, 1}}));
    for (const Monomial& m : mqtest::monomials_up_to_degree(3, 2))
        CHECK(meet.contains(m) == (a.contains(m) && b.contains(m)));

    CHECK(intersect(a, MonomialIdeal::unit(r3)) == a);
}

TEST_CASE("colon examples") {
    Ring r3 = RingContext::standard(3);
    MonomialIdeal a = ideal_of(r3, {{1, 1, 0}, {0, 1, 1}});
    MonomialIdeal q = colon(a, mono({0, 1, 0}));
    CHECK(q == ideal_of(r3, {{1, 0, 0}, {0, 0, 1}}));
    // oracle: u ∈ I:m iff u*m ∈ I
    for (const Monomial& u : mqtest::monomials_up_to_degree(3, 2))
        CHECK(q.contains(u) == a.contains(mul(u, mono({0, 1, 0}))));

    CHECK(colon(a, Monomial::one(3)) == a);
    MonomialIdeal b = ideal_of(r3, {{2, 1, 0}});
    CHECK(colon(b, mono({1, 0, 0})) == ideal_of(r3, {{1, 1, 0}}));

    CHECK_THROWS_AS(colon_ideal(a, MonomialIdeal::zero(r3)), std::invalid_argument);
}

TEST_CASE("radical") {
    Ring r3 = RingContext::standard(3);
    CHECK(radical(ideal_of(r3, {{2, 1, 0}})) == ideal_of(r3, {{1, 1, 0}}));
    CHECK(radical(ideal_of(r3, {{3, 0, 0}, {0, 2, 1}})) == ideal_of(r3, {{1, 0, 0}, {0, 1, 1}}));
    MonomialIdeal sf = ideal_of(r3, {{1, 1, 0}, {0, 0, 1}});
    CHECK(radical(sf) == sf);
}

TEST_CASE("minimal primes") {
    Ring r5 = RingContext::standard(5);
    MonomialIdeal c5 = five_cycle_edge_ideal(r5);
    std::vector<std::uint32_t> primes = minimal_primes(c5);
    // oracle: enumerate all vertex subsets, keep covers, reduce to minimal ones
    std::set<std::uint32_t> covers;
    for (std::uint32_t s = 0; s < 32; ++s) {
        bool cover = true;
        for (const Monomial& g : c5.generators())
            if ((g.support() & s) == 0) { cover = false; break; }
        if (cover) covers.insert(s);
    }
    std::set<std::uint32_t> minimal;
    for (std::uint32_t s : covers) {
        bool min = true;
        for (std::uint32_t t : covers)
            if (t != s && (t & s) == t) { min = false; break; }
        if (min) minimal.insert(s);
    }
    CHECK(minimal.size() == 5);
    for (std::uint32_t s : minimal) CHECK(std::popcount(s) == 3);
    CHECK(std::set<std::uint32_t>(primes.begin(), primes.end()) == minimal);

    Ring r2 = RingContext::standard(2);
    std::vector<std::uint32_t> pr = minimal_primes(ideal_of(r2, {{1, 1}}));
    CHECK(std::set<std::uint32_t>(pr.begin(), pr.end()) == std::set<std::uint32_t>{1u, 2u});
    CHECK(minimal_primes(ideal_of(r2, {{1, 0}})) == std::vector<std::uint32_t>{1u});
    CHECK_THROWS_AS(minimal_primes(MonomialIdeal::unit(r2)), std::invalid_argument);
}

TEST_CASE("dimension of quotients") {
    Ring r5 = RingContext::standard(5);
    MonomialIdeal c5 = five_cycle_edge_ideal(r5);
    // oracle: independence number of the five-cycle by exhaustive search
    int alpha = 0;
    for (std::uint32_t s = 0; s < 32; ++s) {
        bool independent = true;
        for (const Monomial& g : c5.generators())
            if ((g.support() & s) == g.support()) { independent = false; break; }
        if (independent) alpha = std::max(alpha, std::popcount(s));
    }
    CHECK(alpha == 2);
    CHECK(dim_quotient(c5) == alpha);

    CHECK(dim_quotient(MonomialIdeal::unit(r5)) == -1);
    CHECK(dim_quotient(MonomialIdeal::zero(RingContext::standard(3))) == 3);
}

TEST_CASE("property: membership oracles on random ideals") {
    mq::SplitMix64 rng(mqtest::test_seed());
    Ring r = RingContext::standard(4);
    auto probes = mqtest::monomials_up_to_degree(4, 5);
    for (int round = 0; round < 25; ++round) {
        MonomialIdeal a = mqtest::random_ideal(rng, r, 3, 3);
        MonomialIdeal b = mqtest::random_ideal(rng, r, 3, 3);
        MonomialIdeal meet = intersect(a, b);
        Monomial m = mqtest::random_monomial(rng, 4, 2);
        MonomialIdeal q = colon(a, m);
        for (const Monomial& u : probes) {
            CHECK(meet.contains(u) == (a.contains(u) && b.contains(u)));
            CHECK(q.contains(u) == a.contains(mul(u, m)));
        }
    }
}

TEST_CASE("property: radical idempotent and dimension stable under radical") {
    mq::SplitMix64 rng(mqtest::test_seed() + 1);
    Ring r = RingContext::standard(5);
    for (int round = 0; round < 50; ++round) {
        MonomialIdeal a = mqtest::random_ideal(rng, r, 4, 3);
        MonomialIdeal rad = radical(a);
        CHECK(radical(rad) == rad);
        CHECK(dim_quotient(a) == dim_quotient(rad));
    }
}

TEST_CASE("property: power additivity") {
    mq::SplitMix64 rng(mqtest::test_seed() + 2);
    Ring r = RingContext::standard(4);
    for (int round = 0; round < 10; ++round) {
        MonomialIdeal a = mqtest::random_ideal(rng, r, 3, 2);
        if (a.is_zero()) continue;
        CHECK(ideal_power(a, 3) == ideal_product(ideal_power(a, 1), ideal_power(a, 2)));
        CHECK(ideal_power(a, 4) == ideal_product(ideal_power(a, 2), ideal_power(a, 2)));
    }
}
