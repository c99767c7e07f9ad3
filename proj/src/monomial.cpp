#include "monoquot/monomial.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>

namespace mq {

RingContext::RingContext(int nvars, std::vector<std::string> vnames)
    : n(nvars), names(std::move(vnames)) {
    if (n < 1) throw std::invalid_argument("RingContext: need at least one variable");
    if (n > 30) throw std::invalid_argument("RingContext: at most 30 variables supported");
    if (static_cast<int>(names.size()) != n)
        throw std::invalid_argument("RingContext: name count mismatch");
    std::set<std::string> uniq(names.begin(), names.end());
    if (static_cast<int>(uniq.size()) != n)
        throw std::invalid_argument("RingContext: variable names must be distinct");
}

Ring RingContext::standard(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<const RingContext>(n, std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->n == b->n && a->names == b->names;
}

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    if (e_.empty()) throw std::invalid_argument("Monomial: empty exponent vector");
    for (int v : e_)
        if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

Monomial Monomial::variable(int nvars, int index) {
    std::vector<int> e(nvars, 0);
    e.at(index) = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::from_support(int nvars, std::uint32_t mask) {
    std::vector<int> e(nvars, 0);
    for (int i = 0; i < nvars; ++i)
        if (mask & (1u << i)) e[i] = 1;
    return Monomial(std::move(e));
}

int Monomial::total_degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
}

std::uint32_t Monomial::support() const {
    std::uint32_t s = 0;
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > 0) s |= 1u << i;
    return s;
}

bool Monomial::is_one() const { return support() == 0; }

bool Monomial::is_squarefree() const {
    for (int v : e_)
        if (v > 1) return false;
    return true;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

bool divides(const Monomial& d, const Monomial& m) {
    if (d.nvars() != m.nvars()) throw std::invalid_argument("divides: variable count mismatch");
    for (int i = 0; i < d.nvars(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

Monomial mul(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mul: variable count mismatch");
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
        if (a[i] > std::numeric_limits<int>::max() - b[i])
            throw std::overflow_error("mul: exponent overflow");
        e[i] = a[i] + b[i];
    }
    return Monomial(std::move(e));
}

Monomial power(const Monomial& m, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    std::vector<int> e(m.nvars());
    for (int i = 0; i < m.nvars(); ++i) {
        long long v = static_cast<long long>(m[i]) * k;
        if (v > std::numeric_limits<int>::max()) throw std::overflow_error("power: exponent overflow");
        e[i] = static_cast<int>(v);
    }
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("lcm: variable count mismatch");
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("gcd: variable count mismatch");
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial quotient_by_gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("quotient_by_gcd: variable count mismatch");
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a[i] - b[i], 0);
    return Monomial(std::move(e));
}

std::uint32_t Multidegree::negative_support() const {
    std::uint32_t g = 0;
    for (int i = 0; i < size(); ++i)
        if (entries[i] < 0) g |= 1u << i;
    return g;
}

Monomial Multidegree::positive_part() const {
    std::vector<int> e(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) e[i] = std::max(entries[i], 0);
    return Monomial(std::move(e));
}

Monomial Multidegree::negative_part() const {
    std::vector<int> e(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) e[i] = std::max(-entries[i], 0);
    return Monomial(std::move(e));
}

Multidegree Multidegree::normalized_negatives() const {
    std::vector<int> a(entries);
    for (int& v : a)
        if (v < 0) v = -1;
    return Multidegree(std::move(a));
}

bool multidegree_less(const Multidegree& a, const Multidegree& b) {
    return a.entries < b.entries;
}

std::vector<Monomial> minimize_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), monomial_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& k : kept) {
            if (k.total_degree() > g.total_degree()) break;
            if (divides(k, g)) { redundant = true; break; }
        }
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("MonomialIdeal: null ring");
    for (const Monomial& g : gens)
        if (g.nvars() != ring_->n)
            throw std::invalid_argument("MonomialIdeal: generator from a different ring");
    gens_ = minimize_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(Ring ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(Ring ring) {
    int n = ring->n;
    return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_) {
        if (g.total_degree() > m.total_degree()) return false; // sorted by degree
        if (divides(g, m)) return true;
    }
    return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("contains_ideal: ring mismatch");
    for (const Monomial& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool MonomialIdeal::contains_localized(const Monomial& m, std::uint32_t inverted) const {
    const int n = ring_->n;
    for (const Monomial& g : gens_) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            if (inverted & (1u << i)) continue;
            if (g[i] > m[i]) { ok = false; break; }
        }
        if (ok) return true;
    }
    return false;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b, const char* op) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument(std::string(op) + ": mixed ring contexts");
}

} // namespace

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b, "ideal_sum");
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b, "ideal_product");
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& g : a.generators())
        for (const Monomial& h : b.generators())
            gens.push_back(mul(g, h));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& a, int t) {
    if (t < 1) throw std::invalid_argument("ideal_power: exponent must be positive");
    MonomialIdeal acc = a;
    for (int k = 1; k < t; ++k) acc = ideal_product(acc, a);
    return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b, "intersect");
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& g : a.generators())
        for (const Monomial& h : b.generators())
            gens.push_back(lcm(g, h));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
    if (m.nvars() != a.ring()->n) throw std::invalid_argument("colon: ring mismatch");
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size());
    for (const Monomial& g : a.generators()) gens.push_back(quotient_by_gcd(g, m));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b, "colon_ideal");
    if (b.is_zero()) throw std::invalid_argument("colon_ideal: colon by the zero ideal is undefined");
    bool first = true;
    MonomialIdeal acc = MonomialIdeal::unit(a.ring());
    for (const Monomial& h : b.generators()) {
        MonomialIdeal part = colon(a, h);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

MonomialIdeal radical(const MonomialIdeal& a) {
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size());
    const int n = a.ring()->n;
    for (const Monomial& g : a.generators())
        gens.push_back(Monomial::from_support(n, g.support()));
    return MonomialIdeal(a.ring(), std::move(gens));
}

namespace {

std::vector<std::uint32_t> minimize_masks(std::vector<std::uint32_t> masks) {
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint32_t> kept;
    for (std::uint32_t m : masks) {
        bool redundant = false;
        for (std::uint32_t k : kept)
            if ((k & m) == k) { redundant = true; break; }
        if (!redundant) kept.push_back(m);
    }
    return kept;
}

} // namespace

std::vector<std::uint32_t> minimal_transversals(std::vector<std::uint32_t> sets, int n) {
    sets = minimize_masks(std::move(sets));
    std::vector<std::uint32_t> trans = {0u};
    for (std::uint32_t s : sets) {
        if (s == 0) return {}; // the empty set cannot be hit
        std::vector<std::uint32_t> next;
        next.reserve(trans.size() * static_cast<std::size_t>(std::popcount(s)));
        for (std::uint32_t t : trans) {
            if (t & s) {
                next.push_back(t);
                continue;
            }
            for (int v = 0; v < n; ++v)
                if (s & (1u << v)) next.push_back(t | (1u << v));
        }
        trans = minimize_masks(std::move(next));
    }
    return trans;
}

int min_transversal_size(const std::vector<std::uint32_t>& sets, int n) {
    std::vector<std::uint32_t> minimal = minimize_masks(sets);
    for (std::uint32_t s : minimal)
        if (s == 0) return -1; // unhittable
    int best = n + 1;
    // branch on the vertices of the first uncovered set
    auto rec = [&](auto&& self, std::uint32_t chosen, int count, std::size_t from) -> void {
        if (count >= best) return;
        std::uint32_t pending = 0;
        for (std::size_t i = from; i < minimal.size(); ++i)
            if ((minimal[i] & chosen) == 0) { pending = minimal[i]; break; }
        if (pending == 0) {
            best = count;
            return;
        }
        for (int v = 0; v < n; ++v)
            if (pending & (1u << v)) self(self, chosen | (1u << v), count + 1, from);
    };
    rec(rec, 0u, 0, 0);
    return best;
}

std::vector<std::uint32_t> minimal_primes(const MonomialIdeal& a) {
    if (a.is_unit()) throw std::invalid_argument("minimal_primes: the unit ideal has no primes");
    std::vector<std::uint32_t> supports;
    supports.reserve(a.generators().size());
    for (const Monomial& g : a.generators()) supports.push_back(g.support());
    return minimal_transversals(std::move(supports), a.ring()->n);
}

int dim_quotient(const MonomialIdeal& a) {
    if (a.is_unit()) return -1;
    if (a.is_zero()) return a.ring()->n;
    std::vector<std::uint32_t> supports;
    supports.reserve(a.generators().size());
    for (const Monomial& g : a.generators()) supports.push_back(g.support());
    int tau = min_transversal_size(supports, a.ring()->n);
    return a.ring()->n - tau;
}

} // namespace mq
