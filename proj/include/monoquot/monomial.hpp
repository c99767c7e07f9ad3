#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mq {

// Polynomial ring context: number of variables and their display names.
// Values are shared immutably; two contexts are interchangeable iff they
// agree on both fields.
struct RingContext {
    int n;
    std::vector<std::string> names;

    RingContext(int n, std::vector<std::string> names);
    static std::shared_ptr<const RingContext> standard(int n); // x1..xn
};

using Ring = std::shared_ptr<const RingContext>;

bool same_ring(const Ring& a, const Ring& b);

// A monomial is its exponent vector; all entries >= 0.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int nvars);
    static Monomial variable(int nvars, int index);
    static Monomial from_support(int nvars, std::uint32_t mask);

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    int total_degree() const;
    std::uint32_t support() const;
    bool is_one() const;
    bool is_squarefree() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

private:
    std::vector<int> e_;
};

// Canonical order: total degree, then lexicographic on exponents.
bool monomial_less(const Monomial& a, const Monomial& b);

bool divides(const Monomial& d, const Monomial& m);
Monomial mul(const Monomial& a, const Monomial& b); // overflow is a hard error
Monomial power(const Monomial& m, int k);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
// a / gcd(a, b); the generator map behind colon ideals.
Monomial quotient_by_gcd(const Monomial& a, const Monomial& b);

// Multidegree in Z^n. Negative entries are allowed; the derived data
// (negative support, positive/negative parts) is always recomputed.
struct Multidegree {
    std::vector<int> entries;

    explicit Multidegree(std::vector<int> a) : entries(std::move(a)) {}
    static Multidegree zero(int n) { return Multidegree(std::vector<int>(n, 0)); }

    int size() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries[i]; }

    std::uint32_t negative_support() const;    // G_a
    Monomial positive_part() const;            // a with negatives zeroed
    Monomial negative_part() const;            // componentwise -min(a_i, 0)
    Multidegree normalized_negatives() const;  // negatives clamped to -1

    friend bool operator==(const Multidegree& a, const Multidegree& b) = default;
};

bool multidegree_less(const Multidegree& a, const Multidegree& b); // lexicographic

// Monomial ideal with minimal generating set, canonically sorted.
// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    MonomialIdeal(Ring ring, std::vector<Monomial> gens);
    static MonomialIdeal zero(Ring ring);
    static MonomialIdeal unit(Ring ring);

    const Ring& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const;
    bool contains_ideal(const MonomialIdeal& other) const;
    // Membership of m in I S_{x_F}: exponents on F-variables are ignored.
    bool contains_localized(const Monomial& m, std::uint32_t inverted) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

private:
    Ring ring_;
    std::vector<Monomial> gens_;
};

std::vector<Monomial> minimize_generators(std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, int t); // t >= 1
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b); // b = 0 is an error
MonomialIdeal radical(const MonomialIdeal& a);

// Hypergraph transversal helpers on support masks over [n].
std::vector<std::uint32_t> minimal_transversals(std::vector<std::uint32_t> sets, int n);
int min_transversal_size(const std::vector<std::uint32_t>& sets, int n);

// Minimal primes as variable-index masks; the unit ideal is an error, the
// zero ideal yields the single empty mask (the zero prime).
std::vector<std::uint32_t> minimal_primes(const MonomialIdeal& a);

// Krull dimension of S/I; -1 for the unit ideal, n for the zero ideal.
int dim_quotient(const MonomialIdeal& a);

} // namespace mq
