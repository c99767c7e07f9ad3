#include "monoquot/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "monoquot/errors.hpp"
#include "monoquot/util.hpp"

namespace mq {

namespace {

void require_contained(const MonomialIdeal& den, const MonomialIdeal& num, const char* op) {
    if (!num.contains_ideal(den))
        throw std::invalid_argument(std::string(op) + ": first ideal must be contained in the second");
}

bool any_subset_of(const std::vector<Face>& family, Face e) {
    for (Face d : family)
        if ((d & e) == d) return true;
    return false;
}

std::vector<Face> minimize_family(std::vector<Face>& masks) {
    std::sort(masks.begin(), masks.end(), [](Face a, Face b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Face> kept;
    for (Face m : masks) {
        if (!any_subset_of(kept, m)) kept.push_back(m);
    }
    return kept;
}

// Relative faces at one degree, grouped by cardinality. dj/di are the
// minimized non-face families of the two degree complexes. Returns false
// when no face is relative.
bool collect_relative_faces(int n, Face pool, const std::vector<Face>& dj, const std::vector<Face>& di,
                            std::vector<std::vector<Face>>& by_card) {
    bool found = false;
    for (Face d : di)
        if (!any_subset_of(dj, d)) { found = true; break; }
    if (!found) return false;
    by_card.assign(n + 1, {});
    Face sub = pool;
    while (true) {
        if (!any_subset_of(dj, sub) && any_subset_of(di, sub))
            by_card[std::popcount(sub)].push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & pool;
    }
    for (auto& lst : by_card) std::sort(lst.begin(), lst.end());
    return true;
}

// (cochain level j, h) pairs with h > 0 from the per-cardinality face lists.
std::vector<std::pair<int, int>> cohomology_by_level(const std::vector<std::vector<Face>>& by_card, int p) {
    const int levels = static_cast<int>(by_card.size());
    std::vector<int> ranks(levels + 1, 0);
    for (int c = 1; c < levels; ++c) {
        if (by_card[c].empty() || by_card[c - 1].empty()) continue;
        const auto& below = by_card[c - 1];
        gf::Matrix d(static_cast<int>(below.size()), static_cast<int>(by_card[c].size()), p);
        for (int col = 0; col < static_cast<int>(by_card[c].size()); ++col) {
            Face f = by_card[c][col];
            Face rest = f;
            int sign = 1;
            while (rest) {
                Face v = rest & (-rest);
                rest &= rest - 1;
                auto it = std::lower_bound(below.begin(), below.end(), f & ~v);
                if (it != below.end() && *it == (f & ~v))
                    d.set(static_cast<int>(it - below.begin()), col, sign);
                sign = -sign;
            }
        }
        ranks[c] = gf::rank(std::move(d));
    }
    std::vector<std::pair<int, int>> out;
    for (int c = 0; c < levels; ++c) {
        int h = static_cast<int>(by_card[c].size()) - ranks[c] - ranks[c + 1];
        if (h > 0) out.emplace_back(c - 1, h);
        if (h < 0) throw theorem_violation("cohomology_by_level: negative dimension");
    }
    return out;
}

struct ScanCore {
    int n = 0;
    EnumerationBox box;
    std::vector<int> den_exps, num_exps; // row-major generator exponents
    std::size_t den_cnt = 0, num_cnt = 0;
};

ScanCore make_core(const MonomialIdeal& den, const MonomialIdeal& num) {
    ScanCore core;
    core.n = den.ring()->n;
    core.box = enumeration_box(den, num);
    core.den_cnt = den.generators().size();
    core.num_cnt = num.generators().size();
    core.den_exps.reserve(core.den_cnt * core.n);
    for (const Monomial& g : den.generators())
        core.den_exps.insert(core.den_exps.end(), g.exponents().begin(), g.exponents().end());
    core.num_exps.reserve(core.num_cnt * core.n);
    for (const Monomial& g : num.generators())
        core.num_exps.insert(core.num_exps.end(), g.exponents().begin(), g.exponents().end());
    return core;
}

struct RawEntry {
    std::uint64_t box_index;
    int i;
    int h;
};

// Walks box degrees [begin, end) in index order, maintaining per-generator
// excess masks incrementally (odometer over the digit vector).
void scan_chunk(const ScanCore& core, int p, std::uint64_t begin, std::uint64_t end,
                std::vector<RawEntry>& out) {
    const int n = core.n;
    std::vector<int> dv(n); // digit i: value a_i = dv[i] - 1
    {
        std::uint64_t idx = begin;
        for (int i = n - 1; i >= 0; --i) {
            int d = core.box.digits(i);
            dv[i] = static_cast<int>(idx % d);
            idx /= d;
        }
    }
    std::vector<Face> den_mask(core.den_cnt), num_mask(core.num_cnt);
    auto recompute = [&](int from) {
        for (std::size_t g = 0; g < core.den_cnt; ++g) {
            Face m = den_mask[g];
            const int* e = core.den_exps.data() + g * n;
            for (int i = from; i < n; ++i) {
                Face bit = 1u << i;
                m = (dv[i] >= 1 && e[i] >= dv[i]) ? (m | bit) : (m & ~bit);
            }
            den_mask[g] = m;
        }
        for (std::size_t g = 0; g < core.num_cnt; ++g) {
            Face m = num_mask[g];
            const int* e = core.num_exps.data() + g * n;
            for (int i = from; i < n; ++i) {
                Face bit = 1u << i;
                m = (dv[i] >= 1 && e[i] >= dv[i]) ? (m | bit) : (m & ~bit);
            }
            num_mask[g] = m;
        }
    };
    recompute(0);

    std::vector<Face> dj_scratch, di_scratch;
    std::vector<std::vector<Face>> by_card;
    const Face full = static_cast<Face>((1u << n) - 1);

    for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (idx != begin) {
            int pos = n - 1;
            while (pos >= 0 && dv[pos] + 1 == core.box.digits(pos)) {
                dv[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++dv[pos];
            recompute(pos);
        }
        Face g_mask = 0;
        for (int i = 0; i < n; ++i)
            if (dv[i] == 0) g_mask |= 1u << i;

        bool big_void = false;
        dj_scratch.clear();
        for (std::size_t g = 0; g < core.den_cnt; ++g) {
            if (den_mask[g] == 0) { big_void = true; break; }
            dj_scratch.push_back(den_mask[g]);
        }
        if (big_void) continue;
        di_scratch.assign(num_mask.begin(), num_mask.end());
        std::vector<Face> dj = minimize_family(dj_scratch);
        std::vector<Face> di = minimize_family(di_scratch);
        if (di.empty()) continue; // zero numerator handled by the caller
        if (!collect_relative_faces(n, full & ~g_mask, dj, di, by_card)) continue;
        int shift = std::popcount(g_mask) + 1;
        for (auto [j, h] : cohomology_by_level(by_card, p))
            out.push_back({idx, j + shift, h});
    }
}

std::vector<RawEntry> scan_box_entries(const MonomialIdeal& den, const MonomialIdeal& num, int p,
                                       int threads) {
    ScanCore core = make_core(den, num);
    std::uint64_t total = core.box.size();
    int t = resolve_thread_count(threads);
    std::uint64_t nchunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(t), total);
    std::vector<std::vector<RawEntry>> results(std::max<std::uint64_t>(nchunks, 1));
    parallel_chunks(total, threads, [&](int chunk, std::uint64_t b, std::uint64_t e) {
        scan_chunk(core, p, b, e, results[chunk]);
    });
    std::vector<RawEntry> merged;
    for (auto& r : results) merged.insert(merged.end(), r.begin(), r.end());
    return merged;
}

std::vector<Face> sqrt_supports(const MonomialIdeal& ideal) {
    std::vector<Face> s;
    s.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) s.push_back(g.support());
    return s;
}

} // namespace

int lc_piece(const MonomialIdeal& den, const MonomialIdeal& num, int i, const Multidegree& a, int p) {
    require_contained(den, num, "lc_piece");
    std::uint32_t g = a.negative_support();
    for (Face s : sqrt_supports(den)) // vanishing clause: G_a not a face of the radical complex
        if ((s & g) == s) return 0;
    DegreePair dp = relative_degree_pair(den, num, a);
    auto dims = relative_cohomology_dims(dp.pair(), p);
    return cohomology_dim_at(dims, i - std::popcount(g) - 1);
}

bool ses_consistency(const MonomialIdeal& den, const MonomialIdeal& num, const Multidegree& a, int p) {
    require_contained(den, num, "ses_consistency");
    const int n = den.ring()->n;
    int shift = std::popcount(a.negative_support()) + 1;
    auto quotient_dims = [&](const MonomialIdeal& k) {
        return cohomology_dims(degree_complex(k, a), p);
    };
    auto pair_dims = relative_cohomology_dims(relative_degree_pair(den, num, a).pair(), p);
    auto sden = quotient_dims(den);
    auto snum = quotient_dims(num);
    long long total = 0;
    for (int i = 0; i <= n; ++i) {
        int sign = i % 2 == 0 ? 1 : -1;
        int j = i - shift;
        total += sign * (cohomology_dim_at(pair_dims, j) - cohomology_dim_at(sden, j) +
                         cohomology_dim_at(snum, j));
    }
    return total == 0;
}

int dim_quotient_pair(const MonomialIdeal& den, const MonomialIdeal& num) {
    require_contained(den, num, "dim_quotient_pair");
    int best = -1;
    for (const Monomial& g : num.generators()) {
        if (den.contains(g)) continue;
        best = std::max(best, dim_quotient(radical(colon(den, g))));
    }
    return best;
}

namespace {

// Linkwise vanishing verdict of the Cohen-Macaulay criterion over the
// given box degrees: all links of faces of the big complex must have
// vanishing relative cohomology strictly below d - |G_a| - |F| - 1.
bool reisner_linkwise_ok(const MonomialIdeal& den, const MonomialIdeal& num, int d, int p,
                         const std::vector<Multidegree>& degrees) {
    for (const Multidegree& a : degrees) {
        DegreePair dp = relative_degree_pair(den, num, a);
        if (dp.big.is_void()) continue;
        int gsize = std::popcount(dp.g_set);
        for (Face f : dp.big.faces()) {
            SimplicialComplex big_link = dp.big.link(f);
            SimplicialComplex small_link = dp.small.has_face(f)
                                               ? dp.small.link(f)
                                               : SimplicialComplex::void_complex(dp.small.ground_size());
            auto dims = relative_cohomology_dims(RelativePair(big_link, small_link), p);
            int bound = d - gsize - std::popcount(f) - 1;
            for (auto [j, h] : dims)
                if (h != 0 && j < bound) return false;
        }
    }
    return true;
}

CohomologyProfile zero_module_profile(int p) {
    CohomologyProfile prof;
    prof.p = p;
    prof.zero_module = true;
    prof.dim = prof.depth = -1;
    prof.is_cm = true; // by convention, flagged via zero_module
    prof.is_gcm = true;
    return prof;
}

} // namespace

CohomologyProfile depth_and_cm(const MonomialIdeal& den, const MonomialIdeal& num, int p,
                               const ScanOptions& opts) {
    require_contained(den, num, "depth_and_cm");
    if (!gf::is_prime(p)) throw std::invalid_argument("depth_and_cm: characteristic must be prime");
    if (den.contains_ideal(num)) return zero_module_profile(p);

    CohomologyProfile prof;
    prof.p = p;
    prof.zero_module = false;
    prof.dim = dim_quotient_pair(den, num);

    EnumerationBox box = enumeration_box(den, num);
    std::vector<RawEntry> raw = scan_box_entries(den, num, p, opts.threads);
    if (raw.empty()) throw theorem_violation("depth_and_cm: nonzero module with no cohomology in the box");

    int min_i = raw[0].i, max_i = raw[0].i;
    for (const RawEntry& e : raw) {
        min_i = std::min(min_i, e.i);
        max_i = std::max(max_i, e.i);
    }
    prof.depth = min_i;
    if (max_i != prof.dim)
        throw theorem_violation("depth_and_cm: top nonvanishing index disagrees with the dimension");
    if (prof.depth > prof.dim)
        throw theorem_violation("depth_and_cm: depth exceeds dimension");
    prof.is_cm = prof.depth == prof.dim;

    prof.is_gcm = true;
    for (const RawEntry& e : raw) {
        if (e.i >= prof.dim) continue;
        if (box.at(e.box_index).negative_support() != 0) { prof.is_gcm = false; break; }
    }

    for (const RawEntry& e : raw) { // entries arrive in box order
        if (e.i != 1) continue;
        Multidegree a = box.at(e.box_index);
        if (a.negative_support() == 0) { prof.rigidity_witness = a; break; }
    }
    if (prof.rigidity_witness && prof.depth > 1)
        throw theorem_violation("depth_and_cm: rigidity witness with depth above one");

    prof.table.reserve(raw.size());
    for (const RawEntry& e : raw) prof.table.push_back({e.i, box.at(e.box_index), e.h});
    std::sort(prof.table.begin(), prof.table.end(), [](const ProfileEntry& x, const ProfileEntry& y) {
        if (x.i != y.i) return x.i < y.i;
        return multidegree_less(x.a, y.a);
    });

    if (opts.with_reisner_check) {
        std::vector<Multidegree> degrees;
        std::set<std::uint64_t> chosen;
        if (box.size() <= opts.reisner_exhaustive_limit) {
            for (std::uint64_t idx = 0; idx < box.size(); ++idx) degrees.push_back(box.at(idx));
        } else {
            for (const RawEntry& e : raw) chosen.insert(e.box_index);
            SplitMix64 rng(opts.seed);
            for (int k = 0; k < opts.reisner_samples; ++k) chosen.insert(rng.below(box.size()));
            for (std::uint64_t idx : chosen) degrees.push_back(box.at(idx));
        }
        bool linkwise = reisner_linkwise_ok(den, num, prof.dim, p, degrees);
        if (linkwise != prof.is_cm)
            throw theorem_violation("depth_and_cm: direct scan and linkwise criterion disagree");
    }
    return prof;
}

std::optional<Multidegree> rigidity_scan(const MonomialIdeal& den, const MonomialIdeal& num, int p,
                                         const ScanOptions&) {
    require_contained(den, num, "rigidity_scan");
    if (den.contains_ideal(num)) return std::nullopt;
    EnumerationBox box = enumeration_box(den, num);
    const int n = box.n;
    std::vector<int> a(n, 0);
    while (true) {
        Multidegree deg{std::vector<int>(a)};
        DegreePair dp = relative_degree_pair(den, num, deg);
        auto dims = relative_cohomology_dims(dp.pair(), p);
        if (cohomology_dim_at(dims, 0) != 0) return deg;
        int pos = n - 1;
        while (pos >= 0 && a[pos] + 1 >= std::max(box.rho[pos], 1)) {
            a[pos] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
        ++a[pos];
    }
}

bool gcm_check(const MonomialIdeal& den, const MonomialIdeal& num, int p, const ScanOptions& opts) {
    require_contained(den, num, "gcm_check");
    if (den.contains_ideal(num)) return true;
    int d = dim_quotient_pair(den, num);
    EnumerationBox box = enumeration_box(den, num);
    for (const RawEntry& e : scan_box_entries(den, num, p, opts.threads)) {
        if (e.i >= d) continue;
        if (box.at(e.box_index).negative_support() != 0) return false;
    }
    return true;
}

namespace {

// Cochain-level data of H^j of a relative pair with a canonical basis of
// cocycle representatives (image columns first, then kernel vectors that
// extend the rank, in kernel_basis order).
struct CohomologySpace {
    int p = 2;
    std::vector<Face> faces;
    gf::Matrix delta;      // level j -> j+1
    gf::Matrix delta_prev; // level j-1 -> j
    std::vector<std::vector<int>> reps;

    std::vector<int> coordinates(const std::vector<int>& cocycle) const {
        int m = static_cast<int>(faces.size());
        std::vector<std::vector<int>> cols;
        for (int c = 0; c < delta_prev.cols(); ++c) {
            std::vector<int> col(m);
            for (int r = 0; r < m; ++r) col[r] = delta_prev.at(r, c);
            cols.push_back(std::move(col));
        }
        std::size_t boundary_cols = cols.size();
        for (const auto& rep : reps) cols.push_back(rep);
        auto sol = gf::solve(gf::Matrix::from_columns(m, p, cols), cocycle);
        if (!sol) throw theorem_violation("CohomologySpace: cocycle outside the cocycle space");
        std::vector<int> coords(sol->begin() + static_cast<long>(boundary_cols), sol->end());
        return coords;
    }
};

gf::Matrix coboundary_matrix(const std::vector<Face>& from, const std::vector<Face>& to, int p) {
    gf::Matrix m(static_cast<int>(to.size()), static_cast<int>(from.size()), p);
    for (int r = 0; r < static_cast<int>(to.size()); ++r) {
        Face f = to[r];
        Face rest = f;
        int sign = 1;
        while (rest) {
            Face v = rest & (-rest);
            rest &= rest - 1;
            auto it = std::lower_bound(from.begin(), from.end(), f & ~v);
            if (it != from.end() && *it == (f & ~v)) m.set(r, static_cast<int>(it - from.begin()), sign);
            sign = -sign;
        }
    }
    return m;
}

std::vector<Face> relative_faces_of_card(const RelativePair& pair, int card) {
    std::vector<Face> out;
    if (card < 0) return out;
    for (Face f : pair.relative_faces())
        if (std::popcount(f) == card) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

CohomologySpace cohomology_space(const RelativePair& pair, int j, int p) {
    CohomologySpace sp;
    sp.p = p;
    sp.faces = relative_faces_of_card(pair, j + 1);
    std::vector<Face> below = relative_faces_of_card(pair, j);
    std::vector<Face> above = relative_faces_of_card(pair, j + 2);
    sp.delta = coboundary_matrix(sp.faces, above, p);
    sp.delta_prev = coboundary_matrix(below, sp.faces, p);

    auto kernel = gf::kernel_basis(sp.delta);
    // incremental elimination: boundaries first, then kernel vectors
    int m = static_cast<int>(sp.faces.size());
    std::vector<std::pair<int, std::vector<int>>> echelon; // (pivot row, vector)
    auto reduce_and_insert = [&](std::vector<int> v) -> bool {
        for (const auto& [pivot, base] : echelon) {
            int c = v[pivot];
            if (c == 0) continue;
            for (int r = 0; r < m; ++r) v[r] = (v[r] + (p - c) * base[r]) % p;
        }
        int pivot = -1;
        for (int r = 0; r < m; ++r)
            if (v[r] != 0) { pivot = r; break; }
        if (pivot < 0) return false;
        int inv = gf::inverse_mod(v[pivot], p);
        for (int r = 0; r < m; ++r) v[r] = (v[r] * inv) % p;
        echelon.emplace_back(pivot, std::move(v));
        return true;
    };
    for (int c = 0; c < sp.delta_prev.cols(); ++c) {
        std::vector<int> col(m);
        for (int r = 0; r < m; ++r) col[r] = sp.delta_prev.at(r, c);
        reduce_and_insert(std::move(col));
    }
    for (auto& z : kernel)
        if (reduce_and_insert(z)) sp.reps.push_back(z);
    return sp;
}

} // namespace

MultiplicationMap multiplication_map(const MonomialIdeal& den, const MonomialIdeal& num, int i,
                                     const Multidegree& a, const Monomial& b, int p) {
    require_contained(den, num, "multiplication_map");
    if (b.nvars() != a.size()) throw std::invalid_argument("multiplication_map: size mismatch");
    std::vector<int> sum(a.entries);
    for (int k = 0; k < b.nvars(); ++k) sum[k] += b[k];
    Multidegree target(std::move(sum));
    if (target.negative_support() != a.negative_support())
        throw std::invalid_argument("multiplication_map: negative supports of source and target differ");

    int j = i - std::popcount(a.negative_support()) - 1;
    RelativePair source_pair = relative_degree_pair(den, num, a).pair();
    RelativePair target_pair = relative_degree_pair(den, num, target).pair();
    if (!target_pair.big.is_subcomplex_of(source_pair.big) ||
        !target_pair.small.is_subcomplex_of(source_pair.small))
        throw theorem_violation("multiplication_map: degree complexes fail to shrink");

    CohomologySpace src = cohomology_space(source_pair, j, p);
    CohomologySpace dst = cohomology_space(target_pair, j, p);

    MultiplicationMap map{a, target, i, p, src.faces, dst.faces,
                          gf::Matrix(static_cast<int>(dst.faces.size()),
                                     static_cast<int>(src.faces.size()), p),
                          gf::Matrix(static_cast<int>(dst.reps.size()),
                                     static_cast<int>(src.reps.size()), p),
                          static_cast<int>(src.reps.size()), static_cast<int>(dst.reps.size())};
    for (int r = 0; r < static_cast<int>(dst.faces.size()); ++r) {
        auto it = std::lower_bound(src.faces.begin(), src.faces.end(), dst.faces[r]);
        if (it != src.faces.end() && *it == dst.faces[r])
            map.restriction.at(r, static_cast<int>(it - src.faces.begin())) = 1;
    }
    for (int c = 0; c < static_cast<int>(src.reps.size()); ++c) {
        std::vector<int> image = map.restriction.apply(src.reps[c]);
        if (!dst.delta.apply(image).empty() && !std::all_of(dst.delta.apply(image).begin(),
                                                            dst.delta.apply(image).end(),
                                                            [](int v) { return v == 0; }))
            throw theorem_violation("multiplication_map: restriction of a cocycle is not a cocycle");
        std::vector<int> coords = dst.coordinates(image);
        for (int r = 0; r < static_cast<int>(coords.size()); ++r) map.on_cohomology.at(r, c) = coords[r];
    }
    return map;
}

} // namespace mq
