#pragma once

#include <optional>
#include <vector>

#include "monoquot/degree.hpp"
#include "monoquot/gfp.hpp"
#include "monoquot/monomial.hpp"
#include "monoquot/simplicial.hpp"

namespace mq {

// Throughout this header the module is num/den for monomial ideals
// den ⊆ num ("J ⊆ I"); argument order follows that convention.

struct ScanOptions {
    int threads = 1; // 0 = auto
    bool with_reisner_check = true;
    // The linkwise criterion cross-check is exhaustive up to this box
    // size and sampled (plus all found witnesses) above it.
    std::uint64_t reisner_exhaustive_limit = 4096;
    int reisner_samples = 96;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct ProfileEntry {
    int i;         // local cohomology index
    Multidegree a; // box multidegree
    int h;         // dim of the graded piece, > 0
};

struct CohomologyProfile {
    int p = 2;
    int dim = -1;
    int depth = -1;
    bool zero_module = false;
    bool is_cm = true;
    bool is_gcm = true;
    std::optional<Multidegree> rigidity_witness;
    std::vector<ProfileEntry> table; // nonzero pieces over the box, sorted by (i, a)
};

// dim of the graded piece of H^i_m(num/den) at multidegree a over F_p.
int lc_piece(const MonomialIdeal& den, const MonomialIdeal& num, int i, const Multidegree& a, int p);

// Alternating-sum consistency of the pieces of num/den, S/den, S/num at a,
// from the short exact sequence relating the three modules.
bool ses_consistency(const MonomialIdeal& den, const MonomialIdeal& num, const Multidegree& a, int p);

// Krull dimension of num/den; -1 for the zero module.
int dim_quotient_pair(const MonomialIdeal& den, const MonomialIdeal& num);

// Full profile: depth, dim, CM/gCM verdicts, rigidity witness and the
// table of nonzero pieces over the enumeration box. Also re-derives the
// CM verdict through the linkwise vanishing criterion and raises
// theorem_violation if the two disagree.
CohomologyProfile depth_and_cm(const MonomialIdeal& den, const MonomialIdeal& num, int p,
                               const ScanOptions& opts = {});

// First nonnegative box multidegree whose relative pair has nonzero
// reduced 0-th cohomology; its presence forces depth <= 1.
std::optional<Multidegree> rigidity_scan(const MonomialIdeal& den, const MonomialIdeal& num, int p,
                                         const ScanOptions& opts = {});

// Generalized Cohen-Macaulay test: every piece below the dimension must
// sit at a multidegree with empty negative support.
bool gcm_check(const MonomialIdeal& den, const MonomialIdeal& num, int p,
               const ScanOptions& opts = {});

// Map induced on graded pieces by multiplication with a monomial x^b when
// the negative supports of a and a+b agree. `restriction` is the 0/1
// cochain-level matrix in the face bases; `on_cohomology` is the induced
// matrix in the canonical cohomology bases.
struct MultiplicationMap {
    Multidegree source;
    Multidegree target;
    int index = 0;
    int p = 2;
    std::vector<Face> source_faces;
    std::vector<Face> target_faces;
    gf::Matrix restriction;
    gf::Matrix on_cohomology;
    int source_rank = 0; // dim of the source cohomology
    int target_rank = 0;
};

MultiplicationMap multiplication_map(const MonomialIdeal& den, const MonomialIdeal& num, int i,
                                     const Multidegree& a, const Monomial& b, int p);

} // namespace mq
