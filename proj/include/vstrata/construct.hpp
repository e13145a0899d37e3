#ifndef VSTRATA_CONSTRUCT_HPP
#define VSTRATA_CONSTRUCT_HPP

#include "vstrata/certificate.hpp"
#include "vstrata/forms.hpp"
#include "vstrata/sampling.hpp"
#include "vstrata/schemes.hpp"
#include "vstrata/strata.hpp"

#include <optional>

namespace vstrata {

struct Construction {
    SchemeSpec scheme;
    // Second scheme of the conic example (the one labelled b).
    std::optional<SchemeSpec> other_scheme;
    Form point;
    std::optional<DecompositionRecord> decomposition;
    Certificate certificate;
};

struct StratumPointOptions {
    // Parts >= 3 become jets on random smooth conics instead of lines.
    bool non_collinear = false;
    RankMode mode = RankMode::exact;
};

// Random curvilinear scheme with the label's component degrees and a random P in its span
// with every span coefficient nonzero, certified by certify_border_rank. Uniqueness is only
// asserted for 2 <= t <= floor((d-1)/2). For labels (1,...,1) the symmetric rank t is
// certified as well when the flattening rank reaches t.
Construction construct_stratum_point(unsigned m, unsigned d, const StratumLabel& label, Sampler& sampler,
                                     const StratumPointOptions& options = {});

// A degree-t1 jet on a line L plus s1 points off L, and P in their span. The decomposition
// has d + 2 - t1 powers of forms from L plus the s1 point powers.
// Requires m >= 2, 2 <= t1 <= d/2, s1 <= d/2.
Construction construct_e2plus(unsigned m, unsigned d, unsigned t1, unsigned s1, Sampler& sampler);

// A degree-2 jet plus t-2 points in linearly general position, P in their span, and a
// decomposition with d + t - 2 powers. Requires m >= 2 (m = 2 is marked outside the
// theorem's hypotheses), d >= 5, 3 <= t <= d.
Construction construct_f2(unsigned m, unsigned d, unsigned t, Sampler& sampler);

// Two divisors A, B on a random smooth plane conic with deg A + deg B = 2d + 2 whose spans
// meet in exactly one point P. Parts of length 1 are reduced points, longer parts jets along
// the conic; all supports are distinct.
Construction construct_conic_double(unsigned d, const StratumLabel& a_parts, const StratumLabel& b_parts,
                                    Sampler& sampler);

} // namespace vstrata

#endif // VSTRATA_CONSTRUCT_HPP
