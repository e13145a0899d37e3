#ifndef VSTRATA_CERTIFICATE_HPP
#define VSTRATA_CERTIFICATE_HPP

#include "vstrata/forms.hpp"
#include "vstrata/rationalla.hpp"
#include "vstrata/schemes.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vstrata {

enum class SummandShape {
    power,                 // c L^d
    power_times_linear,    // c L^{d-1} M
    power_times_quadric,   // c L^{d-2} Q, Q a quadratic form
};
const char* to_string(SummandShape s);

struct Summand {
    Rational coefficient;
    SummandShape shape = SummandShape::power;
    LinearForm base;
    std::optional<LinearForm> linear;
    std::optional<Form> quadric;

    Form expand(unsigned d) const;
};

// target = Σ summands, checked exactly when the record is built.
class DecompositionRecord {
public:
    // Throws CertificateRefused if the summands do not re-expand to target.
    DecompositionRecord(Form target, std::vector<Summand> summands);

    const Form& target() const { return target_; }
    const std::vector<Summand>& summands() const { return summands_; }
    std::size_t size() const { return summands_.size(); }

    // Re-expands and compares again.
    bool verify() const;

private:
    Form target_;
    std::vector<Summand> summands_;
};

struct Claim {
    std::string statement;
    std::vector<std::size_t> ranks;
    bool passed = true;
};

enum class CertificateKind { border_rank, rank_upper, uniqueness, dimension };
const char* to_string(CertificateKind k);

// Scope strings used across constructions.
namespace scope {
inline constexpr const char* unique_scheme = "unique_scheme";
inline constexpr const char* certified = "certified";
inline constexpr const char* membership_only = "membership_only";
inline constexpr const char* upper_bound_only = "upper_bound_only";
inline constexpr const char* outside_hypotheses = "outside_theorem_hypotheses";
} // namespace scope

struct Certificate {
    CertificateKind kind = CertificateKind::border_rank;
    std::size_t value = 0;
    std::string scope;
    std::vector<Claim> claims;
    std::vector<std::string> notes;
    std::optional<SchemeSpec> scheme;
    std::optional<DecompositionRecord> decomposition;
    std::optional<std::uint64_t> seed;
    // Set only when the border rank is pinned down exactly.
    std::optional<std::size_t> border_rank;
    // Set only when the symmetric rank is pinned down exactly.
    std::optional<std::size_t> rank;

    bool all_passed() const;
};

struct CertifyOptions {
    RankMode mode = RankMode::exact;
    // Largest deg(Z) for which uniqueness is asserted; defaults to floor((d+1)/2).
    std::optional<std::size_t> uniqueness_max_degree;
};

// Checks, in order: h1(Z, d) = 0; P in <ν_d(Z)>; P outside the span of every proper
// subscheme; uniqueness of Z and b(P) = deg Z when 2 deg Z <= d+1; flattening rank of P
// against deg Z. Outside the uniqueness range the certificate is membership_only unless the
// flattening rank reaches deg Z, which pins the border rank on its own.
// Throws CertificateRefused naming the first failed claim, InputError on shape mismatch,
// InternalInconsistency if the flattening rank contradicts a proven equality.
Certificate certify_border_rank(const Form& p, const SchemeSpec& z, unsigned d, const CertifyOptions& options = {});

// Rank of the stacked matrix and of the matrix with v appended.
struct MembershipRanks {
    std::size_t without = 0;
    std::size_t with = 0;
    bool member() const { return with == without; }
};
MembershipRanks membership_ranks(const QMatrix& span, const QVector& v, RankMode mode = RankMode::exact);

} // namespace vstrata

#endif // VSTRATA_CERTIFICATE_HPP
