#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dodgson/matrix.hpp"
#include "dodgson/random.hpp"

namespace dodgson {

/// Term values of one identity check. The four base terms are populated by
/// the pair-identity checks (full determinant, double minor, like-index
/// product P, cross product Q); the last three only by the Gamma/Lambda/
/// digamma check.
struct IdentityTerms {
    Scalar lhs_full_det;
    Scalar lhs_double_minor_det;
    Scalar P;
    Scalar Q;
    std::optional<Scalar> gamma;
    std::optional<Scalar> lambda;
    std::optional<Scalar> digamma;
};

/// One identity check, recorded exactly: residual is a scalar difference and
/// "passed" means it is the zero of the domain, nothing looser.
struct ResidualReport {
    std::string identity_id;
    int n = 0;
    RingDomain domain = RingDomain::integers();
    std::optional<std::uint64_t> seed;
    std::optional<std::pair<int, int>> kl;
    IdentityTerms terms;
    Scalar residual;
    bool passed = false;
    std::uint64_t matrix_digest = 0;
};

/// One JSON object, no trailing newline: identity_id, n, domain, seed, k, l,
/// residual, passed. Absent seed/k/l serialize as null.
std::string to_json_line(const ResidualReport& r);

/// det(A) * det(A minus rows k,l and cols k,l)
///   - [ det(minus row l, col l) * det(minus row k, col k)
///       - det(minus row l, col k) * det(minus row k, col l) ].
/// Requires n >= 3 and 1 <= k < l <= n.
ResidualReport desnanot_jacobi_check(const Matrix& A, int k, int l);

/// The (k,l) = (n-1,n) corner case: P - Q = det(A) * det(interior minor).
ResidualReport corner_identity_check(const Matrix& A);

/// Checks the three 2x2-of-minors combinations Gamma, Lambda, digamma against
/// their closed forms (a border minor times the order-(n-3) interior minor).
/// Requires n >= 4.
ResidualReport gamma_lambda_digamma_check(const Matrix& A);

/// Requires det(A minus rows/cols n-1,n) = 0 (throws otherwise), then asserts
/// that the two corner products cancel exactly.
ResidualReport lemma3_check(const Matrix& A);

/// det(A(k)) = 0 for every k in 3..n-1 (the appended column repeats one of
/// the kept columns). Requires n >= 4.
ResidualReport lemma1_vanishing_check(const Matrix& A);

/// Last-column expansion of det(A(k)), checked for every k in 0..n-1:
/// border entries times order-(n-3) minors, with alternating signs.
ResidualReport lemma1_expansion_check(const Matrix& A);

/// det(B(l)) = 0 for every l in 1..n-1 (rows n-l and n coincide).
ResidualReport lemma2_vanishing_check(const Matrix& A);

/// Last-row expansion of det(B(l)), checked for every l in 0..n-1.
ResidualReport lemma2_expansion_check(const Matrix& A);

/// Moves row/column k to position n-1 and row/column l to position n (the
/// same permutation on both sides, so the determinant is unchanged). The
/// corner check on the result reproduces the general (k,l) check term-wise.
Matrix relocate_pair(const Matrix& A, int k, int l);

/// Coefficients of a forced linear dependence inside the interior block:
/// row `replaced_row` of the interior becomes the lambda-combination of the
/// other interior rows.
struct DependentInteriorSpec {
    std::vector<Scalar> lambda;  // n-2 entries; lambda[replaced_row-1] is unused
    int replaced_row = 1;        // 1..n-2
};

/// Random n x n matrix whose interior minor (rows/cols n-1,n removed) is
/// singular by construction. Border columns and all other rows stay random.
Matrix make_singular_interior(int n, const DependentInteriorSpec& spec,
                              const RingDomain& domain, std::uint64_t seed);

struct CampaignConfig {
    RingDomain domain = RingDomain::integers();
    int n_lo = 3;
    int n_hi = 8;
    std::uint64_t entry_bound = 9;
    int trials = 100;
    std::uint64_t seed = 0;
    /// Test hook: deliberately corrupts one check so the failure path of the
    /// harness itself can be exercised.
    bool corrupt_for_selftest = false;
};

struct CampaignSummary {
    struct Counts {
        int pass = 0;
        int fail = 0;
    };
    std::map<std::string, Counts> counts;  // keyed by identity_id
    std::vector<ResidualReport> reports;   // in trial order
    std::optional<ResidualReport> first_failure;
    int total_pass = 0;
    int total_fail = 0;
};

/// Deterministic campaign: per trial one random matrix, the general identity
/// over all (k,l) pairs (n <= 5) or five random pairs, the corner check, the
/// Gamma/Lambda/digamma check and both vanishing/expansion families.
/// Failures are data, not errors.
CampaignSummary fuzz_identities(const CampaignConfig& config);

/// Stable human-readable rendering (used by the CLI's text mode).
std::string campaign_text(const CampaignConfig& config, const CampaignSummary& summary);

}  // namespace dodgson
