#include "dodgson/identities.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dodgson {

namespace {

Scalar det_of_minor(const Matrix& A, std::initializer_list<int> rows,
                    std::initializer_list<int> cols) {
    return det_bareiss(minor(A, MinorSpec(rows, cols)));
}

ResidualReport base_report(const char* id, const Matrix& A) {
    ResidualReport r;
    r.identity_id = id;
    r.n = A.n();
    r.domain = A.domain();
    r.matrix_digest = A.digest();
    const Scalar zero = Scalar::zero(A.domain());
    r.terms.lhs_full_det = zero;
    r.terms.lhs_double_minor_det = zero;
    r.terms.P = zero;
    r.terms.Q = zero;
    r.residual = zero;
    return r;
}

}  // namespace

std::string to_json_line(const ResidualReport& r) {
    nlohmann::ordered_json j;
    j["identity_id"] = r.identity_id;
    j["n"] = r.n;
    j["domain"] = r.domain.name();
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;
    if (r.kl) {
        j["k"] = r.kl->first;
        j["l"] = r.kl->second;
    } else {
        j["k"] = nullptr;
        j["l"] = nullptr;
    }
    j["residual"] = r.residual.str();
    j["passed"] = r.passed;
    return j.dump();
}

ResidualReport desnanot_jacobi_check(const Matrix& A, int k, int l) {
    const int n = A.n();
    if (n < 3)
        throw Error("desnanot_jacobi_check: need n >= 3, got " + std::to_string(n));
    if (!(1 <= k && k < l && l <= n))
        throw Error("desnanot_jacobi_check: need 1 <= k < l <= n, got k=" +
                    std::to_string(k) + " l=" + std::to_string(l));

    ResidualReport r = base_report("desnanot_jacobi", A);
    r.kl = {k, l};
    r.terms.lhs_full_det = det_bareiss(A);
    r.terms.lhs_double_minor_det = det_of_minor(A, {k, l}, {k, l});
    r.terms.P = det_of_minor(A, {l}, {l}) * det_of_minor(A, {k}, {k});
    r.terms.Q = det_of_minor(A, {l}, {k}) * det_of_minor(A, {k}, {l});
    r.residual = r.terms.lhs_full_det * r.terms.lhs_double_minor_det -
                 (r.terms.P - r.terms.Q);
    r.passed = r.residual.is_zero();
    return r;
}

ResidualReport corner_identity_check(const Matrix& A) {
    const int n = A.n();
    if (n < 3)
        throw Error("corner_identity_check: need n >= 3, got " + std::to_string(n));
    ResidualReport r = desnanot_jacobi_check(A, n - 1, n);
    r.identity_id = "corner_identity";
    return r;
}

ResidualReport gamma_lambda_digamma_check(const Matrix& A) {
    const int n = A.n();
    if (n < 4)
        throw Error("gamma_lambda_digamma_check: need n >= 4, got " + std::to_string(n));

    ResidualReport r = base_report("gamma_lambda_digamma", A);

    const Scalar d_n_n = det_of_minor(A, {n}, {n});
    const Scalar d_n_n1 = det_of_minor(A, {n}, {n - 1});
    const Scalar d_n_n2 = det_of_minor(A, {n}, {n - 2});
    const Scalar d_n1_n1 = det_of_minor(A, {n - 1}, {n - 1});
    const Scalar d_n1_n = det_of_minor(A, {n - 1}, {n});

    const Scalar m11 = det_of_minor(A, {n - 1, n}, {n - 1, n});
    const Scalar m22 = det_of_minor(A, {n - 2, n}, {n - 2, n});
    const Scalar m12 = det_of_minor(A, {n - 1, n}, {n - 2, n});
    const Scalar m21 = det_of_minor(A, {n - 2, n}, {n - 1, n});
    const Scalar w2 = det_of_minor(A, {n - 2, n}, {n - 2, n - 1});
    const Scalar w1 = det_of_minor(A, {n - 1, n}, {n - 2, n - 1});
    const Scalar core = det_of_minor(A, {n - 2, n - 1, n}, {n - 2, n - 1, n});

    const Scalar gamma = m22 * m11 - m12 * m21;
    const Scalar lambda = w2 * m11 - w1 * m21;
    const Scalar digamma = w2 * m12 - m22 * w1;

    r.terms.lhs_full_det = det_bareiss(A);
    r.terms.lhs_double_minor_det = m11;
    r.terms.P = d_n_n * d_n1_n1;
    r.terms.Q = d_n_n1 * d_n1_n;
    r.terms.gamma = gamma;
    r.terms.lambda = lambda;
    r.terms.digamma = digamma;

    const Scalar dg = gamma - d_n_n * core;
    const Scalar dl = lambda - d_n_n1 * core;
    const Scalar dd = digamma - d_n_n2 * core;
    r.residual = !dg.is_zero() ? dg : (!dl.is_zero() ? dl : dd);
    r.passed = dg.is_zero() && dl.is_zero() && dd.is_zero();
    return r;
}

ResidualReport lemma3_check(const Matrix& A) {
    const int n = A.n();
    if (n < 3)
        throw Error("lemma3_check: need n >= 3, got " + std::to_string(n));

    const Scalar inner = det_of_minor(A, {n - 1, n}, {n - 1, n});
    if (!inner.is_zero())
        throw Error("lemma3_check: precondition failed, minor without rows/cols " +
                    std::to_string(n - 1) + "," + std::to_string(n) +
                    " has determinant " + inner.str() + " (want 0)");

    ResidualReport r = base_report("lemma3", A);
    r.terms.lhs_full_det = det_bareiss(A);
    r.terms.lhs_double_minor_det = inner;
    r.terms.P = det_of_minor(A, {n}, {n}) * det_of_minor(A, {n - 1}, {n - 1});
    r.terms.Q = det_of_minor(A, {n}, {n - 1}) * det_of_minor(A, {n - 1}, {n});
    r.residual = r.terms.P - r.terms.Q;
    r.passed = r.residual.is_zero();
    return r;
}

ResidualReport lemma1_vanishing_check(const Matrix& A) {
    const int n = A.n();
    if (n < 4)
        throw Error("lemma1_vanishing_check: need n >= 4, got " + std::to_string(n));

    ResidualReport r = base_report("lemma1_vanishing", A);
    r.passed = true;
    for (int k = 3; k <= n - 1; ++k) {
        const Scalar d = det_bareiss(build_A_k(A, k));
        if (!d.is_zero() && r.passed) {
            r.passed = false;
            r.residual = d;
            r.kl = {k, 0};
        }
    }
    return r;
}

ResidualReport lemma1_expansion_check(const Matrix& A) {
    const int n = A.n();
    if (n < 4)
        throw Error("lemma1_expansion_check: need n >= 4, got " + std::to_string(n));

    ResidualReport r = base_report("lemma1_expansion", A);
    r.passed = true;
    const Scalar core = det_of_minor(A, {n - 2, n - 1, n}, {n - 2, n - 1, n});
    for (int k = 0; k <= n - 1; ++k) {
        Scalar rhs = A.at(n, n - k) * core;
        for (int l = 3; l <= n - 1; ++l) {
            const Scalar term =
                A.at(n - l, n - k) *
                det_of_minor(A, {n - 2, n - 1, n - l}, {n - 2, n - 1, n});
            rhs = (l % 2 == 0) ? rhs + term : rhs - term;
        }
        const Scalar d = det_bareiss(build_A_k(A, k)) - rhs;
        if (!d.is_zero() && r.passed) {
            r.passed = false;
            r.residual = d;
            r.kl = {k, 0};
        }
    }
    return r;
}

ResidualReport lemma2_vanishing_check(const Matrix& A) {
    const int n = A.n();
    if (n < 2)
        throw Error("lemma2_vanishing_check: need n >= 2, got " + std::to_string(n));

    ResidualReport r = base_report("lemma2_vanishing", A);
    r.passed = true;
    for (int l = 1; l <= n - 1; ++l) {
        const Scalar d = det_bareiss(build_B_l(A, l));
        if (!d.is_zero() && r.passed) {
            r.passed = false;
            r.residual = d;
            r.kl = {0, l};
        }
    }
    return r;
}

ResidualReport lemma2_expansion_check(const Matrix& A) {
    const int n = A.n();
    if (n < 2)
        throw Error("lemma2_expansion_check: need n >= 2, got " + std::to_string(n));

    ResidualReport r = base_report("lemma2_expansion", A);
    r.passed = true;
    for (int l = 0; l <= n - 1; ++l) {
        Scalar rhs = Scalar::zero(A.domain());
        for (int k = 0; k <= n - 1; ++k) {
            const Scalar term = A.at(n - l, n - k) * det_of_minor(A, {n}, {n - k});
            rhs = (k % 2 == 0) ? rhs + term : rhs - term;
        }
        const Scalar d = det_bareiss(build_B_l(A, l)) - rhs;
        if (!d.is_zero() && r.passed) {
            r.passed = false;
            r.residual = d;
            r.kl = {0, l};
        }
    }
    return r;
}

Matrix relocate_pair(const Matrix& A, int k, int l) {
    const int n = A.n();
    if (!(1 <= k && k < l && l <= n))
        throw Error("relocate_pair: need 1 <= k < l <= n, got k=" + std::to_string(k) +
                    " l=" + std::to_string(l));

    // perm[i] = source index feeding position i; moving l first keeps the k
    // move from disturbing it (k < l, so k never lands on position n).
    std::vector<int> perm(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::swap(perm[static_cast<std::size_t>(l)], perm[static_cast<std::size_t>(n)]);
    std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(n - 1)]);

    Matrix B(A.domain(), n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            B.set(i, j, A.at(perm[static_cast<std::size_t>(i)],
                             perm[static_cast<std::size_t>(j)]));
    return B;
}

Matrix make_singular_interior(int n, const DependentInteriorSpec& spec,
                              const RingDomain& domain, std::uint64_t seed) {
    if (n < 3)
        throw Error("make_singular_interior: need n >= 3, got " + std::to_string(n));
    const int inner = n - 2;
    if (static_cast<int>(spec.lambda.size()) != inner)
        throw Error("make_singular_interior: need " + std::to_string(inner) +
                    " coefficients, got " + std::to_string(spec.lambda.size()));
    if (spec.replaced_row < 1 || spec.replaced_row > inner)
        throw Error("make_singular_interior: replaced_row out of range");
    for (const Scalar& c : spec.lambda)
        if (c.domain() != domain)
            throw Error("make_singular_interior: coefficient domain mismatch");
    // With a single interior row (n = 3) the dependence is the empty
    // combination and the coefficient list is vacuous; otherwise at least one
    // usable coefficient must be nonzero.
    bool any_nonzero = false;
    for (int i = 1; i <= inner && !any_nonzero; ++i)
        if (i != spec.replaced_row && !spec.lambda[static_cast<std::size_t>(i - 1)].is_zero())
            any_nonzero = true;
    if (inner >= 2 && !any_nonzero)
        throw Error("make_singular_interior: need at least one nonzero coefficient");

    Prng rng(seed);
    Matrix A = random_matrix_from(rng, domain, n, n, 9);

    // Interior rows live at matrix rows 1..n-2, interior cols at 1..n-2: the
    // minor drops rows/cols n-1 and n. Rewrite the chosen interior row as the
    // lambda-combination of the others, interior columns only.
    const int rr = spec.replaced_row;
    for (int j = 1; j <= inner; ++j) {
        Scalar acc = Scalar::zero(domain);
        for (int i = 1; i <= inner; ++i) {
            if (i == rr) continue;
            acc = acc + spec.lambda[static_cast<std::size_t>(i - 1)] * A.at(i, j);
        }
        A.set(rr, j, acc);
    }

    const Scalar check = det_bareiss(minor(A, MinorSpec({n - 1, n}, {n - 1, n})));
    if (!check.is_zero())
        throw Error("make_singular_interior: construction failed, interior det " +
                    check.str());
    return A;
}

CampaignSummary fuzz_identities(const CampaignConfig& config) {
    if (config.trials < 0)
        throw Error("fuzz_identities: negative trial count");
    if (config.n_lo < 3 || config.n_hi < config.n_lo)
        throw Error("fuzz_identities: need 3 <= n_lo <= n_hi");

    CampaignSummary summary;
    Prng master(config.seed);

    auto record = [&summary](ResidualReport r, std::uint64_t matrix_seed) {
        r.seed = matrix_seed;
        auto& c = summary.counts[r.identity_id];
        if (r.passed) {
            ++c.pass;
            ++summary.total_pass;
        } else {
            ++c.fail;
            ++summary.total_fail;
            if (!summary.first_failure) summary.first_failure = r;
        }
        summary.reports.push_back(std::move(r));
    };

    for (int trial = 0; trial < config.trials; ++trial) {
        const int n = static_cast<int>(
            static_cast<std::uint64_t>(config.n_lo) +
            master.below(static_cast<std::uint64_t>(config.n_hi - config.n_lo) + 1));
        const std::uint64_t matrix_seed = master.next();
        const Matrix A = random_matrix(config.domain, n, config.entry_bound, matrix_seed);

        std::vector<std::pair<int, int>> pairs;
        if (n <= 5) {
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) pairs.emplace_back(k, l);
        } else {
            std::set<std::pair<int, int>> seen;
            while (static_cast<int>(seen.size()) < 5) {
                int a = static_cast<int>(1 + master.below(static_cast<std::uint64_t>(n)));
                int b = static_cast<int>(1 + master.below(static_cast<std::uint64_t>(n)));
                if (a == b) continue;
                seen.emplace(std::min(a, b), std::max(a, b));
            }
            pairs.assign(seen.begin(), seen.end());
        }

        for (const auto& [k, l] : pairs) record(desnanot_jacobi_check(A, k, l), matrix_seed);
        record(corner_identity_check(A), matrix_seed);
        if (n >= 4) {
            record(gamma_lambda_digamma_check(A), matrix_seed);
            record(lemma1_vanishing_check(A), matrix_seed);
            record(lemma1_expansion_check(A), matrix_seed);
        }
        record(lemma2_vanishing_check(A), matrix_seed);
        record(lemma2_expansion_check(A), matrix_seed);

        if (config.corrupt_for_selftest && trial == 0 && !summary.reports.empty() &&
            summary.reports.front().passed) {
            ResidualReport& victim = summary.reports.front();
            victim.passed = false;
            victim.residual = Scalar::one(config.domain);
            auto& c = summary.counts[victim.identity_id];
            --c.pass;
            ++c.fail;
            --summary.total_pass;
            ++summary.total_fail;
            if (!summary.first_failure) summary.first_failure = victim;
        }
    }
    return summary;
}

std::string campaign_text(const CampaignConfig& config, const CampaignSummary& summary) {
    std::ostringstream out;
    out << "campaign: domain=" << config.domain.name() << " n=[" << config.n_lo << ","
        << config.n_hi << "] bound=" << config.entry_bound
        << " trials=" << config.trials << " seed=" << config.seed << "\n";
    for (const auto& [id, c] : summary.counts)
        out << "  " << id << ": pass=" << c.pass << " fail=" << c.fail << "\n";
    out << "failures: " << summary.total_fail << "\n";
    if (summary.first_failure)
        out << "first failure: " << to_json_line(*summary.first_failure) << "\n";
    return out.str();
}

}  // namespace dodgson
