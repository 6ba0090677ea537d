#include <doctest.h>

#include <json.hpp>

#include "dodgson/identities.hpp"

using namespace dodgson;

namespace {
const RingDomain Z = RingDomain::integers();
const RingDomain Q = RingDomain::rationals();
const RingDomain F5 = RingDomain::prime_field(5);
const RingDomain F7 = RingDomain::prime_field(7);
}  // namespace

TEST_CASE("pair identity terms on a hand-checked 3x3") {
    Matrix A = Matrix::from_ints(Z, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    ResidualReport r = desnanot_jacobi_check(A, 2, 3);
    CHECK(r.terms.lhs_full_det == Scalar::integer(-3));
    CHECK(r.terms.lhs_double_minor_det == Scalar::integer(1));
    CHECK(r.terms.P == Scalar::integer(33));
    CHECK(r.terms.Q == Scalar::integer(36));
    CHECK(r.residual.is_zero());
    CHECK(r.passed);
    CHECK(r.kl == std::pair<int, int>{2, 3});
    CHECK(r.identity_id == "desnanot_jacobi");
}

TEST_CASE("pair identity holds for every (k,l) over every domain") {
    for (const RingDomain& d : {Z, Q, F5}) {
        for (int n = 3; n <= 6; ++n) {
            Matrix A = random_matrix(d, n, 9, 100 + static_cast<std::uint64_t>(n));
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    ResidualReport r = desnanot_jacobi_check(A, k, l);
                    CHECK(r.passed);
                    CHECK(r.residual.is_zero());
                }
        }
    }
}

TEST_CASE("pair identity survives singular matrices and singular minors") {
    // rank-1 matrix: every minor of order >= 2 vanishes
    Matrix A(Z, 4, 4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) A.set(i, j, Scalar::integer(i * j));
    for (int k = 1; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l) CHECK(desnanot_jacobi_check(A, k, l).passed);

    Matrix zero(F5, 5, 5);
    CHECK(desnanot_jacobi_check(zero, 2, 4).passed);
}

TEST_CASE("pair identity rejects bad arguments") {
    Matrix A = random_matrix(Z, 4, 9, 1);
    CHECK_THROWS_AS(desnanot_jacobi_check(A, 2, 2), Error);
    CHECK_THROWS_AS(desnanot_jacobi_check(A, 3, 2), Error);
    CHECK_THROWS_AS(desnanot_jacobi_check(A, 0, 2), Error);
    CHECK_THROWS_AS(desnanot_jacobi_check(A, 1, 5), Error);
    CHECK_THROWS_AS(desnanot_jacobi_check(random_matrix(Z, 2, 9, 1), 1, 2), Error);
}

TEST_CASE("corner check is the (n-1, n) specialization") {
    for (const RingDomain& d : {Z, Q, F7}) {
        for (int n = 3; n <= 7; ++n) {
            Matrix A = random_matrix(d, n, 9, 200 + static_cast<std::uint64_t>(n));
            ResidualReport corner = corner_identity_check(A);
            ResidualReport pair = desnanot_jacobi_check(A, n - 1, n);
            CHECK(corner.passed);
            CHECK(corner.identity_id == "corner_identity");
            CHECK(corner.residual == pair.residual);
            CHECK(corner.terms.lhs_full_det == pair.terms.lhs_full_det);
            CHECK(corner.terms.lhs_double_minor_det == pair.terms.lhs_double_minor_det);
            CHECK(corner.terms.P == pair.terms.P);
            CHECK(corner.terms.Q == pair.terms.Q);
        }
    }
}

TEST_CASE("relocation moves (k,l) to the corner without changing the terms") {
    for (const RingDomain& d : {Z, F5}) {
        for (int n = 3; n <= 6; ++n) {
            Matrix A = random_matrix(d, n, 9, 300 + static_cast<std::uint64_t>(n));
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    Matrix B = relocate_pair(A, k, l);
                    CHECK(det_bareiss(B) == det_bareiss(A));
                    ResidualReport direct = desnanot_jacobi_check(A, k, l);
                    ResidualReport moved = corner_identity_check(B);
                    CHECK(moved.passed);
                    CHECK(direct.terms.lhs_full_det == moved.terms.lhs_full_det);
                    CHECK(direct.terms.lhs_double_minor_det == moved.terms.lhs_double_minor_det);
                    CHECK(direct.terms.P == moved.terms.P);
                    CHECK(direct.terms.Q == moved.terms.Q);
                }
        }
    }
    CHECK_THROWS_AS(relocate_pair(random_matrix(Z, 4, 9, 1), 3, 3), Error);
}

TEST_CASE("gamma lambda digamma closed forms") {
    for (const RingDomain& d : {Z, Q, F5}) {
        for (int n = 4; n <= 7; ++n) {
            Matrix A = random_matrix(d, n, 9, 400 + static_cast<std::uint64_t>(n));
            ResidualReport r = gamma_lambda_digamma_check(A);
            CHECK(r.passed);
            CHECK(r.terms.gamma.has_value());
            CHECK(r.terms.lambda.has_value());
            CHECK(r.terms.digamma.has_value());
        }
    }
    CHECK_THROWS_AS(gamma_lambda_digamma_check(random_matrix(Z, 3, 9, 1)), Error);
}

TEST_CASE("gamma term values on a hand-checked 4x4") {
    // For n = 4 the closed forms reduce to border minors times the (1,1) entry.
    Matrix A = Matrix::from_ints(Z, {{2, 1, 0, 3}, {1, 4, 2, 1}, {0, 2, 5, 2}, {3, 1, 2, 6}});
    ResidualReport r = gamma_lambda_digamma_check(A);
    CHECK(r.passed);
    const Scalar core = A.at(1, 1);  // minor deleting rows/cols 2,3,4
    Matrix m_nn = minor(A, {4}, {4});
    Matrix m_nn1 = minor(A, {4}, {3});
    Matrix m_nn2 = minor(A, {4}, {2});
    CHECK(*r.terms.gamma == det_bareiss(m_nn) * core);
    CHECK(*r.terms.lambda == det_bareiss(m_nn1) * core);
    CHECK(*r.terms.digamma == det_bareiss(m_nn2) * core);
}

TEST_CASE("vanishing families and their expansions") {
    for (const RingDomain& d : {Z, Q, F5}) {
        for (int n = 4; n <= 7; ++n) {
            Matrix A = random_matrix(d, n, 9, 500 + static_cast<std::uint64_t>(n));
            CHECK(lemma1_vanishing_check(A).passed);
            CHECK(lemma1_expansion_check(A).passed);
            CHECK(lemma2_vanishing_check(A).passed);
            CHECK(lemma2_expansion_check(A).passed);
        }
    }
    CHECK_THROWS_AS(lemma1_vanishing_check(random_matrix(Z, 3, 9, 1)), Error);
    CHECK_THROWS_AS(lemma1_expansion_check(random_matrix(Z, 3, 9, 1)), Error);
    // lemma2 needs only n >= 2
    CHECK(lemma2_vanishing_check(random_matrix(Z, 2, 9, 1)).passed);
}

TEST_CASE("singular-interior construction and the degenerate-corner lemma") {
    int built = 0;
    for (const RingDomain& d : {Z, Q, F5}) {
        for (int n = 3; n <= 7; ++n) {
            const int inner = n - 2;
            for (int rr = 1; rr <= inner; ++rr) {
                std::vector<Scalar> lambda;
                for (int i = 1; i <= inner; ++i)
                    lambda.push_back(Scalar::from_long(i == rr ? 0 : (i % 3) - 1, d));
                bool any = false;
                for (int i = 1; i <= inner; ++i)
                    if (i != rr && !lambda[static_cast<std::size_t>(i - 1)].is_zero()) any = true;
                if (!any) lambda[static_cast<std::size_t>(rr % inner)] = Scalar::from_long(2, d);

                Matrix A = make_singular_interior(
                    n, {lambda, rr}, d, 600 + static_cast<std::uint64_t>(n * 10 + rr));
                CHECK(det_bareiss(minor(A, {n - 1, n}, {n - 1, n})).is_zero());
                ResidualReport r = lemma3_check(A);
                CHECK(r.passed);
                CHECK(r.terms.P == r.terms.Q);
                ++built;
            }
        }
    }
    CHECK(built > 30);
}

TEST_CASE("singular-interior construction rejects bad specs") {
    std::vector<Scalar> two = {Scalar::integer(1), Scalar::integer(0)};
    CHECK_THROWS_AS(make_singular_interior(5, {two, 1}, Z, 1), Error);  // wants 3 coefficients
    std::vector<Scalar> three = {Scalar::integer(0), Scalar::integer(1), Scalar::integer(1)};
    CHECK_THROWS_AS(make_singular_interior(5, {three, 0}, Z, 1), Error);
    CHECK_THROWS_AS(make_singular_interior(5, {three, 4}, Z, 1), Error);
    CHECK_THROWS_AS(make_singular_interior(2, {three, 1}, Z, 1), Error);
    std::vector<Scalar> zeros = {Scalar::integer(0), Scalar::integer(0), Scalar::integer(0)};
    CHECK_THROWS_AS(make_singular_interior(5, {zeros, 2}, Z, 1), Error);
    std::vector<Scalar> wrong = {Scalar::one(F5), Scalar::one(F5), Scalar::one(F5)};
    CHECK_THROWS_AS(make_singular_interior(5, {wrong, 1}, Z, 1), Error);
}

TEST_CASE("degenerate-corner lemma guards its precondition") {
    // a seeded matrix whose interior minor is almost surely regular
    Matrix A = random_matrix(Z, 5, 9, 4242);
    REQUIRE_FALSE(det_bareiss(minor(A, {4, 5}, {4, 5})).is_zero());
    CHECK_THROWS_AS(lemma3_check(A), Error);
}

TEST_CASE("campaign passes and is deterministic") {
    CampaignConfig cc;
    cc.domain = Z;
    cc.n_lo = 3;
    cc.n_hi = 8;
    cc.entry_bound = 9;
    cc.trials = 30;
    cc.seed = 11;

    CampaignSummary s1 = fuzz_identities(cc);
    CHECK(s1.total_fail == 0);
    CHECK_FALSE(s1.first_failure.has_value());
    CHECK(s1.total_pass == static_cast<int>(s1.reports.size()));
    CHECK(s1.counts.at("desnanot_jacobi").pass > 0);
    CHECK(s1.counts.at("corner_identity").pass == 30);
    CHECK(s1.counts.at("lemma2_vanishing").pass == 30);

    CampaignSummary s2 = fuzz_identities(cc);
    REQUIRE(s1.reports.size() == s2.reports.size());
    for (std::size_t i = 0; i < s1.reports.size(); ++i)
        CHECK(to_json_line(s1.reports[i]) == to_json_line(s2.reports[i]));
    CHECK(campaign_text(cc, s1) == campaign_text(cc, s2));

    // size-6 trials draw five distinct pairs instead of all fifteen
    CampaignConfig big = cc;
    big.n_lo = big.n_hi = 6;
    big.trials = 4;
    CampaignSummary s3 = fuzz_identities(big);
    CHECK(s3.counts.at("desnanot_jacobi").pass == 20);
}

TEST_CASE("campaign self-test corruption trips the failure path") {
    CampaignConfig cc;
    cc.domain = Z;
    cc.n_lo = 3;
    cc.n_hi = 5;
    cc.entry_bound = 9;
    cc.trials = 5;
    cc.seed = 11;
    cc.corrupt_for_selftest = true;

    CampaignSummary s = fuzz_identities(cc);
    CHECK(s.total_fail == 1);
    REQUIRE(s.first_failure.has_value());
    CHECK_FALSE(s.first_failure->passed);
    CHECK_FALSE(s.first_failure->residual.is_zero());
    CHECK(campaign_text(cc, s).find("failures: 1") != std::string::npos);
    CHECK(campaign_text(cc, s).find("first failure:") != std::string::npos);
}

TEST_CASE("reports serialize as stable single-line json") {
    Matrix A = Matrix::from_ints(Z, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    ResidualReport r = desnanot_jacobi_check(A, 1, 3);
    r.seed = 77;
    const std::string line = to_json_line(r);
    CHECK(line ==
          R"({"identity_id":"desnanot_jacobi","n":3,"domain":"integers","seed":77,"k":1,"l":3,)"
          R"("residual":"0","passed":true})");
    CHECK(line.find('\n') == std::string::npos);

    auto parsed = nlohmann::json::parse(line);
    CHECK(parsed["identity_id"] == "desnanot_jacobi");
    CHECK(parsed["passed"] == true);

    ResidualReport c = corner_identity_check(A);
    auto corner = nlohmann::json::parse(to_json_line(c));
    CHECK(corner["seed"].is_null());
    CHECK(corner["k"] == 2);  // corner keeps its (n-1, n) indices
}
