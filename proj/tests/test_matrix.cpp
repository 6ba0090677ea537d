#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dodgson/matrix.hpp"
#include "dodgson/matrix_io.hpp"
#include "dodgson/random.hpp"

using namespace dodgson;

namespace {
const RingDomain Z = RingDomain::integers();
const RingDomain Q = RingDomain::rationals();
const RingDomain F5 = RingDomain::prime_field(5);

Matrix sample3() {
    return Matrix::from_ints(Z, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
}
}  // namespace

TEST_CASE("matrix basics") {
    Matrix m(Z, 2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK_FALSE(m.square());
    CHECK_THROWS_AS(m.n(), Error);
    CHECK(m.at(1, 1).is_zero());
    CHECK_THROWS_AS(m.at(0, 1), Error);
    CHECK_THROWS_AS(m.at(3, 1), Error);
    CHECK_THROWS_AS(m.set(1, 1, Scalar::one(F5)), DomainMismatch);

    Matrix id = Matrix::identity(Z, 3);
    CHECK(id.at(1, 1).is_one());
    CHECK(id.at(1, 2).is_zero());
    CHECK(det_bareiss(id).is_one());
    CHECK_THROWS_AS(Matrix::from_ints(Z, {{1, 2}, {3}}), Error);
}

TEST_CASE("minor deletes the right rows and columns") {
    Matrix m = Matrix::from_ints(Z, {{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14, 15, 16}});
    Matrix sub = minor(m, {2, 4}, {1, 3});
    CHECK(sub.rows() == 2);
    CHECK(sub == Matrix::from_ints(Z, {{2, 4}, {10, 12}}));
    // order of the removal list does not matter
    CHECK(minor(m, {4, 2}, {3, 1}) == sub);
    CHECK_THROWS_AS(minor(m, {2, 2}, {1, 3}), Error);
    CHECK_THROWS_AS(minor(m, {5}, {}), Error);

    Matrix inner = interior(m);
    CHECK(inner == Matrix::from_ints(Z, {{6, 7}, {10, 11}}));
    CHECK_THROWS_AS(interior(Matrix(Z, 2, 2)), Error);
}

TEST_CASE("row operations") {
    Matrix m = sample3();
    Matrix swapped = swap_rows(m, 1, 3);
    CHECK(swapped.at(1, 1) == Scalar::integer(7));
    CHECK(swapped.at(3, 3) == Scalar::integer(3));
    CHECK(det_bareiss(swapped) == -det_bareiss(m));

    Matrix scaled = scale_row(m, 2, Scalar::integer(-4));
    CHECK(det_bareiss(scaled) == Scalar::integer(-4) * det_bareiss(m));

    Matrix dup = m;
    for (int j = 1; j <= 3; ++j) dup.set(3, j, dup.at(1, j));
    CHECK(det_bareiss(dup).is_zero());
}

TEST_CASE("determinant oracles agree on fixed matrices") {
    CHECK(det_bareiss(sample3()) == Scalar::integer(-3));
    CHECK(det_cofactor(sample3()) == Scalar::integer(-3));
    CHECK(det_bareiss(Matrix::from_ints(Z, {{1, 2}, {2, 4}})).is_zero());
    CHECK(det_bareiss(Matrix(Z, 0, 0)).is_one());
    CHECK(det_bareiss(Matrix::from_ints(Z, {{-7}})) == Scalar::integer(-7));
    CHECK_THROWS_AS(det_cofactor(Matrix(Z, 11, 11)), Error);
    CHECK_THROWS_AS(det_bareiss(Matrix(Z, 2, 3)), Error);
}

TEST_CASE("determinant oracles agree on random matrices in every domain") {
    for (const RingDomain& d : {Z, Q, F5}) {
        for (int n = 1; n <= 6; ++n) {
            for (std::uint64_t seed = 1; seed <= 4; ++seed) {
                Matrix m = random_matrix(d, n, 9, seed * 1000 + static_cast<std::uint64_t>(n));
                CHECK(det_bareiss(m) == det_cofactor(m));
            }
        }
    }
}

TEST_CASE("frozen determinants of seeded matrices") {
    CHECK(det_bareiss(random_matrix(Z, 4, 9, 42)) == Scalar::integer(-2090));
    CHECK(det_bareiss(random_matrix(Q, 3, 9, 7)) == Scalar::rational(-7, 3));
    CHECK(det_bareiss(random_matrix(F5, 4, 9, 13)) == Scalar::fp(4, F5));
}

TEST_CASE("A(k) construction matches the double-minor characterizations") {
    for (std::uint64_t seed : {3u, 17u}) {
        for (int n : {4, 5, 7}) {
            Matrix A = random_matrix(Z, n, 9, seed);
            CHECK(build_A_k(A, 0) == minor(A, {n - 2, n - 1}, {n - 2, n - 1}));
            CHECK(build_A_k(A, 1) == minor(A, {n - 2, n - 1}, {n - 2, n}));
            CHECK(build_A_k(A, 2) == minor(A, {n - 2, n - 1}, {n - 1, n}));
            for (int k = 3; k <= n - 1; ++k)
                CHECK(det_bareiss(build_A_k(A, k)).is_zero());
        }
    }
    Matrix A = random_matrix(Z, 5, 9, 1);
    CHECK(build_A_k(A, 3).cols() == 3);
    CHECK_THROWS_AS(build_A_k(A, 5), Error);
    CHECK_THROWS_AS(build_A_k(A, -1), Error);
    CHECK_THROWS_AS(build_A_k(random_matrix(Z, 3, 9, 1), 0), Error);
}

TEST_CASE("B(l) construction replaces the last row") {
    Matrix A = random_matrix(Q, 5, 9, 8);
    CHECK(build_B_l(A, 0) == A);
    for (int l = 1; l <= 4; ++l) {
        Matrix B = build_B_l(A, l);
        for (int j = 1; j <= 5; ++j) CHECK(B.at(5, j) == A.at(5 - l, j));
        CHECK(det_bareiss(B).is_zero());
    }
    CHECK_THROWS_AS(build_B_l(A, 5), Error);
    CHECK_THROWS_AS(build_B_l(A, -1), Error);
}

TEST_CASE("digest separates content") {
    Matrix a = random_matrix(Z, 4, 9, 42);
    Matrix b = a;
    CHECK(a.digest() == b.digest());
    b.set(2, 2, b.at(2, 2) + Scalar::one(Z));
    CHECK(a.digest() != b.digest());
    CHECK(random_matrix(F5, 3, 9, 5).digest() != random_matrix(Z, 3, 9, 5).digest());
}

TEST_CASE("matrix text round-trips in every domain") {
    for (const RingDomain& d : {Z, Q, F5}) {
        Matrix m = random_matrix(d, 4, 9, 77);
        std::istringstream in(matrix_to_string(m));
        CHECK(read_matrix(in) == m);
    }
}

TEST_CASE("matrix reader accepts the documented format") {
    std::istringstream plain("3\n1 2 3\n4 5 6\n7 8 10\n");
    CHECK(read_matrix(plain) == sample3());

    std::istringstream commented("# header\n\n3 3\n1 2 3\n# middle\n4 5 6\n7 8 10\n");
    CHECK(read_matrix(commented) == sample3());

    std::istringstream rect("2 3\n1 2 3\n4 5 6\n");
    Matrix r = read_matrix(rect);
    CHECK(r.rows() == 2);
    CHECK(r.cols() == 3);

    std::istringstream rational("2\n1/2 -3/4\n5 0\n");
    Matrix q = read_matrix(rational);
    CHECK(q.domain() == Q);
    CHECK(q.at(2, 1) == Scalar::rational(5, 1));

    std::istringstream field("2\n1 mod 5 3 mod 5\n2 mod 5 0 mod 5\n");
    Matrix f = read_matrix(field);
    CHECK(f.domain() == F5);
    CHECK(f.at(1, 2) == Scalar::fp(3, F5));

    std::istringstream directive("@domain fp 5\n2\n1 3\n2 0\n");
    CHECK(read_matrix(directive) == f);
}

TEST_CASE("matrix reader rejects malformed input") {
    std::istringstream missing("3\n1 2 3\n4 5 6\n");
    CHECK_THROWS_AS(read_matrix(missing), Error);
    std::istringstream extra("2\n1 2 3 4 5\n");
    CHECK_THROWS_AS(read_matrix(extra), Error);
    std::istringstream twice("@domain integers\n@domain rationals\n2\n1 2 3 4\n");
    CHECK_THROWS_AS(read_matrix(twice), Error);
    std::istringstream junk("2\n1 2\n3 frog\n");
    CHECK_THROWS_AS(read_matrix(junk), Error);
    std::istringstream nosize("");
    CHECK_THROWS_AS(read_matrix(nosize), Error);
    std::istringstream mixed("@domain integers\n2\n1 2\n3 1/2\n");
    CHECK_THROWS_AS(read_matrix(mixed), Error);
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.txt"), Error);
}

TEST_CASE("golden seed-42 matrix is stable") {
    Matrix generated = random_matrix(Z, 4, 9, 42);
    Matrix golden = read_matrix_file(std::string(DODGSON_GOLDEN_DIR) + "/random_int_n4_b9_s42.txt");
    CHECK(generated == golden);
    CHECK(generated.digest() == 15587490441611023968ull);
}

TEST_CASE("random matrices are deterministic and bounded") {
    CHECK(random_matrix(Z, 5, 9, 3) == random_matrix(Z, 5, 9, 3));
    CHECK(random_matrix(Z, 5, 9, 3) != random_matrix(Z, 5, 9, 4));

    Matrix zm = random_matrix(Z, 6, 9, 123);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            CHECK(zm.at(i, j).int_value() <= 9);
            CHECK(zm.at(i, j).int_value() >= -9);
        }

    Matrix qm = random_matrix(Q, 6, 9, 123);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            CHECK(abs(qm.at(i, j).rat_value().get_num()) <= 9);
            CHECK(qm.at(i, j).rat_value().get_den() >= 1);
            CHECK(qm.at(i, j).rat_value().get_den() <= 9);
        }

    Matrix fm = random_matrix(F5, 6, 9, 123);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            CHECK(fm.at(i, j).int_value() >= 0);
            CHECK(fm.at(i, j).int_value() < 5);
        }

    CHECK_THROWS_AS(random_matrix(Z, 3, 0, 1), Error);
}

TEST_CASE("prng rejection sampling stays in range") {
    Prng rng(99);
    for (int i = 0; i < 1000; ++i) {
        CHECK(rng.below(7) < 7);
        std::int64_t v = rng.in_range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
    Prng a(5), b(5);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}
