#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "netcode/ffmat.hpp"

using namespace netcode;

TEST_CASE("default moduli are the smallest irreducibles") {
    CHECK(Field::make(2).modulus() == std::vector<int>{0, 1});          // x
    CHECK(Field::make(2, 2).modulus() == std::vector<int>{1, 1, 1});    // x^2+x+1
    CHECK(Field::make(2, 3).modulus() == std::vector<int>{1, 1, 0, 1}); // x^3+x+1
    CHECK(Field::make(3, 2).modulus() == std::vector<int>{1, 0, 1});    // x^2+1
    CHECK(Field::make(2, 4).modulus() == std::vector<int>{1, 1, 0, 0, 1});
}

TEST_CASE("field construction rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(4), non_prime_characteristic);
    CHECK_THROWS_AS(Field::make(1), non_prime_characteristic);
    CHECK_THROWS_AS(Field::make(2, 5), field_too_large);
    CHECK_THROWS_AS(Field::make(17), field_too_large);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), reducible_modulus); // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1}), invalid_parameters);
    CHECK(Field::make(2, 5, {}, 32).q() == 32);
}

TEST_CASE("GF(4) arithmetic table facts") {
    // Codes: 0, 1, 2 = x, 3 = x+1, modulus x^2+x+1.
    Field f = Field::make(2, 2);
    CHECK(f.mul(2, 2) == 3); // x^2 = x+1
    CHECK(f.mul(2, 3) == 1); // x(x+1) = x^2+x = 1
    CHECK(f.mul(3, 3) == 2); // (x+1)^2 = x^2+1 = x
    CHECK(f.add(2, 3) == 1);
    CHECK(f.inv(2) == 3);
    CHECK(f.inv(3) == 2);
    CHECK_THROWS_AS(f.inv(0), division_by_zero);
}

TEST_CASE("GF(3) and GF(8) spot facts") {
    Field f3 = Field::make(3);
    CHECK(f3.inv(2) == 2);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.neg(1) == 2);
    Field f8 = Field::make(2, 3);
    CHECK(f8.pow(2, 3) == 3); // x^3 = x+1 under x^3+x+1
    CHECK(f8.mul(2, f8.mul(2, 2)) == 3);
}

TEST_CASE("field axioms hold exhaustively") {
    for (Field f : {Field::make(2), Field::make(3), Field::make(2, 2), Field::make(2, 3)}) {
        const int q = f.q();
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field identity is structural") {
    CHECK(Field::make(2, 2) == Field::make(2, 2, {1, 1, 1}));
    CHECK(Field::make(2) != Field::make(3));
    CHECK(Field::from_order(9) == Field::make(3, 2));
    CHECK_THROWS_AS(Field::from_order(6), non_prime_characteristic);
    Fq a(Field::make(2), 1), b(Field::make(3), 1);
    CHECK_THROWS_AS(a + b, field_mismatch);
    Fq c(Field::make(2), 1);
    CHECK(a + c == Fq(Field::make(2), 0));
}

TEST_CASE("matrix shapes and arithmetic") {
    Field f = Field::make(2);
    Matrix a(f, 2, 2, {1, 1, 0, 1});
    Matrix b(f, 2, 2, {1, 0, 1, 1});
    CHECK((a + b) == Matrix(f, 2, 2, {0, 1, 1, 0}));
    CHECK((a * b) == Matrix(f, 2, 2, {0, 1, 1, 1}));
    CHECK(-a == a); // characteristic 2
    CHECK_THROWS_AS(a + Matrix(f, 1, 2), shape_mismatch);
    CHECK_THROWS_AS(a * Matrix(f, 3, 1), shape_mismatch);
    CHECK_THROWS_AS(a + Matrix(Field::make(3), 2, 2), field_mismatch);

    Matrix e(f, 0, 3);
    CHECK(e.rows() == 0);
    CHECK(rank(e) == 0);
    Matrix g(f, 2, 0);
    CHECK((g * e) == zeros(f, 2, 3)); // inner dimension 0 gives the zero matrix

    Field f4 = Field::make(2, 2);
    Matrix h(f4, 1, 2, {2, 3});
    Matrix k(f4, 2, 1, {3, 2});
    CHECK((h * k)(0, 0) == f4.add(f4.mul(2, 3), f4.mul(3, 2))); // 1 + 1 = 0
    CHECK((h * k)(0, 0) == 0);
}

TEST_CASE("rank facts") {
    Field f = Field::make(2);
    CHECK(rank(identity(f, 2)) == 2);
    CHECK(rank(Matrix(f, 2, 2, {1, 1, 1, 1})) == 1);
    CHECK(rank(zeros(f, 3, 2)) == 0);
    Field f3 = Field::make(3);
    CHECK(rank(Matrix(f3, 2, 2, {1, 2, 2, 1})) == 1); // (2,1) = 2*(1,2) mod 3
    CHECK(rank(Matrix(f3, 2, 2, {1, 2, 2, 2})) == 2);
}

TEST_CASE("rank agrees with transpose rank") {
    Field f = Field::make(3);
    MatrixStream s(f, 2, 3);
    Matrix x;
    while (s.next(x)) CHECK(rank(x) == rank(x.transpose()));
}

TEST_CASE("product rank bounds over GF(2) up to 3x3") {
    Field f = Field::make(2);
    for (int n : {1, 2, 3})
        for (int m : {1, 2, 3})
            for (int nn : {1, 2, 3}) {
                auto as = enumerate_matrices(f, nn, n);
                auto xs = enumerate_matrices(f, n, m);
                std::vector<int> ra(as.size()), rx(xs.size());
                for (size_t i = 0; i < as.size(); ++i) ra[i] = rank(as[i]);
                for (size_t i = 0; i < xs.size(); ++i) rx[i] = rank(xs[i]);
                for (size_t i = 0; i < as.size(); ++i)
                    for (size_t j = 0; j < xs.size(); ++j) {
                        int rp = rank(as[i] * xs[j]);
                        CHECK(rp <= std::min(ra[i], rx[j]));
                        CHECK(rp >= ra[i] + rx[j] - n);
                    }
            }
}

TEST_CASE("rref canonical facts") {
    Field f = Field::make(2);
    RrefResult rr = rref(Matrix(f, 2, 2, {1, 1, 1, 1}));
    CHECK(rr.r == Matrix(f, 2, 2, {1, 1, 0, 0}));
    CHECK(rr.pivot_cols == std::vector<int>{0});
    // Idempotence over all 2x3 matrices of GF(3).
    Field f3 = Field::make(3);
    MatrixStream s(f3, 2, 3);
    Matrix x;
    while (s.next(x)) {
        RrefResult a = rref(x);
        CHECK(rref(a.r).r == a.r);
    }
}

TEST_CASE("full rank decomposition") {
    Field f = Field::make(2);
    FullRankDecomposition d = full_rank_decomposition(Matrix(f, 2, 2, {1, 1, 1, 1}));
    CHECK(d.p == Matrix(f, 2, 1, {1, 1}));
    CHECK(d.q == Matrix(f, 1, 2, {1, 1}));
    for (Field g : {Field::make(2), Field::make(3)}) {
        MatrixStream s(g, 3, 3);
        Matrix x;
        while (s.next(x)) {
            FullRankDecomposition fd = full_rank_decomposition(x);
            const int r = rank(x);
            CHECK(fd.p.rows() == 3);
            CHECK(fd.p.cols() == r);
            CHECK(fd.q.rows() == r);
            CHECK(fd.q.cols() == 3);
            CHECK(rank(fd.p) == r);
            CHECK(rank(fd.q) == r);
            CHECK(fd.p * fd.q == x);
        }
    }
}

TEST_CASE("rank split") {
    Field f = Field::make(2);
    RankSplit s = split_by_rank(identity(f, 2), 1);
    CHECK(s.w == Matrix(f, 2, 2, {1, 0, 0, 0}));
    CHECK(s.w2 == Matrix(f, 2, 2, {0, 0, 0, 1}));
    CHECK_THROWS_AS(split_by_rank(identity(f, 2), 3), split_out_of_range);
    CHECK_THROWS_AS(split_by_rank(identity(f, 2), -1), split_out_of_range);

    MatrixStream st(f, 3, 3);
    Matrix x;
    while (st.next(x)) {
        const int r = rank(x);
        for (int i = 0; i <= r; ++i) {
            RankSplit sp = split_by_rank(x, i);
            CHECK(sp.w + sp.w2 == x);
            CHECK(rank(sp.w) == i);
            CHECK(rank(sp.w2) == r - i);
        }
    }
}

TEST_CASE("null spaces annihilate") {
    Field f = Field::make(3);
    MatrixStream s(f, 2, 3);
    Matrix x;
    while (s.next(x)) {
        Matrix ns = null_space(x);
        CHECK(ns.rows() == 3 - rank(x));
        CHECK(rank(ns) == ns.rows());
        CHECK((x * ns.transpose()).is_zero());
        Matrix lns = left_null_space(x);
        CHECK(lns.rows() == 2 - rank(x));
        CHECK((lns * x).is_zero());
    }
}

TEST_CASE("linear solves") {
    Field f = Field::make(2);
    auto xs = enumerate_matrices(f, 2, 3);
    for (const Matrix& x : xs) {
        for (std::uint64_t ci = 0; ci < 4; ++ci) {
            Matrix c = matrix_from_index(f, 1, 2, ci);
            Matrix t = c * x;
            auto sol = solve_left(x, t);
            REQUIRE(sol.has_value());
            CHECK(*sol * x == t);
        }
        // Row vectors outside the row space must be rejected.
        for (std::uint64_t ti = 0; ti < 8; ++ti) {
            Matrix t = matrix_from_index(f, 1, 3, ti);
            bool in_span = rank(vstack(x, t)) == rank(x);
            CHECK(solve_left(x, t).has_value() == in_span);
        }
    }
    Field f3 = Field::make(3);
    Matrix ff(f3, 2, 2, {1, 2, 2, 1});
    Matrix e(f3, 2, 2, {1, 0, 2, 2});
    auto sol = solve_matrix(ff, ff * e);
    REQUIRE(sol.has_value());
    CHECK(ff * *sol == ff * e);
}

TEST_CASE("enumeration is lexicographic and restartable") {
    Field f = Field::make(2);
    auto all = enumerate_matrices(f, 2, 2);
    CHECK(all.size() == 16);
    CHECK(all[0] == zeros(f, 2, 2));
    CHECK(all[1] == Matrix(f, 2, 2, {0, 0, 0, 1}));
    CHECK(all[8] == Matrix(f, 2, 2, {1, 0, 0, 0}));
    for (std::uint64_t i = 0; i < all.size(); ++i) CHECK(matrix_to_index(all[i]) == i);

    MatrixStream s(f, 1, 2);
    Matrix x;
    int n = 0;
    while (s.next(x)) ++n;
    CHECK(n == 4);
    s.reset();
    CHECK(s.next(x));
    CHECK(x == zeros(f, 1, 2));

    auto full = enumerate_matrices_of_rank(f, 2, 2, 2);
    CHECK(full.size() == 6); // |GL(2,2)| = (4-1)(4-2)
    auto at_least_1 = enumerate_matrices_rank_at_least(f, 2, 2, 1);
    CHECK(at_least_1.size() == 15);
}

TEST_CASE("enumeration budget is enforced") {
    Field f = Field::make(2);
    setenv("NETCODE_BUDGET", "10", 1);
    CHECK_THROWS_AS(enumerate_matrices(f, 2, 2), enumeration_budget_exceeded);
    setenv("NETCODE_BUDGET", "16", 1);
    CHECK(enumerate_matrices(f, 2, 2).size() == 16);
    unsetenv("NETCODE_BUDGET");
    CHECK(enumeration_budget() == (std::uint64_t(1) << 24));
}

TEST_CASE("matrix text round trip") {
    Field f4 = Field::make(2, 2);
    Matrix x(f4, 2, 3, {0, 1, 2, 3, 0, 1});
    Matrix y = matrix_from_string(matrix_to_string(x));
    CHECK(y == x);

    Matrix empty(Field::make(2), 0, 3);
    CHECK(matrix_from_string(matrix_to_string(empty)) == empty);

    std::ostringstream os;
    write_matrix_list(os, {x, x + x, zeros(f4, 2, 3)});
    std::istringstream is(os.str());
    auto back = read_matrix_list(is);
    REQUIRE(back.size() == 3);
    CHECK(back[0] == x);
    CHECK(back[2] == zeros(f4, 2, 3));

    CHECK_THROWS_AS(matrix_from_string("nonsense"), parse_error);
    CHECK_THROWS_AS(matrix_from_string("2 1 1\n5\n"), parse_error);
    CHECK_THROWS_AS(matrix_from_string("2 2 2\n0 1\n"), parse_error);
    CHECK_THROWS_AS(matrix_from_string("6 1 1\n0\n"), non_prime_characteristic);
}
