#include <doctest.h>

#include "corank/corank.hpp"
#include "properties.hpp"

using namespace corank;

namespace {
IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}
} // namespace

TEST_CASE("smith normal form of a worked example") {
    IntMatrix A = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SnfResult snf = smith_normal_form(A);
    CHECK(snf.diagonal() == std::vector<Int>{2, 2, 156});
    CHECK(snf.rank() == 3);
    CHECK(snf.U * A * snf.V == snf.D);
    Int du = int_det(snf.U), dv = int_det(snf.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(int_det(A) == 624); // |det| = product of the invariant factors
}

TEST_CASE("smith normal form handles rank deficiency and rectangles") {
    SnfResult snf = smith_normal_form(from_rows({{1, 2, 3}, {2, 4, 6}}));
    CHECK(snf.rank() == 1);
    CHECK(snf.diagonal() == std::vector<Int>{1, 0});

    SnfResult z = smith_normal_form(IntMatrix(2, 2));
    CHECK(z.rank() == 0);
    CHECK(z.D == IntMatrix(2, 2));

    SnfResult tall = smith_normal_form(from_rows({{3}, {5}}));
    CHECK(tall.diagonal() == std::vector<Int>{1}); // gcd(3,5)
}

TEST_CASE("determinants") {
    CHECK(int_det(IntMatrix::identity(4)) == 1);
    CHECK(int_det(IntMatrix(0, 0)) == 1);
    CHECK(int_det(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(int_det(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK_THROWS_AS(int_det(IntMatrix(2, 3)), input_error);
}

TEST_CASE("unimodular inverse") {
    IntMatrix m = from_rows({{2, 1}, {1, 1}});
    IntMatrix inv = unimodular_inverse(m);
    CHECK(inv == from_rows({{1, -1}, {-1, 2}}));
    CHECK(m * inv == IntMatrix::identity(2));
    CHECK(unimodular_inverse(IntMatrix::identity(3)) == IntMatrix::identity(3));
    CHECK_THROWS_AS(unimodular_inverse(from_rows({{2, 0}, {0, 1}})), premise_error);
    CHECK_THROWS_AS(unimodular_inverse(from_rows({{1, 1}, {1, 1}})), premise_error);
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix(2, 3)), input_error);
}

TEST_CASE("matrix basics") {
    IntMatrix m = from_rows({{1, 2, 3}, {4, 5, 6}});
    CHECK(m.transposed() == from_rows({{1, 4}, {2, 5}, {3, 6}}));
    CHECK(m.transposed().transposed() == m);
    CHECK(from_rows({{1, 2}, {3, 4}}) * IntMatrix::identity(2) == from_rows({{1, 2}, {3, 4}}));
}

TEST_CASE("randomized smith form invariants") {
    props::snf_invariants(500);
}
