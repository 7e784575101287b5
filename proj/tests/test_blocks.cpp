#include <doctest.h>

#include <stdexcept>

#include "lgrass/blocks.hpp"

using namespace lgrass;

namespace {

BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    BinaryMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            if (rows[static_cast<size_t>(i)][static_cast<size_t>(j)]) m.set(i, j);
        }
    }
    return m;
}

// the published 4x6 matrix of the four 3-term forms at n=4
const BinaryMatrix kPrintedL3 = from_rows({
    {1, 1, 1, 0, 0, 0},
    {1, 0, 0, 1, 1, 0},
    {0, 1, 0, 1, 0, 1},
    {0, 0, 1, 0, 1, 1},
});

const BinaryMatrix kPrintedM4 = from_rows({
    {1, 1, 1, 0, 0, 0},
    {1, 0, 0, 1, 1, 0},
    {0, 1, 0, 1, 0, 1},
    {0, 0, 1, 0, 1, 1},
});

const BinaryMatrix kPrintedM6 = from_rows({
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1},
});

}  // namespace

TEST_CASE("staircase_base") {
    CHECK(staircase_base(3) == kPrintedL3);

    const BinaryMatrix base1 = staircase_base(1);
    CHECK(base1.rows() == 2);
    CHECK(base1.cols() == 1);
    CHECK(base1.get(0, 0));
    CHECK(base1.get(1, 0));

    const BinaryMatrix base5 = staircase_base(5);
    CHECK(base5.rows() == 6);
    CHECK(base5.cols() == 15);
    for (int r = 0; r < 6; ++r) CHECK(base5.row_weight(r) == 5);
    for (int c = 0; c < 15; ++c) CHECK(base5.col_weight(c) == 2);

    CHECK_THROWS_AS(staircase_base(0), std::invalid_argument);
}

TEST_CASE("staircase_base is endpoint-in-pair incidence") {
    // entry[i][{a,b}] = 1 iff i is one of the two endpoints, columns in
    // lexicographic pair order
    for (int k : {2, 3, 4, 6}) {
        const BinaryMatrix base = staircase_base(k);
        int col = 0;
        for (int a = 1; a <= k + 1; ++a) {
            for (int b = a + 1; b <= k + 1; ++b, ++col) {
                for (int i = 1; i <= k + 1; ++i) {
                    CHECK(base.get(i - 1, col) == (i == a || i == b));
                }
            }
        }
    }
}

TEST_CASE("with_identity") {
    const BinaryMatrix stacked = with_identity(staircase_base(3), 6);
    CHECK(stacked.rows() == 10);
    CHECK(stacked.cols() == 6);
    for (int i = 0; i < 6; ++i) CHECK(stacked.get(4 + i, i));

    CHECK(with_identity(BinaryMatrix(0, 1), 1) == from_rows({{1}}));

    const BinaryMatrix tall = with_identity(staircase_base(1), 1);
    CHECK(tall.rows() == 3);
    CHECK(tall.cols() == 1);
    CHECK(tall.nonzero_count() == 3);

    CHECK_THROWS_AS(with_identity(staircase_base(3), 5), std::invalid_argument);
}

TEST_CASE("join_bottom") {
    std::vector<BinaryMatrix> operands;
    operands.push_back(from_rows({{1, 0}, {0, 1}}));
    operands.push_back(from_rows({{1}}));
    CHECK(join_bottom(operands) == from_rows({{1, 0, 0}, {0, 1, 1}}));

    const BinaryMatrix single = staircase_base(2);
    CHECK(join_bottom(std::vector<BinaryMatrix>{single}) == single);

    std::vector<BinaryMatrix> increasing;
    increasing.push_back(from_rows({{1}}));
    increasing.push_back(from_rows({{1, 0}, {0, 1}}));
    CHECK_THROWS_AS(join_bottom(increasing), std::invalid_argument);

    CHECK(join_bottom({}).rows() == 0);
}

TEST_CASE("staircase recursion dimensions") {
    CHECK(staircase(3, 0) == kPrintedL3);

    // column count law C(k+level+1, level+2)
    for (int k = 1; k <= 5; ++k) {
        for (int level = 0; level <= 3; ++level) {
            CHECK(staircase(k, level).cols() == binomial(k + level + 1, level + 2));
        }
    }

    // one column, all ones, height level+2
    for (int level = 0; level <= 3; ++level) {
        const BinaryMatrix thin = staircase(1, level);
        CHECK(thin.cols() == 1);
        CHECK(thin.rows() == level + 2);
        CHECK(thin.nonzero_count() == level + 2);
    }

    CHECK_THROWS_AS(staircase(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(staircase(2, -1), std::invalid_argument);
}

TEST_CASE("canonical block dimensions and weights for k = 2..7") {
    for (int k = 2; k <= 7; ++k) {
        const BinaryMatrix block = canonical_block(k);
        CHECK(block.rows() == binomial(2 * k - 2, k - 2));
        CHECK(block.cols() == binomial(2 * k - 2, k - 1));
        for (int r = 0; r < block.rows(); ++r) CHECK(block.row_weight(r) == k);
        for (int c = 0; c < block.cols(); ++c) CHECK(block.col_weight(c) == k - 1);
    }
    CHECK(canonical_block(2) == from_rows({{1, 1}}));
    CHECK(canonical_block(3) == kPrintedL3);
    CHECK_THROWS_AS(canonical_block(1), std::invalid_argument);

    // height telescopes: 1 + C(k,1) + C(k+1,2) + ... + C(2k-3, k-2)
    for (int k = 3; k <= 6; ++k) {
        long long height = 1;
        for (int j = 1; j <= k - 2; ++j) height += binomial(k + j - 1, j);
        CHECK(canonical_block(k).rows() == height);
    }
}

TEST_CASE("staircase(6,3) builds the k=6 block") {
    const BinaryMatrix block = staircase(6, 3);
    CHECK(block.rows() == 210);
    CHECK(block.cols() == 252);
    for (int r = 0; r < block.rows(); ++r) CHECK(block.row_weight(r) == 6);
    for (int c = 0; c < block.cols(); ++c) CHECK(block.col_weight(c) == 5);
    CHECK(block == canonical_block(6));
}

TEST_CASE("inclusion matrix") {
    CHECK(inclusion_matrix(2) == from_rows({{1, 1}}));
    CHECK(inclusion_matrix(4) == kPrintedM4);
    CHECK(inclusion_matrix(6) == kPrintedM6);
    CHECK_THROWS_AS(inclusion_matrix(5), std::invalid_argument);
    CHECK_THROWS_AS(inclusion_matrix(0), std::invalid_argument);

    const BinaryMatrix m8 = inclusion_matrix(8);
    CHECK(m8.rows() == 56);
    CHECK(m8.cols() == 70);
    CHECK(m8.has_row_labels());
    CHECK(m8.has_col_labels());
}

TEST_CASE("published matrices match the construction up to row permutation") {
    auto w4 = permutation_equivalent(inclusion_matrix(4), kPrintedM4);
    REQUIRE(w4.has_value());
    CHECK(permuted(inclusion_matrix(4), w4->first, w4->second) == kPrintedM4);

    auto w6 = permutation_equivalent(inclusion_matrix(6), kPrintedM6);
    REQUIRE(w6.has_value());

    // the level-1 staircase on four operands (heights 15, 10, 6, 3) is the
    // same matrix as the m=6 oracle
    const BinaryMatrix level1 = staircase(4, 1);
    CHECK(level1.rows() == 15);
    CHECK(level1.cols() == 20);
    CHECK(permutation_equivalent(level1, kPrintedM6).has_value());
}

TEST_CASE("canonical blocks are permutation-equivalent to the inclusion oracle") {
    for (int k = 2; k <= 5; ++k) {
        auto witness = permutation_equivalent(canonical_block(k), inclusion_matrix(2 * (k - 1)));
        REQUIRE(witness.has_value());
        CHECK(permuted(canonical_block(k), witness->first, witness->second) == inclusion_matrix(2 * (k - 1)));
    }
}

namespace {

// Wilson's diagonal-form theorem for subset-inclusion matrices: over GF(p)
// the t-vs-k inclusion matrix on a v-set has rank equal to the sum of
// C(v,i) - C(v,i-1) over those i in [0..t] with p not dividing C(k-i, t-i).
long long wilson_rank(int v, int t, int k, long long p) {
    long long total = 0;
    for (int i = 0; i <= t; ++i) {
        if (binomial(k - i, t - i) % p != 0) total += binomial(v, i) - binomial(v, i - 1);
    }
    return total;
}

}  // namespace

TEST_CASE("inclusion matrix ranks match the diagonal-form oracle") {
    for (int m : {4, 6, 8, 10}) {
        const BinaryMatrix oracle = inclusion_matrix(m);
        for (long long p : {2, 3, 5, 7}) {
            CHECK(rank(oracle, FieldSpec::gf(static_cast<std::uint64_t>(p))) ==
                  wilson_rank(m, (m - 2) / 2, m / 2, p));
        }
        // full row rank over the rationals
        CHECK(rank(oracle, FieldSpec::rationals()) == oracle.rows());
    }
}

TEST_CASE("triangle families") {
    const TriangleFamily one = triangle_family(6);
    REQUIRE(one.triangles.size() == 1);
    CHECK(one.triangles[0].prefix.empty());
    CHECK(one.triangles[0].completions.size() == 15);
    CHECK(one.partition_ok);

    const TriangleFamily six = triangle_family(8);
    REQUIRE(six.triangles.size() == 6);
    CHECK(six.partition_ok);
    for (int i = 0; i < 6; ++i) {
        CHECK(six.triangles[static_cast<size_t>(i)].prefix.entries() == std::vector<int>{i + 1});
        // completions are all pairs beyond the prefix
        CHECK(static_cast<long long>(six.triangles[static_cast<size_t>(i)].completions.size()) ==
              binomial(8 - (i + 1), 2));
    }

    const TriangleFamily big = triangle_family(10);
    CHECK(big.triangles.size() == 28);  // |I(2,8)|
    long long total = 0;
    for (const Triangle& t : big.triangles) total += static_cast<long long>(t.completions.size());
    CHECK(total == binomial(10, 4));
    CHECK(big.partition_ok);

    CHECK_THROWS_AS(triangle_family(7), std::invalid_argument);
    CHECK_THROWS_AS(triangle_family(4), std::invalid_argument);
}

TEST_CASE("first triangle image reproduces the level-1 staircase") {
    for (int m : {10, 12}) {
        const int k = (m + 2) / 2;
        const TriangleFamily family = triangle_family(m);
        const BinaryMatrix image = triangle_incidence(m, family.triangles.front());
        const BinaryMatrix level1 = staircase(k, 1);
        CHECK(image.rows() == level1.rows());
        CHECK(image.cols() == level1.cols());
        CHECK(permutation_equivalent(image, level1).has_value());
    }
}
