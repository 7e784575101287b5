#include <doctest.h>

#include <stdexcept>

#include "lgrass/decompose.hpp"
#include "lgrass/report.hpp"

using namespace lgrass;

TEST_CASE("classify_columns worked examples") {
    SymplecticLabels five(5);
    const auto classes5 = classify_columns(five);
    CHECK_FALSE(classes5.at(MultiIndex({1, 2, 3, 4, 5}, 10)).has_value());  // one label per pair

    SymplecticLabels six(6);
    const auto classes6 = classify_columns(six);
    // {1,12}, {2,11}, {3,10} are all full pairs
    const auto& cls = classes6.at(MultiIndex({1, 2, 3, 10, 11, 12}, 12));
    REQUIRE(cls.has_value());
    CHECK(cls->singletons.empty());
    CHECK(cls->pair_count == 3);

    SymplecticLabels four(4);
    const auto classes4 = classify_columns(four);
    const auto& cls4 = classes4.at(MultiIndex({1, 2, 7, 8}, 8));
    REQUIRE(cls4.has_value());
    CHECK(cls4->singletons.empty());
    CHECK(cls4->pair_count == 2);
}

TEST_CASE("inserting a pair preserves the singleton tuple") {
    for (int n : {4, 5}) {
        SymplecticLabels labels(n);
        for (const MultiIndex& alpha : enumerate_indices(n - 2, 2 * n)) {
            const RowClass row = decompose_row_class(alpha, labels);
            for (const MultiIndex& beta : plane_form(alpha, labels).terms) {
                CHECK(decompose_row_class(beta, labels).singletons == row.singletons);
            }
        }
    }
}

TEST_CASE("verify_class_block worked examples") {
    SymplecticLabels six(6);
    const BinaryMatrix b6 = contraction_matrix(six);

    const BlockCheck whole = verify_class_block({}, six, b6);
    CHECK(whole.block_k == 4);
    CHECK(whole.row_count == 15);
    CHECK(whole.col_count == 20);
    CHECK(whole.verified);

    const BlockCheck pair12 = verify_class_block({1, 2}, six, b6);
    CHECK(pair12.block_k == 3);
    CHECK(pair12.row_count == 4);
    CHECK(pair12.col_count == 6);
    CHECK(pair12.verified);

    SymplecticLabels five(5);
    const BinaryMatrix b5 = contraction_matrix(five);
    const BlockCheck high_label = verify_class_block({8}, five, b5);  // singletons range over [1..2n]
    CHECK(high_label.block_k == 3);
    CHECK(high_label.row_count == 4);
    CHECK(high_label.col_count == 6);
    CHECK(high_label.verified);

    CHECK_THROWS_AS(verify_class_block({1}, six, b6), std::invalid_argument);        // odd size at even n
    CHECK_THROWS_AS(verify_class_block({1, 12}, six, b6), std::invalid_argument);    // contains a pair
    CHECK_THROWS_AS(verify_class_block({2, 1}, six, b6), std::invalid_argument);     // unsorted
}

TEST_CASE("verify_class_block detects a corrupted matrix") {
    SymplecticLabels four(4);
    BinaryMatrix b = contraction_matrix(four);
    // flip one entry inside the singleton-free block: row (1,8), column (1,2,7,8)
    const int row = static_cast<int>(lex_rank(MultiIndex({1, 8}, 8)));
    const int col = static_cast<int>(lex_rank(MultiIndex({1, 2, 7, 8}, 8)));
    REQUIRE(b.get(row, col));
    b.set(row, col, false);

    const BlockCheck damaged = verify_class_block({}, four, b);
    CHECK_FALSE(damaged.verified);
    // untouched classes still verify
    CHECK(verify_class_block({3, 4}, four, b).verified);
}

TEST_CASE("analyze_decomposition at n=4") {
    const std::vector<std::uint64_t> chars{0, 2, 3};
    const DecompositionReport report = analyze_decomposition(SymplecticLabels(4), chars);
    CHECK(report.census == std::map<int, long long>{{2, 24}, {3, 1}});
    CHECK(report.zero_column_count == 16);
    CHECK(report.census_consistent);
    CHECK(report.all_blocks_verified);
    CHECK(report.corollary_identity_holds);
    CHECK(report.rank_table.at(0) == std::pair<int, int>{28, 28});
    CHECK(report.rank_table.at(2) == std::pair<int, int>{27, 27});
    CHECK(report.rank_table.at(3) == std::pair<int, int>{28, 28});
    CHECK(report.classes.size() == 25);
}

TEST_CASE("analyze_decomposition at n=5") {
    const std::vector<std::uint64_t> chars{0, 2};
    const DecompositionReport report = analyze_decomposition(SymplecticLabels(5), chars);
    CHECK(report.census == std::map<int, long long>{{2, 80}, {3, 10}});
    CHECK(report.zero_column_count == 32);
    CHECK(report.census_consistent);
    CHECK(report.all_blocks_verified);
    CHECK(report.rank_table.at(0) == std::pair<int, int>{120, 120});
    CHECK(report.rank_table.at(2) == std::pair<int, int>{110, 110});
}

TEST_CASE("analyze_decomposition at n=6 matches the published table") {
    const std::vector<std::uint64_t> chars{0, 2, 3, 5};
    const DecompositionReport report = analyze_decomposition(SymplecticLabels(6), chars);
    CHECK(report.census == std::map<int, long long>{{2, 240}, {3, 60}, {4, 1}});
    CHECK(report.zero_column_count == 64);
    CHECK(report.census_consistent);
    CHECK(report.all_blocks_verified);
    CHECK(report.rank_table.at(0) == std::pair<int, int>{495, 495});
    CHECK(report.rank_table.at(2) == std::pair<int, int>{430, 430});
    CHECK(report.rank_table.at(3) == std::pair<int, int>{494, 494});
    CHECK(report.rank_table.at(5) == std::pair<int, int>{495, 495});
    CHECK(report.char_zero_primes.size() == 3);  // 924 columns force the modular route
}

TEST_CASE("plane count identity for n = 4..8") {
    for (int n = 4; n <= 8; ++n) CHECK(plane_count_identity(SymplecticLabels(n)));
}

TEST_CASE("rank propagation") {
    const RankPropagation char0 = rank_propagation_check(SymplecticLabels(6), FieldSpec::rationals());
    CHECK(char0.hypothesis_full_rank);
    CHECK_FALSE(char0.vacuous);
    CHECK(char0.block_full_rank == std::map<int, bool>{{2, true}, {3, true}, {4, true}});

    const RankPropagation char2 = rank_propagation_check(SymplecticLabels(6), FieldSpec::gf(2));
    CHECK_FALSE(char2.hypothesis_full_rank);
    CHECK(char2.vacuous);
    CHECK(char2.block_full_rank.empty());

    const RankPropagation n4 = rank_propagation_check(SymplecticLabels(4), FieldSpec::gf(3));
    CHECK(n4.hypothesis_full_rank);
    CHECK(n4.block_full_rank == std::map<int, bool>{{2, true}, {3, true}});

    CHECK_THROWS_AS(rank_propagation_check(SymplecticLabels(5), FieldSpec::gf(3)), std::invalid_argument);
}

TEST_CASE("run_verification drives discrepancies from published values") {
    VerifyOptions options;
    options.characteristics = {0, 2};
    options.kernel_samples = 5;
    const VerificationReport ok = run_verification(SymplecticLabels(6), options);
    CHECK(ok.all_checks_pass);
    CHECK(ok.paper_census_match);
    CHECK(ok.discrepancies.empty());
    REQUIRE(ok.lemma_checks.size() == 3);  // k = 2, 3, 4
    for (const LemmaCheck& check : ok.lemma_checks) CHECK(check.equivalent);

    const VerificationReport odd = run_verification(SymplecticLabels(5), options);
    CHECK(odd.all_checks_pass);  // internal consistency still holds
    CHECK_FALSE(odd.paper_census_match);
    CHECK_FALSE(odd.discrepancies.empty());

    const VerificationReport small = run_verification(SymplecticLabels(4), options);
    CHECK(small.all_checks_pass);
    CHECK(small.paper_census_match);
    CHECK(small.discrepancies.empty());
}

TEST_CASE("verification JSON is byte-deterministic") {
    VerifyOptions options;
    options.characteristics = {0, 2};
    options.kernel_samples = 3;
    const std::string a = verification_json(run_verification(SymplecticLabels(4), options));
    const std::string b = verification_json(run_verification(SymplecticLabels(4), options));
    CHECK(a == b);
    CHECK(a.find("\"schema_version\": 1") != std::string::npos);
    for (const char* key : {"\"n\"", "\"parity\"", "\"classes\"", "\"zero_columns\"", "\"census\"",
                            "\"paper_census_match\"", "\"ranks\"", "\"corollary_identity\"",
                            "\"lemma_Lk_eq_Mm\"", "\"discrepancies\""}) {
        CHECK(a.find(key) != std::string::npos);
    }
}

TEST_CASE("rank table CSV") {
    const std::vector<std::uint64_t> chars{0, 2, 3};
    const std::string csv = rank_table_csv(SymplecticLabels(5), chars);
    CHECK(csv == "matrix,0,2,3\nB,120,110,120\nL2,1,1,1\nL3,4,3,4\n");
}
