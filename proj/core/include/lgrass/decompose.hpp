#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lgrass/contraction.hpp"

namespace lgrass {

/// Column classification of the kernel-condition matrix: a column with no
/// full pair is a zero column (nullopt); otherwise it belongs to the class
/// keyed by its singleton tuple.
std::map<MultiIndex, std::optional<RowClass>> classify_columns(const SymplecticLabels& labels);

/// A verified class submatrix. `verified` is entrywise equality with
/// inclusion_matrix(n - s) under the explicit bijection that sends the j-th
/// surviving pair index to j.
struct BlockCheck {
    std::vector<int> singletons;
    int block_k = 0;  // the submatrix matches the canonical block of this k
    int row_count = 0;
    int col_count = 0;
    bool verified = false;
};

/// Extract the class submatrix of B for the given singleton tuple and check
/// it against the incidence oracle. Throws if the class is not realized.
BlockCheck verify_class_block(const std::vector<int>& singletons, const SymplecticLabels& labels,
                              const BinaryMatrix& b);

/// Machine-readable verdict of the direct-sum verification.
struct DecompositionReport {
    int n = 0;
    bool even = false;
    std::vector<BlockCheck> classes;         // class-key order: size, then lex
    long long zero_column_count = 0;
    bool census_consistent = false;          // counting laws hold (see below)
    std::map<int, long long> census;         // block kind k -> number of blocks
    // characteristic -> (direct rank of B, sum of block ranks)
    std::map<std::uint64_t, std::pair<int, int>> rank_table;
    std::vector<std::uint64_t> char_zero_primes;  // multi-modular route, if taken
    bool corollary_identity_holds = false;
    bool all_blocks_verified = false;
};

/// Classify rows and columns of B, verify every class block against the
/// oracle, and compute the rank table (direct vs sum of blocks) over the
/// given characteristics.
///
/// census_consistent checks: class counts per singleton size equal the
/// admissible-tuple counts; per-class row/column counts match the binomial
/// law; row totals, column totals and the 2^n zero-column count reconcile.
DecompositionReport analyze_decomposition(const SymplecticLabels& labels,
                                          std::span<const std::uint64_t> characteristics,
                                          std::uint64_t seed = kDefaultRankSeed);

/// The plane-count identity: C(2n, n-2) equals the sum of class sizes
/// predicted from enumerated admissible-tuple counts (even case and its odd
/// analog).
bool plane_count_identity(const SymplecticLabels& labels);

/// If B has full row rank over the field, every canonical block of the
/// decomposition must as well; reports the per-k outcome, or vacuous = true
/// when the hypothesis fails.
struct RankPropagation {
    std::uint64_t characteristic = 0;
    bool hypothesis_full_rank = false;
    bool vacuous = true;
    std::map<int, bool> block_full_rank;  // k -> full row rank
};

RankPropagation rank_propagation_check(const SymplecticLabels& labels, const FieldSpec& field,
                                       std::uint64_t seed = kDefaultRankSeed);

}  // namespace lgrass
