#include "lgrass/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "lgrass/blocks.hpp"

namespace lgrass {

namespace {

// pair indices untouched by the singleton tuple, ascending
std::vector<int> surviving_pairs(const std::vector<int>& singletons, const SymplecticLabels& labels) {
    std::vector<int> avail;
    for (int j = 1; j <= labels.n(); ++j) {
        const int partner = labels.involution(j);
        if (std::binary_search(singletons.begin(), singletons.end(), j) ||
            std::binary_search(singletons.begin(), singletons.end(), partner))
            continue;
        avail.push_back(j);
    }
    return avail;
}

// label of the multi-index built from the singletons plus full pairs chosen
// by a subset of positions into `avail`
MultiIndex assemble_label(const std::vector<int>& singletons, const MultiIndex& positions,
                          const std::vector<int>& avail, const SymplecticLabels& labels) {
    std::vector<int> entries = singletons;
    for (int pos : positions.entries()) {
        const int j = avail[static_cast<size_t>(pos - 1)];
        entries.push_back(j);
        entries.push_back(labels.involution(j));
    }
    std::sort(entries.begin(), entries.end());
    return MultiIndex(std::move(entries), labels.ambient());
}

// class submatrix of B, rows and columns in the bijection order (subsets of
// surviving pair positions, lexicographic)
BinaryMatrix extract_class_block(const std::vector<int>& singletons, const SymplecticLabels& labels,
                                 const BinaryMatrix& b) {
    const std::vector<int> avail = surviving_pairs(singletons, labels);
    const int m = static_cast<int>(avail.size());
    const auto row_positions = enumerate_indices((m - 2) / 2, m);
    const auto col_positions = enumerate_indices(m / 2, m);
    BinaryMatrix out(static_cast<int>(row_positions.size()), static_cast<int>(col_positions.size()));
    std::vector<int> row_ids, col_ids;
    row_ids.reserve(row_positions.size());
    col_ids.reserve(col_positions.size());
    for (const MultiIndex& pos : row_positions)
        row_ids.push_back(static_cast<int>(lex_rank(assemble_label(singletons, pos, avail, labels))));
    for (const MultiIndex& pos : col_positions)
        col_ids.push_back(static_cast<int>(lex_rank(assemble_label(singletons, pos, avail, labels))));
    for (size_t r = 0; r < row_ids.size(); ++r) {
        for (size_t c = 0; c < col_ids.size(); ++c) {
            if (b.get(row_ids[r], col_ids[c])) out.set(static_cast<int>(r), static_cast<int>(c));
        }
    }
    return out;
}

}  // namespace

std::map<MultiIndex, std::optional<RowClass>> classify_columns(const SymplecticLabels& labels) {
    std::map<MultiIndex, std::optional<RowClass>> out;
    for (const MultiIndex& beta : enumerate_indices(labels.n(), labels.ambient())) {
        RowClass rc = decompose_row_class(beta, labels);
        if (rc.pair_count == 0)
            out.emplace(beta, std::nullopt);
        else
            out.emplace(beta, std::move(rc));
    }
    return out;
}

BlockCheck verify_class_block(const std::vector<int>& singletons, const SymplecticLabels& labels,
                              const BinaryMatrix& b) {
    const int n = labels.n();
    const int s = static_cast<int>(singletons.size());
    if (s > n - 2 || (n - s) % 2 != 0)
        throw std::invalid_argument("verify_class_block: class not realized for this n");
    for (size_t i = 0; i < singletons.size(); ++i) {
        if (i + 1 < singletons.size() && singletons[i] >= singletons[i + 1])
            throw std::invalid_argument("verify_class_block: singletons must be sorted");
        for (size_t j = i + 1; j < singletons.size(); ++j) {
            if (singletons[i] + singletons[j] == labels.ambient() + 1)
                throw std::invalid_argument("verify_class_block: singletons contain a full pair");
        }
    }

    const std::vector<int> avail = surviving_pairs(singletons, labels);
    const int m = static_cast<int>(avail.size());  // == n - s

    BlockCheck check;
    check.singletons = singletons;
    check.block_k = (m + 2) / 2;

    const BinaryMatrix oracle = inclusion_matrix(m);  // == compares entries only
    const BinaryMatrix sub = extract_class_block(singletons, labels, b);
    check.row_count = sub.rows();
    check.col_count = sub.cols();
    check.verified = sub == oracle;
    return check;
}

DecompositionReport analyze_decomposition(const SymplecticLabels& labels,
                                          std::span<const std::uint64_t> characteristics,
                                          std::uint64_t seed) {
    const int n = labels.n();
    DecompositionReport report;
    report.n = n;
    report.even = n % 2 == 0;

    const BinaryMatrix b = contraction_matrix(labels);

    // class keys, ordered by singleton count then lexicographically
    std::map<std::pair<int, std::vector<int>>, long long> row_tally;
    for (const MultiIndex& alpha : enumerate_indices(n - 2, 2 * n)) {
        RowClass rc = decompose_row_class(alpha, labels);
        ++row_tally[{static_cast<int>(rc.singletons.size()), rc.singletons}];
    }
    std::map<std::pair<int, std::vector<int>>, long long> col_tally;
    long long zero_columns = 0;
    for (const MultiIndex& beta : enumerate_indices(n, 2 * n)) {
        RowClass rc = decompose_row_class(beta, labels);
        if (rc.pair_count == 0)
            ++zero_columns;
        else
            ++col_tally[{static_cast<int>(rc.singletons.size()), rc.singletons}];
    }
    report.zero_column_count = zero_columns;

    bool counting_ok = zero_columns == (1ll << n);
    long long row_total = 0, col_total = 0;

    // class counts per singleton size must match the admissible-tuple counts
    std::map<int, long long> classes_per_size;
    for (const auto& [key, count] : row_tally) ++classes_per_size[key.first];
    for (const auto& [size, count] : classes_per_size) {
        if (count != q_count(size, labels)) counting_ok = false;
    }
    if (col_tally.size() != row_tally.size()) counting_ok = false;

    report.all_blocks_verified = true;
    for (const auto& [key, row_count] : row_tally) {
        const auto& [s, singletons] = key;
        BlockCheck check = verify_class_block(singletons, labels, b);
        const int m = n - s;
        if (row_count != binomial(m, (m - 2) / 2)) counting_ok = false;
        auto cit = col_tally.find(key);
        const long long col_count = cit == col_tally.end() ? 0 : cit->second;
        if (col_count != binomial(m, m / 2)) counting_ok = false;
        row_total += row_count;
        col_total += col_count;
        if (!check.verified) report.all_blocks_verified = false;
        ++report.census[check.block_k];
        report.classes.push_back(std::move(check));
    }
    if (row_total != binomial(2 * n, n - 2)) counting_ok = false;
    if (col_total + zero_columns != binomial(2 * n, n)) counting_ok = false;
    report.census_consistent = counting_ok;

    // rank table: direct rank of B against the sum over blocks. Verified
    // blocks share the rank of their oracle; unverified ones are ranked from
    // the extracted submatrix.
    for (std::uint64_t ch : characteristics) {
        const FieldSpec field = ch == 0 ? FieldSpec::rationals() : FieldSpec::gf(ch);
        RankCertificate direct = rank_certificate(b, field, seed);
        if (ch == 0 && !direct.primes.empty()) report.char_zero_primes = direct.primes;

        std::map<int, int> oracle_rank;  // block kind -> rank
        long long block_sum = 0;
        for (const BlockCheck& check : report.classes) {
            if (!check.verified) {
                // fall back to the extracted submatrix itself
                block_sum += rank(extract_class_block(check.singletons, labels, b), field, seed);
                continue;
            }
            auto it = oracle_rank.find(check.block_k);
            if (it == oracle_rank.end()) {
                const int r = rank(inclusion_matrix(2 * (check.block_k - 1)), field, seed);
                it = oracle_rank.emplace(check.block_k, r).first;
            }
            block_sum += it->second;
        }
        report.rank_table[ch] = {direct.rank, static_cast<int>(block_sum)};
    }

    report.corollary_identity_holds = plane_count_identity(labels);
    return report;
}

bool plane_count_identity(const SymplecticLabels& labels) {
    const int n = labels.n();
    long long total = 0;
    const int start = n % 2 == 0 ? 0 : 1;
    for (int s = start; s <= n - 2; s += 2) {
        const long long q = static_cast<long long>(admissible_tuples(s, labels).size());
        total += q * binomial(n - s, (n - 2 - s) / 2);
    }
    return total == binomial(2 * n, n - 2);
}

RankPropagation rank_propagation_check(const SymplecticLabels& labels, const FieldSpec& field,
                                       std::uint64_t seed) {
    if (labels.n() % 2 != 0)
        throw std::invalid_argument("rank_propagation_check: stated for even n only");
    RankPropagation result;
    result.characteristic = field.characteristic;
    const BinaryMatrix b = contraction_matrix(labels);
    const int full = static_cast<int>(binomial(2 * labels.n(), labels.n() - 2));
    result.hypothesis_full_rank = rank(b, field, seed) == full;
    result.vacuous = !result.hypothesis_full_rank;
    if (result.vacuous) return result;
    const int r = (labels.n() + 2) / 2;
    for (int k = 2; k <= r; ++k) {
        const int rows = static_cast<int>(binomial(2 * k - 2, k - 2));
        result.block_full_rank[k] = rank(canonical_block(k), field, seed) == rows;
    }
    return result;
}

}  // namespace lgrass
