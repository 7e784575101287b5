#include "lgrass/report.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

#include "lgrass/blocks.hpp"

namespace lgrass {

std::uint64_t effective_rank_seed(std::uint64_t user_seed) {
    return kDefaultRankSeed ^ user_seed;
}

namespace {

// Published values for the worked examples (block censuses, plane censuses,
// rank tables). `min_characteristic` rows apply to every p >= that value.
struct PublishedRankRow {
    std::uint64_t characteristic;
    bool and_above;
    long long block_rank;
    long long b_rank;
};

struct PublishedData {
    std::map<int, long long> block_census;   // block kind -> count
    std::map<int, long long> plane_census;   // row weight -> count
    int rank_column_k = 0;                   // which block the table's rank column names
    std::vector<PublishedRankRow> rank_rows;
};

const PublishedData* published_for(int n) {
    static const std::map<int, PublishedData> table = {
        {4, {{}, {{3, 4}, {2, 24}}, 0, {}}},
        {5, {{{3, 5}, {2, 7}}, {}, 3, {{0, false, 4, 27}, {2, false, 3, 22}, {3, true, 4, 27}}}},
        {6,
         {{{4, 1}, {3, 60}, {2, 240}},
          {{4, 15}, {3, 240}, {2, 240}},
          4,
          {{0, false, 15, 495}, {2, false, 10, 430}, {3, false, 14, 494}, {5, true, 15, 495}}}},
        {7,
         {{{4, 7}, {3, 301}, {2, 693}},
          {},
          3,
          {{0, false, 15, 2002}, {2, false, 10, 1666}, {3, false, 14, 1995}, {5, true, 15, 2002}}}},
    };
    auto it = table.find(n);
    return it == table.end() ? nullptr : &it->second;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = seed + 0x9E3779B97F4A7C15ull;
    h ^= a + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h ^= b + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return h;
}

KernelConventionReport sample_conventions(const SymplecticLabels& labels, std::uint64_t p, int samples,
                                          std::uint64_t seed) {
    KernelConventionReport out;
    out.characteristic = p;
    out.samples = samples;
    out.unsigned_all = true;
    out.signed_all = true;
    const FieldSpec field = FieldSpec::gf(p);
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(labels.n()), p));
    const int n = labels.n();
    for (int s = 0; s < samples; ++s) {
        std::vector<std::vector<std::int64_t>> sym(static_cast<size_t>(n),
                                                   std::vector<std::int64_t>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const auto v = static_cast<std::int64_t>(rng() % p);
                sym[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                sym[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
            }
        }
        const PluckerVector vec = sample_lagrangian(sym, labels, field);
        if (!in_kernel(vec, SignConvention::plain)) out.unsigned_all = false;
        if (!in_kernel(vec, SignConvention::alternating)) out.signed_all = false;
    }
    return out;
}

std::string census_key(int k) {
    return "L" + std::to_string(k);
}

}  // namespace

VerificationReport run_verification(const SymplecticLabels& labels, const VerifyOptions& options) {
    VerificationReport report;
    const std::uint64_t rank_seed = effective_rank_seed(options.seed);
    report.decomposition = analyze_decomposition(labels, options.characteristics, rank_seed);

    const int n = labels.n();
    const int r = n % 2 == 0 ? (n + 2) / 2 : (n + 1) / 2;
    for (int k = 2; k <= r; ++k) {
        LemmaCheck check;
        check.k = k;
        check.m = 2 * (k - 1);
        check.equivalent = permutation_equivalent(canonical_block(k), inclusion_matrix(check.m)).has_value();
        report.lemma_checks.push_back(check);
    }

    for (std::uint64_t p : options.kernel_characteristics) {
        report.kernel_conventions.push_back(
            sample_conventions(labels, p, options.kernel_samples, options.seed));
    }

    // published-vs-computed comparisons
    report.paper_census_match = true;
    if (const PublishedData* pub = published_for(n)) {
        for (const auto& [k, stated] : pub->block_census) {
            auto it = report.decomposition.census.find(k);
            const long long computed = it == report.decomposition.census.end() ? 0 : it->second;
            if (computed != stated) {
                report.paper_census_match = false;
                report.discrepancies.push_back({"block census " + census_key(k), std::to_string(stated),
                                                std::to_string(computed)});
            }
        }
        if (!pub->plane_census.empty()) {
            const auto computed_planes = plane_census(labels);
            for (const auto& [weight, stated] : pub->plane_census) {
                auto it = computed_planes.find(weight);
                const long long computed = it == computed_planes.end() ? 0 : it->second;
                if (computed != stated) {
                    report.paper_census_match = false;
                    report.discrepancies.push_back({"plane census weight " + std::to_string(weight),
                                                    std::to_string(stated), std::to_string(computed)});
                }
            }
        }
        for (const PublishedRankRow& row : pub->rank_rows) {
            for (const auto& [ch, ranks] : report.decomposition.rank_table) {
                const bool applies = row.and_above ? ch >= row.characteristic : ch == row.characteristic;
                if (!applies) continue;
                if (row.and_above && ch == 0) continue;
                if (ranks.first != row.b_rank) {
                    report.discrepancies.push_back({"rank B (char " + std::to_string(ch) + ")",
                                                    std::to_string(row.b_rank),
                                                    std::to_string(ranks.first)});
                }
                const FieldSpec field = ch == 0 ? FieldSpec::rationals() : FieldSpec::gf(ch);
                const int block_rank = rank(canonical_block(pub->rank_column_k), field, rank_seed);
                if (block_rank != row.block_rank) {
                    report.discrepancies.push_back({"rank " + census_key(pub->rank_column_k) + " (char " +
                                                        std::to_string(ch) + ")",
                                                    std::to_string(row.block_rank),
                                                    std::to_string(block_rank)});
                }
            }
        }
    }

    bool pass = report.decomposition.census_consistent && report.decomposition.all_blocks_verified &&
                report.decomposition.corollary_identity_holds;
    for (const auto& [ch, ranks] : report.decomposition.rank_table) {
        if (ranks.first != ranks.second) pass = false;
    }
    for (const LemmaCheck& check : report.lemma_checks) {
        if (!check.equivalent) pass = false;
    }
    for (const KernelConventionReport& kc : report.kernel_conventions) {
        if (!kc.unsigned_all && !kc.signed_all) pass = false;
    }
    report.all_checks_pass = pass;
    return report;
}

std::string verification_json(const VerificationReport& report) {
    using json = nlohmann::ordered_json;
    json j;
    j["schema_version"] = 1;
    j["n"] = report.decomposition.n;
    j["parity"] = report.decomposition.even ? "even" : "odd";
    j["zero_columns"] = report.decomposition.zero_column_count;

    json census = json::object();
    for (const auto& [k, count] : report.decomposition.census) census[census_key(k)] = count;
    j["census"] = census;
    j["census_consistent"] = report.decomposition.census_consistent;
    j["paper_census_match"] = report.paper_census_match;

    json classes = json::array();
    for (const BlockCheck& check : report.decomposition.classes) {
        classes.push_back({{"singletons", check.singletons},
                           {"block_kind", census_key(check.block_k)},
                           {"row_count", check.row_count},
                           {"col_count", check.col_count},
                           {"verified", check.verified}});
    }
    j["classes"] = classes;

    json ranks = json::object();
    for (const auto& [ch, pair] : report.decomposition.rank_table) {
        ranks[std::to_string(ch)] = {{"direct", pair.first}, {"block_sum", pair.second}};
    }
    j["ranks"] = ranks;
    j["char_zero_primes"] = report.decomposition.char_zero_primes;
    j["corollary_identity"] = report.decomposition.corollary_identity_holds;

    json lemma = json::array();
    for (const LemmaCheck& check : report.lemma_checks) {
        lemma.push_back({{"k", check.k}, {"m", check.m}, {"equivalent", check.equivalent}});
    }
    j["lemma_Lk_eq_Mm"] = lemma;

    json kernels = json::array();
    for (const KernelConventionReport& kc : report.kernel_conventions) {
        kernels.push_back({{"characteristic", kc.characteristic},
                           {"samples", kc.samples},
                           {"unsigned_all", kc.unsigned_all},
                           {"signed_all", kc.signed_all}});
    }
    j["kernel_conventions"] = kernels;

    json discrepancies = json::array();
    for (const Discrepancy& d : report.discrepancies) {
        discrepancies.push_back({{"quantity", d.quantity}, {"stated", d.stated}, {"computed", d.computed}});
    }
    j["discrepancies"] = discrepancies;
    j["all_checks_pass"] = report.all_checks_pass;
    return j.dump(2) + "\n";
}

std::string rank_table_csv(const SymplecticLabels& labels,
                           std::span<const std::uint64_t> characteristics, std::uint64_t seed) {
    const std::uint64_t rank_seed = effective_rank_seed(seed);
    std::ostringstream out;
    out << "matrix";
    for (std::uint64_t ch : characteristics) out << "," << ch;
    out << "\n";

    const BinaryMatrix b = contraction_matrix(labels);
    out << "B";
    for (std::uint64_t ch : characteristics) {
        const FieldSpec field = ch == 0 ? FieldSpec::rationals() : FieldSpec::gf(ch);
        out << "," << rank(b, field, rank_seed);
    }
    out << "\n";

    const int n = labels.n();
    const int r = n % 2 == 0 ? (n + 2) / 2 : (n + 1) / 2;
    for (int k = 2; k <= r; ++k) {
        const BinaryMatrix block = canonical_block(k);
        out << census_key(k);
        for (std::uint64_t ch : characteristics) {
            const FieldSpec field = ch == 0 ? FieldSpec::rationals() : FieldSpec::gf(ch);
            out << "," << rank(block, field, rank_seed);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace lgrass
