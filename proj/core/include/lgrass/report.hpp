#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgrass/decompose.hpp"

namespace lgrass {

struct VerifyOptions {
    std::vector<std::uint64_t> characteristics{0, 2, 3, 5, 7};
    std::uint64_t seed = 0;
    int kernel_samples = 100;
    std::vector<std::uint64_t> kernel_characteristics{2, 3, 5};
};

struct LemmaCheck {
    int k = 0;
    int m = 0;
    bool equivalent = false;  // canonical_block(k) ~ inclusion_matrix(m)
};

struct KernelConventionReport {
    std::uint64_t characteristic = 0;
    int samples = 0;
    bool unsigned_all = false;  // plain convention annihilated every sample
    bool signed_all = false;    // alternating convention did
};

/// A published value that disagrees with the computed one.
struct Discrepancy {
    std::string quantity;
    std::string stated;
    std::string computed;
};

struct VerificationReport {
    DecompositionReport decomposition;
    std::vector<LemmaCheck> lemma_checks;
    std::vector<KernelConventionReport> kernel_conventions;
    std::vector<Discrepancy> discrepancies;
    bool paper_census_match = false;
    bool all_checks_pass = false;  // every computed-vs-computed check
};

/// Full verification for one n: decomposition analysis, block-vs-oracle
/// equivalences for k = 2..r, seeded Lagrangian kernel sampling, and the
/// comparison against the published censuses and rank tables. Published
/// mismatches land in `discrepancies` and never affect `all_checks_pass`.
VerificationReport run_verification(const SymplecticLabels& labels, const VerifyOptions& options);

/// Deterministic JSON (schema_version 1); byte-identical for equal inputs.
std::string verification_json(const VerificationReport& report);

/// CSV rank table: one row per matrix (B, then the canonical blocks up to
/// k = r), one column per characteristic, in the order given.
std::string rank_table_csv(const SymplecticLabels& labels,
                           std::span<const std::uint64_t> characteristics, std::uint64_t seed = 0);

/// Mix of the user-facing seed with the fixed rank-sampling seed.
std::uint64_t effective_rank_seed(std::uint64_t user_seed);

}  // namespace lgrass
