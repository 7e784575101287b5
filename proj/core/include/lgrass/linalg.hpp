#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lgrass/indexing.hpp"

namespace lgrass {

/// Coefficient field selector: characteristic 0 or a prime p.
struct FieldSpec {
    std::uint64_t characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec gf(std::uint64_t p);  // validates primality

    bool is_char_zero() const { return characteristic == 0; }
    bool operator==(const FieldSpec&) const = default;
};

bool is_prime_u64(std::uint64_t value);

/// Labeled 0/1 matrix with bit-packed rows. Equality compares shape and
/// entries; labels are carried along but do not take part in comparisons.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return words_per_row_; }

    bool get(int r, int c) const {
        return (word(r, c / 64) >> (c % 64)) & 1u;
    }
    void set(int r, int c, bool value = true);

    int row_weight(int r) const;
    int col_weight(int c) const;
    long long nonzero_count() const;

    std::span<const std::uint64_t> row_words(int r) const {
        return {bits_.data() + static_cast<size_t>(r) * words_per_row_,
                static_cast<size_t>(words_per_row_)};
    }

    bool operator==(const BinaryMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
    }

    void set_row_labels(std::vector<MultiIndex> labels);
    void set_col_labels(std::vector<MultiIndex> labels);
    bool has_row_labels() const { return !row_labels_.empty(); }
    bool has_col_labels() const { return !col_labels_.empty(); }
    const std::vector<MultiIndex>& row_labels() const { return row_labels_; }
    const std::vector<MultiIndex>& col_labels() const { return col_labels_; }

private:
    std::uint64_t word(int r, int w) const {
        return bits_[static_cast<size_t>(r) * words_per_row_ + static_cast<size_t>(w)];
    }

    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<MultiIndex> row_labels_;
    std::vector<MultiIndex> col_labels_;
};

/// Bijection on [0..size-1]; images[i] is the image of i.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int size);
    int size() const { return static_cast<int>(images.size()); }
    bool is_bijection() const;
    Permutation inverse() const;
};

/// out[i][j] = in[row_perm.images[i]][col_perm.images[j]]. Labels are dropped.
BinaryMatrix permuted(const BinaryMatrix& m, const Permutation& row_perm,
                      const Permutation& col_perm);

/// Block-diagonal assembly; dimensions are the sums. Labels are dropped
/// (blocks may repeat, so label uniqueness cannot be preserved).
BinaryMatrix block_diagonal(std::span<const BinaryMatrix> blocks);

inline constexpr std::uint64_t kDefaultRankSeed = 0xC0FFEE;

/// How a rank value was obtained and, for the multi-modular route, with
/// which primes.
struct RankCertificate {
    int rank = 0;
    std::vector<std::uint64_t> primes;  // multi-modular route only
    bool certified = false;             // >= 2 primes agree on the maximum
    bool exact = false;                 // finite field or fraction-free route
};

/// Exact rank over the given field.
///
/// GF(2) runs bit-packed elimination; odd p runs a sparse exact echelon
/// with 64-bit arithmetic. Characteristic 0 uses fraction-free (Bareiss)
/// elimination over big integers when n_cols <= 512, otherwise ranks
/// modulo random 62-bit primes drawn from a generator seeded with `seed`,
/// returning the maximum (a lower bound that agreeing primes certify).
int rank(const BinaryMatrix& m, const FieldSpec& field,
         std::uint64_t seed = kDefaultRankSeed);
RankCertificate rank_certificate(const BinaryMatrix& m, const FieldSpec& field,
                                 std::uint64_t seed = kDefaultRankSeed);

/// Witness permutations with permuted(a, rowPerm, colPerm) == b, or nullopt.
/// Exact backtracking over row assignments with incremental column-class
/// splitting; dimension mismatch yields nullopt, not an error.
std::optional<std::pair<Permutation, Permutation>> permutation_equivalent(
    const BinaryMatrix& a, const BinaryMatrix& b);

namespace detail {

// the elimination routines behind rank(), exposed so tests can cross-check
// them against each other
int rank_gf2_packed(const BinaryMatrix& m);
int rank_modp_sparse(const BinaryMatrix& m, std::uint64_t p);
int rank_bareiss_exact(const BinaryMatrix& m);

}  // namespace detail

}  // namespace lgrass
