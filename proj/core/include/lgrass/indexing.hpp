#pragma once

#include <compare>
#include <vector>

namespace lgrass {

/// Exact binomial coefficient; throws std::overflow_error past the int64 range.
long long binomial(int n, int k);

/// Strictly increasing tuple of 1-based labels in [1..ambient].
/// The empty tuple is allowed (it labels the single element of I(0, m)).
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::vector<int> entries, int ambient);

    const std::vector<int>& entries() const { return entries_; }
    int ambient() const { return ambient_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    bool contains(int value) const;

    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<int> entries_;
    int ambient_ = 0;
};

/// All of I(d, m) in lexicographic order; C(m, d) tuples.
std::vector<MultiIndex> enumerate_indices(int d, int m);

/// Position of idx within enumerate_indices(idx.size(), idx.ambient()).
long long lex_rank(const MultiIndex& idx);

/// Basis-label pairing of a symplectic space of dimension 2n:
/// label i is paired with 2n+1-i, and pair j = {j, 2n+1-j} for j in [1..n].
class SymplecticLabels {
public:
    explicit SymplecticLabels(int n);

    int n() const { return n_; }
    int ambient() const { return 2 * n_; }
    int involution(int i) const { return 2 * n_ + 1 - i; }
    int pair_index(int i) const { return i <= n_ ? i : involution(i); }

private:
    int n_;
};

/// Pair/singleton decomposition of a multi-index: `singletons` are the
/// entries whose involution partner is absent, `pair_count` the number of
/// fully contained pairs.
struct RowClass {
    std::vector<int> singletons;
    int pair_count = 0;

    auto operator<=>(const RowClass&) const = default;
};

RowClass decompose_row_class(const MultiIndex& alpha, const SymplecticLabels& labels);

/// All t-tuples in [1..2n] avoiding every pair {i, 2n+1-i}, lexicographic.
/// Empty for t > n (no pair-free tuple of that size exists).
std::vector<MultiIndex> admissible_tuples(int t, const SymplecticLabels& labels);

/// |admissible_tuples(t, labels)| = C(n, t) * 2^t.
long long q_count(int t, const SymplecticLabels& labels);

}  // namespace lgrass
