#include "lgrass/indexing.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgrass {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n > 62) throw std::overflow_error("binomial: n too large for exact int64");
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;  // exact at every step
    }
    return result;
}

MultiIndex::MultiIndex(std::vector<int> entries, int ambient)
    : entries_(std::move(entries)), ambient_(ambient) {
    if (ambient_ < 0) throw std::invalid_argument("MultiIndex: negative ambient");
    int prev = 0;
    for (int e : entries_) {
        if (e <= prev || e > ambient_)
            throw std::invalid_argument("MultiIndex: entries must be strictly increasing in [1..ambient]");
        prev = e;
    }
}

bool MultiIndex::contains(int value) const {
    return std::binary_search(entries_.begin(), entries_.end(), value);
}

std::vector<MultiIndex> enumerate_indices(int d, int m) {
    if (d < 0 || d > m) throw std::invalid_argument("enumerate_indices: need 0 <= d <= m");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<size_t>(binomial(m, d)));
    std::vector<int> cur(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(cur, m);
        int i = d - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == m - (d - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < d; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

long long lex_rank(const MultiIndex& idx) {
    const int d = idx.size();
    const int m = idx.ambient();
    long long r = 0;
    int prev = 0;
    for (int i = 0; i < d; ++i) {
        for (int v = prev + 1; v < idx[i]; ++v) r += binomial(m - v, d - i - 1);
        prev = idx[i];
    }
    return r;
}

SymplecticLabels::SymplecticLabels(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("SymplecticLabels: need n >= 2");
}

RowClass decompose_row_class(const MultiIndex& alpha, const SymplecticLabels& labels) {
    if (alpha.ambient() != labels.ambient())
        throw std::invalid_argument("decompose_row_class: ambient mismatch");
    RowClass rc;
    for (int e : alpha.entries()) {
        if (alpha.contains(labels.involution(e))) {
            if (e < labels.involution(e)) ++rc.pair_count;
        } else {
            rc.singletons.push_back(e);
        }
    }
    return rc;
}

std::vector<MultiIndex> admissible_tuples(int t, const SymplecticLabels& labels) {
    if (t < 0) throw std::invalid_argument("admissible_tuples: negative size");
    std::vector<MultiIndex> out;
    if (t > labels.n()) return out;
    out.reserve(static_cast<size_t>(q_count(t, labels)));
    for (const MultiIndex& a : enumerate_indices(t, labels.ambient())) {
        bool ok = true;
        for (int e : a.entries()) {
            if (e < labels.involution(e) && a.contains(labels.involution(e))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(a);
    }
    return out;
}

long long q_count(int t, const SymplecticLabels& labels) {
    if (t < 0) throw std::invalid_argument("q_count: negative size");
    if (t > labels.n()) return 0;
    return binomial(labels.n(), t) << t;  // choose t pairs, one endpoint each
}

}  // namespace lgrass
