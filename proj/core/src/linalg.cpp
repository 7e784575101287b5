#include "lgrass/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace lgrass {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a, p - 2, p);
}

}  // namespace

bool is_prime_u64(std::uint64_t value) {
    if (value < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (value == p) return true;
        if (value % p == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs with the bases above
    std::uint64_t d = value - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, value);
        if (x == 1 || x == value - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, value);
            if (x == value - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::gf(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("FieldSpec::gf: characteristic must be prime");
    return FieldSpec{p};
}

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BinaryMatrix: negative dimension");
    words_per_row_ = (cols + 63) / 64;
    bits_.assign(static_cast<size_t>(rows) * words_per_row_, 0);
}

void BinaryMatrix::set(int r, int c, bool value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("BinaryMatrix::set: index out of range");
    std::uint64_t& w = bits_[static_cast<size_t>(r) * words_per_row_ + static_cast<size_t>(c / 64)];
    const std::uint64_t mask = 1ull << (c % 64);
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

int BinaryMatrix::row_weight(int r) const {
    int weight = 0;
    for (std::uint64_t w : row_words(r)) weight += __builtin_popcountll(w);
    return weight;
}

int BinaryMatrix::col_weight(int c) const {
    int weight = 0;
    for (int r = 0; r < rows_; ++r) weight += get(r, c) ? 1 : 0;
    return weight;
}

long long BinaryMatrix::nonzero_count() const {
    long long total = 0;
    for (std::uint64_t w : bits_) total += __builtin_popcountll(w);
    return total;
}

namespace {

void require_unique(const std::vector<MultiIndex>& labels, const char* what) {
    std::vector<MultiIndex> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument(std::string(what) + ": duplicate labels");
}

}  // namespace

void BinaryMatrix::set_row_labels(std::vector<MultiIndex> labels) {
    if (static_cast<int>(labels.size()) != rows_)
        throw std::invalid_argument("set_row_labels: size mismatch");
    require_unique(labels, "set_row_labels");
    row_labels_ = std::move(labels);
}

void BinaryMatrix::set_col_labels(std::vector<MultiIndex> labels) {
    if (static_cast<int>(labels.size()) != cols_)
        throw std::invalid_argument("set_col_labels: size mismatch");
    require_unique(labels, "set_col_labels");
    col_labels_ = std::move(labels);
}

Permutation Permutation::identity(int size) {
    Permutation p;
    p.images.resize(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) p.images[static_cast<size_t>(i)] = i;
    return p;
}

bool Permutation::is_bijection() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= size() || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

Permutation Permutation::inverse() const {
    if (!is_bijection()) throw std::invalid_argument("Permutation::inverse: not a bijection");
    Permutation inv;
    inv.images.resize(images.size());
    for (int i = 0; i < size(); ++i) inv.images[static_cast<size_t>(images[static_cast<size_t>(i)])] = i;
    return inv;
}

BinaryMatrix permuted(const BinaryMatrix& m, const Permutation& row_perm, const Permutation& col_perm) {
    if (row_perm.size() != m.rows() || col_perm.size() != m.cols())
        throw std::invalid_argument("permuted: permutation size mismatch");
    if (!row_perm.is_bijection() || !col_perm.is_bijection())
        throw std::invalid_argument("permuted: not a bijection");
    BinaryMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        const int src = row_perm.images[static_cast<size_t>(i)];
        for (int j = 0; j < m.cols(); ++j) {
            if (m.get(src, col_perm.images[static_cast<size_t>(j)])) out.set(i, j);
        }
    }
    return out;
}

BinaryMatrix block_diagonal(std::span<const BinaryMatrix> blocks) {
    long long rows = 0, cols = 0;
    for (const BinaryMatrix& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    BinaryMatrix out(static_cast<int>(rows), static_cast<int>(cols));
    int r0 = 0, c0 = 0;
    for (const BinaryMatrix& b : blocks) {
        for (int r = 0; r < b.rows(); ++r) {
            for (int c = 0; c < b.cols(); ++c) {
                if (b.get(r, c)) out.set(r0 + r, c0 + c);
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

// ---------------------------------------------------------------------------
// rank
// ---------------------------------------------------------------------------

namespace detail {

int rank_gf2_packed(const BinaryMatrix& m) {
    const int R = m.rows(), C = m.cols(), W = m.words_per_row();
    std::vector<std::uint64_t> a;
    a.reserve(static_cast<size_t>(R) * W);
    for (int r = 0; r < R; ++r) {
        auto words = m.row_words(r);
        a.insert(a.end(), words.begin(), words.end());
    }
    int rank = 0;
    for (int c = 0; c < C && rank < R; ++c) {
        const int w = c / 64;
        const std::uint64_t mask = 1ull << (c % 64);
        int piv = -1;
        for (int r = rank; r < R; ++r) {
            if (a[static_cast<size_t>(r) * W + w] & mask) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank)
            std::swap_ranges(a.begin() + static_cast<long>(piv) * W, a.begin() + static_cast<long>(piv + 1) * W,
                             a.begin() + static_cast<long>(rank) * W);
        for (int r = rank + 1; r < R; ++r) {
            if (a[static_cast<size_t>(r) * W + w] & mask) {
                std::uint64_t* dst = a.data() + static_cast<size_t>(r) * W;
                const std::uint64_t* src = a.data() + static_cast<size_t>(rank) * W;
                for (int k = w; k < W; ++k) dst[k] ^= src[k];
            }
        }
        ++rank;
    }
    return rank;
}

using SparseRow = std::vector<std::pair<int, std::uint64_t>>;  // (col, value), col-sorted

// dst = dst + factor * src (mod p), merged in column order
void sparse_axpy(SparseRow& dst, const SparseRow& src, std::uint64_t factor, std::uint64_t p,
                 SparseRow& scratch) {
    scratch.clear();
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            scratch.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            std::uint64_t v = mul_mod(src[j].second, factor, p);
            if (v) scratch.emplace_back(src[j].first, v);
            ++j;
        } else {
            std::uint64_t v = (dst[i].second + mul_mod(src[j].second, factor, p)) % p;
            if (v) scratch.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    dst.swap(scratch);
}

int rank_modp_sparse(const BinaryMatrix& m, std::uint64_t p) {
    const int R = m.rows(), C = m.cols();
    std::vector<int> pivot_of_col(static_cast<size_t>(C), -1);
    std::vector<SparseRow> pivots;
    SparseRow row, scratch;
    const std::uint64_t one = 1 % p;
    for (int r = 0; r < R; ++r) {
        row.clear();
        for (int c = 0; c < C; ++c) {
            if (m.get(r, c) && one) row.emplace_back(c, one);
        }
        while (!row.empty()) {
            const int lead = row.front().first;
            const int pi = pivot_of_col[static_cast<size_t>(lead)];
            if (pi < 0) break;
            sparse_axpy(row, pivots[static_cast<size_t>(pi)], p - row.front().second, p, scratch);
        }
        if (!row.empty()) {
            const std::uint64_t scale = inv_mod(row.front().second, p);
            if (scale != 1) {
                for (auto& [c, v] : row) v = mul_mod(v, scale, p);
            }
            pivot_of_col[static_cast<size_t>(row.front().first)] = static_cast<int>(pivots.size());
            pivots.push_back(row);
        }
    }
    return static_cast<int>(pivots.size());
}

// Fraction-free elimination; intermediate entries are minors of the input,
// so divisions are exact.
int rank_bareiss_exact(const BinaryMatrix& m) {
    const int R = m.rows(), C = m.cols();
    std::vector<std::vector<mpz_class>> a(static_cast<size_t>(R), std::vector<mpz_class>(static_cast<size_t>(C)));
    for (int r = 0; r < R; ++r) {
        for (int c = 0; c < C; ++c) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.get(r, c) ? 1 : 0;
    }
    mpz_class prev = 1;
    int rank = 0;
    for (int c = 0; c < C && rank < R; ++c) {
        int piv = -1;
        for (int r = rank; r < R; ++r) {
            if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank) a[static_cast<size_t>(piv)].swap(a[static_cast<size_t>(rank)]);
        for (int r = rank + 1; r < R; ++r) {
            auto& row = a[static_cast<size_t>(r)];
            const auto& prow = a[static_cast<size_t>(rank)];
            if (row[static_cast<size_t>(c)] == 0) {
                // still rescale so the Sylvester identity keeps divisions exact
                for (int k = c + 1; k < C; ++k) {
                    row[static_cast<size_t>(k)] = row[static_cast<size_t>(k)] * prow[static_cast<size_t>(c)] / prev;
                }
                continue;
            }
            for (int k = c + 1; k < C; ++k) {
                row[static_cast<size_t>(k)] =
                    (row[static_cast<size_t>(k)] * prow[static_cast<size_t>(c)] -
                     row[static_cast<size_t>(c)] * prow[static_cast<size_t>(k)]) /
                    prev;
            }
            row[static_cast<size_t>(c)] = 0;
        }
        prev = a[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        ++rank;
    }
    return rank;
}

}  // namespace detail

namespace {

std::uint64_t random_prime_62bit(std::mt19937_64& rng) {
    while (true) {
        std::uint64_t candidate = (rng() & ((1ull << 61) - 1)) | (1ull << 61) | 1ull;
        if (is_prime_u64(candidate)) return candidate;
    }
}

constexpr int kModularPrimeCount = 3;
constexpr int kBareissColumnLimit = 512;

}  // namespace

RankCertificate rank_certificate(const BinaryMatrix& m, const FieldSpec& field, std::uint64_t seed) {
    if (!field.is_char_zero() && !is_prime_u64(field.characteristic))
        throw std::invalid_argument("rank: characteristic must be 0 or prime");
    RankCertificate cert;
    if (!field.is_char_zero()) {
        cert.rank = field.characteristic == 2 ? detail::rank_gf2_packed(m)
                                             : detail::rank_modp_sparse(m, field.characteristic);
        cert.exact = true;
        cert.certified = true;
        return cert;
    }
    if (m.cols() <= kBareissColumnLimit) {
        cert.rank = detail::rank_bareiss_exact(m);
        cert.exact = true;
        cert.certified = true;
        return cert;
    }
    std::mt19937_64 rng(seed);
    std::vector<int> ranks;
    for (int i = 0; i < kModularPrimeCount; ++i) {
        std::uint64_t p = random_prime_62bit(rng);
        while (std::find(cert.primes.begin(), cert.primes.end(), p) != cert.primes.end())
            p = random_prime_62bit(rng);
        cert.primes.push_back(p);
        ranks.push_back(detail::rank_modp_sparse(m, p));
    }
    cert.rank = *std::max_element(ranks.begin(), ranks.end());
    cert.certified = std::count(ranks.begin(), ranks.end(), cert.rank) >= 2;
    cert.exact = false;
    return cert;
}

int rank(const BinaryMatrix& m, const FieldSpec& field, std::uint64_t seed) {
    return rank_certificate(m, field, seed).rank;
}

// ---------------------------------------------------------------------------
// permutation equivalence
// ---------------------------------------------------------------------------

namespace {

// Columns that carry identical patterns across the rows assigned so far form
// one class, tracked as a shared class id on the A and B sides. Assigning a
// row pair splits every touched class in two; the split is feasible iff the
// two rows hit each class equally often. Once every row is assigned, any
// within-class column pairing gives entrywise equality.
struct EquivalenceSearch {
    const std::vector<std::vector<int>>& rows_a;
    const std::vector<std::vector<int>>& rows_b;
    std::vector<int> class_of_a;
    std::vector<int> class_of_b;
    int class_count = 0;
    std::vector<bool> used_b;
    std::vector<int> assignment;  // A row -> B row

    bool search(size_t level) {
        if (level == rows_a.size()) return true;
        const auto& a_ones = rows_a[level];
        for (size_t b = 0; b < rows_b.size(); ++b) {
            if (used_b[b] || rows_b[b].size() != a_ones.size()) continue;
            if (!compatible(a_ones, rows_b[b])) continue;
            std::vector<std::pair<int, int>> renames;  // (old class, new class)
            apply_split(a_ones, rows_b[b], renames);
            used_b[b] = true;
            assignment[level] = static_cast<int>(b);
            if (search(level + 1)) return true;
            used_b[b] = false;
            undo_split(a_ones, rows_b[b], renames);
        }
        return false;
    }

    // multiset of touched class ids must match between the two rows
    bool compatible(const std::vector<int>& a_ones, const std::vector<int>& b_ones) const {
        std::vector<int> ca, cb;
        ca.reserve(a_ones.size());
        cb.reserve(b_ones.size());
        for (int c : a_ones) ca.push_back(class_of_a[static_cast<size_t>(c)]);
        for (int c : b_ones) cb.push_back(class_of_b[static_cast<size_t>(c)]);
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        return ca == cb;
    }

    void apply_split(const std::vector<int>& a_ones, const std::vector<int>& b_ones,
                     std::vector<std::pair<int, int>>& renames) {
        for (int c : a_ones) {
            int& cls = class_of_a[static_cast<size_t>(c)];
            int fresh = -1;
            for (const auto& [from, to] : renames) {
                if (from == cls) {
                    fresh = to;
                    break;
                }
            }
            if (fresh < 0) {
                fresh = class_count++;
                renames.emplace_back(cls, fresh);
            }
            cls = fresh;
        }
        for (int c : b_ones) {
            int& cls = class_of_b[static_cast<size_t>(c)];
            for (const auto& [from, to] : renames) {
                if (from == cls) {
                    cls = to;
                    break;
                }
            }
        }
    }

    void undo_split(const std::vector<int>& a_ones, const std::vector<int>& b_ones,
                    const std::vector<std::pair<int, int>>& renames) {
        for (int c : a_ones) {
            int& cls = class_of_a[static_cast<size_t>(c)];
            for (const auto& [from, to] : renames) {
                if (to == cls) {
                    cls = from;
                    break;
                }
            }
        }
        for (int c : b_ones) {
            int& cls = class_of_b[static_cast<size_t>(c)];
            for (const auto& [from, to] : renames) {
                if (to == cls) {
                    cls = from;
                    break;
                }
            }
        }
        class_count -= static_cast<int>(renames.size());
    }
};

}  // namespace

std::optional<std::pair<Permutation, Permutation>> permutation_equivalent(const BinaryMatrix& a,
                                                                          const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    const int R = a.rows(), C = a.cols();
    if (R == 0 || C == 0) return std::make_pair(Permutation::identity(R), Permutation::identity(C));

    std::vector<std::vector<int>> rows_a(static_cast<size_t>(R)), rows_b(static_cast<size_t>(R));
    for (int r = 0; r < R; ++r) {
        for (int c = 0; c < C; ++c) {
            if (a.get(r, c)) rows_a[static_cast<size_t>(r)].push_back(c);
            if (b.get(r, c)) rows_b[static_cast<size_t>(r)].push_back(c);
        }
    }

    // seed classes with the column weights
    std::map<int, int> class_of_weight;
    std::vector<int> class_a(static_cast<size_t>(C)), class_b(static_cast<size_t>(C));
    int class_count = 0;
    std::map<int, std::pair<int, int>> weight_tally;
    for (int c = 0; c < C; ++c) {
        int wa = a.col_weight(c), wb = b.col_weight(c);
        auto [ia, _a] = class_of_weight.try_emplace(wa, class_count);
        if (_a) ++class_count;
        class_a[static_cast<size_t>(c)] = ia->second;
        auto [ib, _b] = class_of_weight.try_emplace(wb, class_count);
        if (_b) ++class_count;
        class_b[static_cast<size_t>(c)] = ib->second;
        weight_tally[wa].first++;
        weight_tally[wb].second++;
    }
    for (const auto& [w, counts] : weight_tally) {
        if (counts.first != counts.second) return std::nullopt;
    }

    EquivalenceSearch search{rows_a, rows_b, std::move(class_a), std::move(class_b), class_count,
                             std::vector<bool>(static_cast<size_t>(R), false),
                             std::vector<int>(static_cast<size_t>(R), -1)};
    if (!search.search(0)) return std::nullopt;

    // column bijection: ascending within each final class
    std::map<int, std::vector<int>> cols_a_by_class, cols_b_by_class;
    for (int c = 0; c < C; ++c) {
        cols_a_by_class[search.class_of_a[static_cast<size_t>(c)]].push_back(c);
        cols_b_by_class[search.class_of_b[static_cast<size_t>(c)]].push_back(c);
    }
    std::vector<int> col_map(static_cast<size_t>(C), -1);  // A col -> B col
    for (const auto& [cls, acols] : cols_a_by_class) {
        const auto& bcols = cols_b_by_class.at(cls);
        for (size_t i = 0; i < acols.size(); ++i) col_map[static_cast<size_t>(acols[i])] = bcols[i];
    }

    // assignment maps A row r to B row assignment[r]; the witness orientation
    // is permuted(a, rowPerm, colPerm) == b
    Permutation row_perm, col_perm;
    row_perm.images.resize(static_cast<size_t>(R));
    col_perm.images.resize(static_cast<size_t>(C));
    for (int r = 0; r < R; ++r) row_perm.images[static_cast<size_t>(search.assignment[static_cast<size_t>(r)])] = r;
    for (int c = 0; c < C; ++c) col_perm.images[static_cast<size_t>(col_map[static_cast<size_t>(c)])] = c;

    if (!(permuted(a, row_perm, col_perm) == b))
        throw std::logic_error("permutation_equivalent: witness failed self-check");
    return std::make_pair(row_perm, col_perm);
}

}  // namespace lgrass
