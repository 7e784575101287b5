#include "lgrass/contraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgrass {

namespace {

// canonical representative: [0, p) for GF(p), unchanged for char 0
std::int64_t reduce(std::int64_t value, const FieldSpec& field) {
    if (field.is_char_zero()) return value;
    const auto p = static_cast<std::int64_t>(field.characteristic);
    std::int64_t r = value % p;
    return r < 0 ? r + p : r;
}

}  // namespace

PlaneForm plane_form(const MultiIndex& alpha, const SymplecticLabels& labels) {
    if (alpha.ambient() != labels.ambient() || alpha.size() != labels.n() - 2)
        throw std::invalid_argument("plane_form: label must lie in I(n-2, 2n)");
    PlaneForm form;
    form.row_label = alpha;
    for (int i = 1; i <= labels.n(); ++i) {
        const int partner = labels.involution(i);
        if (alpha.contains(i) || alpha.contains(partner)) continue;
        std::vector<int> entries = alpha.entries();
        entries.push_back(i);
        entries.push_back(partner);
        std::sort(entries.begin(), entries.end());
        form.terms.emplace_back(std::move(entries), labels.ambient());
    }
    return form;
}

BinaryMatrix contraction_matrix(const SymplecticLabels& labels) {
    auto row_labels = enumerate_indices(labels.n() - 2, labels.ambient());
    auto col_labels = enumerate_indices(labels.n(), labels.ambient());
    BinaryMatrix out(static_cast<int>(row_labels.size()), static_cast<int>(col_labels.size()));
    for (size_t r = 0; r < row_labels.size(); ++r) {
        for (const MultiIndex& term : plane_form(row_labels[r], labels).terms)
            out.set(static_cast<int>(r), static_cast<int>(lex_rank(term)));
    }
    out.set_row_labels(std::move(row_labels));
    out.set_col_labels(std::move(col_labels));
    return out;
}

std::map<int, long long> plane_census(const SymplecticLabels& labels) {
    std::map<int, long long> census;
    for (const MultiIndex& alpha : enumerate_indices(labels.n() - 2, labels.ambient())) {
        int weight = 0;
        for (int i = 1; i <= labels.n(); ++i) {
            if (!alpha.contains(i) && !alpha.contains(labels.involution(i))) ++weight;
        }
        ++census[weight];
    }
    return census;
}

PluckerVector::PluckerVector(int n, FieldSpec field) : n_(n), field_(field) {
    if (n < 2) throw std::invalid_argument("PluckerVector: need n >= 2");
}

void PluckerVector::set(const MultiIndex& beta, std::int64_t value) {
    if (beta.ambient() != 2 * n_ || beta.size() != n_)
        throw std::invalid_argument("PluckerVector::set: coordinate key must lie in I(n, 2n)");
    const std::int64_t reduced = reduce(value, field_);
    if (reduced == 0)
        coords_.erase(beta);
    else
        coords_[beta] = reduced;
}

std::int64_t PluckerVector::get(const MultiIndex& beta) const {
    auto it = coords_.find(beta);
    return it == coords_.end() ? 0 : it->second;
}

std::vector<MultiIndex> kernel_violations(const PluckerVector& v, SignConvention convention) {
    const SymplecticLabels labels(v.n());
    std::vector<MultiIndex> violated;
    for (const MultiIndex& alpha : enumerate_indices(labels.n() - 2, labels.ambient())) {
        __int128 sum = 0;
        for (int i = 1; i <= labels.n(); ++i) {
            const int partner = labels.involution(i);
            if (alpha.contains(i) || alpha.contains(partner)) continue;
            std::vector<int> entries = alpha.entries();
            entries.push_back(i);
            entries.push_back(partner);
            std::sort(entries.begin(), entries.end());
            MultiIndex beta(std::move(entries), labels.ambient());
            std::int64_t value = v.get(beta);
            if (convention == SignConvention::alternating) {
                const auto& b = beta.entries();
                const int s = static_cast<int>(std::lower_bound(b.begin(), b.end(), i) - b.begin()) + 1;
                const int t = static_cast<int>(std::lower_bound(b.begin(), b.end(), partner) - b.begin()) + 1;
                if ((s + t) % 2 != 0) value = -value;
            }
            sum += value;
        }
        const bool zero = v.field().is_char_zero()
                              ? sum == 0
                              : sum % static_cast<__int128>(v.field().characteristic) == 0;
        if (!zero) violated.push_back(alpha);
    }
    return violated;
}

bool in_kernel(const PluckerVector& v, SignConvention convention) {
    return kernel_violations(v, convention).empty();
}

namespace {

std::int64_t det_char0(std::vector<std::vector<__int128>> a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    __int128 prev = 1;
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            sign = -sign;
        }
        for (size_t r = c + 1; r < n; ++r) {
            for (size_t k = c + 1; k < n; ++k) a[r][k] = (a[r][k] * a[c][c] - a[r][c] * a[c][k]) / prev;
            a[r][c] = 0;
        }
        prev = a[c][c];
    }
    const __int128 det = sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
    if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("sample_lagrangian: minor exceeds int64");
    return static_cast<std::int64_t>(det);
}

std::int64_t det_modp(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    const size_t n = a.size();
    auto mul = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
    };
    auto powm = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t det = 1 % p;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = (p - det) % p;
        }
        det = mul(det, a[c][c]);
        const std::uint64_t inv = powm(a[c][c], p - 2);
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const std::uint64_t f = mul(a[r][c], inv);
            for (size_t k = c; k < n; ++k) {
                const std::uint64_t sub = mul(f, a[c][k]);
                a[r][k] = (a[r][k] + p - sub) % p;
            }
        }
    }
    return static_cast<std::int64_t>(det);
}

}  // namespace

namespace {

// antisymmetric extension: coordinate of base + {x, y} with the sign of the
// sort, or 0 when labels collide
__int128 extended_coord(const PluckerVector& v, const std::vector<int>& base, int x, int y) {
    if (x == y) return 0;
    std::vector<int> entries = base;
    entries.push_back(x);
    entries.push_back(y);
    // base is sorted, so the sign is the parity of the inversions the two
    // appended labels create
    int inversions = x > y ? 1 : 0;
    for (int e : base) {
        if (e == x || e == y) return 0;
        if (e > x) ++inversions;
        if (e > y) ++inversions;
    }
    std::sort(entries.begin(), entries.end());
    const std::int64_t value = v.get(MultiIndex(std::move(entries), 2 * v.n()));
    return (inversions % 2 == 0) ? static_cast<__int128>(value) : -static_cast<__int128>(value);
}

}  // namespace

bool satisfies_plucker_quadrics(const PluckerVector& v) {
    const int n = v.n();
    const int ambient = 2 * n;
    for (const MultiIndex& base : enumerate_indices(n - 2, ambient)) {
        std::vector<int> rest;
        for (int e = 1; e <= ambient; ++e) {
            if (!base.contains(e)) rest.push_back(e);
        }
        const int r = static_cast<int>(rest.size());
        for (int ia = 0; ia < r; ++ia) {
            for (int ib = ia + 1; ib < r; ++ib) {
                for (int ic = ib + 1; ic < r; ++ic) {
                    for (int id = ic + 1; id < r; ++id) {
                        const int a = rest[ia], b = rest[ib], c = rest[ic], d = rest[id];
                        const __int128 sum =
                            extended_coord(v, base.entries(), a, b) * extended_coord(v, base.entries(), c, d) -
                            extended_coord(v, base.entries(), a, c) * extended_coord(v, base.entries(), b, d) +
                            extended_coord(v, base.entries(), a, d) * extended_coord(v, base.entries(), b, c);
                        const bool zero = v.field().is_char_zero()
                                              ? sum == 0
                                              : sum % static_cast<__int128>(v.field().characteristic) == 0;
                        if (!zero) return false;
                    }
                }
            }
        }
    }
    return true;
}

PluckerVector sample_lagrangian(const std::vector<std::vector<std::int64_t>>& symmetric,
                                const SymplecticLabels& labels, const FieldSpec& field) {
    const int n = labels.n();
    if (static_cast<int>(symmetric.size()) != n)
        throw std::invalid_argument("sample_lagrangian: matrix must be n x n");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(symmetric[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("sample_lagrangian: matrix must be n x n");
        for (int j = 0; j < n; ++j) {
            if (symmetric[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                symmetric[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw std::invalid_argument("sample_lagrangian: matrix must be symmetric");
        }
    }

    // generator G = [ I | flipped S ]: row i has 1 at column i and S[i][j]
    // at column 2n+1-j
    std::vector<std::vector<std::int64_t>> gen(static_cast<size_t>(n),
                                               std::vector<std::int64_t>(static_cast<size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        gen[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        for (int j = 0; j < n; ++j) {
            gen[static_cast<size_t>(i)][static_cast<size_t>(labels.involution(j + 1) - 1)] =
                symmetric[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    }

    // isotropy of the row space under <e_i, e_{2n+1-i}> = 1 (i <= n), -1 above
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            __int128 pairing = 0;
            for (int c = 1; c <= n; ++c) {
                const auto x = static_cast<__int128>(gen[static_cast<size_t>(i)][static_cast<size_t>(c - 1)]);
                const auto y = static_cast<__int128>(gen[static_cast<size_t>(j)][static_cast<size_t>(c - 1)]);
                const auto xp =
                    static_cast<__int128>(gen[static_cast<size_t>(i)][static_cast<size_t>(labels.involution(c) - 1)]);
                const auto yp =
                    static_cast<__int128>(gen[static_cast<size_t>(j)][static_cast<size_t>(labels.involution(c) - 1)]);
                pairing += x * yp - xp * y;
            }
            const bool zero = field.is_char_zero()
                                  ? pairing == 0
                                  : pairing % static_cast<__int128>(field.characteristic) == 0;
            if (!zero) throw std::logic_error("sample_lagrangian: row space failed the isotropy check");
        }
    }

    PluckerVector v(n, field);
    for (const MultiIndex& beta : enumerate_indices(n, 2 * n)) {
        std::int64_t minor = 0;
        if (field.is_char_zero()) {
            std::vector<std::vector<__int128>> sub(static_cast<size_t>(n), std::vector<__int128>(static_cast<size_t>(n)));
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c)
                    sub[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                        gen[static_cast<size_t>(r)][static_cast<size_t>(beta[c] - 1)];
            }
            minor = det_char0(std::move(sub));
        } else {
            const auto p = field.characteristic;
            std::vector<std::vector<std::uint64_t>> sub(static_cast<size_t>(n),
                                                        std::vector<std::uint64_t>(static_cast<size_t>(n)));
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    std::int64_t e = gen[static_cast<size_t>(r)][static_cast<size_t>(beta[c] - 1)] %
                                     static_cast<std::int64_t>(p);
                    if (e < 0) e += static_cast<std::int64_t>(p);
                    sub[static_cast<size_t>(r)][static_cast<size_t>(c)] = static_cast<std::uint64_t>(e);
                }
            }
            minor = det_modp(std::move(sub), p);
        }
        if (minor != 0) v.set(beta, minor);
    }
    return v;
}

}  // namespace lgrass
