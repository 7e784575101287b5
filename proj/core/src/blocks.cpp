#include "lgrass/blocks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lgrass {

BinaryMatrix staircase_base(int k) {
    if (k < 1) throw std::invalid_argument("staircase_base: need k >= 1");
    BinaryMatrix m(k + 1, static_cast<int>(binomial(k + 1, 2)));
    int col = 0;
    for (int band = 1; band <= k; ++band) {
        const int width = k + 1 - band;
        for (int off = 0; off < width; ++off) {
            m.set(band - 1, col + off);      // all-ones segment
            m.set(band + off, col + off);    // identity below it
        }
        col += width;
    }
    return m;
}

BinaryMatrix with_identity(const BinaryMatrix& x, int identity_size) {
    if (x.cols() != identity_size)
        throw std::invalid_argument("with_identity: column count must equal the identity size");
    BinaryMatrix out(x.rows() + identity_size, identity_size);
    for (int r = 0; r < x.rows(); ++r) {
        for (int c = 0; c < x.cols(); ++c) {
            if (x.get(r, c)) out.set(r, c);
        }
    }
    for (int i = 0; i < identity_size; ++i) out.set(x.rows() + i, i);
    return out;
}

BinaryMatrix join_bottom(std::span<const BinaryMatrix> operands) {
    if (operands.empty()) return BinaryMatrix(0, 0);
    long long width = 0;
    for (size_t i = 0; i < operands.size(); ++i) {
        if (i + 1 < operands.size() && operands[i].rows() < operands[i + 1].rows())
            throw std::invalid_argument("join_bottom: heights must be weakly decreasing");
        width += operands[i].cols();
    }
    const int height = operands.front().rows();
    BinaryMatrix out(height, static_cast<int>(width));
    int col = 0;
    for (const BinaryMatrix& x : operands) {
        const int shift = height - x.rows();
        for (int r = 0; r < x.rows(); ++r) {
            for (int c = 0; c < x.cols(); ++c) {
                if (x.get(r, c)) out.set(shift + r, col + c);
            }
        }
        col += x.cols();
    }
    return out;
}

BinaryMatrix staircase(int k, int level) {
    if (k < 1) throw std::invalid_argument("staircase: need k >= 1");
    if (level < 0) throw std::invalid_argument("staircase: need level >= 0");
    if (level == 0) return staircase_base(k);
    std::vector<BinaryMatrix> operands;
    operands.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        operands.push_back(
            with_identity(staircase(k - j, level - 1), static_cast<int>(binomial(k + level - j, level + 1))));
    }
    return join_bottom(operands);
}

BinaryMatrix canonical_block(int k) {
    if (k < 2) throw std::invalid_argument("canonical_block: need k >= 2");
    if (k == 2) {
        BinaryMatrix m(1, 2);
        m.set(0, 0);
        m.set(0, 1);
        return m;
    }
    return staircase(k, k - 3);
}

BinaryMatrix inclusion_matrix(int m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("inclusion_matrix: need even m >= 2");
    auto row_labels = enumerate_indices((m - 2) / 2, m);
    auto col_labels = enumerate_indices(m / 2, m);
    BinaryMatrix out(static_cast<int>(row_labels.size()), static_cast<int>(col_labels.size()));
    for (size_t r = 0; r < row_labels.size(); ++r) {
        for (size_t c = 0; c < col_labels.size(); ++c) {
            const auto& sub = row_labels[r].entries();
            const auto& sup = col_labels[c].entries();
            if (std::includes(sup.begin(), sup.end(), sub.begin(), sub.end()))
                out.set(static_cast<int>(r), static_cast<int>(c));
        }
    }
    out.set_row_labels(std::move(row_labels));
    out.set_col_labels(std::move(col_labels));
    return out;
}

std::vector<MultiIndex> Triangle::members(int m) const {
    std::vector<MultiIndex> out;
    out.reserve(completions.size());
    for (const auto& [a, b] : completions) {
        std::vector<int> entries = prefix.entries();
        entries.push_back(a);
        entries.push_back(b);
        std::sort(entries.begin(), entries.end());
        out.emplace_back(std::move(entries), m);
    }
    return out;
}

TriangleFamily triangle_family(int m) {
    if (m < 6 || m % 2 != 0) throw std::invalid_argument("triangle_family: need even m >= 6");
    TriangleFamily family;
    const int prefix_len = (m - 6) / 2;
    for (const MultiIndex& prefix : enumerate_indices(prefix_len, m - 2)) {
        Triangle t;
        const int last = prefix.empty() ? 0 : prefix[prefix_len - 1];
        for (int a = last + 1; a <= m; ++a) {
            for (int b = a + 1; b <= m; ++b) t.completions.emplace_back(a, b);
        }
        t.prefix = prefix;
        family.triangles.push_back(std::move(t));
    }
    // the union must hit every ((m-2)/2)-subset exactly once
    std::set<MultiIndex> seen;
    long long total = 0;
    bool disjoint = true;
    for (const Triangle& t : family.triangles) {
        for (MultiIndex& member : t.members(m)) {
            ++total;
            if (!seen.insert(std::move(member)).second) disjoint = false;
        }
    }
    family.partition_ok = disjoint && total == binomial(m, (m - 2) / 2);
    return family;
}

BinaryMatrix triangle_incidence(int m, const Triangle& triangle) {
    const BinaryMatrix incidence = inclusion_matrix(m);
    std::vector<int> row_ids;
    for (const MultiIndex& member : triangle.members(m))
        row_ids.push_back(static_cast<int>(lex_rank(member)));
    std::vector<int> col_ids;
    const auto& prefix = triangle.prefix.entries();
    for (size_t c = 0; c < incidence.col_labels().size(); ++c) {
        const auto& sup = incidence.col_labels()[c].entries();
        if (std::includes(sup.begin(), sup.end(), prefix.begin(), prefix.end()))
            col_ids.push_back(static_cast<int>(c));
    }
    BinaryMatrix out(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (size_t r = 0; r < row_ids.size(); ++r) {
        for (size_t c = 0; c < col_ids.size(); ++c) {
            if (incidence.get(row_ids[r], col_ids[c])) out.set(static_cast<int>(r), static_cast<int>(c));
        }
    }
    return out;
}

}  // namespace lgrass
