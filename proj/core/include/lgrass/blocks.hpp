#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lgrass/linalg.hpp"

namespace lgrass {

/// Base staircase block: a (k+1) x C(k+1,2) matrix laid out in k column
/// bands; band j (width k+1-j) has an all-ones segment in row j over an
/// identity. Equivalently entry[i][{a,b}] = 1 iff i is an endpoint of the
/// pair {a,b} labelling the column, columns in lexicographic pair order.
BinaryMatrix staircase_base(int k);

/// X stacked on top of an identity of the given size; X must have exactly
/// that many columns.
BinaryMatrix with_identity(const BinaryMatrix& x, int identity_size);

/// Horizontal concatenation with bottom rows aligned: operand i occupies the
/// bottom rows(i) rows of its column band, zeroes above. Heights must be
/// weakly decreasing left to right.
BinaryMatrix join_bottom(std::span<const BinaryMatrix> operands);

/// The level recursion: level 0 is staircase_base(k); level l+1 joins
/// with_identity(staircase(k-j, l), C(k+l+1-j, l+2)) for j = 0..k-1.
/// Column count is C(k+level+1, level+2).
BinaryMatrix staircase(int k, int level);

/// The canonical block family: staircase(k, k-3) for k >= 3, [[1 1]] for
/// k = 2. Dimensions C(2k-2, k-2) x C(2k-2, k-1); k ones per row, k-1 per
/// column.
BinaryMatrix canonical_block(int k);

/// Subset-inclusion incidence oracle on an m-set (m even): rows are the
/// ((m-2)/2)-subsets, columns the (m/2)-subsets, both lexicographic, with a
/// 1 where the row subset is contained in the column subset. Row and column
/// labels carry the subsets.
BinaryMatrix inclusion_matrix(int m);

/// Triangular array over pair indices: members are prefix + {a, b} for every
/// completion pair a < b beyond the prefix.
struct Triangle {
    MultiIndex prefix;                            // in I((m-6)/2, m-2)
    std::vector<std::pair<int, int>> completions;  // pairs beyond the prefix

    std::vector<MultiIndex> members(int m) const;
};

struct TriangleFamily {
    std::vector<Triangle> triangles;
    bool partition_ok = false;  // disjoint and exhausts the ((m-2)/2)-subsets
};

/// All triangles of an even m >= 6, prefixes in lexicographic order (m = 6
/// yields the single empty-prefix triangle).
TriangleFamily triangle_family(int m);

/// Incidence rows of a triangle: rows are the triangle members in completion
/// order, columns the (m/2)-subsets containing the prefix, entries from
/// inclusion_matrix(m).
BinaryMatrix triangle_incidence(int m, const Triangle& triangle);

}  // namespace lgrass
