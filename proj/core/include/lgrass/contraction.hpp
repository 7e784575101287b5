#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lgrass/linalg.hpp"

namespace lgrass {

/// Linear form attached to a row label alpha in I(n-2, 2n): one unit term
/// per pair {i, 2n+1-i} disjoint from alpha, on the column sort(alpha + pair).
struct PlaneForm {
    MultiIndex row_label;
    std::vector<MultiIndex> terms;  // sorted; coefficient 1 each

    int weight() const { return static_cast<int>(terms.size()); }
};

PlaneForm plane_form(const MultiIndex& alpha, const SymplecticLabels& labels);

/// The kernel-condition matrix B: rows labelled by I(n-2, 2n), columns by
/// I(n, 2n), both lexicographic; row alpha is the indicator of
/// plane_form(alpha). Dimensions C(2n, n-2) x C(2n, n).
BinaryMatrix contraction_matrix(const SymplecticLabels& labels);

/// Histogram of row weights of the kernel-condition matrix.
std::map<int, long long> plane_census(const SymplecticLabels& labels);

/// Sign bookkeeping for kernel evaluation. `plain` sums the terms as they
/// stand; `alternating` weights the term that removes positions s < t of the
/// column label by (-1)^(s+t).
enum class SignConvention { plain, alternating };

/// Sparse vector of Plucker coordinates indexed by I(n, 2n), over a chosen
/// field. Values over GF(p) are kept reduced to [0, p); characteristic 0
/// values are exact 64-bit integers.
class PluckerVector {
public:
    PluckerVector(int n, FieldSpec field);

    int n() const { return n_; }
    const FieldSpec& field() const { return field_; }
    const std::map<MultiIndex, std::int64_t>& coords() const { return coords_; }

    void set(const MultiIndex& beta, std::int64_t value);
    std::int64_t get(const MultiIndex& beta) const;

private:
    int n_;
    FieldSpec field_;
    std::map<MultiIndex, std::int64_t> coords_;
};

/// Row labels whose kernel condition the vector violates (empty = member).
std::vector<MultiIndex> kernel_violations(const PluckerVector& v, SignConvention convention);
bool in_kernel(const PluckerVector& v, SignConvention convention);

/// Plucker vector of the row space of the n x 2n generator G with
/// G[i][i] = 1 and G[i][2n+1-j] = S[i][j]; the row space is Lagrangian
/// because S is symmetric (isotropy is verified before returning).
PluckerVector sample_lagrangian(const std::vector<std::vector<std::int64_t>>& symmetric,
                                const SymplecticLabels& labels, const FieldSpec& field);

/// Standard three-term quadric check for membership in the Grassmannian:
/// for every base S in I(n-2, 2n) and labels a < b < c < d outside S,
/// p(Sab)p(Scd) - p(Sac)p(Sbd) + p(Sad)p(Sbc) must vanish (coordinates via
/// the antisymmetric extension). Auxiliary validation for sampled points.
bool satisfies_plucker_quadrics(const PluckerVector& v);

}  // namespace lgrass
