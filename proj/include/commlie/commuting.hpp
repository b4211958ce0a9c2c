#ifndef COMMLIE_COMMUTING_HPP
#define COMMLIE_COMMUTING_HPP

#include "commlie/chevalley.hpp"

#include <vector>

namespace commlie {

/// C_L(x) as kernel of ad(x).
Subspace centralizer(const LieElement& x);

/// Intersection of the individual centralizers (the whole algebra for an
/// empty tuple).
Subspace joint_centralizer(const AlgebraRef& alg, const std::vector<LieElement>& xs);

/// N_L(W) = {x : [x, w] in W for every w in W}.
Subspace normalizer(const AlgebraRef& alg, const Subspace& W);

/// Smallest bracket-closed subspace containing the given elements.
Subspace generated_subalgebra(const AlgebraRef& alg, const std::vector<LieElement>& xs);

/// Solution space of [x_i, z_j] = [x_j, z_i] over m copies of the algebra,
/// attached to a point with pairwise-commuting entries.
struct TSpaceReport {
    std::vector<LieElement> point;
    std::size_t dim;
    Subspace basis;
};

TSpaceReport tspace(const std::vector<LieElement>& point);

/// Dimension of the T-space at the point zero-padded to an m-tuple.
std::size_t tspace_padded(const std::vector<LieElement>& point, int m);

/// All pairwise brackets [x_r, x_l] for r < l; the point commutes iff all
/// are zero.
std::vector<LieElement> commutation_residual(const std::vector<LieElement>& point);

/// An h in H_1 whose centralizer is exactly H + L', found by enumerating
/// integer coordinate vectors over the H_1 basis by increasing max-norm.
/// The certificate dimension always equals dim H + dim L' - dim H'.
struct RegularHCertificate {
    LieElement h;
    std::size_t centralizer_dim;
};

RegularHCertificate find_regular_h(const AlgebraRef& alg, const SubalgebraPackage& pkg,
                                   long max_norm = 0);

/// dim L + (m-1) rank: the dimension of the regular component.
long long reg_dim(long long dim, long long rank, int m);
long long reg_dim(const AlgebraRef& chevalley_alg, int m);

/// dim G' + dim S' - dim C_{L'}(x_1).
long long orbit_dim(long long dim_gp, long long dim_sp, long long dim_centralizer);

/// dim C' + dim G - dim G' + (m-1)(|Delta| - |Delta'|).
long long adding_diagonals_dim(long long dim_cp, long long dim_g, long long dim_gp, int m,
                               int delta_size, int delta_prime_size);

/// True iff [stab, W] is contained in W, basis vector by basis vector.
bool ad_stability_check(const AlgebraRef& alg, const Subspace& W, const Subspace& stab);

/// Blocks of the so_{4s} tuple-space shape: A5 antisymmetric, A2 + A6
/// symmetric.
struct SoShapeBlocks {
    Mat a2, a5, a6;
};

/// The 4s x 4s matrix with block rows (0 A2 A5 A6 | 0 0 -A6^T 0 | 0 | 0 0
/// -A2^T 0). Throws when the blocks violate the shape constraints.
Mat so_shape_matrix(std::size_t s, const SoShapeBlocks& b);

/// Commutator of two shape matrices: the single nonzero block sits at
/// position (1,3) and equals -A2 B6^T - A6 B2^T + B2 A6^T + B6 A2^T, an
/// antisymmetric matrix. Computed through that block formula; full matrix
/// multiplication is the independent route kept to the tests.
Mat so_commutator_form(std::size_t s, const SoShapeBlocks& a, const SoShapeBlocks& b);

} // namespace commlie

#endif
