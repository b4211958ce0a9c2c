#ifndef COMMLIE_CLASSICAL_HPP
#define COMMLIE_CLASSICAL_HPP

#include "commlie/chevalley.hpp"

#include <optional>
#include <string>
#include <vector>

namespace commlie {

enum class Family { SlN, Sp2L, So2L };

/// Concrete matrix realization of a classical algebra in the block
/// conventions of Humphreys: sp/so elements are [A B; C -A^T] with B, C
/// symmetric (sp) or antisymmetric (so).
///
/// Basis order: A-block elementary combinations row-major, then B-block,
/// then C-block (upper triangles row-major); for sl_n the off-diagonal
/// units row-major followed by the diagonal differences.
class MatrixLieAlgebra {
public:
    MatrixLieAlgebra(Family f, std::size_t n);

    Family family() const { return family_; }
    std::size_t matrix_size() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t rank() const;
    const std::vector<Mat>& basis() const { return basis_; }
    const AlgebraRef& structure() const { return structure_; }

    /// Coefficients of A over the basis, or nullopt when A is outside the
    /// family span.
    std::optional<RationalVector> coords_of(const Mat& A) const;
    Mat realize(const RationalVector& coeffs) const;
    bool shape_check(const Mat& A) const { return coords_of(A).has_value(); }
    LieElement element(const Mat& A) const;

private:
    Family family_;
    std::size_t n_;
    std::vector<Mat> basis_;
    AlgebraRef structure_;
};

MatrixLieAlgebra build_classical(Family f, std::size_t n);
MatrixLieAlgebra build_classical(const std::string& name); // "sl4", "sp4", "so20"

/// A named tuple of pairwise-commuting elements; commutation is verified at
/// construction.
struct ExamplePoint {
    std::string label;
    std::vector<LieElement> tuple;
    bool m_extendable;

    ExamplePoint(std::string label, std::vector<LieElement> tuple, bool m_extendable);
};

// The explicit example tuples.
ExamplePoint guralnick_quadruple(const MatrixLieAlgebra& sl4);
ExamplePoint sp4_triple(const MatrixLieAlgebra& sp4);
ExamplePoint so4s_x1(const MatrixLieAlgebra& so4s);
ExamplePoint g2_triple(const AlgebraRef& g2);
ExamplePoint e7_orbit_rep(const AlgebraRef& e7);
LieElement e7_grading_h(const AlgebraRef& e7);

/// Label dispatcher used by the CLI. Known labels: sl4-guralnick, sp4-triple,
/// so4s-x1 (s from the ambient algebra), g2-triple, e7-orbit-0200000, e7-h.
ExamplePoint paper_point(const std::string& label, int s = 0);

/// The linear tuple spaces attached to the example points, as subspaces of
/// (m-1) copies of the algebra coordinates. For sl4/sp4 these are the spaces
/// of dimension 4(m-1) and 3(m-1); for so4s (m = 3) the ambient shape space
/// of pairs, of dimension 4s^2.
Subspace sl4_sprime_space(const MatrixLieAlgebra& sl4, int m);
Subspace sp4_sprime_space(const MatrixLieAlgebra& sp4, int m);
Subspace so4s_shape_pair_space(const MatrixLieAlgebra& so4s);
Subspace s_prime_space(const std::string& label, int m, int s = 0);

/// Single-copy block spaces used for the stability checks.
Subspace sl4_sprime_block(const MatrixLieAlgebra& sl4);
Subspace sp4_sprime_block(const MatrixLieAlgebra& sp4);

/// The block predicate satisfied by the centralizer of the so4s point:
/// zero blocks as displayed, diagonal repeats, transpose couplings,
/// antisymmetric A1, A4, A5 and symmetric A2 + A6.
bool so4s_centralizer_predicate(std::size_t s, const Mat& Y);

} // namespace commlie

#endif
