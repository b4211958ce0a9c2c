#ifndef COMMLIE_LINALG_HPP
#define COMMLIE_LINALG_HPP

#include "commlie/matrix.hpp"

#include <optional>
#include <vector>

namespace commlie {

/// In-place Gauss-Jordan reduction to the unique reduced row-echelon form.
/// Returns the pivot column of each pivot row, so pivots.size() is the rank.
std::vector<std::size_t> rref_in_place(Mat& m);

std::size_t rank(Mat m);

/// Particular solution of m.x = b with free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const Mat& m, const RationalVector& b);

/// Row space of a rational matrix in canonical form: the basis is the unique
/// RREF of the space, so equal subspaces compare equal member-wise.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    /// Canonicalize the row space of `rows` (zero rows are dropped).
    static Subspace from_rows(Mat rows);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const RationalVector& v) const;
    bool contains(const Subspace& other) const;

    /// Residual of v after eliminating the pivot coordinates against the
    /// basis; zero iff v is a member. Linear in v.
    RationalVector reduce(const RationalVector& v) const;

    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {x : m.x = 0} as a canonical subspace of dimension
/// cols - rank(m).
Subspace kernel(const Mat& m);

} // namespace commlie

#endif
