#ifndef COMMLIE_CHEVALLEY_HPP
#define COMMLIE_CHEVALLEY_HPP

#include "commlie/linalg.hpp"
#include "commlie/root_system.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace commlie {

/// A finite-dimensional Lie algebra given by a basis and an exact-rational
/// structure table, stored sparsely by basis pair. Immutable once built.
class LieAlgebraStructure {
public:
    using Entry = std::vector<std::pair<std::size_t, Rational>>;

    LieAlgebraStructure(std::size_t dim, std::vector<std::string> labels);

    std::size_t dim() const { return dim_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::string& note() const { return note_; }

    const Entry& pair_bracket(std::size_t i, std::size_t j) const {
        return table_[i * dim_ + j];
    }

    /// Chevalley realizations carry their root system; basis order is
    /// x_(root 0), ..., x_(root n-1), h_(alpha_1), ..., h_(alpha_rank).
    const std::shared_ptr<const RootSystem>& root_system() const { return roots_; }
    std::size_t n_root_vectors() const { return roots_ ? roots_->size() : 0; }
    bool is_chevalley() const { return roots_ != nullptr; }

    /// Per-positive-root sign rescaling applied on top of the extraspecial
    /// convention (recorded when a calibration step ran; empty otherwise).
    const std::vector<int>& sign_calibration() const { return calibration_; }

    // Builder access (used by the construction routines only).
    void set_pair(std::size_t i, std::size_t j, Entry e);
    void set_root_system(std::shared_ptr<const RootSystem> rs) { roots_ = std::move(rs); }
    void set_calibration(std::vector<int> c) { calibration_ = std::move(c); }
    void set_note(std::string n) { note_ = std::move(n); }

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Entry> table_;
    std::shared_ptr<const RootSystem> roots_;
    std::vector<int> calibration_;
    std::string note_;
};

using AlgebraRef = std::shared_ptr<const LieAlgebraStructure>;

/// Element of a fixed LieAlgebraStructure: an exact coefficient vector over
/// its basis.
class LieElement {
public:
    LieElement(AlgebraRef alg, RationalVector coeffs);
    static LieElement zero(AlgebraRef alg);
    static LieElement basis(AlgebraRef alg, std::size_t k);

    const AlgebraRef& algebra() const { return alg_; }
    const RationalVector& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;
    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator*(const Rational& c) const;
    bool operator==(const LieElement& o) const;

private:
    AlgebraRef alg_;
    RationalVector coeffs_;
};

/// Bilinear bracket through the structure table. Throws on algebra mismatch.
LieElement bracket(const LieElement& x, const LieElement& y);

/// Matrix of ad(x) in the fixed basis: column j holds the coefficients of
/// [x, basis_j].
Mat ad_matrix(const LieElement& x);

/// Chevalley basis of the simple Lie algebra of the given root system.
/// Signs follow the extraspecial-pair convention; for G2 the root vectors are
/// additionally rescaled by the recorded diagonal so the constant table
/// matches the reference table shipped in data/.
AlgebraRef build_chevalley(std::shared_ptr<const RootSystem> rs);
AlgebraRef build_chevalley(const SimpleType& t);

// Element factories for Chevalley realizations.
LieElement root_vector(const AlgebraRef& alg, std::size_t root_idx);
LieElement cartan_generator(const AlgebraRef& alg, int simple_idx);
/// h_alpha for arbitrary alpha: the integral coroot combination of the
/// simple coroots, so [x_alpha, x_(-alpha)] = h_alpha.
LieElement coroot_element(const AlgebraRef& alg, std::size_t root_idx);

/// alpha(h) for h supported on the Cartan part.
Rational root_eval(const AlgebraRef& alg, std::size_t root_idx, const LieElement& h);

/// Structure constant R_(a,b) with [x_a, x_b] = R_(a,b) x_(a+b); zero when
/// a + b is not a root (and b != -a).
Rational structure_constant(const AlgebraRef& alg, std::size_t a, std::size_t b);

/// The sub-diagram package: L' spanned by the Phi'-root vectors and the
/// Delta'-coroots, the Cartan H, its part H' and the central complement
/// H_1 = C_H(L'). All invariants (H = H_1 (+) H', dim H_1 = |Delta|-|Delta'|,
/// [H_1, L'] = 0) are verified at construction.
struct SubalgebraPackage {
    std::vector<int> delta_prime;
    std::vector<std::size_t> phi_prime; // root indices supported on delta_prime
    Subspace L_prime;
    Subspace H;
    Subspace H_prime;
    Subspace H_1;
};

SubalgebraPackage subalgebra_package(const AlgebraRef& alg, const std::vector<int>& delta_prime);

/// Jacobi residual [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] on
/// basis elements; zero for a Lie structure.
bool jacobi_holds(const AlgebraRef& alg, std::size_t i, std::size_t j, std::size_t k);

/// The reference G2 constant table the build is calibrated against
/// (mirrored by data/g2_structure_constants.csv). cells[r][c] holds
/// R_(order[r], order[c]); kUndefinedCell marks the [x_a, x_(-a)] spots.
struct G2ReferenceTable {
    static constexpr int kUndefinedCell = 99;
    std::vector<RootCoords> order;
    int cells[12][12];
};

const G2ReferenceTable& g2_reference_table();

} // namespace commlie

#endif
