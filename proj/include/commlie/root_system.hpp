#ifndef COMMLIE_ROOT_SYSTEM_HPP
#define COMMLIE_ROOT_SYSTEM_HPP

#include "commlie/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace commlie {

/// Type of a simple root system: one of A,B,C,D,E,F,G with an admissible rank
/// (A_l l>=1, B_l l>=2, C_l l>=2, D_l l>=4, E_6..E_8, F_4, G_2).
struct SimpleType {
    char family;
    int rank;

    SimpleType(char family, int rank);
    static SimpleType parse(const std::string& name); // "E7", "g2", ...

    std::string name() const;
    long long algebra_dim() const; // dim of the simple Lie algebra
    bool operator==(const SimpleType& o) const { return family == o.family && rank == o.rank; }
};

/// Root coordinates over the simple roots (Bourbaki numbering, as in
/// Humphreys Theorem 11.4). Integer vectors, all-nonnegative or
/// all-nonpositive.
using RootCoords = std::vector<int>;

/// A simple root system: Cartan matrix, full root enumeration, and the
/// coordinate-level queries everything downstream is built on.
///
/// Convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so the pairing of a
/// root with the i-th simple coroot is the i-th entry of cartan * coords.
/// Root ordering is deterministic: positive roots sorted by (height, lex),
/// then their negatives in the mirrored order.
class RootSystem {
public:
    explicit RootSystem(SimpleType t);

    const SimpleType& type() const { return type_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    std::size_t size() const { return roots_.size(); }
    std::size_t n_positive() const { return roots_.size() / 2; }
    const std::vector<RootCoords>& roots() const { return roots_; }
    const RootCoords& root(std::size_t i) const { return roots_[i]; }

    std::optional<std::size_t> index_of(const RootCoords& r) const;
    bool is_root(const RootCoords& r) const { return index_of(r).has_value(); }
    std::size_t negative_of(std::size_t i) const {
        return i < n_positive() ? i + n_positive() : i - n_positive();
    }
    bool is_positive(std::size_t i) const { return i < n_positive(); }

    static int height(const RootCoords& r);

    /// <r, alpha_i^vee>
    int pairing(const RootCoords& r, int i) const;

    /// Invariant symmetric form (alpha_i, alpha_j) = d_i * cartan(i, j),
    /// normalized so short simple roots have d = 1.
    Rational inner(const RootCoords& a, const RootCoords& b) const;
    const std::vector<int>& symmetrizer() const { return d_; }

    /// a + b when it is a root (absent covers a = -b as well).
    std::optional<std::size_t> root_sum(std::size_t a, std::size_t b) const;

    /// True iff b - a is a positive root.
    bool precedes(std::size_t a, std::size_t b) const;

    /// Largest p with b - p*a a root (the start of the a-string through b).
    /// Requires a != +-b.
    int string_down(std::size_t a, std::size_t b) const;

    /// Indices of the roots supported on the given simple-root subset,
    /// plus whether the induced Dynkin diagram is connected.
    struct SubSystem {
        std::vector<std::size_t> root_indices;
        bool irreducible;
    };
    SubSystem sub_system(const std::vector<int>& delta_prime) const;

    std::string root_name(std::size_t i) const;

private:
    SimpleType type_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<RootCoords> roots_;
    std::map<RootCoords, std::size_t> index_;
};

} // namespace commlie

#endif
