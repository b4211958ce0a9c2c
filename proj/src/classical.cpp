#include "commlie/classical.hpp"

#include <map>
#include <stdexcept>

namespace commlie {

namespace {

using SparseMat = std::map<std::pair<std::size_t, std::size_t>, Rational>;

SparseMat sparse_of(const Mat& m) {
    SparseMat s;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) s[{i, j}] = m(i, j);
    return s;
}

SparseMat sparse_commutator(const SparseMat& a, const SparseMat& b) {
    SparseMat out;
    auto acc = [&](const SparseMat& p, const SparseMat& q, int sign) {
        for (const auto& [ij, v] : p)
            for (const auto& [kl, w] : q) {
                if (ij.second != kl.first) continue;
                Rational& slot = out[{ij.first, kl.second}];
                slot += Rational(sign) * v * w;
            }
    };
    acc(a, b, 1);
    acc(b, a, -1);
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Rational at(const SparseMat& m, std::size_t i, std::size_t j) {
    auto it = m.find({i, j});
    return it == m.end() ? Rational(0) : it->second;
}

std::string family_tag(Family f, std::size_t n) {
    switch (f) {
        case Family::SlN: return "sl" + std::to_string(n);
        case Family::Sp2L: return "sp" + std::to_string(n);
        case Family::So2L: return "so" + std::to_string(n);
    }
    return "?";
}

} // namespace

MatrixLieAlgebra::MatrixLieAlgebra(Family f, std::size_t n) : family_(f), n_(n) {
    if (f == Family::SlN) {
        if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
    } else {
        if (n < 2 || n % 2 != 0) throw std::invalid_argument("sp/so need even size >= 2");
    }

    auto unit = [&](std::size_t i, std::size_t j, const Rational& v, Mat& m) { m(i, j) = v; };
    if (f == Family::SlN) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Mat m(n, n);
                unit(i, j, 1, m);
                basis_.push_back(std::move(m));
            }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Mat m(n, n);
            m(i, i) = 1;
            m(i + 1, i + 1) = -1;
            basis_.push_back(std::move(m));
        }
    } else {
        const std::size_t l = n / 2;
        const bool sym = f == Family::Sp2L;
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) {
                Mat m(n, n);
                m(i, j) = 1;
                m(l + j, l + i) = -1;
                basis_.push_back(std::move(m));
            }
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = i; j < l; ++j) {
                if (i == j && !sym) continue;
                Mat m(n, n);
                if (i == j) {
                    m(i, l + i) = 1;
                } else {
                    m(i, l + j) = 1;
                    m(j, l + i) = sym ? 1 : -1;
                }
                basis_.push_back(std::move(m));
            }
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = i; j < l; ++j) {
                if (i == j && !sym) continue;
                Mat m(n, n);
                if (i == j) {
                    m(l + i, i) = 1;
                } else {
                    m(l + i, j) = 1;
                    m(l + j, i) = sym ? 1 : -1;
                }
                basis_.push_back(std::move(m));
            }
    }

    // Induced structure table, coordinates read off the canonical positions.
    const std::size_t dim = basis_.size();
    std::vector<std::string> labels(dim);
    for (std::size_t i = 0; i < dim; ++i)
        labels[i] = family_tag(f, n) + "[" + std::to_string(i) + "]";
    auto alg = std::make_shared<LieAlgebraStructure>(dim, std::move(labels));
    alg->set_note("matrix:" + family_tag(f, n));

    std::vector<SparseMat> sparse;
    sparse.reserve(dim);
    for (const auto& b : basis_) sparse.push_back(sparse_of(b));

    auto canonical_coords = [&](const SparseMat& m) {
        RationalVector c(dim, Rational(0));
        std::size_t k = 0;
        if (f == Family::SlN) {
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    if (i != j) c[k++] = at(m, i, j);
            Rational run(0);
            for (std::size_t i = 0; i + 1 < n_; ++i) {
                run += at(m, i, i);
                c[k++] = run;
            }
        } else {
            const std::size_t l = n_ / 2;
            const bool sym = f == Family::Sp2L;
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = 0; j < l; ++j) c[k++] = at(m, i, j);
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = i; j < l; ++j) {
                    if (i == j && !sym) continue;
                    c[k++] = at(m, i, l + j);
                }
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = i; j < l; ++j) {
                    if (i == j && !sym) continue;
                    c[k++] = at(m, l + i, j);
                }
        }
        return c;
    };

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            SparseMat com = sparse_commutator(sparse[i], sparse[j]);
            if (com.empty()) continue;
            RationalVector c = canonical_coords(com);
            LieAlgebraStructure::Entry e;
            for (std::size_t k = 0; k < dim; ++k)
                if (c[k] != 0) e.push_back({k, c[k]});
            alg->set_pair(i, j, std::move(e));
        }
    structure_ = alg;
}

std::size_t MatrixLieAlgebra::rank() const {
    return family_ == Family::SlN ? n_ - 1 : n_ / 2;
}

Mat MatrixLieAlgebra::realize(const RationalVector& coeffs) const {
    if (coeffs.size() != dim()) throw std::invalid_argument("realize: coefficient length mismatch");
    Mat out(n_, n_);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (basis_[k](i, j) != 0) out(i, j) += coeffs[k] * basis_[k](i, j);
    }
    return out;
}

std::optional<RationalVector> MatrixLieAlgebra::coords_of(const Mat& A) const {
    if (A.rows() != n_ || A.cols() != n_) throw std::invalid_argument("coords_of: size mismatch");
    SparseMat s = sparse_of(A);
    // Read the canonical positions, then confirm the reconstruction: any
    // deviation means A violates the family shape.
    RationalVector c(dim(), Rational(0));
    std::size_t k = 0;
    if (family_ == Family::SlN) {
        Rational trace(0);
        for (std::size_t i = 0; i < n_; ++i) trace += at(s, i, i);
        if (trace != 0) return std::nullopt;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j) c[k++] = at(s, i, j);
        Rational run(0);
        for (std::size_t i = 0; i + 1 < n_; ++i) {
            run += at(s, i, i);
            c[k++] = run;
        }
    } else {
        const std::size_t l = n_ / 2;
        const bool sym = family_ == Family::Sp2L;
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) c[k++] = at(s, i, j);
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = i; j < l; ++j) {
                if (i == j && !sym) continue;
                c[k++] = at(s, i, l + j);
            }
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = i; j < l; ++j) {
                if (i == j && !sym) continue;
                c[k++] = at(s, l + i, j);
            }
    }
    if (realize(c) != A) return std::nullopt;
    return c;
}

LieElement MatrixLieAlgebra::element(const Mat& A) const {
    auto c = coords_of(A);
    if (!c) throw std::invalid_argument("matrix is not in the family span");
    return LieElement(structure_, std::move(*c));
}

MatrixLieAlgebra build_classical(Family f, std::size_t n) { return MatrixLieAlgebra(f, n); }

MatrixLieAlgebra build_classical(const std::string& name) {
    if (name.size() < 3) throw std::invalid_argument("unknown classical algebra: " + name);
    std::string fam = name.substr(0, 2);
    std::size_t n = std::stoul(name.substr(2));
    if (fam == "sl") return MatrixLieAlgebra(Family::SlN, n);
    if (fam == "sp") return MatrixLieAlgebra(Family::Sp2L, n);
    if (fam == "so") return MatrixLieAlgebra(Family::So2L, n);
    throw std::invalid_argument("unknown classical algebra: " + name);
}

ExamplePoint::ExamplePoint(std::string label_, std::vector<LieElement> tuple_, bool ext)
    : label(std::move(label_)), tuple(std::move(tuple_)), m_extendable(ext) {
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (!bracket(tuple[i], tuple[j]).is_zero())
                throw std::logic_error("example point " + label + " does not commute");
}

namespace {
Mat units(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, int>> entries) {
    Mat m(n, n);
    for (const auto& [i, j, v] : entries) m(i, j) = v;
    return m;
}
} // namespace

ExamplePoint guralnick_quadruple(const MatrixLieAlgebra& sl4) {
    if (sl4.family() != Family::SlN || sl4.matrix_size() != 4)
        throw std::invalid_argument("guralnick_quadruple: needs sl4");
    return ExamplePoint("sl4-guralnick",
                        {sl4.element(units(4, {{0, 2, 1}, {1, 3, 1}})),
                         sl4.element(units(4, {{0, 3, 1}})),
                         sl4.element(units(4, {{1, 2, 1}})),
                         sl4.element(units(4, {{1, 3, 1}}))},
                        true);
}

ExamplePoint sp4_triple(const MatrixLieAlgebra& sp4) {
    if (sp4.family() != Family::Sp2L || sp4.matrix_size() != 4)
        throw std::invalid_argument("sp4_triple: needs sp4");
    return ExamplePoint("sp4-triple",
                        {sp4.element(units(4, {{0, 1, 1}, {3, 2, -1}})),
                         sp4.element(units(4, {{0, 2, 1}})),
                         sp4.element(units(4, {{3, 1, 1}}))},
                        true);
}

ExamplePoint so4s_x1(const MatrixLieAlgebra& so4s) {
    if (so4s.family() != Family::So2L || so4s.matrix_size() % 4 != 0 || so4s.matrix_size() < 8)
        throw std::invalid_argument("so4s_x1: needs so_{4s} with s >= 2");
    const std::size_t s = so4s.matrix_size() / 4;
    Mat m(4 * s, 4 * s);
    for (std::size_t k = 0; k < s; ++k) {
        m(k, s + k) = 1;
        m(k, 3 * s + k) = 1;
        m(s + k, 2 * s + k) = -1;
        m(3 * s + k, 2 * s + k) = -1;
    }
    return ExamplePoint("so4s-x1", {so4s.element(m)}, false);
}

ExamplePoint g2_triple(const AlgebraRef& g2) {
    const auto& rs = *g2->root_system();
    auto idx = [&](int a, int b) { return *rs.index_of(RootCoords{a, b}); };
    LieElement x1 = root_vector(g2, idx(0, 1)) + root_vector(g2, idx(3, 1));
    LieElement x2 = root_vector(g2, idx(2, 1));
    LieElement x3 = root_vector(g2, idx(3, 2));
    return ExamplePoint("g2-triple", {x1, x2, x3}, true);
}

ExamplePoint e7_orbit_rep(const AlgebraRef& e7) {
    const auto& rs = *e7->root_system();
    const std::vector<RootCoords> supports = {
        {0, 1, 1, 2, 1, 1, 0},
        {1, 1, 2, 2, 1, 0, 0},
        {1, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, 2, 2, 1, 0},
        {0, 1, 1, 2, 2, 1, 1},
    };
    LieElement x = LieElement::zero(e7);
    for (const auto& r : supports) x = x + root_vector(e7, *rs.index_of(r));
    return ExamplePoint("e7-orbit-0200000", {x}, false);
}

LieElement e7_grading_h(const AlgebraRef& e7) {
    const int coeff[7] = {4, 7, 8, 12, 9, 6, 3};
    LieElement h = LieElement::zero(e7);
    for (int i = 0; i < 7; ++i) h = h + cartan_generator(e7, i) * Rational(coeff[i]);
    return h;
}

ExamplePoint paper_point(const std::string& label, int s) {
    if (label == "sl4-guralnick") {
        return guralnick_quadruple(build_classical(Family::SlN, 4));
    }
    if (label == "sp4-triple") {
        return sp4_triple(build_classical(Family::Sp2L, 4));
    }
    if (label == "so4s-x1") {
        if (s < 2) throw std::invalid_argument("so4s-x1 needs a block size s >= 2");
        return so4s_x1(build_classical(Family::So2L, 4 * static_cast<std::size_t>(s)));
    }
    if (label == "g2-triple") return g2_triple(build_chevalley(SimpleType::parse("G2")));
    if (label == "e7-orbit-0200000") return e7_orbit_rep(build_chevalley(SimpleType::parse("E7")));
    if (label == "e7-h") {
        auto e7 = build_chevalley(SimpleType::parse("E7"));
        return ExamplePoint("e7-h", {e7_grading_h(e7)}, false);
    }
    throw std::invalid_argument("unknown point label: " + label);
}

namespace {

// Tuple-space basis: one row per (slot, generator matrix).
Subspace tuple_space(const MatrixLieAlgebra& alg, int slots, const std::vector<Mat>& gens) {
    const std::size_t d = alg.dim();
    Mat rows(gens.size() * slots, d * slots);
    std::size_t r = 0;
    for (int t = 0; t < slots; ++t)
        for (const auto& g : gens) {
            auto c = alg.coords_of(g);
            if (!c) throw std::logic_error("tuple_space: generator outside family span");
            for (std::size_t k = 0; k < d; ++k) rows(r, t * d + k) = (*c)[k];
            ++r;
        }
    return Subspace::from_rows(std::move(rows));
}

std::vector<Mat> sl4_block_gens() {
    return {units(4, {{0, 2, 1}}), units(4, {{0, 3, 1}}), units(4, {{1, 2, 1}}),
            units(4, {{1, 3, 1}})};
}

std::vector<Mat> sp4_block_gens() {
    return {units(4, {{0, 1, 1}, {3, 2, -1}}), units(4, {{0, 2, 1}}), units(4, {{3, 1, 1}})};
}

std::vector<Mat> so4s_shape_gens(std::size_t s) {
    const std::size_t n = 4 * s;
    std::vector<Mat> gens;
    // A2 = E_ij with A6 = -E_ij (keeping A2 + A6 = 0 symmetric)
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            Mat m(n, n);
            m(i, s + j) = 1;                 // A2
            m(3 * s + j, 2 * s + i) = -1;    // -A2^T
            m(i, 3 * s + j) = -1;            // A6
            m(s + j, 2 * s + i) = 1;         // -A6^T
            gens.push_back(std::move(m));
        }
    // A5 antisymmetric
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            Mat m(n, n);
            m(i, 2 * s + j) = 1;
            m(j, 2 * s + i) = -1;
            gens.push_back(std::move(m));
        }
    // A6 = symmetric unit (A2 = 0)
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i; j < s; ++j) {
            Mat m(n, n);
            m(i, 3 * s + j) = 1;
            m(s + j, 2 * s + i) = -1;
            if (i != j) {
                m(j, 3 * s + i) = 1;
                m(s + i, 2 * s + j) = -1;
            }
            gens.push_back(std::move(m));
        }
    return gens;
}

} // namespace

Subspace sl4_sprime_space(const MatrixLieAlgebra& sl4, int m) {
    if (m < 4) throw std::invalid_argument("sl4 tuple space needs m >= 4");
    return tuple_space(sl4, m - 1, sl4_block_gens());
}

Subspace sp4_sprime_space(const MatrixLieAlgebra& sp4, int m) {
    if (m < 2) throw std::invalid_argument("sp4 tuple space needs m >= 2");
    return tuple_space(sp4, m - 1, sp4_block_gens());
}

Subspace so4s_shape_pair_space(const MatrixLieAlgebra& so4s) {
    return tuple_space(so4s, 2, so4s_shape_gens(so4s.matrix_size() / 4));
}

Subspace s_prime_space(const std::string& label, int m, int s) {
    if (label == "sl4") return sl4_sprime_space(build_classical(Family::SlN, 4), m);
    if (label == "sp4") return sp4_sprime_space(build_classical(Family::Sp2L, 4), m);
    if (label == "so4s") {
        if (m != 3) throw std::invalid_argument("so4s tuple space is defined for m = 3");
        if (s < 2) throw std::invalid_argument("so4s needs s >= 2");
        return so4s_shape_pair_space(build_classical(Family::So2L, 4 * static_cast<std::size_t>(s)));
    }
    throw std::invalid_argument("unknown tuple-space label: " + label);
}

Subspace sl4_sprime_block(const MatrixLieAlgebra& sl4) {
    return tuple_space(sl4, 1, sl4_block_gens());
}

Subspace sp4_sprime_block(const MatrixLieAlgebra& sp4) {
    return tuple_space(sp4, 1, sp4_block_gens());
}

bool so4s_centralizer_predicate(std::size_t s, const Mat& Y) {
    if (Y.rows() != 4 * s || Y.cols() != 4 * s) return false;
    auto blk = [&](std::size_t p, std::size_t q, std::size_t i, std::size_t j) {
        return Y(p * s + i, q * s + j);
    };
    auto block_zero = [&](std::size_t p, std::size_t q) {
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (blk(p, q, i, j) != 0) return false;
        return true;
    };
    for (auto [p, q] : {std::pair<int, int>{1, 0}, {2, 0}, {2, 1}, {2, 3}, {3, 0}})
        if (!block_zero(p, q)) return false;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            if (blk(0, 0, i, j) != blk(2, 2, i, j)) return false;          // A1 repeats
            if (blk(0, 0, i, j) != -blk(0, 0, j, i)) return false;         // A1 antisym
            if (blk(1, 1, i, j) != blk(3, 3, i, j)) return false;          // A4 repeats
            if (blk(1, 1, i, j) != -blk(1, 1, j, i)) return false;         // A4 antisym
            if (blk(0, 2, i, j) != -blk(0, 2, j, i)) return false;         // A5 antisym
            if (blk(1, 2, i, j) != -blk(0, 3, j, i)) return false;         // -A6^T
            if (blk(3, 2, i, j) != -blk(0, 1, j, i)) return false;         // -A2^T
            if (blk(1, 3, i, j) != blk(0, 0, i, j) + blk(1, 1, j, i)) return false; // A1+A4^T
            if (blk(3, 1, i, j) != blk(0, 0, i, j) - blk(1, 1, i, j)) return false; // A1-A4
            // A2 + A6 symmetric
            Rational sij = blk(0, 1, i, j) + blk(0, 3, i, j);
            Rational sji = blk(0, 1, j, i) + blk(0, 3, j, i);
            if (sij != sji) return false;
        }
    return true;
}

} // namespace commlie
