#include "commlie/commuting.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace commlie {

Subspace centralizer(const LieElement& x) { return kernel(ad_matrix(x)); }

Subspace joint_centralizer(const AlgebraRef& alg, const std::vector<LieElement>& xs) {
    Subspace c = Subspace::full(alg->dim());
    for (const auto& x : xs) {
        if (x.algebra() != alg) throw std::invalid_argument("joint_centralizer: algebra mismatch");
        c = c.intersect(centralizer(x));
    }
    return c;
}

Subspace normalizer(const AlgebraRef& alg, const Subspace& W) {
    const std::size_t dim = alg->dim();
    if (W.ambient_dim() != dim) throw std::invalid_argument("normalizer: ambient mismatch");
    if (W.dim() == 0) return Subspace::full(dim);
    // Residual-after-W of each column of ad(w_j), stacked over j.
    Mat residual(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        RationalVector e(dim, Rational(0));
        e[k] = 1;
        RationalVector r = W.reduce(e);
        for (std::size_t i = 0; i < dim; ++i) residual(i, k) = r[i];
    }
    Mat stacked(0, dim);
    for (std::size_t j = 0; j < W.dim(); ++j) {
        LieElement w(alg, W.basis().row(j));
        stacked = stacked.vstack(residual * ad_matrix(w));
    }
    return kernel(stacked);
}

Subspace generated_subalgebra(const AlgebraRef& alg, const std::vector<LieElement>& xs) {
    const std::size_t dim = alg->dim();
    Mat rows(xs.size(), dim);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].algebra() != alg)
            throw std::invalid_argument("generated_subalgebra: algebra mismatch");
        rows.set_row(i, xs[i].coeffs());
    }
    Subspace span = Subspace::from_rows(std::move(rows));
    while (true) {
        Mat ext = span.basis();
        for (std::size_t i = 0; i < span.dim(); ++i)
            for (std::size_t j = i + 1; j < span.dim(); ++j) {
                LieElement b = bracket(LieElement(alg, span.basis().row(i)),
                                       LieElement(alg, span.basis().row(j)));
                if (b.is_zero()) continue;
                Mat one(1, dim);
                one.set_row(0, b.coeffs());
                ext = ext.vstack(one);
            }
        Subspace next = Subspace::from_rows(std::move(ext));
        if (next.dim() == span.dim()) return span;
        span = std::move(next);
    }
}

std::vector<LieElement> commutation_residual(const std::vector<LieElement>& point) {
    std::vector<LieElement> out;
    for (std::size_t r = 0; r < point.size(); ++r)
        for (std::size_t l = r + 1; l < point.size(); ++l)
            out.push_back(bracket(point[r], point[l]));
    return out;
}

TSpaceReport tspace(const std::vector<LieElement>& point) {
    if (point.empty()) throw std::invalid_argument("tspace: empty point");
    const AlgebraRef alg = point.front().algebra();
    for (const auto& res : commutation_residual(point))
        if (!res.is_zero()) throw std::invalid_argument("tspace: point does not commute");

    const std::size_t dim = alg->dim(), m = point.size();
    std::vector<Mat> ad(m, Mat(0, 0));
    for (std::size_t i = 0; i < m; ++i) ad[i] = ad_matrix(point[i]);

    Mat sys(m * (m - 1) / 2 * dim, m * dim);
    std::size_t block = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            // [x_i, z_j] - [x_j, z_i] = 0
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c) {
                    if (ad[i](r, c) != 0) sys(block + r, j * dim + c) += ad[i](r, c);
                    if (ad[j](r, c) != 0) sys(block + r, i * dim + c) -= ad[j](r, c);
                }
            block += dim;
        }
    TSpaceReport rep{point, 0, kernel(sys)};
    rep.dim = rep.basis.dim();
    return rep;
}

std::size_t tspace_padded(const std::vector<LieElement>& point, int m) {
    if (m < static_cast<int>(point.size()))
        throw std::invalid_argument("tspace_padded: m smaller than the tuple");
    std::vector<LieElement> padded = point;
    const AlgebraRef alg = point.front().algebra();
    while (static_cast<int>(padded.size()) < m) padded.push_back(LieElement::zero(alg));
    return tspace(padded).dim;
}

RegularHCertificate find_regular_h(const AlgebraRef& alg, const SubalgebraPackage& pkg,
                                   long max_norm) {
    const auto& rs = *alg->root_system();
    if (max_norm <= 0) {
        if (const char* env = std::getenv("COMMVAR_MAX_NORM")) max_norm = std::atol(env);
        if (max_norm <= 0) max_norm = 10 * static_cast<long>(rs.size());
    }

    std::set<std::size_t> inside(pkg.phi_prime.begin(), pkg.phi_prime.end());
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (!inside.count(i)) outside.push_back(i);

    const std::size_t k = pkg.H_1.dim();
    auto assemble = [&](const std::vector<long>& c) {
        LieElement h = LieElement::zero(alg);
        for (std::size_t i = 0; i < k; ++i)
            if (c[i] != 0) h = h + LieElement(alg, pkg.H_1.basis().row(i)) * Rational(c[i]);
        return h;
    };
    auto admissible = [&](const LieElement& h) {
        for (auto b : outside)
            if (root_eval(alg, b, h) == 0) return false;
        return true;
    };
    auto certify = [&](LieElement h) {
        Subspace c = centralizer(h);
        std::size_t expect = pkg.H.dim() + pkg.L_prime.dim() - pkg.H_prime.dim();
        if (c.dim() != expect || c != pkg.H.sum(pkg.L_prime))
            throw std::logic_error("find_regular_h: candidate centralizer is not H + L'");
        return RegularHCertificate{std::move(h), c.dim()};
    };

    if (k == 0) {
        LieElement h = LieElement::zero(alg);
        if (admissible(h)) return certify(std::move(h));
        throw std::logic_error("find_regular_h: no candidate in a zero-dimensional H_1");
    }

    for (long norm = 0; norm <= max_norm; ++norm) {
        std::vector<long> c(k, -norm);
        while (true) {
            long mx = 0;
            for (long v : c) mx = std::max(mx, std::labs(v));
            if (mx == norm) {
                LieElement h = assemble(c);
                if (admissible(h)) return certify(std::move(h));
            }
            std::size_t pos = 0;
            while (pos < k && c[pos] == norm) c[pos++] = -norm;
            if (pos == k) break;
            ++c[pos];
        }
    }
    throw std::logic_error("find_regular_h: exhausted the search bound; construction bug");
}

long long reg_dim(long long dim, long long rank, int m) { return dim + (m - 1) * rank; }

long long reg_dim(const AlgebraRef& alg, int m) {
    if (!alg->is_chevalley()) throw std::invalid_argument("reg_dim: needs a Chevalley realization");
    return reg_dim(static_cast<long long>(alg->dim()), alg->root_system()->rank(), m);
}

long long orbit_dim(long long dim_gp, long long dim_sp, long long dim_centralizer) {
    return dim_gp + dim_sp - dim_centralizer;
}

long long adding_diagonals_dim(long long dim_cp, long long dim_g, long long dim_gp, int m,
                               int delta_size, int delta_prime_size) {
    return dim_cp + dim_g - dim_gp +
           static_cast<long long>(m - 1) * (delta_size - delta_prime_size);
}

bool ad_stability_check(const AlgebraRef& alg, const Subspace& W, const Subspace& stab) {
    if (W.ambient_dim() != alg->dim() || stab.ambient_dim() != alg->dim())
        throw std::invalid_argument("ad_stability_check: ambient mismatch");
    for (std::size_t i = 0; i < stab.dim(); ++i) {
        LieElement s(alg, stab.basis().row(i));
        for (std::size_t j = 0; j < W.dim(); ++j) {
            LieElement w(alg, W.basis().row(j));
            if (!W.contains(bracket(s, w).coeffs())) return false;
        }
    }
    return true;
}

namespace {

bool is_antisymmetric(const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

bool is_symmetric(const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

void check_blocks(std::size_t s, const SoShapeBlocks& b) {
    if (b.a2.rows() != s || b.a2.cols() != s || b.a5.rows() != s || b.a5.cols() != s ||
        b.a6.rows() != s || b.a6.cols() != s)
        throw std::invalid_argument("shape blocks must be s x s");
    if (!is_antisymmetric(b.a5)) throw std::invalid_argument("A5 must be antisymmetric");
    if (!is_symmetric(b.a2 + b.a6)) throw std::invalid_argument("A2 + A6 must be symmetric");
}

} // namespace

Mat so_shape_matrix(std::size_t s, const SoShapeBlocks& b) {
    check_blocks(s, b);
    Mat m(4 * s, 4 * s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            m(i, s + j) = b.a2(i, j);
            m(i, 2 * s + j) = b.a5(i, j);
            m(i, 3 * s + j) = b.a6(i, j);
            m(s + i, 2 * s + j) = -b.a6(j, i);
            m(3 * s + i, 2 * s + j) = -b.a2(j, i);
        }
    return m;
}

Mat so_commutator_form(std::size_t s, const SoShapeBlocks& a, const SoShapeBlocks& b) {
    check_blocks(s, a);
    check_blocks(s, b);
    Mat block = (b.a2 * a.a6.transposed() + b.a6 * a.a2.transposed()) -
                (a.a2 * b.a6.transposed() + a.a6 * b.a2.transposed());
    if (!is_antisymmetric(block))
        throw std::logic_error("so_commutator_form: block is not antisymmetric");
    Mat out(4 * s, 4 * s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) out(i, 2 * s + j) = block(i, j);
    return out;
}

} // namespace commlie
