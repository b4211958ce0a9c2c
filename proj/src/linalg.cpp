#include "commlie/linalg.hpp"

#include <stdexcept>

namespace commlie {

std::vector<std::size_t> rref_in_place(Mat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && m(p, c) == 0) ++p;
        if (p == nr) continue;
        m.swap_rows(r, p);
        if (m(r, c) != 1) {
            Rational inv = Rational(1) / m(r, c);
            for (std::size_t j = c; j < nc; ++j)
                if (m(r, j) != 0) m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            m(i, c) = 0;
            for (std::size_t j = c + 1; j < nc; ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref_in_place(m).size(); }

std::optional<RationalVector> solve(const Mat& m, const RationalVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    RationalVector x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

Subspace Subspace::from_rows(Mat rows) {
    Subspace s(rows.cols());
    auto pivots = rref_in_place(rows);
    Mat basis(pivots.size(), rows.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.set_row(i, rows.row(i));
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::full(std::size_t ambient) { return from_rows(Mat::identity(ambient)); }

RationalVector Subspace::reduce(const RationalVector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("reduce: ambient mismatch");
    RationalVector w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Rational& c = w[pivots_[i]];
        if (c == 0) continue;
        Rational f = c;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (basis_(i, j) != 0) w[j] -= f * basis_(i, j);
    }
    return w;
}

bool Subspace::contains(const RationalVector& v) const {
    RationalVector w = reduce(v);
    for (const auto& c : w)
        if (c != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("sum: ambient mismatch");
    return from_rows(basis_.vstack(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("intersect: ambient mismatch");
    const std::size_t p = dim(), q = other.dim();
    if (p == 0 || q == 0) return Subspace(ambient_);
    // w in U /\ V  iff  w = U^T a = V^T b; read (a, b) off the kernel of
    // [U^T | -V^T] and map a back through U.
    Mat stacked(ambient_, p + q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked(j, i) = basis_(i, j);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked(j, p + i) = -other.basis_(i, j);
    Subspace pairs = kernel(stacked);
    Mat rows(pairs.dim(), ambient_);
    for (std::size_t k = 0; k < pairs.dim(); ++k) {
        for (std::size_t i = 0; i < p; ++i) {
            const Rational& a = pairs.basis()(k, i);
            if (a == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (basis_(i, j) != 0) rows(k, j) += a * basis_(i, j);
        }
    }
    return from_rows(std::move(rows));
}

Subspace kernel(const Mat& m) {
    Mat work = m;
    auto pivots = rref_in_place(work);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat rows(nc - pivots.size(), nc);
    std::size_t k = 0;
    for (std::size_t c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        rows(k, c) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) rows(k, pivots[i]) = -work(i, c);
        ++k;
    }
    return Subspace::from_rows(std::move(rows));
}

} // namespace commlie
