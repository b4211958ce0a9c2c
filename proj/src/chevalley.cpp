#include "commlie/chevalley.hpp"

#include <map>
#include <stdexcept>

namespace commlie {

LieAlgebraStructure::LieAlgebraStructure(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), table_(dim * dim) {
    if (labels_.size() != dim_) throw std::invalid_argument("label count mismatch");
}

void LieAlgebraStructure::set_pair(std::size_t i, std::size_t j, Entry e) {
    table_[i * dim_ + j] = e;
    Entry neg = std::move(e);
    for (auto& [k, c] : neg) c = -c;
    table_[j * dim_ + i] = std::move(neg);
}

LieElement::LieElement(AlgebraRef alg, RationalVector coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != alg_->dim()) throw std::invalid_argument("coefficient length mismatch");
}

LieElement LieElement::zero(AlgebraRef alg) {
    RationalVector c(alg->dim(), Rational(0));
    return LieElement(std::move(alg), std::move(c));
}

LieElement LieElement::basis(AlgebraRef alg, std::size_t k) {
    RationalVector c(alg->dim(), Rational(0));
    c[k] = 1;
    return LieElement(std::move(alg), std::move(c));
}

bool LieElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

LieElement LieElement::operator+(const LieElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("algebra mismatch");
    RationalVector c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return LieElement(alg_, std::move(c));
}

LieElement LieElement::operator-(const LieElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("algebra mismatch");
    RationalVector c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return LieElement(alg_, std::move(c));
}

LieElement LieElement::operator*(const Rational& s) const {
    RationalVector c(coeffs_);
    for (auto& v : c) v *= s;
    return LieElement(alg_, std::move(c));
}

bool LieElement::operator==(const LieElement& o) const {
    return alg_ == o.alg_ && coeffs_ == o.coeffs_;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.algebra() != y.algebra()) throw std::invalid_argument("bracket: algebra mismatch");
    const auto& alg = *x.algebra();
    RationalVector out(alg.dim(), Rational(0));
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (y[j] == 0) continue;
            for (const auto& [k, c] : alg.pair_bracket(i, j)) out[k] += x[i] * y[j] * c;
        }
    }
    return LieElement(x.algebra(), std::move(out));
}

Mat ad_matrix(const LieElement& x) {
    const auto& alg = *x.algebra();
    Mat m(alg.dim(), alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < alg.dim(); ++j)
            for (const auto& [k, c] : alg.pair_bracket(i, j)) m(k, j) += x[i] * c;
    }
    return m;
}

namespace {

// Structure constants N(a,b) for positive-root pairs, built by increasing
// height of a+b: the lexicographically-least pair of each sum (the
// extraspecial pair) gets +(p+1), every other pair is forced by the
// standard quadruple relation
//   N(a,b)N(c,d)/(a+b,a+b) + N(b,c)N(a,d)/(b+c,b+c) + N(c,a)N(b,d)/(c+a,c+a) = 0
// for a+b+c+d = 0 with no two of them opposite.
class ConstantBuilder {
public:
    explicit ConstantBuilder(const RootSystem& rs) : rs_(rs) {
        const std::size_t np = rs.n_positive();

        std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = a + 1; b < np; ++b) {
                auto s = rs.root_sum(a, b);
                if (s) by_sum[*s].push_back({a, b});
            }

        // Root order is by height then lex, so iterating sums in index order
        // guarantees every constant needed on the right-hand side of the
        // quadruple relation is already available.
        for (const auto& [sum, pairs] : by_sum) {
            const auto [a1, b1] = pairs.front(); // minimal first member
            npp_[key(a1, b1)] = Rational(rs.string_down(a1, b1) + 1);
            for (std::size_t t = 1; t < pairs.size(); ++t) {
                const auto [a, b] = pairs[t];
                Rational t2 = term(b1, neg(a), a1, neg(b));
                Rational t3 = term(neg(a), a1, b1, neg(b));
                Rational n = inner(sum) * (t2 + t3) / npp_.at(key(a1, b1));
                if (!is_integer(n)) throw std::logic_error("non-integral structure constant");
                npp_[key(a, b)] = n;
            }
        }
    }

    // N for an arbitrary pair of roots whose sum is a root.
    Rational general(std::size_t a, std::size_t b) const {
        const bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
        if (pa && pb) {
            auto it = npp_.find(key(a, b));
            if (it != npp_.end()) return it->second;
            return -npp_.at(key(b, a));
        }
        if (!pa && !pb) return -general(neg(a), neg(b));
        if (!pa) return -general(b, a);
        // a positive, b negative
        auto d = rs_.root_sum(a, b);
        if (!d) throw std::logic_error("general: sum is not a root");
        if (rs_.is_positive(*d)) {
            // cycle (a, b, -d): N(a,b)/(d,d) = N(b,-d)/(a,a), and
            // N(b,-d) = -N(-b,d) with -b, d positive summing to a.
            return -inner(*d) / inner(a) * general(neg(b), *d);
        }
        return -general(neg(a), neg(b));
    }

private:
    static std::uint64_t key(std::size_t a, std::size_t b) { return (a << 20) | b; }
    std::size_t neg(std::size_t i) const { return rs_.negative_of(i); }
    Rational inner(std::size_t i) const { return rs_.inner(rs_.root(i), rs_.root(i)); }

    // N(p,q)N(r,s)/(p+q,p+q) when p+q is a root, else 0.
    Rational term(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
        auto pq = rs_.root_sum(p, q);
        if (!pq) return Rational(0);
        auto rs_sum = rs_.root_sum(r, s);
        if (!rs_sum) return Rational(0);
        return general(p, q) * general(r, s) / rs_.inner(rs_.root(*pq), rs_.root(*pq));
    }

    const RootSystem& rs_;
    std::map<std::uint64_t, Rational> npp_;
};

// Diagonal +-1 rescaling of the root vectors taking the extraspecial-sign
// table onto the reference G2 table. Found by exhausting the 2^6 sign
// vectors on the positive roots; first match in counter order wins.
std::vector<int> calibrate_g2(const RootSystem& rs, const ConstantBuilder& nb) {
    const auto& ref = g2_reference_table();
    const auto& order = ref.order;
    const std::size_t np = rs.n_positive();
    auto pos_rep = [&](std::size_t i) { return rs.is_positive(i) ? i : rs.negative_of(i); };

    for (unsigned mask = 0; mask < (1u << np); ++mask) {
        auto eps = [&](std::size_t i) { return (mask >> pos_rep(i)) & 1u ? -1 : 1; };
        bool ok = true;
        for (std::size_t r = 0; r < 12 && ok; ++r)
            for (std::size_t c = 0; c < 12 && ok; ++c) {
                if (ref.cells[r][c] == G2ReferenceTable::kUndefinedCell || ref.cells[r][c] == 0)
                    continue;
                std::size_t a = *rs.index_of(order[r]), b = *rs.index_of(order[c]);
                auto s = rs.root_sum(a, b);
                if (!s) {
                    ok = false;
                    break;
                }
                Rational mine = nb.general(a, b) * Rational(eps(a) * eps(b) * eps(*s));
                ok = mine == Rational(ref.cells[r][c]);
            }
        if (ok) {
            std::vector<int> out(np);
            for (std::size_t i = 0; i < np; ++i) out[i] = (mask >> i) & 1u ? -1 : 1;
            return out;
        }
    }
    throw std::logic_error("no diagonal rescaling matches the G2 reference table");
}

} // namespace

AlgebraRef build_chevalley(std::shared_ptr<const RootSystem> rs) {
    const std::size_t nroots = rs->size();
    const int rank = rs->rank();
    const std::size_t dim = nroots + rank;

    std::vector<std::string> labels;
    labels.reserve(dim);
    for (std::size_t i = 0; i < nroots; ++i) labels.push_back("x" + rs->root_name(i));
    for (int i = 0; i < rank; ++i) labels.push_back("h" + std::to_string(i + 1));

    auto alg = std::make_shared<LieAlgebraStructure>(dim, std::move(labels));
    alg->set_root_system(rs);

    ConstantBuilder nb(*rs);
    std::vector<int> eps;
    if (rs->type().family == 'G') {
        eps = calibrate_g2(*rs, nb);
        alg->set_calibration(eps);
        std::string note = "G2 sign calibration over positive roots:";
        for (int e : eps) note += e > 0 ? " +1" : " -1";
        alg->set_note(note);
    }
    auto sign = [&](std::size_t i) {
        if (eps.empty()) return 1;
        return eps[rs->is_positive(i) ? i : rs->negative_of(i)];
    };

    // [x_a, x_b] cells.
    for (std::size_t a = 0; a < nroots; ++a) {
        for (std::size_t b = a + 1; b < nroots; ++b) {
            LieAlgebraStructure::Entry e;
            if (b == rs->negative_of(a)) {
                // [x_a, x_(-a)] = h_a = sum of k_i (alpha_i,alpha_i)/(a,a) h_i.
                const auto& coords = rs->root(a);
                Rational aa = rs->inner(coords, coords);
                for (int i = 0; i < rank; ++i) {
                    if (coords[i] == 0) continue;
                    Rational c = Rational(coords[i]) * Rational(2 * rs->symmetrizer()[i]) / aa;
                    if (!is_integer(c)) throw std::logic_error("non-integral coroot");
                    e.push_back({nroots + i, c});
                }
            } else if (auto s = rs->root_sum(a, b)) {
                Rational n = nb.general(a, b) * Rational(sign(a) * sign(b) * sign(*s));
                e.push_back({*s, n});
            }
            if (!e.empty()) alg->set_pair(a, b, std::move(e));
        }
        // [h_i, x_a] = <a, alpha_i^vee> x_a, stored as [x_a, h_i] = -that.
        for (int i = 0; i < rank; ++i) {
            int p = rs->pairing(rs->root(a), i);
            if (p != 0) alg->set_pair(a, nroots + i, {{a, Rational(-p)}});
        }
    }
    return alg;
}

AlgebraRef build_chevalley(const SimpleType& t) {
    return build_chevalley(std::make_shared<const RootSystem>(t));
}

LieElement root_vector(const AlgebraRef& alg, std::size_t root_idx) {
    return LieElement::basis(alg, root_idx);
}

LieElement cartan_generator(const AlgebraRef& alg, int simple_idx) {
    return LieElement::basis(alg, alg->n_root_vectors() + simple_idx);
}

LieElement coroot_element(const AlgebraRef& alg, std::size_t root_idx) {
    const auto& rs = *alg->root_system();
    return bracket(root_vector(alg, root_idx), root_vector(alg, rs.negative_of(root_idx)));
}

Rational root_eval(const AlgebraRef& alg, std::size_t root_idx, const LieElement& h) {
    const auto& rs = *alg->root_system();
    const std::size_t nroots = alg->n_root_vectors();
    for (std::size_t i = 0; i < nroots; ++i)
        if (h[i] != 0) throw std::invalid_argument("root_eval: element not in the Cartan");
    Rational v(0);
    for (int i = 0; i < rs.rank(); ++i)
        if (h[nroots + i] != 0) v += h[nroots + i] * Rational(rs.pairing(rs.root(root_idx), i));
    return v;
}

Rational structure_constant(const AlgebraRef& alg, std::size_t a, std::size_t b) {
    const auto& rs = *alg->root_system();
    auto s = rs.root_sum(a, b);
    if (!s) return Rational(0);
    for (const auto& [k, c] : alg->pair_bracket(a, b))
        if (k == *s) return c;
    return Rational(0);
}

SubalgebraPackage subalgebra_package(const AlgebraRef& alg, const std::vector<int>& delta_prime) {
    if (!alg->is_chevalley()) throw std::invalid_argument("subalgebra_package: needs a Chevalley realization");
    const auto& rs = *alg->root_system();
    auto sub = rs.sub_system(delta_prime);
    if (!sub.irreducible)
        throw std::invalid_argument("subalgebra_package: delta_prime must induce a connected diagram");

    const std::size_t dim = alg->dim();
    const std::size_t nroots = alg->n_root_vectors();
    const int rank = rs.rank();

    SubalgebraPackage pkg;
    pkg.delta_prime = delta_prime;
    pkg.phi_prime = sub.root_indices;

    Mat lp(sub.root_indices.size() + delta_prime.size(), dim);
    std::size_t r = 0;
    for (auto idx : sub.root_indices) lp(r++, idx) = 1;
    for (int i : delta_prime) lp(r++, nroots + i) = 1;
    pkg.L_prime = Subspace::from_rows(std::move(lp));

    Mat hfull(rank, dim);
    for (int i = 0; i < rank; ++i) hfull(i, nroots + i) = 1;
    pkg.H = Subspace::from_rows(std::move(hfull));

    Mat hp(delta_prime.size(), dim);
    r = 0;
    for (int i : delta_prime) hp(r++, nroots + i) = 1;
    pkg.H_prime = Subspace::from_rows(std::move(hp));

    // H_1 = C_H(L'): the h with alpha(h) = 0 for every alpha in Delta'.
    Mat cond(delta_prime.size(), rank);
    r = 0;
    for (int a : delta_prime) {
        RootCoords simple(rank, 0);
        simple[a] = 1;
        for (int i = 0; i < rank; ++i) cond(r, i) = Rational(rs.pairing(simple, i));
        ++r;
    }
    Subspace h1_small = kernel(cond);
    Mat h1(h1_small.dim(), dim);
    for (std::size_t k = 0; k < h1_small.dim(); ++k)
        for (int i = 0; i < rank; ++i) h1(k, nroots + i) = h1_small.basis()(k, i);
    pkg.H_1 = Subspace::from_rows(std::move(h1));

    if (pkg.H_1.dim() != static_cast<std::size_t>(rank) - delta_prime.size())
        throw std::logic_error("dim H_1 != |Delta| - |Delta'|");
    if (pkg.H_1.intersect(pkg.H_prime).dim() != 0 ||
        pkg.H_1.sum(pkg.H_prime) != pkg.H)
        throw std::logic_error("H != H_1 (+) H'");
    for (std::size_t k = 0; k < pkg.H_1.dim(); ++k) {
        LieElement h(alg, pkg.H_1.basis().row(k));
        for (std::size_t t = 0; t < pkg.L_prime.dim(); ++t) {
            LieElement v(alg, pkg.L_prime.basis().row(t));
            if (!bracket(h, v).is_zero()) throw std::logic_error("[H_1, L'] != 0");
        }
    }
    return pkg;
}

bool jacobi_holds(const AlgebraRef& alg, std::size_t i, std::size_t j, std::size_t k) {
    LieElement xi = LieElement::basis(alg, i);
    LieElement xj = LieElement::basis(alg, j);
    LieElement xk = LieElement::basis(alg, k);
    LieElement s = bracket(bracket(xi, xj), xk) + bracket(bracket(xj, xk), xi) +
                   bracket(bracket(xk, xi), xj);
    return s.is_zero();
}

const G2ReferenceTable& g2_reference_table() {
    constexpr int U = G2ReferenceTable::kUndefinedCell;
    static const G2ReferenceTable table = {
        {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {2, 1}, {-2, -1}, {3, 1}, {-3, -1},
         {3, 2}, {-3, -2}},
        {
            {0, U, -1, 0, -2, 3, -3, 2, 0, 1, 0, 0},
            {U, 0, 0, 1, -3, 2, -2, 3, -1, 0, 0, 0},
            {1, 0, 0, U, 0, -1, 0, 0, -1, 0, 0, 1},
            {0, -1, U, 0, 1, 0, 0, 0, 0, 1, -1, 0},
            {2, 3, 0, -1, 0, U, 3, -2, 0, 0, 0, -1},
            {-3, -2, 1, 0, U, 0, 2, -3, 0, 0, 1, 0},
            {3, 2, 0, 0, -3, -2, 0, U, 0, -1, 0, 1},
            {-2, -3, 0, 0, 2, 3, U, 0, 1, 0, -1, 0},
            {0, 1, 1, 0, 0, 0, 0, -1, 0, U, 0, -1},
            {-1, 0, 0, -1, 0, 0, 1, 0, U, 0, 1, 0},
            {0, 0, 0, 1, 0, -1, 0, 1, 0, -1, 0, U},
            {0, 0, -1, 0, 1, 0, -1, 0, 1, 0, U, 0},
        },
    };
    return table;
}

} // namespace commlie
