#include "commlie/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace commlie {

SimpleType::SimpleType(char f, int r) : family(static_cast<char>(std::toupper(f))), rank(r) {
    bool ok = false;
    switch (family) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
    }
    if (!ok) throw std::invalid_argument("inadmissible simple type " + std::string(1, family) +
                                         std::to_string(rank));
}

SimpleType SimpleType::parse(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("bad type name: " + name);
    return SimpleType(name[0], std::stoi(name.substr(1)));
}

std::string SimpleType::name() const { return std::string(1, family) + std::to_string(rank); }

long long SimpleType::algebra_dim() const {
    long long l = rank;
    switch (family) {
        case 'A': return l * (l + 2);
        case 'B':
        case 'C': return 2 * l * l + l;
        case 'D': return 2 * l * l - l;
        case 'E': return rank == 6 ? 78 : rank == 7 ? 133 : 248;
        case 'F': return 52;
        case 'G': return 14;
    }
    return 0;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) {
    const int l = t.rank;
    std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (t.family) {
        case 'A':
            for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
            break;
        case 'B': // alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2
            for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
            a[l - 1][l - 2] = -2;
            break;
        case 'C': // alpha_l long: <alpha_l, alpha_{l-1}^vee> = -2
            for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
            a[l - 2][l - 1] = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
            link(l - 3, l - 1);
            break;
        case 'E':
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
            break;
        case 'F': // alpha_1, alpha_2 long, alpha_3, alpha_4 short
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[2][1] = -2;
            break;
        case 'G': // alpha_1 short, alpha_2 long
            a[0][1] = -3;
            a[1][0] = -1;
            break;
    }
    return a;
}

// Positive diagonal making D.A symmetric, scaled to smallest entries 1.
std::vector<int> symmetrizer_of(const std::vector<std::vector<int>>& a) {
    const int l = static_cast<int>(a.size());
    std::vector<Rational> d(l, Rational(0));
    d[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < l; ++j) {
            if (j == i || a[i][j] == 0 || d[j] != 0) continue;
            d[j] = d[i] * Rational(a[i][j]) / Rational(a[j][i]);
            stack.push_back(j);
        }
    }
    Rational m = d[0];
    for (const auto& v : d) m = std::min(m, v);
    std::vector<int> out(l);
    for (int i = 0; i < l; ++i) {
        Rational s = d[i] / m;
        if (!is_integer(s)) throw std::logic_error("non-integral symmetrizer");
        out[i] = static_cast<int>(numerator(s));
    }
    return out;
}

} // namespace

int RootSystem::height(const RootCoords& r) {
    return std::accumulate(r.begin(), r.end(), 0);
}

RootSystem::RootSystem(SimpleType t) : type_(t), rank_(t.rank) {
    cartan_ = cartan_matrix(t);
    d_ = symmetrizer_of(cartan_);

    // Closure enumeration of the positive roots from the Cartan matrix.
    std::set<RootCoords> positive;
    std::vector<RootCoords> frontier;
    for (int i = 0; i < rank_; ++i) {
        RootCoords e(rank_, 0);
        e[i] = 1;
        positive.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<RootCoords> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < rank_; ++i) {
                // p - q = <r, alpha_i^vee>; r + alpha_i is a root iff q >= 1.
                bool is_simple_i = height(r) == 1 && r[i] == 1;
                if (is_simple_i) continue;
                int p = 0;
                RootCoords down = r;
                while (true) {
                    down[i] -= 1;
                    if (!positive.count(down)) break;
                    ++p;
                }
                int pair = 0;
                for (int j = 0; j < rank_; ++j) pair += cartan_[i][j] * r[j];
                if (p - pair >= 1) {
                    RootCoords up = r;
                    up[i] += 1;
                    if (positive.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<RootCoords> pos(positive.begin(), positive.end());
    std::sort(pos.begin(), pos.end(), [](const RootCoords& x, const RootCoords& y) {
        int hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    roots_ = pos;
    for (const auto& r : pos) {
        RootCoords neg(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        roots_.push_back(neg);
    }
    for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = i;

    if (static_cast<long long>(roots_.size()) != t.algebra_dim() - rank_)
        throw std::logic_error("root enumeration size mismatch for " + t.name());
}

std::optional<std::size_t> RootSystem::index_of(const RootCoords& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int RootSystem::pairing(const RootCoords& r, int i) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * r[j];
    return s;
}

Rational RootSystem::inner(const RootCoords& a, const RootCoords& b) const {
    Rational s(0);
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) {
            if (b[j] == 0 || cartan_[i][j] == 0) continue;
            s += Rational(a[i]) * Rational(d_[i] * cartan_[i][j]) * Rational(b[j]);
        }
    }
    return s;
}

std::optional<std::size_t> RootSystem::root_sum(std::size_t a, std::size_t b) const {
    RootCoords s(rank_);
    for (int i = 0; i < rank_; ++i) s[i] = roots_[a][i] + roots_[b][i];
    return index_of(s);
}

bool RootSystem::precedes(std::size_t a, std::size_t b) const {
    RootCoords diff(rank_);
    for (int i = 0; i < rank_; ++i) diff[i] = roots_[b][i] - roots_[a][i];
    auto idx = index_of(diff);
    return idx.has_value() && is_positive(*idx);
}

int RootSystem::string_down(std::size_t a, std::size_t b) const {
    int p = 0;
    RootCoords cur = roots_[b];
    while (true) {
        for (int i = 0; i < rank_; ++i) cur[i] -= roots_[a][i];
        if (!is_root(cur)) break;
        ++p;
    }
    return p;
}

RootSystem::SubSystem RootSystem::sub_system(const std::vector<int>& delta_prime) const {
    if (delta_prime.empty()) throw std::invalid_argument("sub_system: empty subset");
    std::vector<bool> in(rank_, false);
    for (int i : delta_prime) {
        if (i < 0 || i >= rank_) throw std::invalid_argument("sub_system: index out of range");
        in[i] = true;
    }
    SubSystem out;
    for (std::size_t k = 0; k < roots_.size(); ++k) {
        bool supported = true;
        for (int i = 0; i < rank_ && supported; ++i)
            if (roots_[k][i] != 0 && !in[i]) supported = false;
        if (supported) out.root_indices.push_back(k);
    }
    // Connectivity of the induced Dynkin diagram.
    std::vector<int> nodes;
    for (int i = 0; i < rank_; ++i)
        if (in[i]) nodes.push_back(i);
    std::set<int> seen{nodes[0]};
    std::vector<int> stack{nodes[0]};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : nodes)
            if (!seen.count(j) && cartan_[i][j] != 0) {
                seen.insert(j);
                stack.push_back(j);
            }
    }
    out.irreducible = seen.size() == nodes.size();
    return out;
}

std::string RootSystem::root_name(std::size_t i) const {
    std::string s = "(";
    for (int j = 0; j < rank_; ++j) {
        if (j) s += ",";
        s += std::to_string(roots_[i][j]);
    }
    return s + ")";
}

} // namespace commlie
