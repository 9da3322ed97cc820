#include "rootpat/oracle.hpp"

#include <stdexcept>

#include "rootpat/patterns.hpp"

namespace rootpat::oracle {

Matrix Matrix::identity(int n, int q) {
    Matrix m;
    m.n = n;
    m.q = q;
    m.e.assign(size_t(n * n), 0);
    for (int i = 0; i < n; ++i) m.e[size_t(i * n + i)] = 1;
    return m;
}

Matrix Matrix::mul(const Matrix& o) const {
    Matrix r;
    r.n = n;
    r.q = q;
    r.e.assign(size_t(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < n; ++j)
                r.e[size_t(i * n + j)] =
                    uint8_t((r.e[size_t(i * n + j)] + a * o.at(k, j)) % q);
        }
    return r;
}

Matrix Matrix::inverse() const {
    // unitriangular: I - N + N^2 - ... with N = M - I nilpotent
    Matrix nmat = *this;
    for (int i = 0; i < n; ++i) nmat.e[size_t(i * n + i)] = 0;
    Matrix inv = identity(n, q);
    Matrix term = identity(n, q);
    int sign = -1;
    for (int s = 1; s < n; ++s) {
        term = term.mul(nmat);
        for (size_t i = 0; i < inv.e.size(); ++i) {
            int v = inv.e[i] + sign * term.e[i];
            inv.e[i] = uint8_t(((v % q) + q) % q);
        }
        sign = -sign;
    }
    return inv;
}

uint64_t Matrix::key() const {
    uint64_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) k = k * uint64_t(q) + at(i, j);
    return k;
}

UnitriangularGroup::UnitriangularGroup(const RootSystem& rs, int q) : rs_(rs), q_(q) {
    if (rs.type() != Type::A)
        throw std::invalid_argument("oracle supports type A only");
    if (q != 2 && q != 3 && q != 5)
        throw std::invalid_argument("oracle supports q in {2,3,5}");
    n_ = rs.rank() + 1;
    entry_.resize(size_t(rs.size()));
    for (int a = 0; a < rs.size(); ++a) {
        const auto& c = rs.root(a).coords2x;  // e_i - e_j doubled
        int i = -1, j = -1;
        for (int k = 0; k < n_; ++k) {
            if (c[size_t(k)] == 2) i = k;
            if (c[size_t(k)] == -2) j = k;
        }
        entry_[size_t(a)] = {i, j};
    }
}

long long UnitriangularGroup::full_order() const {
    long long o = 1;
    for (int i = 0; i < rs_.size(); ++i) o *= q_;
    return o;
}

Matrix UnitriangularGroup::root_element(int alpha, int t) const {
    Matrix m = Matrix::identity(n_, q_);
    auto [i, j] = entry_[size_t(alpha)];
    m.e[size_t(i * n_ + j)] = uint8_t(((t % q_) + q_) % q_);
    return m;
}

std::vector<Matrix> UnitriangularGroup::pattern_subgroup(const Pattern& p) const {
    if (!is_closed(rs_, p)) throw std::invalid_argument("pattern_subgroup: pattern not closed");
    long long order = 1;
    for (int i = 0; i < p.count(); ++i) {
        order *= q_;
        if (order > kSizeGuard) throw std::invalid_argument("pattern_subgroup: size guard exceeded");
    }
    std::vector<int> roots = p.to_vector();  // increasing root order
    std::vector<Matrix> out;
    out.reserve(size_t(order));
    out.push_back(Matrix::identity(n_, q_));
    for (int r : roots) {
        size_t base = out.size();
        std::vector<Matrix> next;
        next.reserve(base * size_t(q_));
        for (int t = 0; t < q_; ++t) {
            Matrix x = root_element(r, t);
            for (size_t i = 0; i < base; ++i) next.push_back(out[i].mul(x));
        }
        out = std::move(next);
    }
    // the product form over increasing roots must hit q^|P| distinct elements
    ElementSet distinct(n_, q_);
    for (const auto& m : out)
        if (!distinct.insert(m))
            throw std::logic_error("pattern_subgroup: product form is not unique");
    return out;
}

ElementSet::ElementSet(int n, int q) {
    uint64_t space = 1;
    int entries = n * (n - 1) / 2;
    for (int i = 0; i < entries; ++i) {
        space *= uint64_t(q);
        if (space > (uint64_t(1) << 33))
            throw std::invalid_argument("ElementSet: key space too large");
    }
    bits_.assign(space, false);
}

bool ElementSet::insert(const Matrix& m) {
    uint64_t k = m.key();
    if (bits_[k]) return false;
    bits_[k] = true;
    ++count_;
    return true;
}

bool ElementSet::contains(const Matrix& m) const { return bits_[m.key()]; }

ElementSet to_set(const UnitriangularGroup& g, const std::vector<Matrix>& v) {
    ElementSet s(g.dim(), g.q());
    for (const auto& m : v) s.insert(m);
    return s;
}

std::vector<Matrix> generated_subgroup(int n, int q, const std::vector<Matrix>& gens,
                                       const std::vector<Matrix>& conjugators) {
    ElementSet seen(n, q);
    std::vector<Matrix> elems;
    std::vector<Matrix> work;
    auto push = [&](const Matrix& m) {
        if (seen.insert(m)) {
            elems.push_back(m);
            work.push_back(m);
        }
    };
    push(Matrix::identity(n, q));
    for (const auto& g : gens) push(g);
    while (!work.empty()) {
        Matrix m = work.back();
        work.pop_back();
        for (const auto& g : gens) push(m.mul(g));
        for (const auto& c : conjugators) push(c.inverse().mul(m).mul(c));
        if (static_cast<long long>(elems.size()) > UnitriangularGroup::kSizeGuard)
            throw std::runtime_error("generated_subgroup: size guard exceeded");
    }
    return elems;
}

std::vector<Matrix> brute_center(const std::vector<Matrix>& s_elems,
                                 const std::vector<Matrix>& s_gens, const ElementSet& n_set) {
    std::vector<Matrix> out;
    for (const auto& x : s_elems) {
        Matrix xi = x.inverse();
        bool central = true;
        for (const auto& y : s_gens) {
            Matrix comm = xi.mul(y.inverse()).mul(x).mul(y);
            if (!n_set.contains(comm)) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(x);
    }
    return out;
}

std::vector<Matrix> brute_derived(int n, int q, const std::vector<Matrix>& s_gens,
                                  const std::vector<Matrix>& n_gens) {
    std::vector<Matrix> gens;
    for (const auto& a : s_gens)
        for (const auto& b : s_gens)
            gens.push_back(a.inverse().mul(b.inverse()).mul(a).mul(b));
    for (const auto& m : n_gens) gens.push_back(m);
    return generated_subgroup(n, q, gens, s_gens);
}

std::vector<Matrix> brute_commutator_group(int n, int q, const std::vector<Matrix>& a,
                                           const std::vector<Matrix>& b) {
    std::vector<Matrix> gens;
    for (const auto& x : a)
        for (const auto& y : b)
            gens.push_back(x.inverse().mul(y.inverse()).mul(x).mul(y));
    return generated_subgroup(n, q, gens);
}

std::vector<Matrix> brute_frattini(int n, int q, const std::vector<Matrix>& elems) {
    std::vector<Matrix> gens;
    for (const auto& x : elems)
        for (const auto& y : elems)
            gens.push_back(x.inverse().mul(y.inverse()).mul(x).mul(y));
    for (const auto& x : elems) {
        Matrix p = x;
        for (int i = 1; i < q; ++i) p = p.mul(x);
        gens.push_back(p);
    }
    return generated_subgroup(n, q, gens);
}

long long class_count(const std::vector<Matrix>& elems) {
    if (elems.empty()) return 0;
    int n = elems.front().n, q = elems.front().q;
    ElementSet marked(n, q);
    long long classes = 0;
    for (const auto& x : elems) {
        if (marked.contains(x)) continue;
        ++classes;
        // closure of {x} under conjugation by all elements
        std::vector<Matrix> orbit{x};
        marked.insert(x);
        for (size_t i = 0; i < orbit.size(); ++i)
            for (const auto& c : elems) {
                Matrix y = c.inverse().mul(orbit[i]).mul(c);
                if (marked.insert(y)) orbit.push_back(y);
            }
    }
    return classes;
}

bool is_normal_subgroup(const std::vector<Matrix>& s_gens, const std::vector<Matrix>& n_elems,
                        const ElementSet& n_set) {
    for (const auto& x : s_gens) {
        Matrix xi = x.inverse();
        for (const auto& m : n_elems)
            if (!n_set.contains(xi.mul(m).mul(x))) return false;
    }
    return true;
}

std::vector<Matrix> pattern_generators(const UnitriangularGroup& g, const Pattern& p) {
    std::vector<Matrix> gens;
    p.for_each([&](int a) { gens.push_back(g.root_element(a, 1)); });
    return gens;
}

}  // namespace rootpat::oracle
