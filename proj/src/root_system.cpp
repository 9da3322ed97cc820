#include "rootpat/root_system.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace rootpat {

std::string type_name(Type t) {
    switch (t) {
        case Type::A: return "A";
        case Type::B: return "B";
        case Type::C: return "C";
        case Type::D: return "D";
        case Type::E6: return "E6";
        case Type::E7: return "E7";
        case Type::E8: return "E8";
        case Type::F4: return "F4";
        case Type::G2: return "G2";
    }
    return "?";
}

std::optional<Type> parse_type(const std::string& s) {
    if (s == "A" || s == "a") return Type::A;
    if (s == "B" || s == "b") return Type::B;
    if (s == "C" || s == "c") return Type::C;
    if (s == "D" || s == "d") return Type::D;
    if (s == "E6" || s == "e6") return Type::E6;
    if (s == "E7" || s == "e7") return Type::E7;
    if (s == "E8" || s == "e8") return Type::E8;
    if (s == "F4" || s == "f4") return Type::F4;
    if (s == "G2" || s == "g2") return Type::G2;
    return std::nullopt;
}

bool is_classical(Type t) {
    return t == Type::A || t == Type::B || t == Type::C || t == Type::D;
}

int fixed_rank(Type t) {
    switch (t) {
        case Type::E6: return 6;
        case Type::E7: return 7;
        case Type::E8: return 8;
        case Type::F4: return 4;
        case Type::G2: return 2;
        default: return 0;
    }
}

namespace {

using Vec = std::vector<int>;

Vec unit2(int dim, int i, int s = 2) {
    Vec v(size_t(dim), 0);
    v[size_t(i)] = s;
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

struct Raw {
    int dim = 0;
    std::vector<Vec> positives;
    std::vector<Vec> simples;
};

// Positive roots of the explicit constructions, doubled coordinates.
Raw raw_classical(Type t, int n) {
    Raw r;
    switch (t) {
        case Type::A: {
            r.dim = n + 1;
            for (int i = 0; i < n + 1; ++i)
                for (int j = i + 1; j < n + 1; ++j)
                    r.positives.push_back(add(unit2(r.dim, i), unit2(r.dim, j, -2)));
            for (int i = 0; i < n; ++i)
                r.simples.push_back(add(unit2(r.dim, i), unit2(r.dim, i + 1, -2)));
            break;
        }
        case Type::B: {
            r.dim = n;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    r.positives.push_back(add(unit2(r.dim, i), unit2(r.dim, j, -2)));
                    r.positives.push_back(add(unit2(r.dim, i), unit2(r.dim, j)));
                }
            for (int i = 0; i < n; ++i) r.positives.push_back(unit2(r.dim, i));
            for (int i = 0; i + 1 < n; ++i)
                r.simples.push_back(add(unit2(r.dim, i), unit2(r.dim, i + 1, -2)));
            r.simples.push_back(unit2(r.dim, n - 1));
            break;
        }
        case Type::C: {
            r.dim = n;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    r.positives.push_back(add(unit2(r.dim, i), unit2(r.dim, j, -2)));
                    r.positives.push_back(add(unit2(r.dim, i), unit2(r.dim, j)));
                }
            for (int i = 0; i < n; ++i) r.positives.push_back(unit2(r.dim, i, 4));
            for (int i = 0; i + 1 < n; ++i)
                r.simples.push_back(add(unit2(r.dim, i), unit2(r.dim, i + 1, -2)));
            r.simples.push_back(unit2(r.dim, n - 1, 4));
            break;
        }
        case Type::D: {
            r.dim = n;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    r.positives.push_back(add(unit2(r.dim, i), unit2(r.dim, j, -2)));
                    r.positives.push_back(add(unit2(r.dim, i), unit2(r.dim, j)));
                }
            for (int i = 0; i + 1 < n; ++i)
                r.simples.push_back(add(unit2(r.dim, i), unit2(r.dim, i + 1, -2)));
            r.simples.push_back(add(unit2(r.dim, n - 2), unit2(r.dim, n - 1)));
            break;
        }
        default: throw std::logic_error("raw_classical: not classical");
    }
    return r;
}

Raw raw_e8() {
    Raw r;
    r.dim = 8;
    // e_i +- e_j with j < i: the higher-indexed coordinate carries the +.
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < i; ++j) {
            r.positives.push_back(add(unit2(8, i), unit2(8, j, -2)));
            r.positives.push_back(add(unit2(8, i), unit2(8, j)));
        }
    // (+-e1 ... +-e7 + e8)/2 with an even number of minus signs.
    for (int mask = 0; mask < 128; ++mask) {
        if (std::popcount(unsigned(mask)) % 2 != 0) continue;
        Vec v(8, 1);
        for (int b = 0; b < 7; ++b)
            if (mask & (1 << b)) v[size_t(b)] = -1;
        r.positives.push_back(v);
    }
    Vec a1(8, -1);
    a1[0] = 1;
    a1[7] = 1;
    r.simples.push_back(a1);                               // (e1+e8-e2-...-e7)/2
    r.simples.push_back(add(unit2(8, 0), unit2(8, 1)));    // e1+e2
    r.simples.push_back(add(unit2(8, 1), unit2(8, 0, -2)));// e2-e1
    for (int i = 2; i < 7; ++i)
        r.simples.push_back(add(unit2(8, i), unit2(8, i - 1, -2)));
    return r;
}

Raw raw_f4() {
    Raw r;
    r.dim = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            r.positives.push_back(add(unit2(4, i), unit2(4, j, -2)));
            r.positives.push_back(add(unit2(4, i), unit2(4, j)));
        }
    for (int i = 0; i < 4; ++i) r.positives.push_back(unit2(4, i));
    for (int mask = 0; mask < 8; ++mask) {
        Vec v(4, 1);
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) v[size_t(b + 1)] = -1;
        r.positives.push_back(v);  // (e1 +- e2 +- e3 +- e4)/2
    }
    r.simples.push_back(add(unit2(4, 1), unit2(4, 2, -2)));  // e2-e3
    r.simples.push_back(add(unit2(4, 2), unit2(4, 3, -2)));  // e3-e4
    r.simples.push_back(unit2(4, 3));                        // e4
    r.simples.push_back(Vec{1, -1, -1, -1});                 // (e1-e2-e3-e4)/2
    return r;
}

Raw raw_g2() {
    Raw r;
    r.dim = 3;
    const Vec a1{2, -2, 0};    // e1 - e2
    const Vec a2{-4, 2, 2};    // -2e1 + e2 + e3
    r.simples = {a1, a2};
    r.positives = {
        a1,
        a2,
        add(a1, a2),                     // e3 - e1
        add(add(a1, a1), a2),            // e3 - e2
        add(add(add(a1, a1), a1), a2),   // e1 - 2e2 + e3
        add(add(add(add(a1, a1), a1), a2), a2),  // 2e3 - e1 - e2
    };
    return r;
}

int expected_count(Type t, int n) {
    switch (t) {
        case Type::A: return n * (n + 1) / 2;
        case Type::B:
        case Type::C: return n * n;
        case Type::D: return n * (n - 1);
        case Type::E6: return 36;
        case Type::E7: return 63;
        case Type::E8: return 120;
        case Type::F4: return 24;
        case Type::G2: return 6;
    }
    return -1;
}

}  // namespace

RootSystem RootSystem::build(Type t, int rank) {
    int fr = fixed_rank(t);
    if (fr != 0 && rank != 0 && rank != fr)
        throw std::invalid_argument("rank of " + type_name(t) + " is fixed at " + std::to_string(fr));
    if (fr != 0) rank = fr;
    switch (t) {
        case Type::A:
            if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
            break;
        case Type::B:
            if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
            break;
        case Type::C:
            if (rank < 3) throw std::invalid_argument("type C requires rank >= 3");
            break;
        case Type::D:
            if (rank < 4) throw std::invalid_argument("type D requires rank >= 4");
            break;
        default: break;
    }
    if (expected_count(t, rank) > Pattern::kCapacity)
        throw std::invalid_argument("rank too large: more than 128 positive roots");

    Raw raw;
    Type coord_type = t;
    if (t == Type::E6 || t == Type::E7 || t == Type::E8) {
        raw = raw_e8();
        coord_type = Type::E8;
    } else if (t == Type::F4) {
        raw = raw_f4();
    } else if (t == Type::G2) {
        raw = raw_g2();
    } else {
        raw = raw_classical(t, rank);
    }

    // Simple-root coefficients by breadth-first growth: every positive root
    // of height h+1 is a positive root of height h plus a simple root.
    std::map<Vec, int> index;
    for (size_t i = 0; i < raw.positives.size(); ++i) index[raw.positives[i]] = int(i);
    int full_rank = (coord_type == Type::E8) ? 8 : rank;
    std::vector<Vec> coeffs(raw.positives.size());
    std::vector<bool> known(raw.positives.size(), false);
    std::vector<int> frontier;
    for (int k = 0; k < full_rank; ++k) {
        auto it = index.find(raw.simples[size_t(k)]);
        if (it == index.end()) throw std::logic_error("simple root missing from positives");
        Vec c(size_t(full_rank), 0);
        c[size_t(k)] = 1;
        coeffs[size_t(it->second)] = c;
        known[size_t(it->second)] = true;
        frontier.push_back(it->second);
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int i : frontier) {
            for (int k = 0; k < full_rank; ++k) {
                auto it = index.find(add(raw.positives[size_t(i)], raw.simples[size_t(k)]));
                if (it == index.end() || known[size_t(it->second)]) continue;
                Vec c = coeffs[size_t(i)];
                c[size_t(k)] += 1;
                coeffs[size_t(it->second)] = c;
                known[size_t(it->second)] = true;
                next.push_back(it->second);
            }
        }
        frontier = std::move(next);
    }
    for (bool b : known)
        if (!b) throw std::logic_error("positive root not reachable by simple-root additions");

    RootSystem rs;
    rs.type_ = t;
    rs.rank_ = rank;
    rs.ambient_ = raw.dim;
    rs.prime_hyp_ = (t == Type::B || t == Type::C || t == Type::F4) ? "p>2"
                  : (t == Type::G2)                                 ? "p>3"
                                                                    : "";
    for (size_t i = 0; i < raw.positives.size(); ++i) {
        // E6/E7 live inside the E8 coordinates: keep the roots supported on
        // the first 6 resp. 7 simple roots and truncate the coefficients.
        if (t == Type::E6 || t == Type::E7) {
            bool inside = true;
            for (int k = rank; k < 8; ++k)
                if (coeffs[i][size_t(k)] != 0) inside = false;
            if (!inside) continue;
        }
        RootData rd;
        rd.coords2x = raw.positives[i];
        rd.coeffs = coeffs[i];
        rd.coeffs.resize(size_t(rank));
        rd.height = 0;
        for (int m : rd.coeffs) rd.height += m;
        rs.roots_.push_back(std::move(rd));
    }
    if (int(rs.roots_.size()) != expected_count(t, rank))
        throw std::logic_error("positive root count mismatch for " + type_name(t));

    rs.finalize();
    return rs;
}

void RootSystem::finalize() {
    // Height ascending, descending lexicographic on the coefficient vectors
    // within a height level.  This realizes a total order refining the root
    // poset and reproduces the reference F4 numbering.
    std::sort(roots_.begin(), roots_.end(), [](const RootData& a, const RootData& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coeffs > b.coeffs;
    });

    const int n = size();
    std::map<Vec, int> index;
    for (int i = 0; i < n; ++i) index[roots_[size_t(i)].coords2x] = i;

    simple_.clear();
    for (int k = 0; k < rank_; ++k) {
        Vec c(size_t(rank_), 0);
        c[size_t(k)] = 1;
        int found = -1;
        for (int i = 0; i < rank_; ++i)
            if (roots_[size_t(i)].coeffs == c) found = i;
        if (found < 0) throw std::logic_error("simple root lost in reindexing");
        simple_.push_back(found);
    }

    sum_.assign(size_t(n), std::vector<int16_t>(size_t(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            auto it = index.find(add(roots_[size_t(i)].coords2x, roots_[size_t(j)].coords2x));
            if (it == index.end()) continue;
            sum_[size_t(i)][size_t(j)] = int16_t(it->second);
            sum_[size_t(j)][size_t(i)] = int16_t(it->second);
        }

    up_.assign(size_t(n), Pattern{});
    down_.assign(size_t(n), Pattern{});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec& a = roots_[size_t(i)].coeffs;
            const Vec& b = roots_[size_t(j)].coeffs;
            bool le = true;
            for (size_t k = 0; k < a.size(); ++k)
                if (a[k] > b[k]) { le = false; break; }
            if (le) {
                up_[size_t(i)].set(j);
                down_[size_t(j)].set(i);
            }
        }

    decs_.assign(size_t(n), {});
    hooks_.assign(size_t(n), Pattern{});
    for (int i = 0; i < n; ++i) hooks_[size_t(i)].set(i);
    for (int j = 0; j < n; ++j)
        for (int jp = j + 1; jp < n; ++jp) {
            int i = sum_[size_t(j)][size_t(jp)];
            if (i < 0) continue;
            decs_[size_t(i)].emplace_back(j, jp);
            hooks_[size_t(i)].set(j);
            hooks_[size_t(i)].set(jp);
        }
    for (auto& d : decs_) std::sort(d.begin(), d.end());

    // Cross-check: the coefficient order coincides with reachability by
    // simple-root additions (the chains of the root poset).
    std::vector<Pattern> reach(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        reach[size_t(i)].set(i);
        for (int k = 0; k < rank_; ++k) {
            int s = sum_[size_t(i)][size_t(simple_[size_t(k)])];
            if (s >= 0) reach[size_t(i)] |= reach[size_t(s)];
        }
    }
    for (int i = 0; i < n; ++i)
        if (!(reach[size_t(i)] == up_[size_t(i)]))
            throw std::logic_error("partial order disagrees with simple-root chain reachability");

    for (int i = 0; i < n; ++i)
        for (int m : roots_[size_t(i)].coeffs)
            if (m < 0) throw std::logic_error("negative simple-root coefficient");
}

std::optional<int> RootSystem::find_root(const std::vector<int>& coords2x) const {
    for (int i = 0; i < size(); ++i)
        if (roots_[size_t(i)].coords2x == coords2x) return i;
    return std::nullopt;
}

}  // namespace rootpat
