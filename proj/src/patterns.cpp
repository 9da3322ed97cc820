#include "rootpat/patterns.hpp"

#include <stdexcept>

namespace rootpat {

bool is_closed(const RootSystem& rs, const Pattern& p) {
    bool ok = true;
    p.for_each([&](int i) {
        if (!ok) return;
        p.for_each([&](int j) {
            if (!ok || j < i) return;
            auto k = rs.root_sum(i, j);
            if (k && !p.test(*k)) ok = false;
        });
    });
    return ok;
}

Pattern closure(const RootSystem& rs, Pattern m) {
    bool changed = true;
    while (changed) {
        changed = false;
        Pattern add;
        m.for_each([&](int i) {
            m.for_each([&](int j) {
                if (j < i) return;
                auto k = rs.root_sum(i, j);
                if (k && !m.test(*k)) add.set(*k);
            });
        });
        if (!add.empty()) {
            m |= add;
            changed = true;
        }
    }
    return m;
}

bool normalizes(const RootSystem& rs, const Pattern& m, const Pattern& n) {
    bool ok = true;
    m.for_each([&](int i) {
        if (!ok) return;
        n.for_each([&](int j) {
            if (!ok) return;
            auto k = rs.root_sum(i, j);
            if (k && !n.test(*k)) ok = false;
        });
    });
    return ok;
}

bool is_normal_in(const RootSystem& rs, const Pattern& n, const Pattern& s) {
    if (!n.subset_of(s)) throw std::invalid_argument("is_normal_in: n must be a subset of s");
    return normalizes(rs, s, n);
}

Pattern normal_closure(const RootSystem& rs, const Pattern& m, const Pattern& s) {
    if (!m.subset_of(s)) throw std::invalid_argument("normal_closure: m must be a subset of s");
    if (!is_closed(rs, s)) throw std::invalid_argument("normal_closure: s must be closed");
    Pattern n = m;
    bool changed = true;
    while (changed) {
        changed = false;
        Pattern add;
        s.for_each([&](int i) {
            n.for_each([&](int j) {
                auto k = rs.root_sum(i, j);
                if (k && !n.test(*k)) add.set(*k);
            });
        });
        if (!add.empty()) {
            n |= add;
            changed = true;
        }
    }
    return n;
}

namespace {
void require_normal_pair(const RootSystem& rs, const Pattern& s, const Pattern& n, const char* who) {
    if (!is_closed(rs, s)) throw std::invalid_argument(std::string(who) + ": s must be closed");
    if (!n.subset_of(s)) throw std::invalid_argument(std::string(who) + ": n must be a subset of s");
    if (!normalizes(rs, s, n)) throw std::invalid_argument(std::string(who) + ": n is not normal in s");
}
}  // namespace

Pattern derived_pattern(const RootSystem& rs, const Pattern& s, const Pattern& n) {
    require_normal_pair(rs, s, n, "derived_pattern");
    Pattern d = n;
    s.for_each([&](int i) {
        s.for_each([&](int j) {
            if (j < i) return;
            auto k = rs.root_sum(i, j);
            if (k) d.set(*k);
        });
    });
    return d;
}

Pattern center_pattern(const RootSystem& rs, const Pattern& s, const Pattern& n) {
    require_normal_pair(rs, s, n, "center_pattern");
    Pattern z = n;
    s.for_each([&](int i) {
        bool central = true;
        s.for_each([&](int j) {
            if (!central) return;
            auto k = rs.root_sum(i, j);
            if (k && !n.test(*k)) central = false;
        });
        if (central) z.set(i);
    });
    return z;
}

Pattern root_center(const RootSystem& rs, const Pattern& s, const Pattern& n) {
    return center_pattern(rs, s, n) - n;
}

int linear_count_exponent(const RootSystem& rs, const Pattern& s, const Pattern& n) {
    Pattern d = derived_pattern(rs, s, n);
    return (s - n).count() - (d - n).count();
}

bool is_antichain(const RootSystem& rs, const Pattern& p) {
    bool ok = true;
    p.for_each([&](int i) {
        if (!ok) return;
        Pattern comp = (rs.up_set(i) | rs.down_set(i));
        comp.reset(i);
        if (p.intersects(comp)) ok = false;
    });
    return ok;
}

namespace {
// Depth-first enumeration in the fixed total order: a node is an antichain,
// children extend it by a root that is later in the order and incomparable
// to everything chosen.
void antichain_dfs(const RootSystem& rs, Pattern cur, Pattern allowed,
                   const std::function<void(const Pattern&)>& f) {
    f(cur);
    allowed.for_each([&](int i) {
        Pattern next_allowed = allowed - (rs.up_set(i) | rs.down_set(i));
        // keep only candidates after i to avoid duplicates
        Pattern tail;
        next_allowed.for_each([&](int j) {
            if (j > i) tail.set(j);
        });
        Pattern c = cur;
        c.set(i);
        antichain_dfs(rs, c, tail, f);
    });
}
}  // namespace

void for_each_antichain(const RootSystem& rs, const std::function<void(const Pattern&)>& f) {
    antichain_dfs(rs, Pattern{}, rs.all(), f);
}

std::vector<long long> antichain_counts_by_size(const RootSystem& rs) {
    std::vector<long long> counts(size_t(rs.rank()) + 1, 0);
    for_each_antichain(rs, [&](const Pattern& a) {
        size_t k = size_t(a.count());
        if (k >= counts.size()) counts.resize(k + 1, 0);
        ++counts[k];
    });
    return counts;
}

QPolynomial antichain_polynomial(const RootSystem& rs) {
    return QPolynomial(QPolynomial::Var::t, antichain_counts_by_size(rs));
}

long long antichain_total(const RootSystem& rs) {
    long long total = 0;
    for (long long c : antichain_counts_by_size(rs)) total += c;
    return total;
}

}  // namespace rootpat
