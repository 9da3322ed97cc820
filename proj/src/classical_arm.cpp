#include <stdexcept>

#include "rootpat/single_root.hpp"

namespace rootpat {

namespace {

// Shape of a classical root read off the doubled coordinates.
struct Shape {
    enum Kind { EiMinusEj, EiPlusEj, Ei, TwoEi } kind;
    int i = -1, j = -1;  // 0-based ambient coordinates, i < j where applicable
};

Shape classify(const RootSystem& rs, int alpha) {
    const auto& c = rs.root(alpha).coords2x;
    int pos4 = -1, pos2a = -1, pos2b = -1, neg2 = -1;
    for (int k = 0; k < int(c.size()); ++k) {
        if (c[size_t(k)] == 4) pos4 = k;
        else if (c[size_t(k)] == 2) (pos2a < 0 ? pos2a : pos2b) = k;
        else if (c[size_t(k)] == -2) neg2 = k;
        else if (c[size_t(k)] != 0) throw std::logic_error("unexpected classical coordinate");
    }
    if (pos4 >= 0) return {Shape::TwoEi, pos4, -1};
    if (pos2a >= 0 && neg2 >= 0) return {Shape::EiMinusEj, pos2a, neg2};
    if (pos2b >= 0) return {Shape::EiPlusEj, pos2a, pos2b};
    return {Shape::Ei, pos2a, -1};
}

int need(const RootSystem& rs, std::vector<int> coords2x) {
    auto r = rs.find_root(coords2x);
    if (!r) throw std::logic_error("classical arm formula produced a non-root");
    return *r;
}

std::vector<int> vec(const RootSystem& rs, int i, int vi, int j = -1, int vj = 0) {
    std::vector<int> v(size_t(rs.ambient_dim()), 0);
    v[size_t(i)] = vi;
    if (j >= 0) v[size_t(j)] = vj;
    return v;
}

}  // namespace

ArmSolution classical_arm(const RootSystem& rs, int alpha) {
    if (!is_classical(rs.type()))
        throw std::invalid_argument("classical_arm: exceptional systems use arm_search");
    const int n = rs.ambient_dim();
    const Shape sh = classify(rs, alpha);
    const Type t = rs.type();

    Pattern arm;
    switch (sh.kind) {
        case Shape::EiMinusEj:
            // alpha = e_i - e_j: arm {e_i - e_s | i < s < j}.
            for (int s = sh.i + 1; s < sh.j; ++s) arm.set(need(rs, vec(rs, sh.i, 2, s, -2)));
            break;
        case Shape::Ei:
            // type B, alpha = e_i: arm {e_s | s > i}.
            for (int s = sh.i + 1; s < n; ++s) arm.set(need(rs, vec(rs, s, 2)));
            break;
        case Shape::TwoEi:
            // type C, alpha = 2 e_i: arm {e_i - e_s | s > i}.
            for (int s = sh.i + 1; s < n; ++s) arm.set(need(rs, vec(rs, sh.i, 2, s, -2)));
            break;
        case Shape::EiPlusEj: {
            const int i = sh.i, j = sh.j;
            for (int s = i + 1; s < j; ++s) arm.set(need(rs, vec(rs, i, 2, s, -2)));
            for (int s = j + 1; s < n; ++s) {
                arm.set(need(rs, vec(rs, j, 2, s, 2)));
                arm.set(need(rs, vec(rs, j, 2, s, -2)));
            }
            if (t == Type::B) arm.set(need(rs, vec(rs, j, 2)));
            if (t == Type::C) arm.set(need(rs, vec(rs, j, 4)));
            break;
        }
    }

    ArmSolution sol;
    sol.alpha = alpha;
    sol.arm = arm;
    const Pattern hook = rs.hook(alpha);
    sol.leg = hook - arm;
    sol.leg.reset(alpha);
    if (sol.leg.count() != sol.arm.count())
        throw std::logic_error("classical arm does not split the hook evenly");
    sol.source = rs.all() - arm;
    sol.kernel = k_pattern(rs, alpha);
    sol.enlarged_leg = sol.leg;
    sol.normal_flag = true;
    Pattern cut = sol.enlarged_leg | sol.kernel;
    cut.set(alpha);
    sol.tbar_roots = sol.source - cut;
    return sol;
}

}  // namespace rootpat
