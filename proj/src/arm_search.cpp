#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rootpat/single_root.hpp"

namespace rootpat {

namespace {

// One assignment search over the hook of a root.  Variables are the hook
// elements other than alpha; each decomposition pair contributes exactly one
// arm and one leg element.  Closure of the source is a set of clauses of the
// form arm(b) -> arm(g) v arm(g'); the normality conditions add leg-side
// implications that are only sound in the phase that assumes them.
struct Search {
    enum : int8_t { UNK = 0, ARM = 1, LEG = 2 };
    struct Clause {
        int8_t kind;  // 1: arm(a)->arm(b)|arm(c); 2: leg(a)->leg(b);
                      // 3: !(leg a & leg b); 4: leg a & leg b -> leg c
        int a, b, c;
    };

    const RootSystem& rs;
    int alpha;
    Pattern hook, vars, kernel, heart, all;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> partner;
    std::vector<int8_t> state;
    std::vector<Clause> clauses;
    std::vector<std::vector<int>> occ;
    std::vector<int> trail;
    std::vector<int> queue;

    // results
    Pattern best_arm;
    Pattern best_lbar;
    int best_value = 1 << 30;
    long long leaves = 0;

    Search(const RootSystem& r, int a, const Pattern& k) : rs(r), alpha(a) {
        hook = rs.hook(alpha);
        vars = hook;
        vars.reset(alpha);
        kernel = k;
        all = rs.all();
        heart = all - hook;
        pairs = rs.decompositions(alpha);
        partner.assign(size_t(rs.size()), -1);
        for (auto [j, jp] : pairs) {
            partner[size_t(j)] = jp;
            partner[size_t(jp)] = j;
        }
        state.assign(size_t(rs.size()), UNK);
        occ.assign(size_t(rs.size()), {});
    }

    void add_clause(Clause cl) {
        int id = int(clauses.size());
        clauses.push_back(cl);
        occ[size_t(cl.a)].push_back(id);
        if (cl.b >= 0) occ[size_t(cl.b)].push_back(id);
        if (cl.kind == 1 || cl.kind == 4)
            if (cl.c >= 0) occ[size_t(cl.c)].push_back(id);
    }

    // Closure-of-source clauses: for every possible arm element b and every
    // way b = g + g' of writing it as a sum of positive roots, at least one
    // summand must be in the arm too.
    void build_closure_clauses() {
        vars.for_each([&](int b) {
            for (auto [g, gp] : rs.decompositions(b)) {
                int vb = vars.test(g) ? g : -1;
                int vc = vars.test(gp) ? gp : -1;
                add_clause({1, b, vb, vc});
            }
        });
    }

    // Leg-side implications.  In the normal phase these encode that the leg
    // joined with the kernel must be normal in the source; in the enlarged
    // phase the surviving sound forms encode the abelian-excess condition.
    // force_list collects variables that can never be legs (normal phase).
    void build_leg_clauses(bool normal_phase, std::vector<int>& force_arm) {
        vars.for_each([&](int lam) {
            heart.for_each([&](int g) {
                auto s = rs.root_sum(lam, g);
                if (!s) return;
                if (vars.test(*s)) {
                    add_clause({2, lam, *s, -1});
                } else if (heart.test(*s) && !kernel.test(*s)) {
                    if (normal_phase) force_arm.push_back(lam);
                }
            });
        });
        vars.for_each([&](int lam) {
            vars.for_each([&](int lam2) {
                if (lam2 <= lam || partner[size_t(lam)] == lam2) return;
                auto s = rs.root_sum(lam, lam2);
                if (!s) return;
                if (normal_phase) {
                    if (vars.test(*s))
                        add_clause({4, lam, lam2, *s});
                    else if (!kernel.test(*s))
                        add_clause({3, lam, lam2, -1});
                } else {
                    // two legs may only sum into the kernel
                    if (!kernel.test(*s)) add_clause({3, lam, lam2, -1});
                }
            });
        });
    }

    bool assign(int x, int8_t v) {
        if (state[size_t(x)] != UNK) return state[size_t(x)] == v;
        state[size_t(x)] = v;
        trail.push_back(x);
        queue.push_back(x);
        int p = partner[size_t(x)];
        if (p >= 0 && vars.test(p)) return assign(p, v == ARM ? LEG : ARM);
        return true;
    }

    bool eval_clause(const Clause& cl) {
        auto st = [&](int x) { return x < 0 ? int8_t(LEG) : state[size_t(x)]; };
        switch (cl.kind) {
            case 1: {
                if (st(cl.a) == LEG) return true;
                int cand = -1, ncand = 0;
                if (cl.b >= 0 && state[size_t(cl.b)] != LEG) { cand = cl.b; ++ncand; }
                if (cl.c >= 0 && state[size_t(cl.c)] != LEG) { cand = cl.c; ++ncand; }
                if ((cl.b >= 0 && state[size_t(cl.b)] == ARM) ||
                    (cl.c >= 0 && state[size_t(cl.c)] == ARM))
                    return true;
                if (ncand == 0)
                    return st(cl.a) == ARM ? false : assign(cl.a, LEG);
                if (ncand == 1 && st(cl.a) == ARM) return assign(cand, ARM);
                return true;
            }
            case 2: {
                if (state[size_t(cl.a)] == LEG) {
                    if (state[size_t(cl.b)] == ARM) return false;
                    if (state[size_t(cl.b)] == UNK) return assign(cl.b, LEG);
                } else if (state[size_t(cl.b)] == ARM) {
                    if (state[size_t(cl.a)] == UNK) return assign(cl.a, ARM);
                }
                return true;
            }
            case 3: {
                if (state[size_t(cl.a)] == LEG && state[size_t(cl.b)] == LEG) return false;
                if (state[size_t(cl.a)] == LEG && state[size_t(cl.b)] == UNK)
                    return assign(cl.b, ARM);
                if (state[size_t(cl.b)] == LEG && state[size_t(cl.a)] == UNK)
                    return assign(cl.a, ARM);
                return true;
            }
            case 4: {
                bool la = state[size_t(cl.a)] == LEG, lb = state[size_t(cl.b)] == LEG;
                if (la && lb) {
                    if (state[size_t(cl.c)] == ARM) return false;
                    if (state[size_t(cl.c)] == UNK) return assign(cl.c, LEG);
                } else if (state[size_t(cl.c)] == ARM) {
                    if (la && state[size_t(cl.b)] == UNK) return assign(cl.b, ARM);
                    if (lb && state[size_t(cl.a)] == UNK) return assign(cl.a, ARM);
                }
                return true;
            }
        }
        return true;
    }

    bool propagate() {
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (int cid : occ[size_t(x)])
                if (!eval_clause(clauses[size_t(cid)])) return false;
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            state[size_t(trail.back())] = UNK;
            trail.pop_back();
        }
        queue.clear();
    }

    Pattern collect(int8_t v) const {
        Pattern p;
        vars.for_each([&](int x) {
            if (state[size_t(x)] == v) p.set(x);
        });
        return p;
    }

    int next_var() const {
        int pick = -1;
        vars.for_each([&](int x) {
            if (pick < 0 && state[size_t(x)] == UNK) pick = x;
        });
        return pick;
    }

    // ---- normal phase: source closed and leg u kernel normal in source ----
    bool dfs_normal() {
        int x = next_var();
        if (x < 0) {
            ++leaves;
            Pattern arm = collect(ARM);
            Pattern src = all - arm;
            Pattern lk = collect(LEG) | kernel;
            if (!is_closed(rs, src) || !normalizes(rs, src, lk)) return false;
            best_arm = arm;
            return true;
        }
        for (int8_t v : {ARM, LEG}) {
            size_t mark = trail.size();
            if (assign(x, v) && propagate() && dfs_normal()) return true;
            undo_to(mark);
        }
        return false;
    }

    // ---- enlarged phase: minimize |lbar| over closed-source choices ----
    void dfs_enlarged(int unassigned) {
        if (best_value <= int(pairs.size())) return;  // cannot beat |leg|
        int x = next_var();
        if (x < 0) {
            ++leaves;
            Pattern arm = collect(ARM);
            Pattern src = all - arm;
            if (!is_closed(rs, src)) return;
            Pattern leg = collect(LEG);
            Pattern m = normal_closure(rs, leg | kernel, src);
            if (m.test(alpha)) return;
            Pattern lbar = m - kernel;
            Pattern alk = lbar | kernel;
            alk.set(alpha);
            if (!normalizes(rs, all, alk)) return;
            bool abelian = true;
            lbar.for_each([&](int i) {
                lbar.for_each([&](int j) {
                    if (j < i || !abelian) return;
                    auto s = rs.root_sum(i, j);
                    if (s && !kernel.test(*s)) abelian = false;
                });
            });
            if (!abelian) return;
            int value = lbar.count();
            if (value < best_value) {
                best_value = value;
                best_arm = arm;
                best_lbar = lbar;
            }
            return;
        }
        // branch-and-bound: legs committed so far already generate part of
        // the eventual normal closure
        if (unassigned > 8 && best_value < (1 << 30)) {
            Pattern legs = collect(LEG);
            Pattern gen = heart | legs;
            gen.set(alpha);
            Pattern npart = normal_closure(rs, legs | kernel, closure(rs, gen));
            if (npart.test(alpha)) return;
            if ((npart - kernel).count() >= best_value) return;
        }
        for (int8_t v : {ARM, LEG}) {
            size_t mark = trail.size();
            if (assign(x, v) && propagate()) dfs_enlarged(unassigned - 1);
            undo_to(mark);
        }
    }
};

// Hook elements that are forced into the leg for every admissible choice:
// for the decomposition pair (g, g') of alpha with maximal first index, the
// intersection of the normal closures of g and g' over the heart meets the
// hook inside the leg.
Pattern forced_leg_set(const RootSystem& rs, int alpha, const Pattern& hook) {
    const auto& pairs = rs.decompositions(alpha);
    if (pairs.empty()) return {};
    auto [g, gp] = pairs.back();
    Pattern heart = rs.all() - hook;
    Pattern cg = heart, cgp = heart;
    cg.set(g);
    cgp.set(gp);
    Pattern ng = normal_closure(rs, Pattern{g}, closure(rs, cg));
    Pattern ngp = normal_closure(rs, Pattern{gp}, closure(rs, cgp));
    Pattern forced = ng & ngp & hook;
    forced.reset(alpha);
    return forced;
}

}  // namespace

ArmSolution arm_search(const RootSystem& rs, int alpha, bool with_subhooks) {
    ArmSolution sol;
    sol.alpha = alpha;
    sol.kernel = k_pattern(rs, alpha);

    const Pattern hook = rs.hook(alpha);
    const auto& pairs = rs.decompositions(alpha);
    if (pairs.empty()) {
        sol.source = rs.all();
        sol.normal_flag = true;
        sol.enlarged_leg = sol.leg;
        Pattern cut = sol.kernel;
        cut.set(alpha);
        sol.tbar_roots = sol.source - cut;
        return sol;
    }

    const Pattern forced = forced_leg_set(rs, alpha, hook);
    sol.forced_leg_count = forced.count();
    int free_pairs = int(pairs.size()) - sol.forced_leg_count;
    sol.branch_space = free_pairs >= 0 ? (1LL << std::min(free_pairs, 62)) : 1;

    auto run_phase = [&](bool normal_phase, Search& s) -> bool {
        std::vector<int> force_arm;
        s.build_closure_clauses();
        s.build_leg_clauses(normal_phase, force_arm);
        bool ok = true;
        forced.for_each([&](int x) { ok = ok && s.assign(x, Search::LEG); });
        for (int x : force_arm) ok = ok && s.assign(x, Search::ARM);
        // initial sweep so clauses whose trigger never gets touched still fire
        for (size_t c = 0; ok && c < s.clauses.size(); ++c)
            ok = s.eval_clause(s.clauses[c]);
        if (!ok || !s.propagate()) return false;
        if (normal_phase) return s.dfs_normal();
        s.dfs_enlarged(s.vars.count() - int(s.trail.size()));
        return s.best_value < (1 << 30);
    };

    Search phase_a(rs, alpha, sol.kernel);
    if (run_phase(true, phase_a)) {
        sol.arm = phase_a.best_arm;
        sol.normal_flag = true;
        sol.leaves_enumerated = phase_a.leaves;
    } else {
        Search phase_b(rs, alpha, sol.kernel);
        if (!run_phase(false, phase_b))
            throw std::runtime_error("arm_search: no admissible arm for root " +
                                     std::to_string(alpha) + " of " + type_name(rs.type()));
        sol.arm = phase_b.best_arm;
        sol.normal_flag = false;
        sol.enlarged_leg = phase_b.best_lbar;
        sol.leaves_enumerated = phase_a.leaves + phase_b.leaves;
    }

    sol.leg = hook - sol.arm;
    sol.leg.reset(alpha);
    sol.source = rs.all() - sol.arm;
    if (sol.normal_flag) sol.enlarged_leg = sol.leg;
    Pattern cut = sol.enlarged_leg | sol.kernel;
    cut.set(alpha);
    sol.tbar_roots = sol.source - cut;

    if (!sol.normal_flag && with_subhooks) {
        Pattern excess = sol.enlarged_leg - sol.leg;
        excess.for_each([&](int beta) { sol.subhooks[beta] = subhook_search(rs, sol, beta); });
    }
    return sol;
}

SubhookCertificate subhook_search(const RootSystem& rs, const ArmSolution& sol, int beta) {
    if (sol.normal_flag || !(sol.enlarged_leg - sol.leg).test(beta))
        throw std::invalid_argument("subhook_search: beta must lie in the enlarged-leg excess");
    const Pattern hk = rs.hook(sol.alpha) | sol.kernel;
    const Pattern lk = sol.leg | sol.kernel;
    const auto& bpairs = rs.decompositions(beta);

    auto qualifies = [&](const Pattern& sub) {
        if (hk.intersects(sub)) return false;               // (c)
        if (!is_closed(rs, sub | sol.kernel)) return false; // (a)
        bool sums_ok = true;
        sub.for_each([&](int i) {
            sub.for_each([&](int j) {
                if (j <= i || !sums_ok) return;
                auto s = rs.root_sum(i, j);
                if (s && *s != beta && !sol.kernel.test(*s)) sums_ok = false;
            });
        });
        if (!sums_ok) return false;                         // (e) surrogate
        Pattern hab = closure(rs, rs.hook(sol.alpha) | sub | sol.kernel);
        return normalizes(rs, hab - sol.arm, lk);           // (b)
    };

    auto make = [&](const std::vector<std::pair<int, int>>& chosen) {
        SubhookCertificate c;
        c.beta = beta;
        c.subhook.set(beta);
        for (auto [g, gp] : chosen) {
            c.subhook.set(g);
            c.subhook.set(gp);
            c.sub_arm.set(g);
            c.sub_leg.set(gp);
        }
        return c;
    };

    // minimal subhooks first: one pair, then two, then three
    for (auto p : bpairs) {
        auto c = make({p});
        if (qualifies(c.subhook)) return c;
    }
    for (size_t i = 0; i < bpairs.size(); ++i)
        for (size_t j = i + 1; j < bpairs.size(); ++j) {
            auto c = make({bpairs[i], bpairs[j]});
            if (qualifies(c.subhook)) return c;
        }
    for (size_t i = 0; i < bpairs.size(); ++i)
        for (size_t j = i + 1; j < bpairs.size(); ++j)
            for (size_t l = j + 1; l < bpairs.size(); ++l) {
                auto c = make({bpairs[i], bpairs[j], bpairs[l]});
                if (qualifies(c.subhook)) return c;
            }
    throw std::runtime_error("subhook_search: no qualifying subhook for root " +
                             std::to_string(beta));
}

}  // namespace rootpat
