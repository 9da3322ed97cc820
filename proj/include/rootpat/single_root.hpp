#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rootpat/pattern.hpp"
#include "rootpat/patterns.hpp"
#include "rootpat/qpolynomial.hpp"
#include "rootpat/root_system.hpp"

namespace rootpat {

/// Hook of a root together with its perfect pairing: each pair (beta, gamma)
/// satisfies beta + gamma = alpha, and the pairs cover h(alpha)\{alpha}.
struct HookData {
    int alpha = -1;
    Pattern hook;
    std::vector<std::pair<int, int>> pairs;
};

HookData hook_data(const RootSystem& rs, int alpha);

/// Normal closure of {alpha} in Phi+ with alpha removed.
Pattern n_pattern(const RootSystem& rs, int alpha);

/// The largest normal pattern avoiding alpha, computed by the iterative
/// root-center fixpoint starting from n(alpha).
Pattern k_pattern(const RootSystem& rs, int alpha);

/// Down-set of alpha in the root order; complement of k(alpha).
Pattern w_pattern(const RootSystem& rs, int alpha);

/// Intersection of the k(alpha) over an antichain Sigma; throws if sigma is
/// not an antichain.
Pattern k_sigma(const RootSystem& rs, const Pattern& sigma);

struct SubhookCertificate {
    int beta = -1;
    Pattern subhook;   // h'(beta), contains beta
    Pattern sub_arm;   // a'(beta)
    Pattern sub_leg;   // l'(beta)
};

/// One root's hook decomposition and the data derived from it.
struct ArmSolution {
    int alpha = -1;
    Pattern arm;           // a(alpha)
    Pattern leg;           // l(alpha)
    Pattern source;        // s(alpha) = Phi+ \ a(alpha)
    Pattern kernel;        // k(alpha)
    Pattern enlarged_leg;  // lbar(alpha); equals leg when normal_flag
    Pattern tbar_roots;    // source \ ({alpha} u lbar u kernel)
    bool normal_flag = false;
    std::map<int, SubhookCertificate> subhooks;  // keyed by beta in lbar\leg

    // Search instrumentation.
    int forced_leg_count = 0;        // hook elements committed before branching
    long long branch_space = 1;      // 2^(pairs left free after the commit)
    long long leaves_enumerated = 0; // complete assignments examined
};

/// The closed-form arms of the classical series (types A-D).  Rejects
/// exceptional systems.
ArmSolution classical_arm(const RootSystem& rs, int alpha);

/// Constrained search over the 2^m arm/leg assignments of the hook of
/// alpha: source must be closed; legs plus kernel normal in the source when
/// possible (normal_flag), otherwise the enlarged leg is minimized subject
/// to the normality and abelian-quotient conditions.  Deterministic: among
/// equally good solutions the lexicographically smallest arm wins.
/// When with_subhooks is set, a certificate is attached for every root of
/// the enlarged-leg excess of a non-normal solution.
ArmSolution arm_search(const RootSystem& rs, int alpha, bool with_subhooks = true);

struct RedHypotheses {
    bool source_closed = false;          // (1)
    bool leg_kernel_normal = false;      // (2)
    bool hook_closed_arm_normalizes = false;  // (3)
    bool hook_special_surrogate = false; // (4), combinatorial surrogate
    bool all() const {
        return source_closed && leg_kernel_normal && hook_closed_arm_normalizes &&
               hook_special_surrogate;
    }
};

RedHypotheses verify_red_hypotheses(const RootSystem& rs, const ArmSolution& sol);

/// Minimal subhook of h(beta) certifying the degree bound for a root beta of
/// the enlarged-leg excess: the subhook, joined with the kernel, is closed,
/// avoids h(alpha) u k(alpha), has all internal sums in {beta} u k(alpha),
/// and the pattern generated by h(alpha) u h'(beta) u k(alpha), minus the
/// arm, normalizes leg u kernel.  Throws when no subhook qualifies.
SubhookCertificate subhook_search(const RootSystem& rs, const ArmSolution& sol, int beta);

struct MidafiRow {
    int alpha = -1;           // root index
    int height = 0;
    int arm_size = 0;         // degree exponent
    int count_exponent = 0;   // t in q^t(q-1)
    bool normal_flag = false;
    int enlarged_leg_excess = 0;
    QPolynomial degree;       // q^arm_size
    QPolynomial count;        // q^count_exponent (q-1)
};

/// One row per positive root; classical systems use the closed-form arms,
/// exceptional ones the search.  jobs > 1 fans the per-root work out to a
/// thread pool; the output order is by root index either way.
std::vector<MidafiRow> midafi_table(const RootSystem& rs, int jobs = 1);

/// Row synthesis for a single solved root (used by midafi_table and the CLI).
MidafiRow midafi_row(const RootSystem& rs, const ArmSolution& sol);

}  // namespace rootpat
