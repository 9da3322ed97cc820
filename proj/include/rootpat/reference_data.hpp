#pragma once

#include <vector>

#include "rootpat/pattern.hpp"
#include "rootpat/qpolynomial.hpp"
#include "rootpat/root_system.hpp"

// Published reference values used by the verification suite: antichain
// counting polynomials, the midafi count/degree tables of the exceptional
// types, the non-normal root censuses, the F4 root numbering, and the
// closed-form kernels of the classical series.
namespace rootpat::refdata {

/// Expected antichain counts by size.
std::vector<long long> narayana_counts(Type t, int rank);

/// Expected antichain total (closed form per type).
long long antichain_total_closed_form(Type t, int rank);

/// Total via the product over Weyl exponents: prod (e_i + h + 1)/(e_i + 1).
long long antichain_total_product_formula(Type t, int rank);

/// One reference row of a midafi table.
struct MidafiRef {
    int table_index;    // 1-based numbering of the published tables
    int height;
    int count_exponent; // t in q^t(q-1)
    int degree_exponent;
    bool normal;
};

/// Full reference tables for E6, E7, E8, F4, G2.  The F4 and G2 rows match
/// the root numbering of this library exactly; the E-type rows are only
/// meaningful per height level (their within-height order is not pinned).
const std::vector<MidafiRef>& midafi_reference(Type t);

/// Expected number of roots without a normality-achieving arm choice.
int non_normal_count(Type t);

struct F4Root {
    std::vector<int> coeffs;    // 4 entries
    std::vector<int> coords2x;  // 4 entries, doubled
    int height;
};
/// The 24 positive roots of F4 in the published order.
const std::vector<F4Root>& f4_root_table();

/// Reference subhook index sets (0-based) for the two non-normal F4 roots,
/// keyed by the 0-based root index: 19 -> {{0,12,14}}, 21 -> {{5,11,16},
/// {3,16,19}}.
std::vector<std::vector<int>> f4_subhooks(int root_index);

/// Closed-form kernels of the classical series (independent of the
/// iterative computation).  Defined for every positive root; classical
/// types only.
Pattern closed_form_kernel(const RootSystem& rs, int alpha);

/// Closed-form normal closures n(alpha) for the root shapes with published
/// formulas: type A (all roots), B/C/D roots e_1 + e_i, B's e_1, C's 2 e_1.
/// Returns false when no published formula applies to this root shape.
bool closed_form_n(const RootSystem& rs, int alpha, Pattern& out);

}  // namespace rootpat::refdata
