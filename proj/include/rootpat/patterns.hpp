#pragma once

#include <functional>
#include <vector>

#include "rootpat/pattern.hpp"
#include "rootpat/qpolynomial.hpp"
#include "rootpat/root_system.hpp"

namespace rootpat {

/// True iff alpha+beta lands back in P whenever alpha, beta in P and the sum
/// is a positive root.
bool is_closed(const RootSystem& rs, const Pattern& p);

/// Smallest closed pattern containing m: the fixpoint of adjoining pairwise
/// sums.
Pattern closure(const RootSystem& rs, Pattern m);

/// True iff alpha+beta in n (or not a root) for all alpha in m, beta in n.
bool normalizes(const RootSystem& rs, const Pattern& m, const Pattern& n);

/// n is normal in the closed pattern s.  Requires n to be a subset of s.
bool is_normal_in(const RootSystem& rs, const Pattern& n, const Pattern& s);

/// Smallest closed pattern containing m that is normal in s.  Requires
/// m subset of s and s closed.
Pattern normal_closure(const RootSystem& rs, const Pattern& m, const Pattern& s);

/// D = ({a+b | a,b in s} in Phi+) union n; throws unless n is normal in the
/// closed pattern s.  P(D)/P(N) is the derived subgroup of P(S)/P(N).
Pattern derived_pattern(const RootSystem& rs, const Pattern& s, const Pattern& n);

/// Z = {a in s | a+c not a root or a+c in n for all c in s} union n;
/// same preconditions.  P(Z)/P(N) is the center of P(S)/P(N).
Pattern center_pattern(const RootSystem& rs, const Pattern& s, const Pattern& n);

/// The root center Z \ N of the quotient pattern group.
Pattern root_center(const RootSystem& rs, const Pattern& s, const Pattern& n);

/// t with q^t = index of the derived subgroup in P(S)/P(N), i.e.
/// |s\n| - |derived\n|.
int linear_count_exponent(const RootSystem& rs, const Pattern& s, const Pattern& n);

/// True iff no two members are comparable under the root order.
bool is_antichain(const RootSystem& rs, const Pattern& p);

/// Enumerates every antichain of the root poset exactly once (the empty one
/// included), in a fixed deterministic order.
void for_each_antichain(const RootSystem& rs, const std::function<void(const Pattern&)>& f);

/// Count of antichains by size, index k = size.
std::vector<long long> antichain_counts_by_size(const RootSystem& rs);

/// The generating polynomial of the counts, in the variable t.
QPolynomial antichain_polynomial(const RootSystem& rs);

long long antichain_total(const RootSystem& rs);

}  // namespace rootpat
