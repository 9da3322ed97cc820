#pragma once

#include <cstdint>
#include <vector>

#include "rootpat/pattern.hpp"
#include "rootpat/root_system.hpp"

namespace rootpat::oracle {

/// Upper unitriangular (rank+1) x (rank+1) matrix over F_q, the concrete
/// model of the type-A groups.  Entries are reduced mod q.
struct Matrix {
    int n = 0;
    int q = 2;
    std::vector<uint8_t> e;  // row-major n*n

    static Matrix identity(int n, int q);
    uint8_t at(int i, int j) const { return e[size_t(i * n + j)]; }
    Matrix mul(const Matrix& o) const;
    Matrix inverse() const;
    bool operator==(const Matrix& o) const { return e == o.e; }
    /// Encode the strict upper triangle as base-q digits; a dense set key.
    uint64_t key() const;
};

/// The full unitriangular group of a type-A system of the given rank over
/// F_q, with its root subgroups x_alpha(t) = I + t E_ij.
class UnitriangularGroup {
public:
    UnitriangularGroup(const RootSystem& rs, int q);

    const RootSystem& root_system() const { return rs_; }
    int q() const { return q_; }
    int dim() const { return n_; }
    long long full_order() const;

    /// x_alpha(t) for the positive root with index alpha.
    Matrix root_element(int alpha, int t) const;

    /// All q^|P| elements of the pattern subgroup, as the product of the
    /// root subgroups in increasing root order.  Rejects non-closed P and
    /// groups beyond the size guard.
    std::vector<Matrix> pattern_subgroup(const Pattern& p) const;

    static constexpr long long kSizeGuard = 1'000'000;

private:
    const RootSystem& rs_;
    int q_;
    int n_;                           // matrix dimension = rank+1
    std::vector<std::pair<int, int>> entry_;  // root index -> (i, j)
};

/// Dense element-set over the strict-upper-triangle key space; supports the
/// brute-force subgroup computations below.
class ElementSet {
public:
    ElementSet(int n, int q);
    bool insert(const Matrix& m);  // returns true if new
    bool contains(const Matrix& m) const;
    long long size() const { return count_; }
    bool operator==(const ElementSet& o) const { return bits_ == o.bits_; }

private:
    std::vector<bool> bits_;
    long long count_ = 0;
};

ElementSet to_set(const UnitriangularGroup& g, const std::vector<Matrix>& v);

/// Subgroup generated by `gens`, optionally closed under conjugation by
/// `conjugators` (normal closure inside the group they generate).  Always
/// contains the identity.
std::vector<Matrix> generated_subgroup(int n, int q, const std::vector<Matrix>& gens,
                                       const std::vector<Matrix>& conjugators = {});

/// Brute subgroup {x in S : [x, g] in N for all generators g of S}; with N
/// normal this is the preimage of the center of P(S)/P(N).
std::vector<Matrix> brute_center(const std::vector<Matrix>& s_elems,
                                 const std::vector<Matrix>& s_gens, const ElementSet& n_set);

/// Preimage of the derived subgroup of P(S)/P(N): generated by commutators
/// of S-generators together with N, closed under conjugation.
std::vector<Matrix> brute_derived(int n, int q, const std::vector<Matrix>& s_gens,
                                  const std::vector<Matrix>& n_gens);

/// Subgroup generated by all commutators [a, b], a in A, b in B.
std::vector<Matrix> brute_commutator_group(int n, int q, const std::vector<Matrix>& a,
                                           const std::vector<Matrix>& b);

/// Frattini subgroup of a p-group given by elements: generated by
/// commutators and p-th powers.
std::vector<Matrix> brute_frattini(int n, int q, const std::vector<Matrix>& elems);

/// Number of conjugacy classes of the group given by its element list.
long long class_count(const std::vector<Matrix>& elems);

/// True iff the subgroup with elements n_elems is normal in the group
/// generated by s_gens (conjugates of N-elements by generators stay in N).
bool is_normal_subgroup(const std::vector<Matrix>& s_gens, const std::vector<Matrix>& n_elems,
                        const ElementSet& n_set);

/// Generators x_gamma(1) of a pattern subgroup (q prime, so one parameter
/// value per root suffices).
std::vector<Matrix> pattern_generators(const UnitriangularGroup& g, const Pattern& p);

}  // namespace rootpat::oracle
