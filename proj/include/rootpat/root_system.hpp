#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootpat/pattern.hpp"

namespace rootpat {

enum class Type { A, B, C, D, E6, E7, E8, F4, G2 };

std::string type_name(Type t);
std::optional<Type> parse_type(const std::string& s);
bool is_classical(Type t);
/// Fixed rank of an exceptional type, 0 for the classical series.
int fixed_rank(Type t);

/// One positive root.  Coordinates are stored doubled so the half-integer
/// roots of E8 and F4 stay exact; all arithmetic is integer arithmetic.
struct RootData {
    std::vector<int> coords2x;  // 2 * coordinates in the ambient space
    std::vector<int> coeffs;    // nonnegative simple-root coefficients
    int height = 0;             // sum of coeffs
};

/// An irreducible root system in the coordinates of the explicit
/// constructions (types A..D, E via the E8 lattice, F4, G2).  Positive
/// roots are numbered by height, ties broken by descending lexicographic
/// order on the coefficient vectors; for F4 this reproduces the reference
/// numbering exactly.  Immutable after construction.
class RootSystem {
public:
    static RootSystem build(Type t, int rank);

    Type type() const { return type_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_; }
    int size() const { return int(roots_.size()); }
    const RootData& root(int i) const { return roots_.at(size_t(i)); }
    const std::vector<RootData>& roots() const { return roots_; }
    int height(int i) const { return roots_[size_t(i)].height; }
    int max_height() const { return roots_.back().height; }
    /// Index of the k-th simple root (0-based k), i.e. delta_{k+1}.
    int simple_root(int k) const { return simple_[size_t(k)]; }
    /// Hypothesis on the defining characteristic carried as metadata:
    /// "" (none), "p>2" or "p>3".
    const std::string& prime_hypothesis() const { return prime_hyp_; }

    /// alpha_i + alpha_j as a positive root, if it is one.
    std::optional<int> root_sum(int i, int j) const {
        int k = sum_[size_t(i)][size_t(j)];
        return k < 0 ? std::nullopt : std::optional<int>(k);
    }

    /// The partial order: alpha_i <= alpha_j iff coeffs(j) - coeffs(i) >= 0
    /// componentwise.
    bool leq(int i, int j) const { return up_[size_t(i)].test(j); }
    /// {j : alpha_i <= alpha_j}, includes i.
    const Pattern& up_set(int i) const { return up_[size_t(i)]; }
    /// {j : alpha_j <= alpha_i}, includes i.
    const Pattern& down_set(int i) const { return down_[size_t(i)]; }

    /// All ordered pairs (j, j') with j < j' and alpha_j + alpha_j' = alpha_i,
    /// sorted by first index.
    const std::vector<std::pair<int, int>>& decompositions(int i) const {
        return decs_[size_t(i)];
    }

    /// h(alpha_i) = {gamma : alpha_i - gamma is a positive root or zero}.
    const Pattern& hook(int i) const { return hooks_[size_t(i)]; }

    Pattern all() const { return Pattern::first_n(size()); }
    int highest_root() const { return size() - 1; }

    std::optional<int> find_root(const std::vector<int>& coords2x) const;

private:
    RootSystem() = default;
    void finalize();  // sorts, indexes, builds tables, cross-checks

    Type type_ = Type::A;
    int rank_ = 0;
    int ambient_ = 0;
    std::string prime_hyp_;
    std::vector<RootData> roots_;
    std::vector<int> simple_;
    std::vector<std::vector<int16_t>> sum_;
    std::vector<Pattern> up_, down_, hooks_;
    std::vector<std::vector<std::pair<int, int>>> decs_;
};

}  // namespace rootpat
