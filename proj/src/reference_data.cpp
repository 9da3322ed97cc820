#include "rootpat/reference_data.hpp"

#include <map>
#include <stdexcept>

namespace rootpat::refdata {

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<long long> narayana_counts(Type t, int rank) {
    switch (t) {
        case Type::A: {
            std::vector<long long> v(size_t(rank) + 1);
            for (int k = 0; k <= rank; ++k)
                v[size_t(k)] = binom(rank + 1, k) * binom(rank + 1, k + 1) / (rank + 1);
            return v;
        }
        case Type::B:
        case Type::C: {
            std::vector<long long> v(size_t(rank) + 1);
            for (int k = 0; k <= rank; ++k) v[size_t(k)] = binom(rank, k) * binom(rank, k);
            return v;
        }
        case Type::D: {
            std::vector<long long> v(size_t(rank) + 1, 0);
            v[0] = 1;
            v[size_t(rank)] = 1;
            for (int k = 1; k <= rank - 1; ++k)
                v[size_t(k)] = binom(rank, k) * binom(rank, k) -
                               rank * binom(rank - 1, k - 1) * binom(rank - 1, k) / (rank - 1);
            return v;
        }
        case Type::E6: return {1, 36, 204, 351, 204, 36, 1};
        case Type::E7: return {1, 63, 546, 1470, 1470, 546, 63, 1};
        case Type::E8: return {1, 120, 1540, 6120, 9518, 6120, 1540, 120, 1};
        case Type::F4: return {1, 24, 55, 24, 1};
        case Type::G2: return {1, 6, 1};
    }
    throw std::logic_error("narayana_counts");
}

long long antichain_total_closed_form(Type t, int rank) {
    switch (t) {
        case Type::A: return binom(2 * rank + 2, rank + 1) / (rank + 2);
        case Type::B:
        case Type::C: return binom(2 * rank, rank);
        case Type::D: return (3 * rank - 2) * binom(2 * rank - 2, rank - 1) / rank;
        case Type::E6: return 833;
        case Type::E7: return 4160;
        case Type::E8: return 25080;
        case Type::F4: return 105;
        case Type::G2: return 8;
    }
    throw std::logic_error("antichain_total_closed_form");
}

long long antichain_total_product_formula(Type t, int rank) {
    std::vector<int> exps;
    int h = 0;
    switch (t) {
        case Type::A:
            for (int i = 1; i <= rank; ++i) exps.push_back(i);
            h = rank + 1;
            break;
        case Type::B:
        case Type::C:
            for (int i = 1; i <= rank; ++i) exps.push_back(2 * i - 1);
            h = 2 * rank;
            break;
        case Type::D:
            for (int i = 1; i < rank; ++i) exps.push_back(2 * i - 1);
            exps.push_back(rank - 1);
            h = 2 * rank - 2;
            break;
        case Type::E6: exps = {1, 4, 5, 7, 8, 11}; h = 12; break;
        case Type::E7: exps = {1, 5, 7, 9, 11, 13, 17}; h = 18; break;
        case Type::E8: exps = {1, 7, 11, 13, 17, 19, 23, 29}; h = 30; break;
        case Type::F4: exps = {1, 5, 7, 11}; h = 12; break;
        case Type::G2: exps = {1, 5}; h = 6; break;
    }
    long long num = 1, den = 1;
    for (int e : exps) {
        num *= e + h + 1;
        den *= e + 1;
    }
    return num / den;
}

namespace {

// (table index, height, count exponent, degree exponent) for every root of
// the E8 table; the flagged indices are the roots without a
// normality-achieving arm choice.
struct ERow {
    int idx, ht, t, d;
};

const std::vector<ERow>& e8_rows() {
    static const std::vector<ERow> rows = {
        {1, 1, 0, 0},    {2, 1, 0, 0},    {3, 1, 0, 0},    {4, 1, 0, 0},
        {5, 1, 0, 0},    {6, 1, 0, 0},    {7, 1, 0, 0},    {8, 1, 0, 0},
        {9, 2, 0, 1},    {10, 2, 0, 1},   {11, 2, 0, 1},   {12, 2, 0, 1},
        {13, 2, 0, 1},   {14, 2, 0, 1},   {15, 2, 0, 1},
        {16, 3, 1, 2},   {17, 3, 1, 2},   {18, 3, 1, 2},   {19, 3, 1, 2},
        {20, 3, 1, 2},   {21, 3, 1, 2},   {22, 3, 1, 2},
        {23, 4, 2, 3},   {24, 4, 2, 3},   {25, 4, 4, 3},   {26, 4, 2, 3},
        {27, 4, 2, 3},   {28, 4, 2, 3},   {29, 4, 2, 3},
        {30, 5, 5, 4},   {31, 5, 3, 4},   {32, 5, 3, 4},   {33, 5, 5, 4},
        {34, 5, 3, 4},   {35, 5, 3, 4},   {36, 5, 3, 4},
        {37, 6, 5, 5},   {38, 6, 6, 5},   {39, 6, 4, 5},   {40, 6, 5, 5},
        {41, 6, 6, 5},   {42, 6, 4, 5},   {43, 6, 4, 5},
        {44, 7, 4, 6},   {45, 7, 7, 6},   {46, 7, 7, 6},   {47, 7, 5, 6},
        {48, 7, 4, 6},   {49, 7, 6, 6},   {50, 7, 7, 6},
        {51, 8, 6, 7},   {52, 8, 6, 7},   {53, 8, 8, 7},   {54, 8, 8, 7},
        {55, 8, 6, 7},   {56, 8, 7, 7},
        {57, 9, 6, 8},   {58, 9, 7, 8},   {59, 9, 8, 8},   {60, 9, 9, 8},
        {61, 9, 5, 8},   {62, 9, 7, 8},
        {63, 10, 6, 9},  {64, 10, 8, 9},  {65, 10, 8, 9},  {66, 10, 7, 9},
        {67, 10, 9, 9},  {68, 10, 7, 9},
        {69, 11, 5, 10}, {70, 11, 8, 10}, {71, 11, 7, 10}, {72, 11, 9, 10},
        {73, 11, 9, 10}, {74, 11, 6, 10},
        {75, 12, 7, 11}, {76, 12, 8, 11}, {77, 12, 9, 11}, {78, 12, 9, 11},
        {79, 12, 8, 11},
        {80, 13, 7, 12}, {81, 13, 8, 12}, {82, 13, 7, 12}, {83, 13, 10, 12},
        {84, 13, 8, 12},
        {85, 14, 7, 13}, {86, 14, 9, 13}, {87, 14, 9, 13}, {88, 14, 9, 13},
        {89, 15, 7, 14}, {90, 15, 9, 14}, {91, 15, 8, 14}, {92, 15, 9, 14},
        {93, 16, 7, 15}, {94, 16, 9, 15}, {95, 16, 9, 15}, {96, 16, 8, 15},
        {97, 17, 6, 16}, {98, 17, 9, 16}, {99, 17, 9, 16}, {100, 17, 8, 16},
        {101, 18, 8, 17}, {102, 18, 9, 17}, {103, 18, 9, 17},
        {104, 19, 8, 18}, {105, 19, 9, 18}, {106, 19, 8, 18},
        {107, 20, 8, 19}, {108, 20, 9, 19},
        {109, 21, 8, 20}, {110, 21, 9, 20},
        {111, 22, 9, 21}, {112, 22, 8, 21},
        {113, 23, 8, 22}, {114, 23, 8, 22},
        {115, 24, 8, 23}, {116, 25, 8, 24}, {117, 26, 8, 25}, {118, 27, 8, 26},
        {119, 28, 8, 27}, {120, 29, 7, 28},
    };
    return rows;
}

const std::vector<int>& e8_non_normal() {
    static const std::vector<int> nn = {
        45,  53,  57,  59,  60,  64,  67,  70,  71,  72,  73,  76,
        77,  78,  80,  83,  84,  85,  86,  87,  88,  89,  90,  91,
        92,  94,  95,  98,  99,  100, 102, 103, 104, 105, 106, 107,
        108, 109, 110, 111, 113, 114, 115, 116, 117, 118};
    return nn;
}

const std::vector<int>& e6_members() {
    static const std::vector<int> m = {1,  2,  3,  4,  5,  6,  9,  10, 11, 12, 13, 16,
                                       17, 18, 19, 20, 23, 24, 25, 26, 27, 30, 31, 32,
                                       33, 37, 38, 40, 44, 45, 48, 51, 52, 57, 63, 69};
    return m;
}

const std::vector<int>& e7_members() {
    static std::vector<int> m = [] {
        std::vector<int> v = e6_members();
        const std::vector<int> extra = {7,  14, 21, 28, 34, 35, 39, 41, 46,
                                        49, 53, 55, 58, 59, 61, 64, 66, 70,
                                        71, 75, 76, 80, 82, 85, 89, 93, 97};
        v.insert(v.end(), extra.begin(), extra.end());
        return v;
    }();
    return m;
}

std::vector<MidafiRef> select_rows(const std::vector<int>& members) {
    std::vector<bool> nn(121, false);
    for (int i : e8_non_normal()) nn[size_t(i)] = true;
    std::vector<MidafiRef> out;
    for (int idx : members) {
        const ERow& r = e8_rows()[size_t(idx - 1)];
        out.push_back({r.idx, r.ht, r.t, r.d, !nn[size_t(idx)]});
    }
    return out;
}

}  // namespace

const std::vector<MidafiRef>& midafi_reference(Type t) {
    static const std::vector<MidafiRef> e8 = [] {
        std::vector<int> all;
        for (int i = 1; i <= 120; ++i) all.push_back(i);
        return select_rows(all);
    }();
    static const std::vector<MidafiRef> e7 = select_rows(e7_members());
    static const std::vector<MidafiRef> e6 = select_rows(e6_members());
    static const std::vector<MidafiRef> f4 = {
        {1, 1, 0, 0, true},   {2, 1, 0, 0, true},   {3, 1, 0, 0, true},
        {4, 1, 0, 0, true},   {5, 2, 0, 1, true},   {6, 2, 0, 1, true},
        {7, 2, 0, 1, true},   {8, 3, 1, 2, true},   {9, 3, 1, 1, true},
        {10, 3, 1, 2, true},  {11, 4, 3, 2, true},  {12, 4, 2, 3, true},
        {13, 4, 1, 3, true},  {14, 5, 2, 3, true},  {15, 5, 5, 4, true},
        {16, 5, 2, 2, true},  {17, 6, 4, 5, true},  {18, 6, 4, 3, true},
        {19, 7, 3, 6, true},  {20, 7, 4, 4, false}, {21, 8, 3, 7, true},
        {22, 9, 4, 5, false}, {23, 10, 4, 6, true}, {24, 11, 3, 7, true},
    };
    static const std::vector<MidafiRef> g2 = {
        {1, 1, 0, 0, true}, {2, 1, 0, 0, true}, {3, 2, 0, 1, true},
        {4, 3, 1, 1, true}, {5, 4, 2, 1, true}, {6, 5, 1, 2, true},
    };
    switch (t) {
        case Type::E6: return e6;
        case Type::E7: return e7;
        case Type::E8: return e8;
        case Type::F4: return f4;
        case Type::G2: return g2;
        default: throw std::invalid_argument("midafi_reference: exceptional types only");
    }
}

int non_normal_count(Type t) {
    switch (t) {
        case Type::E6: return 2;
        case Type::E7: return 11;
        case Type::E8: return 46;
        case Type::F4: return 2;
        case Type::G2: return 0;
        default: return 0;
    }
}

const std::vector<F4Root>& f4_root_table() {
    static const std::vector<F4Root> table = {
        {{1, 0, 0, 0}, {0, 2, -2, 0}, 1},  {{0, 1, 0, 0}, {0, 0, 2, -2}, 1},
        {{0, 0, 1, 0}, {0, 0, 0, 2}, 1},   {{0, 0, 0, 1}, {1, -1, -1, -1}, 1},
        {{1, 1, 0, 0}, {0, 2, 0, -2}, 2},  {{0, 1, 1, 0}, {0, 0, 2, 0}, 2},
        {{0, 0, 1, 1}, {1, -1, -1, 1}, 2}, {{1, 1, 1, 0}, {0, 2, 0, 0}, 3},
        {{0, 1, 2, 0}, {0, 0, 2, 2}, 3},   {{0, 1, 1, 1}, {1, -1, 1, -1}, 3},
        {{1, 1, 2, 0}, {0, 2, 0, 2}, 4},   {{1, 1, 1, 1}, {1, 1, -1, -1}, 4},
        {{0, 1, 2, 1}, {1, -1, 1, 1}, 4},  {{1, 2, 2, 0}, {0, 2, 2, 0}, 5},
        {{1, 1, 2, 1}, {1, 1, -1, 1}, 5},  {{0, 1, 2, 2}, {2, -2, 0, 0}, 5},
        {{1, 2, 2, 1}, {1, 1, 1, -1}, 6},  {{1, 1, 2, 2}, {2, 0, -2, 0}, 6},
        {{1, 2, 3, 1}, {1, 1, 1, 1}, 7},   {{1, 2, 2, 2}, {2, 0, 0, -2}, 7},
        {{1, 2, 3, 2}, {2, 0, 0, 0}, 8},   {{1, 2, 4, 2}, {2, 0, 0, 2}, 9},
        {{1, 3, 4, 2}, {2, 0, 2, 0}, 10},  {{2, 3, 4, 2}, {2, 2, 0, 0}, 11},
    };
    return table;
}

std::vector<std::vector<int>> f4_subhooks(int root_index) {
    if (root_index == 19) return {{0, 12, 14}};
    if (root_index == 21) return {{5, 11, 16}, {3, 16, 19}};
    return {};
}

namespace {

// Coordinate shape of a classical root.
struct Shape {
    enum Kind { Diff, Sum, Short, Long } kind;
    int i = -1, j = -1;
};

Shape classify(const RootSystem& rs, int alpha) {
    const auto& c = rs.root(alpha).coords2x;
    int p4 = -1, p2a = -1, p2b = -1, m2 = -1;
    for (int k = 0; k < int(c.size()); ++k) {
        if (c[size_t(k)] == 4) p4 = k;
        else if (c[size_t(k)] == 2) (p2a < 0 ? p2a : p2b) = k;
        else if (c[size_t(k)] == -2) m2 = k;
    }
    if (p4 >= 0) return {Shape::Long, p4, -1};
    if (m2 >= 0) return {Shape::Diff, p2a, m2};
    if (p2b >= 0) return {Shape::Sum, p2a, p2b};
    return {Shape::Short, p2a, -1};
}

void add_if_root(const RootSystem& rs, Pattern& p, std::vector<int> coords2x) {
    if (auto r = rs.find_root(coords2x)) p.set(*r);
}

std::vector<int> mk(const RootSystem& rs, int i, int vi, int j = -1, int vj = 0) {
    std::vector<int> v(size_t(rs.ambient_dim()), 0);
    v[size_t(i)] = vi;
    if (j >= 0) v[size_t(j)] = vj;
    return v;
}

}  // namespace

Pattern closed_form_kernel(const RootSystem& rs, int alpha) {
    if (!is_classical(rs.type()))
        throw std::invalid_argument("closed_form_kernel: classical types only");
    const int n = rs.ambient_dim();
    const Type t = rs.type();
    const Shape sh = classify(rs, alpha);
    Pattern k;
    auto all_plus_short_long = [&] {
        for (int s = 0; s < n; ++s)
            for (int u = s + 1; u < n; ++u) add_if_root(rs, k, mk(rs, s, 2, u, 2));
        if (t == Type::B)
            for (int s = 0; s < n; ++s) add_if_root(rs, k, mk(rs, s, 2));
        if (t == Type::C)
            for (int s = 0; s < n; ++s) add_if_root(rs, k, mk(rs, s, 4));
    };
    auto touching_before = [&](int i) {
        for (int s = 0; s < i; ++s) {
            for (int u = s + 1; u < n; ++u) {
                add_if_root(rs, k, mk(rs, s, 2, u, -2));
                add_if_root(rs, k, mk(rs, s, 2, u, 2));
            }
            if (t == Type::B) add_if_root(rs, k, mk(rs, s, 2));
            if (t == Type::C) add_if_root(rs, k, mk(rs, s, 4));
        }
    };
    switch (sh.kind) {
        case Shape::Diff:
            // e_i - e_j: every e_s - e_t with s<i or t>j, plus everything
            // outside the difference part
            for (int s = 0; s < n; ++s)
                for (int u = s + 1; u < n; ++u)
                    if (s < sh.i || u > sh.j) add_if_root(rs, k, mk(rs, s, 2, u, -2));
            if (t != Type::A) all_plus_short_long();
            break;
        case Shape::Short:  // type B, e_i
            touching_before(sh.i);
            for (int r = sh.i; r < n; ++r)
                for (int s = r + 1; s < n; ++s) add_if_root(rs, k, mk(rs, r, 2, s, 2));
            break;
        case Shape::Long:  // type C, 2 e_i
            touching_before(sh.i);
            break;
        case Shape::Sum: {
            if (t == Type::D && sh.j == n - 1) {
                // e_i + e_n sits in the twisted A_{n-1} subsystem spanned by
                // the differences among e_1..e_{n-1} and the sums e_r + e_n;
                // its complement holds every e_r + e_s (s < n) and e_r - e_n
                for (int s = 0; s < sh.i; ++s) {
                    for (int u = s + 1; u < n; ++u) add_if_root(rs, k, mk(rs, s, 2, u, -2));
                    add_if_root(rs, k, mk(rs, s, 2, n - 1, 2));
                }
                for (int r = 0; r < n - 1; ++r) {
                    add_if_root(rs, k, mk(rs, r, 2, n - 1, -2));
                    for (int s = r + 1; s < n - 1; ++s) add_if_root(rs, k, mk(rs, r, 2, s, 2));
                }
                break;
            }
            touching_before(sh.i);
            for (int r = sh.i; r < n; ++r)
                for (int s = r + 1; s < sh.j; ++s) add_if_root(rs, k, mk(rs, r, 2, s, 2));
            if (t == Type::C)
                for (int r = sh.i; r < sh.j; ++r) add_if_root(rs, k, mk(rs, r, 4));
            break;
        }
    }
    return k;
}

bool closed_form_n(const RootSystem& rs, int alpha, Pattern& out) {
    if (!is_classical(rs.type())) return false;
    const int n = rs.ambient_dim();
    const Type t = rs.type();
    const Shape sh = classify(rs, alpha);
    out = Pattern{};
    if (t == Type::A) {
        // {e_s - e_t | s <= i, t >= j} minus alpha itself
        for (int s = 0; s <= sh.i; ++s)
            for (int u = sh.j; u < n; ++u)
                if (!(s == sh.i && u == sh.j)) add_if_root(rs, out, mk(rs, s, 2, u, -2));
        return true;
    }
    if (sh.kind == Shape::Sum && sh.i == 0) {
        for (int s = 1; s < sh.j; ++s) add_if_root(rs, out, mk(rs, 0, 2, s, 2));
        if (t == Type::C) add_if_root(rs, out, mk(rs, 0, 4));
        return true;
    }
    if (t == Type::B && sh.kind == Shape::Short && sh.i == 0) {
        for (int r = 1; r < n; ++r) add_if_root(rs, out, mk(rs, 0, 2, r, 2));
        return true;
    }
    if (t == Type::C && sh.kind == Shape::Long && sh.i == 0) return true;  // empty
    return false;
}

}  // namespace rootpat::refdata
