#include <doctest.h>

#include <random>

#include "rootpat/patterns.hpp"
#include "rootpat/reference_data.hpp"
#include "rootpat/single_root.hpp"

using namespace rootpat;

TEST_CASE("closedness") {
    RootSystem a2 = RootSystem::build(Type::A, 2);
    CHECK(is_closed(a2, Pattern{}));
    CHECK(is_closed(a2, a2.all()));
    CHECK(!is_closed(a2, Pattern{0, 1}));
    CHECK(is_closed(a2, Pattern{2}));  // a single maximal-height root
}

TEST_CASE("closure") {
    RootSystem a2 = RootSystem::build(Type::A, 2);
    CHECK(closure(a2, Pattern{0, 1}) == a2.all());

    // idempotent, extensive, monotone on pseudo-random subsets
    RootSystem b4 = RootSystem::build(Type::B, 4);
    std::mt19937 rng(20240817);
    for (int round = 0; round < 200; ++round) {
        Pattern m, m2;
        for (int i = 0; i < b4.size(); ++i) {
            unsigned bits = rng();
            if (bits & 1) m.set(i);
            if ((bits & 3) == 1) m2.set(i);  // m2 subset of m
        }
        Pattern c = closure(b4, m);
        CHECK(m.subset_of(c));
        CHECK(closure(b4, c) == c);
        CHECK(closure(b4, m2).subset_of(c));
        CHECK(is_closed(b4, c));
    }
}

TEST_CASE("normality") {
    RootSystem a4 = RootSystem::build(Type::A, 4);
    CHECK(normalizes(a4, a4.all(), Pattern{}));
    for (int a = 0; a < a4.size(); ++a)
        CHECK(is_normal_in(a4, k_pattern(a4, a), a4.all()));

    // normal in Phi+ iff an up-set of the order
    for (int i = 0; i < a4.size(); ++i) {
        Pattern up = a4.up_set(i);
        CHECK(is_normal_in(a4, up, a4.all()));
        Pattern down = a4.down_set(i);
        if (a4.height(i) > 1 && i != a4.highest_root())
            CHECK(!is_normal_in(a4, down, a4.all()));
    }

    // hook u kernel of e1+ei is not normal in types B/D for 2 < i < n
    for (Type t : {Type::B, Type::D}) {
        RootSystem rs = RootSystem::build(t, 5);
        std::vector<int> coords(5, 0);
        coords[0] = 2;
        coords[3] = 2;  // e1+e4
        int a = *rs.find_root(coords);
        Pattern hk = rs.hook(a) | k_pattern(rs, a);
        CHECK(!normalizes(rs, rs.all(), hk));
    }
}

TEST_CASE("normal closure") {
    RootSystem b3 = RootSystem::build(Type::B, 3);
    CHECK(normal_closure(b3, Pattern{}, b3.all()).empty());
    for (int a = 0; a < b3.size(); ++a) {
        Pattern nc = normal_closure(b3, Pattern{a}, b3.all());
        Pattern expected = n_pattern(b3, a);
        expected.set(a);
        CHECK(nc == expected);
    }
    CHECK_THROWS(normal_closure(b3, Pattern{0}, Pattern{0, 1}));  // ambient not closed

    // in the full pattern, normal closures are exactly the up-closures of
    // the root order
    for (int mask = 0; mask < (1 << b3.size()); ++mask) {
        Pattern m, up;
        for (int i = 0; i < b3.size(); ++i)
            if (mask & (1 << i)) {
                m.set(i);
                up |= b3.up_set(i);
            }
        CHECK(normal_closure(b3, m, b3.all()) == up);
    }
    for (auto [t, n] : {std::pair<Type, int>{Type::C, 4}, {Type::F4, 4}, {Type::E6, 6}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (int a = 0; a < rs.size(); ++a)
            CHECK(n_pattern(rs, a) == (rs.up_set(a) - Pattern{a}));
    }
}

TEST_CASE("derived and center patterns") {
    RootSystem a2 = RootSystem::build(Type::A, 2);
    CHECK(derived_pattern(a2, a2.all(), Pattern{}) == Pattern{2});

    RootSystem a3 = RootSystem::build(Type::A, 3);
    Pattern d = derived_pattern(a3, a3.all(), Pattern{});
    Pattern heights2plus;
    for (int i = 0; i < a3.size(); ++i)
        if (a3.height(i) >= 2) heights2plus.set(i);
    CHECK(d == heights2plus);
    CHECK(linear_count_exponent(a3, a3.all(), Pattern{}) == 3);

    // an antichain pattern has trivial derived set
    Pattern ab{a3.simple_root(0), a3.simple_root(2)};
    CHECK(derived_pattern(a3, ab, Pattern{}).empty());
    CHECK(linear_count_exponent(a3, ab, Pattern{}) == 2);

    // the root center of the full quotient is the highest root
    for (auto [t, n] : {std::pair<Type, int>{Type::A, 3}, {Type::B, 3}, {Type::F4, 4}}) {
        RootSystem rs = RootSystem::build(t, n);
        CHECK(root_center(rs, rs.all(), Pattern{}) == Pattern{rs.highest_root()});
    }

    // rz(Phi+ / k(alpha)) = {alpha} for every root
    for (auto [t, n] : {std::pair<Type, int>{Type::A, 4}, {Type::F4, 4}, {Type::G2, 2}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (int a = 0; a < rs.size(); ++a)
            CHECK(root_center(rs, rs.all(), k_pattern(rs, a)) == Pattern{a});
    }

    // misuse is rejected loudly
    CHECK_THROWS(derived_pattern(a3, a3.all(), Pattern{a3.simple_root(0)}));
    CHECK_THROWS(center_pattern(a3, a3.all(), Pattern{a3.simple_root(0)}));
}

TEST_CASE("derived and center outputs are normal closed subpatterns") {
    RootSystem b3 = RootSystem::build(Type::B, 3);
    const int n = b3.size();
    for (int mask = 0; mask < (1 << n); ++mask) {
        Pattern s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.set(i);
        if (!is_closed(b3, s)) continue;
        std::vector<int> members = s.to_vector();
        for (int sub = 0; sub < (1 << members.size()); ++sub) {
            Pattern nset;
            for (size_t b = 0; b < members.size(); ++b)
                if (sub & (1 << b)) nset.set(members[b]);
            if (!is_closed(b3, nset) || !normalizes(b3, s, nset)) continue;
            Pattern d = derived_pattern(b3, s, nset);
            Pattern z = center_pattern(b3, s, nset);
            CHECK(is_normal_in(b3, d, s));
            CHECK(is_normal_in(b3, z, s));
            CHECK(nset.subset_of(d));
            CHECK(nset.subset_of(z));
        }
    }
}

TEST_CASE("antichain counts") {
    RootSystem g2 = RootSystem::build(Type::G2, 2);
    CHECK(antichain_total(g2) == 8);
    CHECK(antichain_counts_by_size(g2) == std::vector<long long>{1, 6, 1});

    RootSystem f4 = RootSystem::build(Type::F4, 4);
    CHECK(antichain_counts_by_size(f4) == std::vector<long long>{1, 24, 55, 24, 1});
    CHECK(antichain_polynomial(f4).to_string() == "1 + 24t + 55t^2 + 24t^3 + t^4");

    RootSystem b3 = RootSystem::build(Type::B, 3);
    CHECK(antichain_counts_by_size(b3) == std::vector<long long>{1, 9, 9, 1});

    long long n0 = 0;
    for_each_antichain(b3, [&](const Pattern& p) {
        if (p.empty()) ++n0;
        CHECK(is_antichain(b3, p));
    });
    CHECK(n0 == 1);
}

TEST_CASE("antichain membership predicate") {
    RootSystem a2 = RootSystem::build(Type::A, 2);
    CHECK(is_antichain(a2, Pattern{}));
    CHECK(is_antichain(a2, Pattern{0, 1}));
    CHECK(!is_antichain(a2, Pattern{0, 2}));
}
