#include <doctest.h>

#include "rootpat/reference_data.hpp"
#include "rootpat/report.hpp"
#include "rootpat/root_system.hpp"

using namespace rootpat;

namespace {
std::vector<int> v2(std::initializer_list<int> l) { return std::vector<int>(l); }
}

TEST_CASE("A2 construction") {
    RootSystem rs = RootSystem::build(Type::A, 2);
    REQUIRE(rs.size() == 3);
    CHECK(rs.root(0).coords2x == v2({2, -2, 0}));  // e1-e2
    CHECK(rs.root(1).coords2x == v2({0, 2, -2}));  // e2-e3
    CHECK(rs.root(2).coords2x == v2({2, 0, -2}));  // e1-e3
    CHECK(rs.height(0) == 1);
    CHECK(rs.height(1) == 1);
    CHECK(rs.height(2) == 2);
}

TEST_CASE("admissible ranks") {
    CHECK_THROWS(RootSystem::build(Type::D, 3));
    CHECK_THROWS(RootSystem::build(Type::C, 2));
    CHECK_THROWS(RootSystem::build(Type::B, 1));
    CHECK(RootSystem::build(Type::A, 1).size() == 1);
    CHECK(RootSystem::build(Type::B, 8).size() == 64);
    CHECK(RootSystem::build(Type::C, 8).size() == 64);
    CHECK(RootSystem::build(Type::D, 8).size() == 56);
    CHECK(RootSystem::build(Type::E6, 0).size() == 36);
    CHECK(RootSystem::build(Type::E7, 0).size() == 63);
}

TEST_CASE("F4 reproduces the published numbering exactly") {
    RootSystem rs = RootSystem::build(Type::F4, 4);
    const auto& table = refdata::f4_root_table();
    REQUIRE(rs.size() == int(table.size()));
    for (int i = 0; i < rs.size(); ++i) {
        CAPTURE(i);
        CHECK(rs.root(i).coeffs == table[size_t(i)].coeffs);
        CHECK(rs.root(i).coords2x == table[size_t(i)].coords2x);
        CHECK(rs.height(i) == table[size_t(i)].height);
    }
    // alpha_19 = (e1+e2+e3+e4)/2 at height 7
    CHECK(rs.root(18).coords2x == v2({1, 1, 1, 1}));
    CHECK(rs.height(18) == 7);
    CHECK(rs.prime_hypothesis() == "p>2");
}

TEST_CASE("E8 landmarks") {
    RootSystem rs = RootSystem::build(Type::E8, 8);
    REQUIRE(rs.size() == 120);
    CHECK(rs.ambient_dim() == 8);
    CHECK(rs.prime_hypothesis().empty());
    // highest root e7+e8 at height 29
    int top = rs.highest_root();
    CHECK(rs.root(top).coords2x == v2({0, 0, 0, 0, 0, 0, 2, 2}));
    CHECK(rs.height(top) == 29);
    // the root (e1+e2+e3+e4+e5-e6-e7+e8)/2 has coefficients (1,2,2,3,2,1,0,0)
    auto r69 = rs.find_root({1, 1, 1, 1, 1, -1, -1, 1});
    REQUIRE(r69.has_value());
    CHECK(rs.root(*r69).coeffs == v2({1, 2, 2, 3, 2, 1, 0, 0}));
    CHECK(rs.height(*r69) == 11);
    // (e1+...+e8)/2 sits at height 22, e2+e8 at height 24
    auto half = rs.find_root({1, 1, 1, 1, 1, 1, 1, 1});
    REQUIRE(half.has_value());
    CHECK(rs.height(*half) == 22);
    auto r115 = rs.find_root({0, 2, 0, 0, 0, 0, 0, 2});
    REQUIRE(r115.has_value());
    CHECK(rs.height(*r115) == 24);
    CHECK(*r115 == 114);  // unique root at its height level
    // every root sits below the highest root
    for (int i = 0; i < rs.size(); ++i) CHECK(rs.leq(i, top));
}

TEST_CASE("E6/E7 sit inside the E8 coordinates") {
    RootSystem e6 = RootSystem::build(Type::E6, 6);
    RootSystem e7 = RootSystem::build(Type::E7, 7);
    RootSystem e8 = RootSystem::build(Type::E8, 8);
    CHECK(e6.ambient_dim() == 8);
    CHECK(e7.ambient_dim() == 8);
    for (int i = 0; i < e6.size(); ++i) {
        auto in8 = e8.find_root(e6.root(i).coords2x);
        REQUIRE(in8.has_value());
        CHECK(e6.height(i) == e8.height(*in8));
    }
    CHECK(e7.max_height() == 17);
    CHECK(e6.max_height() == 11);
}

TEST_CASE("root sums") {
    RootSystem a2 = RootSystem::build(Type::A, 2);
    CHECK(a2.root_sum(0, 1) == 2);       // (e1-e2)+(e2-e3) = e1-e3
    CHECK(!a2.root_sum(0, 2));           // 2e1-e2-e3 is not a root
    RootSystem g2 = RootSystem::build(Type::G2, 2);
    CHECK(g2.root_sum(0, 1) == 2);       // a1+a2 = a3
    CHECK(g2.prime_hypothesis() == "p>3");
    // symmetry of the sum table
    for (int i = 0; i < g2.size(); ++i)
        for (int j = 0; j < g2.size(); ++j) CHECK(g2.root_sum(i, j) == g2.root_sum(j, i));
}

TEST_CASE("partial order") {
    RootSystem a2 = RootSystem::build(Type::A, 2);
    for (int i = 0; i < a2.size(); ++i) CHECK(a2.leq(i, i));
    CHECK(a2.leq(0, 2));
    CHECK(!a2.leq(2, 0));
    CHECK(!a2.leq(0, 1));
}

TEST_CASE("decompositions") {
    RootSystem a2 = RootSystem::build(Type::A, 2);
    CHECK(a2.decompositions(0).empty());
    REQUIRE(a2.decompositions(2).size() == 1);
    CHECK(a2.decompositions(2)[0] == std::pair<int, int>{0, 1});

    RootSystem e8 = RootSystem::build(Type::E8, 8);
    int r115 = *e8.find_root({0, 2, 0, 0, 0, 0, 0, 2});
    const auto& pairs = e8.decompositions(r115);
    CHECK(pairs.size() == 23);
    auto [g, gp] = pairs.back();  // maximal first index
    CHECK(e8.height(g) == 12);
    CHECK(e8.height(gp) == 12);
}

TEST_CASE("hooks") {
    RootSystem a4 = RootSystem::build(Type::A, 4);
    int simple = a4.simple_root(0);
    CHECK(a4.hook(simple).count() == 1);
    // alpha = e1-e4: hook {alpha} u {e1-es, es-e4 | 1<s<4}
    int a = *a4.find_root({2, 0, 0, -2, 0});
    Pattern h = a4.hook(a);
    CHECK(h.count() == 5);
    CHECK(h.test(*a4.find_root({2, -2, 0, 0, 0})));
    CHECK(h.test(*a4.find_root({0, 2, 0, -2, 0})));
    CHECK(h.test(*a4.find_root({2, 0, -2, 0, 0})));
    CHECK(h.test(*a4.find_root({0, 0, 2, -2, 0})));

    // B4, alpha = e1+e3: {e1+e3, e1, e3} u {e1-e2, e2+e3} u {e1+-e4, e3-+e4}
    RootSystem b4 = RootSystem::build(Type::B, 4);
    int b = *b4.find_root({2, 0, 2, 0});
    Pattern hb = b4.hook(b);
    CHECK(hb.count() == 9);
    for (auto coords : {v2({2, 0, 2, 0}), v2({2, 0, 0, 0}), v2({0, 0, 2, 0}),
                        v2({2, -2, 0, 0}), v2({0, 2, 2, 0}), v2({2, 0, 0, 2}),
                        v2({2, 0, 0, -2}), v2({0, 0, 2, -2}), v2({0, 0, 2, 2})})
        CHECK(hb.test(*b4.find_root(coords)));

    // |h| = 1 + 2 |decompositions| everywhere
    for (auto [t, n] : {std::pair<Type, int>{Type::B, 5}, {Type::F4, 4}, {Type::G2, 2}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (int i = 0; i < rs.size(); ++i)
            CHECK(rs.hook(i).count() == 1 + 2 * int(rs.decompositions(i).size()));
    }
}

TEST_CASE("coordinate strings round-trip") {
    for (auto [t, n] : {std::pair<Type, int>{Type::B, 4}, {Type::C, 5}, {Type::E8, 8},
                        {Type::F4, 4}, {Type::G2, 2}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (int i = 0; i < rs.size(); ++i) {
            std::string s = report::root_coords_string(rs, i);
            auto back = report::resolve_root(rs, s);
            REQUIRE(back.has_value());
            CHECK(*back == i);
        }
    }
    RootSystem f4 = RootSystem::build(Type::F4, 4);
    CHECK(report::resolve_root(f4, "(1,1,1,1)/2") == 18);
    CHECK(report::resolve_root(f4, "e1+e4") == 21);
    CHECK(report::resolve_root(f4, "19") == 18);
    CHECK(!report::resolve_root(f4, "e9").has_value());
}

TEST_CASE("json dump shape") {
    RootSystem a2 = RootSystem::build(Type::A, 2);
    std::string j = report::root_system_json(a2);
    CHECK(j.find("\"schema\": 1") != std::string::npos);
    CHECK(j.find("\"coords2x\"") != std::string::npos);
    CHECK(j.find("\"coeffs\"") != std::string::npos);
    CHECK(j.find("\"height\"") != std::string::npos);
}
