#include <doctest.h>

#include "rootpat/reference_data.hpp"
#include "rootpat/report.hpp"
#include "rootpat/single_root.hpp"

using namespace rootpat;

namespace {

std::vector<int> mk(const RootSystem& rs, int i, int vi, int j = -1, int vj = 0) {
    std::vector<int> v(size_t(rs.ambient_dim()), 0);
    v[size_t(i)] = vi;
    if (j >= 0) v[size_t(j)] = vj;
    return v;
}

}  // namespace

TEST_CASE("n patterns") {
    RootSystem a4 = RootSystem::build(Type::A, 4);
    CHECK(n_pattern(a4, a4.highest_root()).empty());
    for (int a = 0; a < a4.size(); ++a) {
        Pattern want;
        REQUIRE(refdata::closed_form_n(a4, a, want));
        CHECK(n_pattern(a4, a) == want);
    }

    RootSystem b4 = RootSystem::build(Type::B, 4);
    int b = *b4.find_root(mk(b4, 0, 2, 2, 2));  // e1+e3
    CHECK(n_pattern(b4, b) == Pattern{*b4.find_root(mk(b4, 0, 2, 1, 2))});

    RootSystem c4 = RootSystem::build(Type::C, 4);
    int clong = *c4.find_root(mk(c4, 0, 4));  // 2e1, the highest root
    CHECK(n_pattern(c4, clong).empty());
    CHECK(k_pattern(c4, clong).empty());
    int cshort = *c4.find_root(mk(c4, 0, 2, 2, 2));  // e1+e3
    Pattern want_n{*c4.find_root(mk(c4, 0, 2, 1, 2)), clong};
    CHECK(n_pattern(c4, cshort) == want_n);

    // published formulas for the e1-anchored roots of B/C/D
    for (auto [t, n] : {std::pair<Type, int>{Type::B, 6}, {Type::C, 6}, {Type::D, 6}}) {
        RootSystem rs = RootSystem::build(t, n);
        int hits = 0;
        for (int a = 0; a < rs.size(); ++a) {
            Pattern want;
            if (refdata::closed_form_n(rs, a, want)) {
                CHECK(n_pattern(rs, a) == want);
                ++hits;
            }
        }
        CHECK(hits > 0);
    }
}

TEST_CASE("k patterns and the w partition") {
    RootSystem a4 = RootSystem::build(Type::A, 4);
    // k(e2-e4) = {e_s-e_t | s<2 or t>4}
    int a = *a4.find_root(mk(a4, 1, 2, 3, -2));
    CHECK(k_pattern(a4, a) == refdata::closed_form_kernel(a4, a));
    CHECK(w_pattern(a4, a4.simple_root(0)) == Pattern{a4.simple_root(0)});
    CHECK(w_pattern(a4, a4.highest_root()) == a4.all());

    for (auto [t, n] : {std::pair<Type, int>{Type::B, 5}, {Type::C, 5}, {Type::D, 5}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (int i = 0; i < rs.size(); ++i) {
            CAPTURE(type_name(t));
            CAPTURE(i);
            CHECK(k_pattern(rs, i) == refdata::closed_form_kernel(rs, i));
            Pattern w = w_pattern(rs, i), k = k_pattern(rs, i);
            CHECK(!w.intersects(k));
            CHECK((w | k) == rs.all());
            CHECK(n_pattern(rs, i).subset_of(k));
        }
    }

    RootSystem e8 = RootSystem::build(Type::E8, 8);
    int r115 = *e8.find_root(mk(e8, 1, 2, 7, 2));  // e2+e8
    Pattern k115 = k_pattern(e8, r115);
    CHECK(k115.count() == 5);
    CHECK(k115 == (e8.up_set(r115) - Pattern{r115}));

    RootSystem d5 = RootSystem::build(Type::D, 5);
    int d = *d5.find_root(mk(d5, 0, 2, 2, 2));  // e1+e3, i<n
    Pattern kd;
    kd.set(*d5.find_root(mk(d5, 0, 2, 1, 2)));  // e1+e2
    CHECK(k_pattern(d5, d) == kd);
}

TEST_CASE("k of an antichain") {
    RootSystem b3 = RootSystem::build(Type::B, 3);
    CHECK(k_sigma(b3, Pattern{}) == b3.all());
    CHECK(k_sigma(b3, Pattern{b3.highest_root()}).empty());
    CHECK_THROWS(k_sigma(b3, Pattern{b3.simple_root(0), b3.highest_root()}));

    // Sigma = rz(Phi+ / k(Sigma)) for every antichain
    for_each_antichain(b3, [&](const Pattern& sigma) {
        Pattern k = k_sigma(b3, sigma);
        CHECK(root_center(b3, b3.all(), k) == sigma);
        Pattern w;
        sigma.for_each([&](int a) { w |= w_pattern(b3, a); });
        CHECK(!w.intersects(k));
        CHECK((w | k) == b3.all());
        Pattern nu;
        sigma.for_each([&](int a) { nu |= n_pattern(b3, a); });
        CHECK(nu.subset_of(k));
    });
}

TEST_CASE("classical arms: type A") {
    RootSystem a5 = RootSystem::build(Type::A, 5);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            int a = *a5.find_root(mk(a5, i, 2, j, -2));
            ArmSolution sol = classical_arm(a5, a);
            CHECK(sol.arm.count() == j - i - 1);
            for (int s = i + 1; s < j; ++s) CHECK(sol.arm.test(*a5.find_root(mk(a5, i, 2, s, -2))));
            // tbar is the A_{j-i-2} pattern between i and j
            CHECK(sol.tbar_roots.count() == (j - i - 1) * (j - i - 2) / 2);
            CHECK(sol.normal_flag);
        }
    CHECK_THROWS(classical_arm(RootSystem::build(Type::F4, 4), 0));
}

TEST_CASE("classical arms: B/C/D special cases") {
    RootSystem b5 = RootSystem::build(Type::B, 5);
    int e1 = *b5.find_root(mk(b5, 0, 2));
    ArmSolution sb = classical_arm(b5, e1);
    CHECK(sb.arm.count() == 4);  // {e_i | i > 1}, degree n-1
    for (int s = 1; s < 5; ++s) CHECK(sb.arm.test(*b5.find_root(mk(b5, s, 2))));
    CHECK(sb.tbar_roots.count() == 6);  // an A_{n-2} pattern, n(n-1)/2 roots

    RootSystem c5 = RootSystem::build(Type::C, 5);
    int c2e1 = *c5.find_root(mk(c5, 0, 4));
    ArmSolution sc = classical_arm(c5, c2e1);
    CHECK(sc.arm.count() == 4);  // {e1-e_s | s > 1}, degree n-1
    CHECK(sc.tbar_roots.count() == 16);  // a C_{n-1} pattern

    // degree exponents: B long 2n-i-1; C short 2n-i-1; D 2n-i-2
    for (int i1 = 2; i1 <= 5; ++i1) {  // 1-based i
        int bi = *b5.find_root(mk(b5, 0, 2, i1 - 1, 2));
        CHECK(classical_arm(b5, bi).arm.count() == 2 * 5 - i1 - 1);
        int ci = *c5.find_root(mk(c5, 0, 2, i1 - 1, 2));
        CHECK(classical_arm(c5, ci).arm.count() == 2 * 5 - i1 - 1);
    }
    RootSystem d5 = RootSystem::build(Type::D, 5);
    for (int i1 = 2; i1 <= 5; ++i1) {
        int di = *d5.find_root(mk(d5, 0, 2, i1 - 1, 2));
        CHECK(classical_arm(d5, di).arm.count() == 2 * 5 - i1 - 2);
    }
}

TEST_CASE("structure of tbar for the classical types") {
    // B5, alpha = e1+ei: tbar = (b_{1,i} u ob(alpha)) \ k(alpha)
    RootSystem b5 = RootSystem::build(Type::B, 5);
    for (int i1 : {2, 3, 4, 5}) {
        int a = *b5.find_root(mk(b5, 0, 2, i1 - 1, 2));
        ArmSolution sol = classical_arm(b5, a);
        Pattern expect;
        for (int r = 1; r < 5; ++r) {
            if (r == i1 - 1) continue;
            if (auto x = b5.find_root(mk(b5, r, 2))) expect.set(*x);
            for (int s = r + 1; s < 5; ++s) {
                if (s == i1 - 1) continue;
                expect.set(*b5.find_root(mk(b5, r, 2, s, -2)));
                expect.set(*b5.find_root(mk(b5, r, 2, s, 2)));
            }
        }
        for (int s = 0; s < i1 - 1; ++s)
            expect.set(*b5.find_root(mk(b5, s, 2, i1 - 1, -2)));  // ob
        expect -= sol.kernel;
        CHECK(sol.tbar_roots == expect);
    }

    // C5 and D5 analogues
    RootSystem c5 = RootSystem::build(Type::C, 5);
    for (int i1 : {2, 3, 4, 5}) {
        int a = *c5.find_root(mk(c5, 0, 2, i1 - 1, 2));
        ArmSolution sol = classical_arm(c5, a);
        Pattern expect;
        for (int r = 1; r < 5; ++r) {
            if (r == i1 - 1) continue;
            if (auto x = c5.find_root(mk(c5, r, 4))) expect.set(*x);
            for (int s = r + 1; s < 5; ++s) {
                if (s == i1 - 1) continue;
                expect.set(*c5.find_root(mk(c5, r, 2, s, -2)));
                expect.set(*c5.find_root(mk(c5, r, 2, s, 2)));
            }
        }
        for (int s = 1; s < i1 - 1; ++s)
            expect.set(*c5.find_root(mk(c5, s, 2, i1 - 1, -2)));
        expect -= sol.kernel;
        CHECK(sol.tbar_roots == expect);
    }

    RootSystem d5 = RootSystem::build(Type::D, 5);
    for (int i1 : {2, 3, 4}) {
        int a = *d5.find_root(mk(d5, 0, 2, i1 - 1, 2));
        ArmSolution sol = classical_arm(d5, a);
        Pattern expect;
        for (int r = 1; r < 5; ++r) {
            if (r == i1 - 1) continue;
            for (int s = r + 1; s < 5; ++s) {
                if (s == i1 - 1) continue;
                expect.set(*d5.find_root(mk(d5, r, 2, s, -2)));
                expect.set(*d5.find_root(mk(d5, r, 2, s, 2)));
            }
        }
        for (int s = 0; s < i1 - 1; ++s)
            expect.set(*d5.find_root(mk(d5, s, 2, i1 - 1, -2)));
        expect -= sol.kernel;
        CHECK(sol.tbar_roots == expect);
    }
}

TEST_CASE("arm search on G2") {
    RootSystem g2 = RootSystem::build(Type::G2, 2);
    std::vector<Pattern> expected_arms = {
        Pattern{}, Pattern{}, Pattern{0}, Pattern{0}, Pattern{0}, Pattern{1, 2}};
    for (int a = 0; a < 6; ++a) {
        ArmSolution sol = arm_search(g2, a);
        CAPTURE(a);
        CHECK(sol.normal_flag);
        CHECK(sol.arm == expected_arms[size_t(a)]);
        // the quotient below the enlarged leg is elementary abelian: no two
        // tbar roots may sum to a tbar root
        bool abelian = true;
        sol.tbar_roots.for_each([&](int i) {
            sol.tbar_roots.for_each([&](int j) {
                if (j < i) return;
                auto s = g2.root_sum(i, j);
                if (s && sol.tbar_roots.test(*s)) abelian = false;
            });
        });
        CHECK(abelian);
    }
}

TEST_CASE("arm search solves classical roots as normal") {
    RootSystem b4 = RootSystem::build(Type::B, 4);
    for (int a = 0; a < b4.size(); ++a) {
        ArmSolution sol = arm_search(b4, a);
        CHECK(sol.normal_flag);
        RedHypotheses h = verify_red_hypotheses(b4, sol);
        CHECK(h.source_closed);
        CHECK(h.leg_kernel_normal);
    }
}

TEST_CASE("red hypotheses on a non-normal root") {
    RootSystem f4 = RootSystem::build(Type::F4, 4);
    ArmSolution sol = arm_search(f4, 19);  // e1-e4
    CHECK(!sol.normal_flag);
    RedHypotheses h = verify_red_hypotheses(f4, sol);
    CHECK(h.source_closed);
    CHECK(!h.leg_kernel_normal);
    // excess of the enlarged leg is the single root (e1+e2-e3+e4)/2
    Pattern excess = sol.enlarged_leg - sol.leg;
    CHECK(excess == Pattern{14});
}

TEST_CASE("midafi rows for G2 match the published table") {
    RootSystem g2 = RootSystem::build(Type::G2, 2);
    auto rows = midafi_table(g2);
    const auto& ref = refdata::midafi_reference(Type::G2);
    REQUIRE(rows.size() == ref.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].count_exponent == ref[i].count_exponent);
        CHECK(rows[i].arm_size == ref[i].degree_exponent);
        CHECK(rows[i].normal_flag == ref[i].normal);
    }
    CHECK(rows[4].count.to_string() == "-q^2 + q^3");  // q^2(q-1)
    CHECK(format_count(rows[4].count_exponent) == "q^2(q-1)");
    CHECK(format_power(rows[5].arm_size) == "q^2");
}

TEST_CASE("E8 drill-down details") {
    RootSystem e8 = RootSystem::build(Type::E8, 8);
    int r115 = *e8.find_root(mk(e8, 1, 2, 7, 2));
    ArmSolution sol = arm_search(e8, r115);
    CHECK(!sol.normal_flag);
    CHECK(sol.arm.count() == 23);
    Pattern excess = sol.enlarged_leg - sol.leg;
    CHECK(excess.count() == 7);
    REQUIRE(sol.subhooks.size() == 7);
    // one of the excess roots has a closed pattern of exactly 55 roots over
    // the hook, its subhook and the kernel
    bool found55 = false;
    for (const auto& [beta, cert] : sol.subhooks) {
        Pattern gen = e8.hook(r115) | cert.subhook | sol.kernel;
        if (closure(e8, gen).count() == 55) found55 = true;
    }
    CHECK(found55);
    // the enlarged leg is the normal closure of leg u kernel in the source
    Pattern m = normal_closure(e8, sol.leg | sol.kernel, sol.source);
    CHECK((m - sol.kernel) == sol.enlarged_leg);
}

TEST_CASE("search and closed-form arms give the same table data") {
    // the count exponent is intrinsic to the root, so any two admissible arm
    // choices must produce it
    for (auto [t, n] : {std::pair<Type, int>{Type::A, 5}, {Type::B, 4}, {Type::C, 4},
                        {Type::D, 5}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (int a = 0; a < rs.size(); ++a) {
            MidafiRow closed = midafi_row(rs, classical_arm(rs, a));
            MidafiRow searched = midafi_row(rs, arm_search(rs, a, false));
            CAPTURE(type_name(t));
            CAPTURE(a);
            CHECK(searched.normal_flag);
            CHECK(searched.arm_size == closed.arm_size);
            CHECK(searched.count_exponent == closed.count_exponent);
        }
    }
}

TEST_CASE("non-normal roots sit at the published height levels") {
    for (Type t : {Type::E6, Type::E7, Type::E8}) {
        RootSystem rs = RootSystem::build(t, 0);
        std::map<int, int> got, want;
        for (int a = 0; a < rs.size(); ++a)
            if (!arm_search(rs, a, false).normal_flag) got[rs.height(a)]++;
        for (const auto& r : refdata::midafi_reference(t))
            if (!r.normal) want[r.height]++;
        CHECK(got == want);
    }
}

TEST_CASE("hook data pairing") {
    for (auto [t, n] : {std::pair<Type, int>{Type::C, 4}, {Type::F4, 4}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (int a = 0; a < rs.size(); ++a) {
            HookData h = hook_data(rs, a);
            CHECK(h.hook.test(a));
            Pattern seen{a};
            for (auto [b, g] : h.pairs) {
                CHECK(rs.root_sum(b, g) == a);
                CHECK(!seen.test(b));
                CHECK(!seen.test(g));
                seen.set(b);
                seen.set(g);
            }
            CHECK(seen == h.hook);
        }
    }
}

TEST_CASE("count exponent agrees with the quotient derived-pattern route") {
    for (Type t : {Type::F4, Type::G2, Type::E6}) {
        RootSystem rs = RootSystem::build(t, 0);
        for (int a = 0; a < rs.size(); ++a) {
            ArmSolution sol = arm_search(rs, a, false);
            Pattern cut = sol.enlarged_leg | sol.kernel;
            cut.set(a);
            CHECK(midafi_row(rs, sol).count_exponent ==
                  linear_count_exponent(rs, sol.source, cut));
        }
    }
}

TEST_CASE("E6/E7 kernels agree with the ambient E8 convention") {
    // for a root of the subsystem, the ambient kernel is the intrinsic one
    // joined with everything outside the subsystem
    RootSystem e8 = RootSystem::build(Type::E8, 8);
    for (Type t : {Type::E6, Type::E7}) {
        RootSystem ei = RootSystem::build(t, 0);
        Pattern inside;
        for (int a = 0; a < ei.size(); ++a) inside.set(*e8.find_root(ei.root(a).coords2x));
        for (int a = 0; a < ei.size(); ++a) {
            int a8 = *e8.find_root(ei.root(a).coords2x);
            Pattern k8 = k_pattern(e8, a8);
            CHECK((e8.all() - inside).subset_of(k8));
            Pattern k8_restricted;
            (k8 & inside).for_each([&](int x) {
                k8_restricted.set(*ei.find_root(e8.root(x).coords2x));
            });
            CHECK(k8_restricted == k_pattern(ei, a));
        }
    }
}

TEST_CASE("every non-normal root of the E types has subhook certificates") {
    for (Type t : {Type::E6, Type::E7}) {
        RootSystem rs = RootSystem::build(t, 0);
        for (int a = 0; a < rs.size(); ++a) {
            ArmSolution sol = arm_search(rs, a, true);  // throws on failure
            if (sol.normal_flag) continue;
            Pattern excess = sol.enlarged_leg - sol.leg;
            CHECK(int(sol.subhooks.size()) == excess.count());
            CHECK(excess.count() <= 16);
            for (const auto& [beta, cert] : sol.subhooks) {
                CHECK(cert.beta == beta);
                CHECK(cert.subhook.test(beta));
                CHECK(cert.sub_arm.count() >= 1);
            }
        }
    }
}

TEST_CASE("midafi csv layout") {
    RootSystem g2 = RootSystem::build(Type::G2, 2);
    auto rows = midafi_table(g2);
    std::string csv = report::midafi_csv(g2, rows);
    CHECK(csv.find("root_index,height,coords,arm_size,normal_flag,count_exponent,") == 0);
    CHECK(csv.find("\n1,1,") != std::string::npos);
}
