#include "rootpat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "rootpat/oracle.hpp"
#include "rootpat/patterns.hpp"
#include "rootpat/reference_data.hpp"
#include "rootpat/report.hpp"
#include "rootpat/single_root.hpp"

namespace rootpat::verify {

namespace {

int g_jobs = 1;

struct Check {
    bool pass = true;
    std::string detail;
    long long items = 0;

    void fail(const std::string& msg) {
        pass = false;
        if (!failures.empty()) failures += "; ";
        if (failures.size() < 500) failures += msg;
    }
    void expect(bool cond, const std::string& msg) {
        ++items;
        if (!cond) fail(msg);
    }
    std::string failures;
};

std::vector<std::pair<Type, int>> tested_systems() {
    std::vector<std::pair<Type, int>> v;
    for (int n = 1; n <= 8; ++n) v.push_back({Type::A, n});
    for (int n = 2; n <= 8; ++n) v.push_back({Type::B, n});
    for (int n = 3; n <= 8; ++n) v.push_back({Type::C, n});
    for (int n = 4; n <= 8; ++n) v.push_back({Type::D, n});
    v.push_back({Type::E6, 6});
    v.push_back({Type::E7, 7});
    v.push_back({Type::E8, 8});
    v.push_back({Type::F4, 4});
    v.push_back({Type::G2, 2});
    return v;
}

std::string sys_name(Type t, int rank) {
    return is_classical(t) ? type_name(t) + std::to_string(rank) : type_name(t);
}

// ----- criterion 1: antichain counting polynomials and totals -----
Check criterion_narayana() {
    Check c;
    for (auto [t, n] : tested_systems()) {
        RootSystem rs = RootSystem::build(t, n);
        auto actual = antichain_counts_by_size(rs);
        auto expected = refdata::narayana_counts(t, n);
        while (actual.size() < expected.size()) actual.push_back(0);
        while (expected.size() < actual.size()) expected.push_back(0);
        c.expect(actual == expected, sys_name(t, n) + ": counts-by-size mismatch");
        long long total = antichain_total(rs);
        c.expect(total == refdata::antichain_total_closed_form(t, n),
                 sys_name(t, n) + ": total != closed form");
        c.expect(total == refdata::antichain_total_product_formula(t, n),
                 sys_name(t, n) + ": total != exponent product formula");
        c.expect(int(actual.size()) <= rs.rank() + 1,
                 sys_name(t, n) + ": antichain larger than the rank");
    }
    c.detail = std::to_string(c.items) + " table comparisons";
    return c;
}

// ----- criterion 2: closed-form kernels of A, B, C -----
Check criterion_kernel_closed_forms() {
    Check c;
    for (auto [t, n] : tested_systems()) {
        if (t != Type::A && t != Type::B && t != Type::C) continue;
        RootSystem rs = RootSystem::build(t, n);
        for (int a = 0; a < rs.size(); ++a)
            c.expect(k_pattern(rs, a) == refdata::closed_form_kernel(rs, a),
                     sys_name(t, n) + " root " + std::to_string(a + 1) + ": kernel mismatch");
    }
    c.detail = std::to_string(c.items) + " kernels";
    return c;
}

// all up-sets of the root poset, by direct search over the fixed order
void normal_patterns_rec(const RootSystem& rs, int i, Pattern cur, std::vector<Pattern>& out) {
    if (i < 0) {
        out.push_back(cur);
        return;
    }
    normal_patterns_rec(rs, i - 1, cur, out);
    Pattern above = rs.up_set(i);
    above.reset(i);
    if (above.subset_of(cur)) {
        cur.set(i);
        normal_patterns_rec(rs, i - 1, cur, out);
    }
}

std::vector<Pattern> all_normal_patterns(const RootSystem& rs) {
    std::vector<Pattern> out;
    normal_patterns_rec(rs, rs.size() - 1, Pattern{}, out);
    return out;
}

// ----- criterion 3: w/k partition and maximal-normal characterization -----
Check criterion_partition() {
    Check c;
    for (auto [t, n] : tested_systems()) {
        RootSystem rs = RootSystem::build(t, n);
        for (int a = 0; a < rs.size(); ++a) {
            Pattern w = w_pattern(rs, a), k = k_pattern(rs, a);
            c.expect(!w.intersects(k) && (w | k) == rs.all(),
                     sys_name(t, n) + " root " + std::to_string(a + 1) + ": w/k not a partition");
        }
    }
    std::vector<std::pair<Type, int>> small = {{Type::A, 1}, {Type::A, 2}, {Type::A, 3},
                                               {Type::A, 4}, {Type::B, 2}, {Type::B, 3},
                                               {Type::B, 4}, {Type::C, 3}, {Type::C, 4},
                                               {Type::D, 4}, {Type::F4, 4}, {Type::G2, 2}};
    for (auto [t, n] : small) {
        RootSystem rs = RootSystem::build(t, n);
        auto normals = all_normal_patterns(rs);
        for_each_antichain(rs, [&](const Pattern& sigma) {
            Pattern best;
            for (const auto& np : normals)
                if (!np.intersects(sigma)) best |= np;
            c.expect(k_sigma(rs, sigma) == best,
                     sys_name(t, n) + ": k(Sigma) != maximal normal pattern avoiding Sigma");
        });
    }
    c.detail = std::to_string(c.items) + " checks";
    return c;
}

// ----- criterion 4: classical correspondence hypotheses -----
Check criterion_classical_hypotheses() {
    Check c;
    for (auto [t, n] : tested_systems()) {
        if (!is_classical(t)) continue;
        RootSystem rs = RootSystem::build(t, n);
        for (int a = 0; a < rs.size(); ++a) {
            ArmSolution sol = classical_arm(rs, a);
            RedHypotheses h = verify_red_hypotheses(rs, sol);
            c.expect(h.all(), sys_name(t, n) + " root " + std::to_string(a + 1) +
                                  ": hypotheses " + std::to_string(h.source_closed) +
                                  std::to_string(h.leg_kernel_normal) +
                                  std::to_string(h.hook_closed_arm_normalizes) +
                                  std::to_string(h.hook_special_surrogate));
        }
    }
    c.detail = std::to_string(c.items) + " roots, all four hypotheses";
    return c;
}

struct TableCache {
    std::map<Type, std::vector<MidafiRow>> rows;
    std::map<Type, std::string> csv;
};

// ----- criterion 5: exceptional midafi tables -----
Check criterion_midafi_tables(TableCache& cache) {
    Check c;
    for (Type t : {Type::G2, Type::F4, Type::E6, Type::E7, Type::E8}) {
        RootSystem rs = RootSystem::build(t, 0);
        auto rows = midafi_table(rs, g_jobs);
        const auto& ref = refdata::midafi_reference(t);
        if (t == Type::F4 || t == Type::G2) {
            // the numbering is pinned: compare row by row
            for (size_t i = 0; i < ref.size(); ++i) {
                c.expect(rows[i].count_exponent == ref[i].count_exponent &&
                             rows[i].arm_size == ref[i].degree_exponent,
                         type_name(t) + " root " + std::to_string(i + 1) + ": got (" +
                             std::to_string(rows[i].count_exponent) + "," +
                             std::to_string(rows[i].arm_size) + ") want (" +
                             std::to_string(ref[i].count_exponent) + "," +
                             std::to_string(ref[i].degree_exponent) + ")");
            }
        } else {
            // numbering inside a height level is not pinned: compare the
            // multiset of (count, degree) pairs per height
            std::map<int, std::multiset<std::pair<int, int>>> want, got;
            for (const auto& r : ref) want[r.height].insert({r.count_exponent, r.degree_exponent});
            for (const auto& r : rows) got[r.height].insert({r.count_exponent, r.arm_size});
            for (auto& [ht, ms] : want) {
                if (got[ht] != ms) {
                    std::ostringstream os;
                    os << type_name(t) << " height " << ht << ": got {";
                    for (auto [a, b] : got[ht]) os << "(" << a << "," << b << ")";
                    os << "} want {";
                    for (auto [a, b] : ms) os << "(" << a << "," << b << ")";
                    os << "}";
                    c.fail(os.str());
                }
                ++c.items;
            }
        }
        cache.csv[t] = report::midafi_csv(rs, rows);
        cache.rows[t] = std::move(rows);
    }
    c.detail = "G2, F4 exact; E6/E7/E8 per height level";
    return c;
}

// ----- criterion 6: non-normal censuses -----
Check criterion_non_normal(const TableCache& cache) {
    Check c;
    for (Type t : {Type::E6, Type::E7, Type::E8, Type::F4, Type::G2}) {
        const auto& rows = cache.rows.at(t);
        int nn = 0;
        for (const auto& r : rows)
            if (!r.normal_flag) ++nn;
        c.expect(nn == refdata::non_normal_count(t),
                 type_name(t) + ": " + std::to_string(nn) + " non-normal roots, want " +
                     std::to_string(refdata::non_normal_count(t)));
    }
    RootSystem f4 = RootSystem::build(Type::F4, 4);
    for (const auto& r : cache.rows.at(Type::F4)) {
        bool is_e1_m_e4 = report::root_coords_string(f4, r.alpha) == "e1-e4";
        bool is_e1_p_e4 = report::root_coords_string(f4, r.alpha) == "e1+e4";
        if (!r.normal_flag)
            c.expect(is_e1_m_e4 || is_e1_p_e4,
                     "F4 non-normal at unexpected root " + std::to_string(r.alpha + 1));
        if (is_e1_m_e4 || is_e1_p_e4)
            c.expect(!r.normal_flag, "F4 root " + std::to_string(r.alpha + 1) + " should be non-normal");
    }
    c.detail = "2/36, 11/63, 46/120, 2/24 (e1-e4 and e1+e4), 0/6";
    return c;
}

// ----- criterion 7: E8 drill-down at the height-24 root e2+e8 -----
Check criterion_e8_drilldown() {
    Check c;
    RootSystem rs = RootSystem::build(Type::E8, 8);
    std::vector<int> coords(8, 0);
    coords[1] = 2;
    coords[7] = 2;
    auto idx = rs.find_root(coords);
    c.expect(idx.has_value(), "root e2+e8 not found");
    if (!idx) return c;
    c.expect(rs.height(*idx) == 24, "e2+e8 height != 24");
    ArmSolution sol = arm_search(rs, *idx);
    c.expect(!sol.normal_flag, "e2+e8 unexpectedly normal");
    c.expect(sol.arm.count() == 23,
             "arm size " + std::to_string(sol.arm.count()) + ", want 23");
    c.expect(sol.kernel.count() == 5,
             "kernel size " + std::to_string(sol.kernel.count()) + ", want 5");
    c.expect((sol.enlarged_leg - sol.leg).count() == 7,
             "enlarged-leg excess " + std::to_string((sol.enlarged_leg - sol.leg).count()) +
                 ", want 7");
    c.expect(sol.branch_space <= 128,
             "branch space " + std::to_string(sol.branch_space) + " > 128");
    std::ostringstream os;
    os << "|arm|=" << sol.arm.count() << " |k|=" << sol.kernel.count() << " excess="
       << (sol.enlarged_leg - sol.leg).count() << " branch_space=" << sol.branch_space
       << " (forced " << sol.forced_leg_count << " of " << rs.decompositions(*idx).size()
       << " pairs)";
    c.detail = os.str();
    return c;
}

// certificate conditions, re-checked independently of subhook_search
bool certificate_ok(const RootSystem& rs, const ArmSolution& sol, const SubhookCertificate& cert) {
    const Pattern hk = rs.hook(sol.alpha) | sol.kernel;
    if (hk.intersects(cert.subhook)) return false;
    if (!is_closed(rs, cert.subhook | sol.kernel)) return false;
    bool sums_ok = true;
    cert.subhook.for_each([&](int i) {
        cert.subhook.for_each([&](int j) {
            if (j <= i) return;
            auto s = rs.root_sum(i, j);
            if (s && *s != cert.beta && !sol.kernel.test(*s)) sums_ok = false;
        });
    });
    if (!sums_ok) return false;
    Pattern hab = closure(rs, rs.hook(sol.alpha) | cert.subhook | sol.kernel);
    if (!normalizes(rs, hab - sol.arm, sol.leg | sol.kernel)) return false;
    return cert.sub_arm.count() >= 1 &&
           (cert.sub_arm | cert.sub_leg | Pattern{cert.beta}) == cert.subhook;
}

// ----- criterion 8: F4 subhook certificates -----
Check criterion_f4_subhooks() {
    Check c;
    RootSystem rs = RootSystem::build(Type::F4, 4);
    for (int root : {19, 21}) {
        ArmSolution sol = arm_search(rs, root);
        c.expect(!sol.normal_flag, "F4 root " + std::to_string(root + 1) + " should be non-normal");
        auto want = refdata::f4_subhooks(root);
        c.expect(sol.subhooks.size() == want.size(),
                 "F4 root " + std::to_string(root + 1) + ": " +
                     std::to_string(sol.subhooks.size()) + " certificates, want " +
                     std::to_string(want.size()));
        size_t wi = 0;
        for (const auto& [beta, cert] : sol.subhooks) {
            if (wi < want.size()) {
                std::vector<int> got = cert.subhook.to_vector();
                c.expect(got == want[wi], "F4 root " + std::to_string(root + 1) +
                                              ": subhook index set mismatch for beta " +
                                              std::to_string(beta + 1));
            }
            c.expect(certificate_ok(rs, sol, cert),
                     "F4 root " + std::to_string(root + 1) + ": certificate conditions fail");
            ++wi;
        }
    }
    c.detail = "{1,13,15} for a20; {6,12,17},{4,17,20} for a22";
    return c;
}

// ----- criterion 9: matrix-group oracle -----
Check criterion_oracle() {
    Check c;
    using namespace oracle;
    for (int rank : {2, 3}) {
        RootSystem rs = RootSystem::build(Type::A, rank);
        const int nroots = rs.size();
        for (int q : {2, 3}) {
            UnitriangularGroup g(rs, q);
            // closed patterns of the system
            std::vector<Pattern> closed_sets;
            for (int mask = 0; mask < (1 << nroots); ++mask) {
                Pattern p;
                for (int i = 0; i < nroots; ++i)
                    if (mask & (1 << i)) p.set(i);
                if (is_closed(rs, p)) closed_sets.push_back(p);
            }
            for (const Pattern& s : closed_sets) {
                auto s_elems = g.pattern_subgroup(s);
                auto s_gens = pattern_generators(g, s);
                c.expect(static_cast<long long>(s_elems.size()) ==
                             [&] { long long o = 1; for (int i = 0; i < s.count(); ++i) o *= q; return o; }(),
                         "order of P(S) != q^|S|");
                std::vector<int> members = s.to_vector();
                for (int sub = 0; sub < (1 << members.size()); ++sub) {
                    Pattern nset;
                    for (size_t b = 0; b < members.size(); ++b)
                        if (sub & (1 << b)) nset.set(members[b]);
                    if (!is_closed(rs, nset)) continue;
                    auto n_elems = g.pattern_subgroup(nset);
                    ElementSet n_lookup = to_set(g, n_elems);
                    bool pat_normal = normalizes(rs, s, nset);
                    bool grp_normal = is_normal_subgroup(s_gens, n_elems, n_lookup);
                    c.expect(pat_normal == grp_normal,
                             "pattern/group normality disagree (A" + std::to_string(rank) +
                                 ", q=" + std::to_string(q) + ")");
                    if (!pat_normal) continue;
                    auto zc = brute_center(s_elems, s_gens, n_lookup);
                    auto zp = g.pattern_subgroup(center_pattern(rs, s, nset));
                    c.expect(to_set(g, zc) == to_set(g, zp), "center mismatch");
                    auto dc = brute_derived(g.dim(), q, s_gens, pattern_generators(g, nset));
                    auto dp = g.pattern_subgroup(derived_pattern(rs, s, nset));
                    c.expect(to_set(g, dc) == to_set(g, dp), "derived mismatch");
                }
            }
            // hook subgroups are special of type q^(1+2m)
            for (int a = 0; a < nroots; ++a) {
                if (rs.height(a) <= 1) continue;
                auto h_elems = g.pattern_subgroup(rs.hook(a));
                int m = (rs.hook(a).count() - 1) / 2;
                long long order = 1;
                for (int i = 0; i < 1 + 2 * m; ++i) order *= q;
                c.expect(static_cast<long long>(h_elems.size()) == order, "hook subgroup order");
                std::vector<Matrix> xalpha;
                for (int t = 0; t < q; ++t) xalpha.push_back(g.root_element(a, t));
                ElementSet triv = to_set(g, xalpha);
                auto hz = brute_center(h_elems, pattern_generators(g, rs.hook(a)),
                                       to_set(g, {Matrix::identity(g.dim(), q)}));
                c.expect(to_set(g, hz) == triv, "hook center != X_alpha");
                auto hd = brute_derived(g.dim(), q, pattern_generators(g, rs.hook(a)), {});
                c.expect(to_set(g, hd) == triv, "hook derived != X_alpha");
                auto hf = brute_frattini(g.dim(), q, h_elems);
                c.expect(to_set(g, hf) == triv, "hook Frattini != X_alpha");
            }
            // commutator formula for root subgroups
            for (int a = 0; a < nroots; ++a)
                for (int b = 0; b < nroots; ++b) {
                    if (a == b) continue;
                    std::vector<Matrix> xa, xb;
                    for (int t = 0; t < q; ++t) {
                        xa.push_back(g.root_element(a, t));
                        xb.push_back(g.root_element(b, t));
                    }
                    auto comm = brute_commutator_group(g.dim(), q, xa, xb);
                    auto sum = rs.root_sum(a, b);
                    if (sum) {
                        Pattern ps;
                        ps.set(*sum);
                        c.expect(to_set(g, comm) == to_set(g, g.pattern_subgroup(ps)),
                                 "[X_a, X_b] != X_{a+b}");
                    } else {
                        c.expect(comm.size() == 1, "[X_a, X_b] != 1 for non-root sum");
                    }
                }
        }
    }
    // class count of the A2 group is q^2 + q - 1
    for (int q : {2, 3}) {
        RootSystem rs = RootSystem::build(Type::A, 2);
        UnitriangularGroup g(rs, q);
        long long classes = class_count(g.pattern_subgroup(rs.all()));
        c.expect(classes == 1LL * q * q + q - 1,
                 "A2 class count " + std::to_string(classes) + " != q^2+q-1");
    }
    c.detail = std::to_string(c.items) + " group-level checks (A2/A3, q in {2,3})";
    return c;
}

// ----- criterion 10: determinism of the emitted table -----
Check criterion_determinism(TableCache& cache) {
    Check c;
    RootSystem rs = RootSystem::build(Type::E8, 8);
    if (!cache.csv.count(Type::E8))
        cache.csv[Type::E8] = report::midafi_csv(rs, midafi_table(rs, g_jobs));
    auto rows = midafi_table(rs, g_jobs > 1 ? 1 : 2);  // different worker count
    std::string again = report::midafi_csv(rs, rows);
    c.expect(again == cache.csv.at(Type::E8), "E8 midafi CSV differs between runs");
    c.detail = "two E8 table computations, byte-identical CSV";
    return c;
}

}  // namespace

void set_jobs(int jobs) { g_jobs = jobs < 1 ? 1 : jobs; }

std::vector<CriterionResult> run_acceptance(std::ostream* live, const std::vector<int>& only) {
    std::vector<CriterionResult> results;
    TableCache cache;
    struct Entry {
        int id;
        const char* name;
        std::function<Check()> fn;
    };
    std::vector<Entry> plan = {
        {1, "narayana-polynomials", [&] { return criterion_narayana(); }},
        {2, "kernel-closed-forms", [&] { return criterion_kernel_closed_forms(); }},
        {3, "partition-identity", [&] { return criterion_partition(); }},
        {4, "classical-hypotheses", [&] { return criterion_classical_hypotheses(); }},
        {5, "exceptional-midafi-tables", [&] { return criterion_midafi_tables(cache); }},
        {6, "non-normal-censuses", [&] { return criterion_non_normal(cache); }},
        {7, "e8-drilldown", [&] { return criterion_e8_drilldown(); }},
        {8, "f4-subhook-certificates", [&] { return criterion_f4_subhooks(); }},
        {9, "oracle-equivalences", [&] { return criterion_oracle(); }},
        {10, "determinism", [&] { return criterion_determinism(cache); }},
    };
    for (auto& e : plan) {
        if (!only.empty() && std::find(only.begin(), only.end(), e.id) == only.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = e.fn();
        } catch (const std::exception& ex) {
            c.pass = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        r.pass = c.pass;
        r.detail = c.pass ? c.detail : c.failures;
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        if (live) {
            char buf[32];
            snprintf(buf, sizeof buf, "%.2fs", r.seconds);
            (*live) << (r.pass ? "[PASS]" : "[FAIL]") << " " << r.id << " " << r.name << " ("
                    << buf << "): " << r.detail << "\n";
            live->flush();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace rootpat::verify
