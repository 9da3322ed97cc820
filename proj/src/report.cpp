#include "rootpat/report.hpp"

#include <cctype>
#include <json.hpp>

namespace rootpat::report {

using json = nlohmann::ordered_json;

std::string root_coords_string(const RootSystem& rs, int idx) {
    const auto& c = rs.root(idx).coords2x;
    bool half = false;
    for (int v : c)
        if (v % 2 != 0) half = true;
    std::string s;
    for (size_t k = 0; k < c.size(); ++k) {
        int v = c[k];
        if (v == 0) continue;
        int units = half ? v : v / 2;  // halves rendered with a /2 suffix
        if (units > 0 && !s.empty()) s += "+";
        if (units == -1) s += "-";
        else if (units != 1) s += std::to_string(units);
        s += "e" + std::to_string(k + 1);
    }
    if (half) s = "(" + s + ")/2";
    return s;
}

namespace {

// Parses a sum of signed coordinate terms like "e1-2e2+e3"; doubling factor
// 2 for whole roots, 1 when the string carries a trailing "/2".
std::optional<std::vector<int>> parse_terms(const RootSystem& rs, std::string s) {
    int scale = 2;
    if (s.size() > 2 && s.substr(s.size() - 2) == "/2") {
        scale = 1;
        s = s.substr(0, s.size() - 2);
    }
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<int> v(size_t(rs.ambient_dim()), 0);
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') ++i;
        else if (s[i] == '-') { sign = -1; ++i; }
        int coef = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                coef = coef * 10 + (s[i++] - '0');
        }
        if (i >= s.size() || s[i] != 'e') return std::nullopt;
        ++i;
        int axis = 0;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            axis = axis * 10 + (s[i++] - '0');
        if (axis < 1 || axis > rs.ambient_dim()) return std::nullopt;
        v[size_t(axis - 1)] += sign * coef * scale;
    }
    return v;
}

// "(1,1,1,1)/2" or "(2,0,0,-2)": explicit coordinate tuples.
std::optional<std::vector<int>> parse_tuple(const RootSystem& rs, std::string s) {
    int scale = 2;
    if (s.size() > 2 && s.substr(s.size() - 2) == "/2") {
        scale = 1;
        s = s.substr(0, s.size() - 2);
    }
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
    s = s.substr(1, s.size() - 2);
    std::vector<int> v;
    size_t i = 0;
    while (i <= s.size()) {
        size_t j = s.find(',', i);
        std::string tok = s.substr(i, j == std::string::npos ? std::string::npos : j - i);
        if (tok.empty()) return std::nullopt;
        try {
            v.push_back(std::stoi(tok) * scale);
        } catch (...) {
            return std::nullopt;
        }
        if (j == std::string::npos) break;
        i = j + 1;
    }
    if (int(v.size()) != rs.ambient_dim()) return std::nullopt;
    return v;
}

}  // namespace

std::optional<int> resolve_root(const RootSystem& rs, const std::string& selector) {
    if (selector.empty()) return std::nullopt;
    bool numeric = true;
    for (char ch : selector)
        if (!std::isdigit(static_cast<unsigned char>(ch))) numeric = false;
    if (numeric) {
        int idx = std::stoi(selector);  // 1-based, the convention of the tables
        if (idx >= 1 && idx <= rs.size()) return idx - 1;
        return std::nullopt;
    }
    if (selector.find(',') != std::string::npos) {
        if (auto v = parse_tuple(rs, selector)) return rs.find_root(*v);
        return std::nullopt;
    }
    if (auto v = parse_terms(rs, selector)) return rs.find_root(*v);
    return std::nullopt;
}

std::string root_system_json(const RootSystem& rs) {
    json j;
    j["schema"] = 1;
    j["type"] = type_name(rs.type());
    j["rank"] = rs.rank();
    j["ambient_dim"] = rs.ambient_dim();
    if (!rs.prime_hypothesis().empty()) j["prime_hypothesis"] = rs.prime_hypothesis();
    json roots = json::array();
    for (int i = 0; i < rs.size(); ++i) {
        json r;
        r["idx"] = i;
        r["coords2x"] = rs.root(i).coords2x;
        r["coeffs"] = rs.root(i).coeffs;
        r["height"] = rs.root(i).height;
        roots.push_back(r);
    }
    j["roots"] = roots;
    return j.dump(2) + "\n";
}

std::string pattern_csv(const RootSystem& rs, const Pattern& p) {
    std::string out = "root_index,height,coords\n";
    p.for_each([&](int i) {
        out += std::to_string(i + 1) + "," + std::to_string(rs.height(i)) + "," +
               root_coords_string(rs, i) + "\n";
    });
    return out;
}

std::string pattern_json(const RootSystem& rs, const Pattern& p, const std::string& label,
                         int alpha) {
    json j;
    j["schema"] = 1;
    j["type"] = type_name(rs.type());
    j["rank"] = rs.rank();
    if (alpha >= 0) {
        j["root"] = alpha + 1;
        j["root_coords"] = root_coords_string(rs, alpha);
    }
    j[label] = p.to_vector();
    return j.dump(2) + "\n";
}

namespace {
std::string midafi_lines(const RootSystem& rs, const std::vector<MidafiRow>& rows) {
    std::string out =
        "root_index,height,coords,arm_size,normal_flag,count_exponent,degree_exponent,"
        "enlarged_leg_excess\n";
    for (const auto& r : rows) {
        out += std::to_string(r.alpha + 1) + "," + std::to_string(r.height) + "," +
               root_coords_string(rs, r.alpha) + "," + std::to_string(r.arm_size) + "," +
               (r.normal_flag ? "1" : "0") + "," + std::to_string(r.count_exponent) + "," +
               std::to_string(r.arm_size) + "," + std::to_string(r.enlarged_leg_excess) + "\n";
    }
    return out;
}
}  // namespace

std::string midafi_csv(const RootSystem& rs, const std::vector<MidafiRow>& rows) {
    return midafi_lines(rs, rows);
}

std::string arms_csv(const RootSystem& rs, const std::vector<MidafiRow>& rows) {
    return midafi_lines(rs, rows);
}

std::string midafi_json(const RootSystem& rs, const std::vector<MidafiRow>& rows) {
    json j;
    j["schema"] = 1;
    j["type"] = type_name(rs.type());
    j["rank"] = rs.rank();
    json arr = json::array();
    for (const auto& r : rows) {
        json e;
        e["root"] = r.alpha + 1;
        e["height"] = r.height;
        e["coords"] = root_coords_string(rs, r.alpha);
        e["count"] = format_count(r.count_exponent);
        e["degree"] = format_power(r.arm_size);
        e["count_exponent"] = r.count_exponent;
        e["degree_exponent"] = r.arm_size;
        e["normal"] = r.normal_flag;
        e["enlarged_leg_excess"] = r.enlarged_leg_excess;
        arr.push_back(e);
    }
    j["rows"] = arr;
    return j.dump(2) + "\n";
}

namespace {
json arms_object(const RootSystem& rs, const ArmSolution& sol) {
    json j;
    j["root"] = sol.alpha + 1;
    j["root_coords"] = root_coords_string(rs, sol.alpha);
    j["normal"] = sol.normal_flag;
    j["arm"] = sol.arm.to_vector();
    j["leg"] = sol.leg.to_vector();
    j["kernel"] = sol.kernel.to_vector();
    j["enlarged_leg"] = sol.enlarged_leg.to_vector();
    j["tbar_roots"] = sol.tbar_roots.to_vector();
    j["forced_leg_count"] = sol.forced_leg_count;
    j["branch_space"] = sol.branch_space;
    if (!sol.subhooks.empty()) {
        json subs = json::array();
        for (const auto& [beta, cert] : sol.subhooks) {
            json c;
            c["beta"] = beta;
            c["subhook"] = cert.subhook.to_vector();
            c["sub_arm"] = cert.sub_arm.to_vector();
            c["sub_leg"] = cert.sub_leg.to_vector();
            subs.push_back(c);
        }
        j["subhooks"] = subs;
    }
    return j;
}
}  // namespace

std::string arms_json(const RootSystem& rs, const ArmSolution& sol) {
    json j;
    j["schema"] = 1;
    j["type"] = type_name(rs.type());
    j["rank"] = rs.rank();
    j.update(arms_object(rs, sol));
    return j.dump(2) + "\n";
}

std::string arms_table_json(const RootSystem& rs, const std::vector<ArmSolution>& sols) {
    json j;
    j["schema"] = 1;
    j["type"] = type_name(rs.type());
    j["rank"] = rs.rank();
    json arr = json::array();
    for (const auto& sol : sols) arr.push_back(arms_object(rs, sol));
    j["roots"] = arr;
    return j.dump(2) + "\n";
}

std::string antichain_csv(const std::vector<long long>& by_size) {
    std::string out = "k,count\n";
    for (size_t k = 0; k < by_size.size(); ++k)
        out += std::to_string(k) + "," + std::to_string(by_size[k]) + "\n";
    return out;
}

}  // namespace rootpat::report
