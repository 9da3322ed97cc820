#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootpat/pattern.hpp"
#include "rootpat/root_system.hpp"
#include "rootpat/single_root.hpp"

namespace rootpat::report {

/// Compact coordinate rendering without commas: "e1-e3", "2e1",
/// "(e1+e2-e3+e4)/2", "e1-2e2+e3".
std::string root_coords_string(const RootSystem& rs, int idx);

/// Accepts the rendering above, a plain 1-based index, or a coordinate
/// tuple "(1,1,1,1)/2" / "(1,-1,0,0)".
std::optional<int> resolve_root(const RootSystem& rs, const std::string& selector);

/// JSON dump of a root system (schema 1).
std::string root_system_json(const RootSystem& rs);

/// "idx,height,coords" lines for the members of a pattern, index order.
std::string pattern_csv(const RootSystem& rs, const Pattern& p);
std::string pattern_json(const RootSystem& rs, const Pattern& p, const std::string& label,
                         int alpha);

/// The per-root table: one line per root,
/// root_index,height,coords,arm_size,normal_flag,count_exponent,
/// degree_exponent,enlarged_leg_excess.  root_index is 1-based.
std::string midafi_csv(const RootSystem& rs, const std::vector<MidafiRow>& rows);
std::string midafi_json(const RootSystem& rs, const std::vector<MidafiRow>& rows);

/// Full arm/leg/kernel detail of one solved root, with subhook
/// certificates when present.
std::string arms_json(const RootSystem& rs, const ArmSolution& sol);
std::string arms_table_json(const RootSystem& rs, const std::vector<ArmSolution>& sols);
std::string arms_csv(const RootSystem& rs, const std::vector<MidafiRow>& rows);

/// "k,count" lines.
std::string antichain_csv(const std::vector<long long>& by_size);

}  // namespace rootpat::report
