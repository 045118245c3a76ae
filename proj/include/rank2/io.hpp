#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rank2/envgroup.hpp"
#include "rank2/nichols.hpp"
#include "rank2/quandle.hpp"
#include "rank2/supportcalc.hpp"
#include "rank2/weyl.hpp"
#include "rank2/ydmod.hpp"

namespace rank2::io {

using nlohmann::json;

/// Text format: "n", then n rows of n integers (row i lists i ▷ 1, …, i ▷ n).
/// Parse errors and axiom failures throw ArgumentError.
Quandle quandle_from_text(std::string_view text);
std::string quandle_to_text(const Quandle& q);
/// {"size": n, "table": [[...], ...]}
Quandle quandle_from_json(const json& j);
json quandle_to_json(const Quandle& q);
/// Either format, decided by a leading '{'.
Quandle parse_quandle(std::string_view text);
Quandle read_quandle_file(const std::string& path);

std::string read_file(const std::string& path);

/// {"order", "mult", "names", "generators"}; mult is row-major.
json group_to_json(const FinGroup& g);
FinGroup group_from_json(const json& j);

/// A named group: "S<d>", "A<d>", "SL(2,3)", "Z<m1>xZ<m2>x…", or
/// "env:<catalog quandle>" for its finite enveloping group. Throws
/// ArgumentError for anything else.
struct ResolvedGroup {
  std::shared_ptr<const FinGroup> group;
  std::vector<GElem> quandle_images;  // set for "env:" references only
};
ResolvedGroup resolve_group(std::string_view ref);

/// {"group_ref", "class_rep", "character": [[k, N], ...]}: the module induced
/// from the character of the centralizer of class_rep taking ζ_N^k on the
/// k-th of centralizer_generators. class_rep is an element name, or "x<i>"
/// for the image of quandle element i under an "env:" reference.
struct ModuleDescriptor {
  std::string group_ref;
  std::string class_rep;
  std::vector<std::pair<long, long>> character;
};
ModuleDescriptor descriptor_from_json(const json& j);
json descriptor_to_json(const ModuleDescriptor& d);
GElem resolve_element(const ResolvedGroup& g, const std::string& name);
YDModule build_module(const ResolvedGroup& g, const ModuleDescriptor& d);

/// {"m", "dim", "rank", "per_block": [{"degree_tuple", "rank"}],
///  "per_total_degree": [{"degree", "rank"}]}, degrees by element name.
json adjoint_report_to_json(const AdjointReport& r, const FinGroup& g);

json envelope_to_json(const EnvelopeQuotient& e);

json candidate_to_json(const Candidate& c);
/// {"candidates_examined", "quandles_examined", "n_max", "survivors":
///  [{"table", "roles", "matched_catalog_name", ...}], "rejections":
///  [{"table", "roles", "rule_id", "witness_tuple"}]}, arrays sorted by table.
json classify_to_json(const ClassifyReport& r);

/// {"seq", "witnesses", "rotations"}: the sequence_witnesses indices and the number of
/// distinct rotations.
json charseq_record(const CharSeq& s);

}  // namespace rank2::io
