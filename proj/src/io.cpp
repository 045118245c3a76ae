#include "rank2/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "rank2/errors.hpp"
#include "rank2/fingroup.hpp"

namespace rank2::io {

namespace {

json table_2d(const Quandle& q) { return q.rows_2d(); }

Quandle from_rows_2d(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw ArgumentError("quandle table is not square");
    for (int v : r) {
      if (v < 1 || v > n) throw ArgumentError("quandle table entry out of range: " + std::to_string(v));
      flat.push_back(v);
    }
  }
  if (n == 0) throw ArgumentError("empty quandle table");
  return Quandle(n, std::move(flat));
}

// Whole-string integer, no sign games.
int parse_positive(std::string_view s, std::string_view what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ArgumentError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return std::stoi(std::string(s));
}

std::string join_names(const FinGroup& g, const std::vector<GElem>& xs) {
  std::string out;
  for (GElem x : xs) out += (out.empty() ? "" : ",") + g.name(x);
  return out;
}

}  // namespace

Quandle quandle_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = 0;
  if (!(in >> n) || n < 1 || n > 4096) throw ArgumentError("quandle text: first token must be the size");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (auto& r : rows)
    for (auto& v : r)
      if (!(in >> v)) throw ArgumentError("quandle text: expected " + std::to_string(n * n) + " table entries");
  std::string extra;
  if (in >> extra) throw ArgumentError("quandle text: trailing data '" + extra + "'");
  return from_rows_2d(rows);
}

std::string quandle_to_text(const Quandle& q) {
  std::string out = std::to_string(q.size()) + "\n";
  for (const auto& row : q.rows_2d()) {
    for (std::size_t k = 0; k < row.size(); ++k) out += (k ? " " : "") + std::to_string(row[k]);
    out += "\n";
  }
  return out;
}

Quandle quandle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("table")) throw ArgumentError("quandle JSON: missing \"table\"");
  const auto rows = j.at("table").get<std::vector<std::vector<int>>>();
  if (j.contains("size") && j.at("size").get<int>() != static_cast<int>(rows.size()))
    throw ArgumentError("quandle JSON: size does not match the table");
  return from_rows_2d(rows);
}

json quandle_to_json(const Quandle& q) { return {{"size", q.size()}, {"table", table_2d(q)}}; }

Quandle parse_quandle(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      return quandle_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ArgumentError(std::string("quandle JSON: ") + e.what());
    }
  }
  return quandle_from_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Quandle read_quandle_file(const std::string& path) { return parse_quandle(read_file(path)); }

json group_to_json(const FinGroup& g) {
  return {{"order", g.order()}, {"mult", g.table()}, {"names", g.names()}, {"generators", g.generators()}};
}

FinGroup group_from_json(const json& j) {
  try {
    auto mult = j.at("mult").get<std::vector<int>>();
    auto names = j.at("names").get<std::vector<std::string>>();
    auto gens = j.at("generators").get<std::vector<GElem>>();
    if (j.contains("order") && j.at("order").get<long>() * j.at("order").get<long>() != static_cast<long>(mult.size()))
      throw ArgumentError("group JSON: order does not match mult");
    return FinGroup(std::move(mult), std::move(names), std::move(gens));
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("group JSON: ") + e.what());
  }
}

ResolvedGroup resolve_group(std::string_view ref) {
  auto make = [](FinGroup g) { return ResolvedGroup{std::make_shared<const FinGroup>(std::move(g)), {}}; };
  if (ref.starts_with("env:")) {
    auto env = finite_enveloping_group(catalog(ref.substr(4)));
    return {std::make_shared<const FinGroup>(std::move(env.group)), std::move(env.images)};
  }
  if (ref == "SL(2,3)") return make(groups::sl2_3());
  if (ref.size() >= 2 && ref[0] == 'S') return make(groups::symmetric(parse_positive(ref.substr(1), "group degree")));
  if (ref.size() >= 2 && ref[0] == 'A') return make(groups::alternating(parse_positive(ref.substr(1), "group degree")));
  if (ref.size() >= 2 && ref[0] == 'Z') {
    std::vector<int> moduli;
    std::string_view rest = ref;
    while (!rest.empty()) {
      if (rest[0] != 'Z') throw ArgumentError("bad group reference: " + std::string(ref));
      const auto x = rest.find('x');
      moduli.push_back(parse_positive(rest.substr(1, x == std::string_view::npos ? rest.npos : x - 1), "modulus"));
      if (x == std::string_view::npos) break;
      rest = rest.substr(x + 1);
      if (rest.empty()) throw ArgumentError("bad group reference: " + std::string(ref));
    }
    return make(groups::abelian(moduli));
  }
  throw ArgumentError("unknown group reference: " + std::string(ref));
}

ModuleDescriptor descriptor_from_json(const json& j) {
  try {
    ModuleDescriptor d{j.at("group_ref").get<std::string>(), j.at("class_rep").get<std::string>(), {}};
    for (const auto& p : j.at("character")) {
      if (!p.is_array() || p.size() != 2) throw ArgumentError("character values are [k, N] pairs");
      d.character.emplace_back(p[0].get<long>(), p[1].get<long>());
    }
    return d;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("module descriptor: ") + e.what());
  }
}

json descriptor_to_json(const ModuleDescriptor& d) {
  json ch = json::array();
  for (const auto& [k, n] : d.character) ch.push_back({k, n});
  return {{"group_ref", d.group_ref}, {"class_rep", d.class_rep}, {"character", ch}};
}

GElem resolve_element(const ResolvedGroup& g, const std::string& name) {
  if (!g.quandle_images.empty() && name.size() >= 2 && name[0] == 'x') {
    const int i = parse_positive(std::string_view(name).substr(1), "quandle element");
    if (i < 1 || i > static_cast<int>(g.quandle_images.size())) throw ArgumentError("no quandle element " + name);
    return g.quandle_images[i - 1];
  }
  return g.group->find(name);
}

YDModule build_module(const ResolvedGroup& g, const ModuleDescriptor& d) {
  const GElem rep = resolve_element(g, d.class_rep);
  const auto gens = centralizer_generators(*g.group, rep);
  if (gens.size() != d.character.size())
    throw ArgumentError("character needs " + std::to_string(gens.size()) + " values, one per centralizer generator (" +
                        join_names(*g.group, gens) + ")");
  std::vector<CycNum> values;
  for (const auto& [k, n] : d.character) {
    if (n < 1 || n > 1'000'000) throw ArgumentError("root order out of range");
    values.push_back(CycNum::zeta(static_cast<int>(n), k));
  }
  return induced_module(g.group, rep, values);
}

json adjoint_report_to_json(const AdjointReport& r, const FinGroup& g) {
  json blocks = json::array(), totals = json::array();
  for (const auto& [t, rank] : r.per_tuple) {
    json names = json::array();
    for (GElem x : t) names.push_back(g.name(x));
    blocks.push_back({{"degree_tuple", names}, {"rank", rank}});
  }
  for (const auto& [d, rank] : r.per_block) totals.push_back({{"degree", g.name(d)}, {"rank", rank}});
  return {{"m", r.m}, {"dim", r.dim}, {"rank", r.rank}, {"per_block", blocks}, {"per_total_degree", totals}};
}

json envelope_to_json(const EnvelopeQuotient& e) {
  const FinGroup& g = e.group;
  json images = json::array();
  for (GElem x : e.images) images.push_back(g.name(x));
  const auto comm = commutator_subgroup(g);
  return {{"order", g.order()},
          {"classes", class_sizes(g)},
          {"center_order", center(g).size()},
          {"commutator_order", comm.size()},
          {"abelian", is_abelian(g, generated_subgroup(g, g.generators()))},
          {"abelian_centralizers", has_abelian_centralizers(g)},
          {"images", images},
          {"exponents", e.exponents},
          {"per_orbit_extension", e.per_orbit_extension}};
}

json candidate_to_json(const Candidate& c) {
  json audit = json::array();
  for (const auto& a : c.audit)
    audit.push_back({{"rule", a.rule}, {"applicable", a.applicable}, {"rejected", a.rejected}, {"witness", a.witness}});
  json j = {{"table", table_2d(c.quandle)},
            {"roles", {{"V", c.support_v}, {"W", c.support_w}}},
            {"branch", c.commuting ? "COMM" : "NC"},
            {"survived", c.survived},
            {"flagged", c.flagged},
            {"audit", audit},
            {"matched_catalog_name", c.catalog_name ? json(*c.catalog_name) : json(nullptr)}};
  if (!c.survived) j["rule_id"] = c.rejected_by;
  if (c.flagged) j["embeds_in"] = c.embeds_in ? json(*c.embeds_in) : json(nullptr);
  return j;
}

json classify_to_json(const ClassifyReport& r) {
  std::vector<const Candidate*> sorted;
  for (const auto& c : r.candidates) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(), [](const Candidate* a, const Candidate* b) {
    return std::tie(a->quandle, a->support_v) < std::tie(b->quandle, b->support_v);
  });
  json survivors = json::array(), rejections = json::array();
  for (const Candidate* c : sorted) {
    const json roles = {{"V", c->support_v}, {"W", c->support_w}};
    if (c->survived) {
      json s = {{"table", table_2d(c->quandle)},
                {"roles", roles},
                {"branch", c->commuting ? "COMM" : "NC"},
                {"flagged", c->flagged},
                {"matched_catalog_name", c->catalog_name ? json(*c->catalog_name) : json(nullptr)}};
      if (c->flagged) s["embeds_in"] = *c->embeds_in;
      survivors.push_back(std::move(s));
      continue;
    }
    std::vector<Elem> witness;
    for (const auto& a : c->audit)
      if (a.rule == c->rejected_by) witness = a.witness;
    rejections.push_back(
        {{"table", table_2d(c->quandle)}, {"roles", roles}, {"rule_id", c->rejected_by}, {"witness_tuple", witness}});
  }
  std::set<std::string> names;
  for (const auto* c : r.survivors()) names.insert(c->catalog_name.value_or("unmatched"));
  return {{"n_max", r.n_max},
          {"quandles_examined", r.quandles_examined},
          {"candidates_examined", r.candidates_examined},
          {"survivor_names", names},
          {"survivors", survivors},
          {"rejections", rejections}};
}

json charseq_record(const CharSeq& s) {
  std::set<CharSeq> rots;
  for (int j = 1; j <= static_cast<int>(s.size()); ++j) rots.insert(rotate(s, j));
  return {{"seq", s}, {"witnesses", sequence_witnesses(s)}, {"rotations", rots.size()}};
}

}  // namespace rank2::io
