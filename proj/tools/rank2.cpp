// rank2: command-line front end. Exit codes: 0 ok, 2 input error,
// 3 resource cap, 4 invariant violation.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rank2/errors.hpp"
#include "rank2/io.hpp"

using namespace rank2;
using io::json;

namespace {

enum Exit { kOk = 0, kInput = 2, kResource = 3, kInvariant = 4 };

struct QuandleSource {
  std::string catalog, file;
};

void add_source(CLI::App* cmd, QuandleSource& src) {
  auto* c = cmd->add_option("--catalog", src.catalog, "built-in quandle name");
  auto* f = cmd->add_option("--file", src.file, "quandle file (text or JSON)");
  c->excludes(f);
}

Quandle load(const QuandleSource& src) {
  if (!src.catalog.empty()) return catalog(src.catalog);
  if (!src.file.empty()) return io::read_quandle_file(src.file);
  throw ArgumentError("give --catalog or --file");
}

// A path if one exists, otherwise a catalog name.
Quandle load_any(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::read_quandle_file(arg);
  return catalog(arg);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<Elem> parse_elems(const std::string& s) {
  std::vector<Elem> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ArgumentError("bad element list: " + s);
    out.push_back(v);
  }
  return out;
}

json descriptor_arg(const std::string& arg) {
  const std::string text = std::filesystem::exists(arg) ? io::read_file(arg) : arg;
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ArgumentError("module descriptor: " + std::string(e.what()));
  }
}

int cmd_quandle(const QuandleSource& src, const std::vector<std::string>& iso, bool as_json) {
  if (!iso.empty()) {
    const Quandle a = load_any(iso.at(0)), b = load_any(iso.at(1));
    const auto f = isomorphic(a, b);
    if (as_json) {
      print({{"isomorphic", f.has_value()}, {"map", f ? json(f->map) : json(nullptr)}});
    } else if (f) {
      for (int i = 1; i <= a.size(); ++i) std::cout << i << " -> " << (*f)(i) << '\n';
    } else {
      std::cout << "none\n";
    }
    return kOk;
  }
  const Quandle q = load(src);
  const auto orbits = inner_orbits(q);
  const auto match = catalog_match(q);
  if (as_json) {
    json j = io::quandle_to_json(q);
    j["axioms"] = true;
    j["crossed_set"] = q.is_crossed_set();
    j["orbits"] = orbits;
    j["indecomposable"] = orbits.size() == 1;
    j["catalog_match"] = match ? json(*match) : json(nullptr);
    print(j);
    return kOk;
  }
  std::cout << "size: " << q.size() << "\ntable:\n" << io::quandle_to_text(q).substr(io::quandle_to_text(q).find('\n') + 1);
  std::cout << "axioms: true\ncrossed_set: " << std::boolalpha << q.is_crossed_set() << "\norbits: " << orbits.size();
  for (const auto& o : orbits) {
    std::cout << " {";
    for (std::size_t k = 0; k < o.size(); ++k) std::cout << (k ? "," : "") << o[k];
    std::cout << '}';
  }
  std::cout << "\nindecomposable: " << (orbits.size() == 1) << "\ncatalog_match: " << match.value_or("none") << '\n';
  return kOk;
}

int cmd_envgroup(const QuandleSource& src, std::size_t coset_cap, bool with_group) {
  const Quandle q = load(src);
  const auto env = finite_enveloping_group(q, CosetOptions{coset_cap});
  json j = io::envelope_to_json(env);
  j["injective"] = injectivity_test(q, env);
  if (with_group) j["group"] = io::group_to_json(env.group);
  print(j);
  return kOk;
}

int cmd_charseqs(int max_len, const std::string& emit) {
  if (max_len > 20) throw ArgumentError("--max-len is at most 20");
  if (emit == "list") {
    print(enumerate_charseqs(max_len));
    return kOk;
  }
  bool first = true;
  if (emit == "csv") std::cout << "seq,witnesses,rotations\n";
  if (emit == "json") std::cout << '[';
  for_each_charseq(max_len, [&](const CharSeq& s) {
    const json r = io::charseq_record(s);
    if (emit == "json") {
      std::cout << (first ? "\n  " : ",\n  ") << r.dump();
    } else {
      auto spaced = [](const json& a) {
        std::string out;
        for (const auto& v : a) out += (out.empty() ? "" : " ") + v.dump();
        return out;
      };
      std::cout << spaced(r.at("seq")) << ',' << spaced(r.at("witnesses")) << ',' << r.at("rotations").dump() << '\n';
    }
    first = false;
  });
  if (emit == "json") std::cout << (first ? "]\n" : "\n]\n");
  return kOk;
}

int cmd_adjoint(const std::string& v_arg, const std::string& w_arg, int m, long tensor_cap, bool cross_check) {
  const auto dv = io::descriptor_from_json(descriptor_arg(v_arg));
  const auto dw = io::descriptor_from_json(descriptor_arg(w_arg));
  if (dv.group_ref != dw.group_ref) throw ArgumentError("V and W must share group_ref");
  const auto g = io::resolve_group(dv.group_ref);
  BraidedPair p(io::build_module(g, dv), io::build_module(g, dw), NicholsOptions{tensor_cap});
  json j = io::adjoint_report_to_json(adjoint_power_report(p, m), *g.group);
  if (cross_check) {
    const int x = x_space_dim(p, m);
    if (x != j.at("rank").get<int>()) throw InvariantViolation("adjoint dimension differs from dim X_m");
    j["x_space_dim"] = x;
  }
  print(j);
  return kOk;
}

int cmd_certify(const QuandleSource& src, std::optional<int> v_orbit, const std::string& sv, const std::string& sw,
                bool proxy) {
  const Quandle q = load(src);
  const TwoOrbitContext ctx = v_orbit ? TwoOrbitContext::from_orbits(q, *v_orbit)
                                      : TwoOrbitContext(q, parse_elems(sv), parse_elems(sw));
  print(io::candidate_to_json(evaluate_candidate(ctx, ClassifyOptions{q.size(), proxy})));
  return kOk;
}

int cmd_classify(int n_max, bool proxy) {
  print(io::classify_to_json(classify(ClassifyOptions{n_max, proxy})));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-two Nichols algebra toolkit: quandles, enveloping groups, adjoint powers"};
  app.require_subcommand(1);

  QuandleSource qsrc, esrc, csrc;
  std::vector<std::string> iso;
  bool as_json = false;
  auto* quandle = app.add_subcommand("quandle", "axioms, orbits, indecomposability and catalog match");
  add_source(quandle, qsrc);
  quandle->add_option("--iso", iso, "two quandles (files or catalog names)")->expected(2);
  quandle->add_flag("--json", as_json, "JSON output");

  std::size_t coset_cap = CosetOptions{}.max_cosets;
  bool with_group = false;
  auto* envgroup = app.add_subcommand("envgroup", "finite enveloping group");
  add_source(envgroup, esrc);
  envgroup->add_option("--coset-cap", coset_cap, "coset budget")->check(CLI::PositiveNumber);
  envgroup->add_flag("--group-json", with_group, "include the multiplication table");

  int max_len = 8;
  std::string emit = "json";
  auto* charseqs = app.add_subcommand("charseqs", "characteristic sequences");
  charseqs->alias("char-seqs");
  charseqs->add_option("--max-len", max_len, "largest length (<= 20)")->check(CLI::NonNegativeNumber);
  charseqs->add_option("--emit", emit, "json | csv | list")->check(CLI::IsMember({"json", "csv", "list"}));

  std::string v_arg, w_arg;
  int m = 1;
  long tensor_cap = NicholsOptions{}.tensor_cap;
  bool cross_check = false;
  auto* adjoint = app.add_subcommand("adjoint", "dimension of (ad V)^m(W)");
  adjoint->add_option("--v", v_arg, "module descriptor for V (file or inline JSON)")->required();
  adjoint->add_option("--w", w_arg, "module descriptor for W (file or inline JSON)")->required();
  adjoint->add_option("--m", m, "power")->check(CLI::PositiveNumber);
  adjoint->add_option("--tensor-cap", tensor_cap, "largest tensor dimension")->check(CLI::PositiveNumber);
  adjoint->add_flag("--cross-check", cross_check, "also compute dim X_m");

  std::optional<int> v_orbit;
  std::string sv, sw;
  bool no_proxy = false;
  auto* certify = app.add_subcommand("certify", "degree-calculus rules on one (quandle, supports) context");
  add_source(certify, csrc);
  auto* vo = certify->add_option("--v-orbit", v_orbit, "inner orbit (0 or 1) carrying V")->check(CLI::Range(0, 1));
  auto* svo = certify->add_option("--support-v", sv, "comma-separated supp V");
  auto* swo = certify->add_option("--support-w", sw, "comma-separated supp W");
  vo->excludes(svo)->excludes(swo);
  svo->needs(swo);
  swo->needs(svo);
  certify->add_flag("--no-noncommuting-pair", no_proxy, "drop the non-commuting pair requirement");

  int n_max = 6;
  bool classify_no_proxy = false;
  auto* classify_cmd = app.add_subcommand("classify", "two-orbit crossed sets surviving every rule");
  classify_cmd->add_option("--n-max", n_max, "largest quandle size (<= 8)");
  classify_cmd->add_flag("--no-noncommuting-pair", classify_no_proxy, "drop the non-commuting pair requirement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*quandle) return cmd_quandle(qsrc, iso, as_json);
    if (*envgroup) return cmd_envgroup(esrc, coset_cap, with_group);
    if (*charseqs) return cmd_charseqs(max_len, emit);
    if (*adjoint) return cmd_adjoint(v_arg, w_arg, m, tensor_cap, cross_check);
    if (*certify) {
      if (!v_orbit && sv.empty()) throw ArgumentError("give --v-orbit or --support-v/--support-w");
      return cmd_certify(csrc, v_orbit, sv, sw, !no_proxy);
    }
    if (*classify_cmd) return cmd_classify(n_max, !classify_no_proxy);
  } catch (const ArgumentError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  }
  return kOk;
}
