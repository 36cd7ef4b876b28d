// Command-line front end: analyze tournaments, enumerate classes, generate
// and match classified forms, convert between formats, run the verification
// suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlab/codec.hpp"
#include "tlab/enumeration.hpp"
#include "tlab/forms.hpp"
#include "tlab/indices.hpp"
#include "tlab/modular.hpp"
#include "tlab/parallel.hpp"
#include "tlab/verify.hpp"

using json = nlohmann::ordered_json;
using namespace tlab;

namespace {

// Accepted input spellings: compact code ("T5:0A"), catalog name
// ("name:U5"), or a path to a .trn file.
Tournament read_input(const std::string& arg) {
  if (arg.rfind("name:", 0) == 0) return catalog(arg.substr(5));
  if (arg.size() >= 2 && arg[0] == 'T' && std::isdigit(arg[1]) &&
      arg.find(':') != std::string::npos)
    return decode_compact(arg);
  std::ifstream in(arg);
  if (!in) throw ParseError("ParseError: cannot open " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_trn(buf.str());
}

json set_to_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (VertexSet s : sets) out.push_back(set_members(s));
  return out;
}

json arcs_to_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (Arc a : arcs) out.push_back({a.first, a.second});
  return out;
}

std::filesystem::path cache_dir_from(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("TOURNAMENT_LAB_CACHE")) return env;
  return {};
}

json analyze(const Tournament& t, Enumerator& reps) {
  ModuleReport mods = module_report(t);
  json out;
  out["n"] = t.n();
  out["code"] = encode_compact(t);
  out["indecomposable"] = is_indecomposable(t);
  out["nontrivial_modules"] = set_to_json(mods.nontrivial_modules);
  out["minimal_comodules"] = set_to_json(mods.minimal_comodules);
  IndexReport idx = index_report(t);
  out["big_delta"] = idx.big_delta;
  out["small_delta"] =
      idx.small_delta ? json(*idx.small_delta) : json(nullptr);
  out["delta_decomposition"] = set_to_json(idx.decomposition.blocks);
  out["witness_arcs"] =
      idx.witness_arcs ? arcs_to_json(*idx.witness_arcs) : json(nullptr);
  out["delta_maximal"] =
      idx.small_delta ? json(is_delta_maximal(t)) : json(nullptr);
  out["Delta_maximal"] =
      t.n() >= 3 ? json(is_big_delta_maximal(t)) : json(nullptr);
  json forms = json::array();
  if (t.n() <= kDefaultCanonCap)
    for (FormId id : match_forms(t, reps)) forms.push_back(form_tag(id));
  out["forms"] = forms;
  return out;
}

void print_analysis_text(const json& a, std::ostream& os) {
  for (const auto& [key, value] : a.items())
    os << key << ": " << value.dump() << "\n";
}

json report_to_json(const VerificationReport& r) {
  json out;
  out["check"] = r.check_id;
  out["n_lo"] = r.n_lo;
  out["n_hi"] = r.n_hi;
  out["pass"] = r.pass;
  out["instances_checked"] = r.instances_checked;
  out["counterexamples"] = r.total_counterexamples;
  json samples = json::array();
  for (const Counterexample& c : r.counterexamples)
    samples.push_back({{"code", c.code}, {"details", c.details}});
  out["samples"] = samples;
  out["elapsed_seconds"] = r.elapsed_seconds;
  return out;
}

std::pair<int, int> parse_range(const std::string& range) {
  auto dots = range.find("..");
  if (dots == std::string::npos)
    throw ParseError("ParseError: range must look like 3..7, got " + range);
  try {
    return {std::stoi(range.substr(0, dots)), std::stoi(range.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("ParseError: bad range " + range);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tournament structure toolkit"};
  app.require_subcommand(1);

  std::string cache_flag;
  int jobs = 0;
  bool text = false;
  app.add_option("--cache-dir", cache_flag,
                 "enumeration cache directory (overrides TOURNAMENT_LAB_CACHE)");
  app.add_option("--jobs", jobs, "worker count bound (0 = all cores)");
  app.add_flag("--text", text, "human-readable output instead of JSON");

  std::string input;
  auto* cmd_analyze = app.add_subcommand("analyze", "full structural report");
  cmd_analyze->add_option("input", input, "compact code, .trn path or name:X")
      ->required();

  int enum_n = 0;
  std::string predicate;
  bool count_only = false;
  auto* cmd_enum = app.add_subcommand("enum", "list isomorphism classes");
  cmd_enum->add_option("n", enum_n, "vertex count")->required();
  cmd_enum->add_option("--predicate", predicate,
                       "indecomposable | decomposable | delta_maximal | "
                       "Delta_maximal");
  cmd_enum->add_flag("--count-only", count_only, "print the count only");

  std::string checks = "all";
  std::string range = "1..8";
  auto* cmd_verify = app.add_subcommand("verify", "run exhaustive checks");
  cmd_verify->add_option("--checks", checks, "comma-separated ids, or 'all'");
  cmd_verify->add_option("--n-range", range, "orders to sweep, e.g. 3..7");

  std::string form;
  int form_n = 1;
  auto* cmd_gen = app.add_subcommand("gen", "generate all instances of a form");
  cmd_gen->add_option("form", form, "form tag, e.g. F3")->required();
  cmd_gen->add_option("--n", form_n, "theorem parameter")->required();

  auto* cmd_match = app.add_subcommand("match", "forms covering the input");
  cmd_match->add_option("input", input, "compact code, .trn path or name:X")
      ->required();

  std::string to = "code";
  auto* cmd_convert = app.add_subcommand("convert", "re-encode the input");
  cmd_convert->add_option("input", input, "compact code, .trn path or name:X")
      ->required();
  cmd_convert->add_option("--to", to, "trn | code")
      ->check(CLI::IsMember({"trn", "code"}));

  // global flags may appear after the subcommand too
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    set_max_jobs(jobs);
    Enumerator reps(cache_dir_from(cache_flag));

    if (cmd_analyze->parsed()) {
      json a = analyze(read_input(input), reps);
      if (text)
        print_analysis_text(a, std::cout);
      else
        std::cout << a.dump(2) << "\n";
    } else if (cmd_enum->parsed()) {
      std::vector<CanonicalCode> codes =
          predicate.empty() ? reps.representatives(enum_n)
                            : reps.filter(enum_n, predicate);
      if (count_only)
        std::cout << codes.size() << "\n";
      else
        for (const CanonicalCode& c : codes) std::cout << c.str() << "\n";
    } else if (cmd_verify->parsed()) {
      auto [lo, hi] = parse_range(range);
      std::vector<std::string> ids;
      if (checks == "all") {
        ids = check_ids();
      } else {
        std::istringstream ss(checks);
        for (std::string id; std::getline(ss, id, ',');)
          if (!id.empty()) ids.push_back(id);
      }
      bool all_pass = true;
      for (const std::string& id : ids) {
        VerificationReport r = run_check(id, lo, hi, reps);
        all_pass = all_pass && r.pass;
        if (text)
          std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.check_id << "  ("
                    << r.instances_checked << " instances, "
                    << r.total_counterexamples << " counterexamples)\n";
        else
          std::cout << report_to_json(r).dump() << "\n";
      }
      return all_pass ? 0 : 1;
    } else if (cmd_gen->parsed()) {
      FormId id = parse_form_tag(form);
      int vertices = form_vertices(id, form_n);
      if (form_n < form_shape(id).min_n)
        throw BadForm("BadForm: " + form + " needs n >= " +
                      std::to_string(form_shape(id).min_n));
      for (const CanonicalCode& c : generate_form(id, vertices, reps))
        std::cout << c.str() << "\n";
    } else if (cmd_match->parsed()) {
      json tags = json::array();
      for (FormId id : match_forms(read_input(input), reps))
        tags.push_back(form_tag(id));
      std::cout << tags.dump() << "\n";
    } else if (cmd_convert->parsed()) {
      Tournament t = read_input(input);
      if (to == "trn")
        std::cout << encode_trn(t);
      else
        std::cout << encode_compact(t) << "\n";
    }
    return 0;
  } catch (const UnknownCheck& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const BadForm& e) {
    std::cerr << e.what() << "\n";
    return 5;
  } catch (const TooLarge& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const TooSmall& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
