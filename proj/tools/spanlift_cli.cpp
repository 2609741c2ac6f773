// spanlift: layered-surface analysis of alternating link diagrams.
//
//   spanlift analyze  <pd|gauss|file> [--state ABB..] [--min-genus] [--nonor-genus] ...
//   spanlift classify <pd|gauss|file> --euler X --slope L --orientable yes|no|any
//   spanlift census   --data builtin:table1|FILE [--jobs K] [--format tsv|json]
//   spanlift states   <pd|gauss|file> [--filter all|basic|orientable|nonorientable]
//
// Exit status: 0 success, 1 census mismatch, 2 input or validation error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spanlift/spanlift.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace spanlift;

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

Diagram load_diagram(const std::string& arg, bool force_gauss) {
  const std::string text = read_input(arg);
  static const std::regex gauss_start(R"(^\s*(#[^\n]*\n\s*)*[OU]\d)");
  if (force_gauss || std::regex_search(text, gauss_start)) return parse_gauss(text);
  return parse_pd(text);
}

json surface_json(const State& s, const StateSurface& surf) {
  json j;
  j["state"] = s.str();
  j["f"] = surf.f;
  j["euler"] = surf.euler;
  j["a_count"] = surf.a_count;
  j["b_count"] = surf.b_count;
  j["twist"] = surf.twist;
  j["slope"] = surf.slope;
  j["orientable"] = surf.orientable;
  j["basic"] = surf.basic;
  j["connected"] = surf.connected;
  j["boundary_components"] = surf.boundary_components;
  if (surf.connected) {
    const GenusValue g = genus_of(surf);
    j["genus"] = fraction_json(g.value);
  }
  return j;
}

json genus_json(const GenusValue& g) { return {{"value", fraction_json(g.value)}, {"orientable", g.orientable}}; }

json min_genus_json(const MinGenusResult& r) {
  json j;
  j["best_f"] = r.best_f;
  j["euler"] = r.max_euler();
  j["genus"] = genus_json(r.min_genus);
  j["all_minimizers_orientable"] = r.all_minimizers_orientable;
  j["witness_count"] = r.witness_count;
  j["witnesses"] = json::array();
  for (const auto& s : r.witnesses) j["witnesses"].push_back(s.str());
  return j;
}

json class_json(const SurfaceClass& c) {
  return {{"euler", c.euler}, {"slope", c.slope}, {"orientable", c.orientable}};
}

void print_text(const json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const auto& v = it.value();
    if (v.is_object() && v.contains("num") && v.contains("den")) {
      const auto num = v["num"].get<std::int64_t>();
      const auto den = v["den"].get<std::int64_t>();
      std::cout << key << ": " << (den == 1 ? std::to_string(num) : std::to_string(num) + "/2") << '\n';
    } else if (v.is_object()) {
      print_text(v, key);
    } else if (v.is_array()) {
      std::cout << key << ":";
      for (const auto& e : v) {
        const std::string item = e.is_string() ? e.get<std::string>() : e.dump();
        std::cout << ' ' << (item.empty() ? "-" : item);
      }
      std::cout << '\n';
    } else if (v.is_boolean()) {
      std::cout << key << ": " << yes_no(v.get<bool>()) << '\n';
    } else if (v.is_string()) {
      std::cout << key << ": " << v.get<std::string>() << '\n';
    } else {
      std::cout << key << ": " << v.dump() << '\n';
    }
  }
}

struct AnalyzeOpts {
  std::string input;
  bool gauss = false;
  std::string state;
  bool min_genus = false;
  bool nonor_genus = false;
  bool orientable_genus = false;
  bool spectrum = false;
  std::optional<int> euler_floor;
  bool as_json = false;
};

int cmd_analyze(const AnalyzeOpts& o) {
  const Diagram d = load_diagram(o.input, o.gauss);
  json rep;
  json& dj = rep["diagram"];
  const auto fs = faces(d);
  dj["pd"] = d.to_pd();
  dj["crossings"] = d.crossing_count();
  dj["components"] = d.component_count();
  dj["faces"] = fs.size();
  dj["face_gons"] = json::array();
  for (const auto& f : fs) dj["face_gons"].push_back(f.gon);
  dj["writhe"] = writhe(d);
  dj["self_writhe"] = self_writhe(d);
  dj["aggregate_linking"] = fraction_json(aggregate_linking(d));
  dj["alternating"] = is_alternating(d);
  dj["reduced"] = is_reduced(d);
  dj["connected"] = is_connected(d);

  if (!o.state.empty()) {
    const State s = State::parse(o.state);
    rep["state"] = surface_json(s, resolve(d, s));
  }
  if (o.min_genus) rep["min_genus"] = min_genus_json(minimal_genus_algorithm(d));
  if (o.nonor_genus) {
    const auto r = nonorientable_genus_detail(d);
    rep["nonorientable_genus"] = fraction_json(r.genus.value);
    rep["nonorientable_crosscap_added"] = r.crosscap_added;
  }
  if (o.orientable_genus) rep["orientable_genus"] = fraction_json(spanlift::orientable_genus(d).value);
  if (o.spectrum) {
    const Spectrum sp = spanlift::spectrum(d, o.euler_floor);
    json sj;
    sj["euler_floor"] = sp.euler_floor;
    sj["base"] = json::array();
    for (const auto& b : sp.base) sj["base"].push_back(class_json(b));
    sj["classes"] = json::array();
    for (const auto& c : sp.classes) sj["classes"].push_back(class_json(c));
    rep["spectrum"] = std::move(sj);
  }

  if (o.as_json) {
    std::cout << rep.dump(2) << '\n';
  } else if (o.spectrum) {
    json copy = rep;
    copy.erase("spectrum");
    print_text(copy);
    std::cout << "spectrum.euler_floor: " << rep["spectrum"]["euler_floor"].get<int>() << '\n';
    std::cout << "spectrum\teuler\tslope\torientable\n";
    for (const auto& c : rep["spectrum"]["classes"])
      std::cout << "class\t" << c["euler"].get<int>() << '\t' << c["slope"].get<int>() << '\t'
                << yes_no(c["orientable"].get<bool>()) << '\n';
  } else {
    print_text(rep);
  }
  return 0;
}

struct ClassifyOpts {
  std::string input;
  bool gauss = false;
  int euler = 0;
  int slope = 0;
  std::string orientable = "any";
};

int cmd_classify(const ClassifyOpts& o) {
  const Diagram d = load_diagram(o.input, o.gauss);
  if (o.slope % 2 != 0) {
    std::cout << "not-achievable (odd slope)\n";
    return 0;
  }
  const auto base = spectrum_base(d);
  std::optional<Classification> hit;
  for (bool orient : {true, false}) {
    if ((o.orientable == "yes" && !orient) || (o.orientable == "no" && orient)) continue;
    Classification c = classify_against(base, {o.euler, o.slope, orient});
    if (c.verdict == Verdict::Achievable) {
      hit = c;
      break;
    }
  }
  if (!hit) {
    std::cout << "not-achievable\n";
    return 0;
  }
  const Witness& w = *hit->witness;
  const SurfaceClass reached = crosscap_additions(w.base, w.c_plus, w.c_minus, w.handles);
  std::cout << "achievable\n"
            << "surface: euler=" << reached.euler << " slope=" << reached.slope
            << " orientable=" << yes_no(reached.orientable) << '\n'
            << "witness: euler=" << w.base.euler << " slope=" << w.base.slope
            << " orientable=" << yes_no(w.base.orientable) << '\n'
            << "additions: crosscap+=" << w.c_plus << " crosscap-=" << w.c_minus << " handles=" << w.handles << '\n';
  return 0;
}

struct CensusOpts {
  std::string data = "builtin:table1";
  int jobs = 1;
  std::string format = "tsv";
  bool timings = false;
};

int cmd_census(const CensusOpts& o) {
  const auto entries = load_census(o.data);
  const CensusReport rep = verify_census(entries, o.jobs);
  if (o.format == "json")
    std::cout << report_json(rep, o.timings).dump(2) << '\n';
  else
    std::cout << report_tsv(rep, o.timings);
  return rep.mismatched == 0 ? 0 : kExitMismatch;
}

struct StatesOpts {
  std::string input;
  bool gauss = false;
  std::string filter = "all";
};

int cmd_states(const StatesOpts& o) {
  const Diagram d = load_diagram(o.input, o.gauss);
  StateFilter f = StateFilter::All;
  if (o.filter == "basic") f = StateFilter::Basic;
  if (o.filter == "orientable") f = StateFilter::Orientable;
  if (o.filter == "nonorientable") f = StateFilter::Nonorientable;
  std::cout << "state\tf\teuler\ttwist\tslope\torientable\tbasic\n";
  for_each_state(d, f, [](const State& s, const StateSurface& surf) {
    std::cout << (s.size() ? s.str() : "-") << '\t' << surf.f << '\t' << surf.euler << '\t' << surf.twist << '\t'
              << surf.slope << '\t' << yes_no(surf.orientable) << '\t' << yes_no(surf.basic) << '\n';
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered spanning surfaces of alternating links"};
  app.require_subcommand(1);

  AnalyzeOpts ao;
  auto* analyze = app.add_subcommand("analyze", "Diagram summary, state surfaces and genera");
  analyze->add_option("input", ao.input, "PD code, Gauss code or file")->required();
  analyze->add_flag("--gauss", ao.gauss, "Read the input as a signed Gauss code");
  analyze->add_option("--state", ao.state, "State string over {A,B}, one letter per crossing");
  analyze->add_flag("--min-genus", ao.min_genus, "Run the minimal genus search");
  analyze->add_flag("--nonor-genus", ao.nonor_genus, "Nonorientable genus");
  analyze->add_flag("--orientable-genus", ao.orientable_genus, "Seifert genus for the default orientation");
  analyze->add_flag("--spectrum", ao.spectrum, "Achievable (euler, slope, orientable) classes");
  analyze->add_option("--euler-floor", ao.euler_floor, "Lowest Euler characteristic listed by --spectrum");
  analyze->add_flag("--json", ao.as_json, "Emit JSON");

  ClassifyOpts co;
  auto* classify = app.add_subcommand("classify", "Is a surface class achievable?");
  classify->add_option("input", co.input, "PD code, Gauss code or file")->required();
  classify->add_flag("--gauss", co.gauss, "Read the input as a signed Gauss code");
  classify->add_option("--euler", co.euler, "Euler characteristic")->required();
  classify->add_option("--slope", co.slope, "Aggregate slope")->required();
  classify->add_option("--orientable", co.orientable, "yes, no or any")
      ->check(CLI::IsMember({"yes", "no", "any"}));

  CensusOpts cso;
  auto* census = app.add_subcommand("census", "Verify nonorientable genus against a census");
  census->add_option("--data", cso.data, "builtin:table1 or a CSV path");
  census->add_option("--jobs", cso.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census->add_option("--format", cso.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  census->add_flag("--timings", cso.timings, "Include per-entry runtimes (output is then not reproducible)");

  StatesOpts so;
  auto* states = app.add_subcommand("states", "Dump every state surface as TSV");
  states->add_option("input", so.input, "PD code, Gauss code or file")->required();
  states->add_flag("--gauss", so.gauss, "Read the input as a signed Gauss code");
  states->add_option("--filter", so.filter, "all, basic, orientable or nonorientable")
      ->check(CLI::IsMember({"all", "basic", "orientable", "nonorientable"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(ao);
    if (*classify) return cmd_classify(co);
    if (*census) return cmd_census(cso);
    if (*states) return cmd_states(so);
  } catch (const spanlift::Error& e) {
    std::cerr << "spanlift: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "spanlift: internal error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
