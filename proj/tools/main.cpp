// Command-line front end over the C API: tubes | build | verify | oracle |
// export. Exit codes: 0 success, 2 input error, 3 resource guard,
// 4 verification failure.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cga/cga.h"

namespace {

using nlohmann::json;

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerify = 4;

struct Options {
  std::string input;
  std::string palette;
  std::string component = "all";
  std::string out;
  std::string format;
  std::size_t max_faces = 1000000;
  bool max_faces_set = false;
};

int exit_code(cga_status st) {
  switch (st) {
    case CGA_OK:
      return 0;
    case CGA_ERROR_INPUT:
      return kExitInput;
    case CGA_ERROR_RESOURCE:
      return kExitResource;
    default:
      return kExitVerify;
  }
}

int fail(cga_status st) {
  std::cerr << "error: " << cga_last_error() << "\n";
  return exit_code(st);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cga_string_free(s);
  return out;
}

bool read_file(const std::string& path, std::string* text) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  *text = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) return false;
  out << text;
  return out.good();
}

std::size_t effective_guard(const Options& opt) {
  if (opt.max_faces_set) return opt.max_faces;
  if (const char* env = std::getenv("COLORFUL_ASSOC_MAX_FACES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring invalid COLORFUL_ASSOC_MAX_FACES\n";
  }
  return opt.max_faces;
}

struct SpecHandle {
  cga_spec* ptr = nullptr;
  ~SpecHandle() { cga_spec_free(ptr); }
};

struct CollectionHandle {
  cga_collection* ptr = nullptr;
  ~CollectionHandle() { cga_collection_free(ptr); }
};

int load_spec(const Options& opt, const std::string& text, SpecHandle* spec) {
  cga_status st = cga_spec_parse(
      text.c_str(), opt.palette.empty() ? nullptr : opt.palette.c_str(),
      &spec->ptr);
  if (st != CGA_OK) return fail(st);
  return 0;
}

// Component selection: "all" or a single index.
int select_components(const Options& opt, std::size_t count,
                      std::vector<std::size_t>* picks) {
  if (opt.component == "all") {
    for (std::size_t i = 0; i < count; ++i) picks->push_back(i);
    return 0;
  }
  char* end = nullptr;
  unsigned long long v = std::strtoull(opt.component.c_str(), &end, 10);
  if (!end || *end != '\0' || v >= count) {
    std::cerr << "error: component must be 'all' or an index below " << count
              << "\n";
    return kExitInput;
  }
  picks->push_back(static_cast<std::size_t>(v));
  return 0;
}

std::string fvec_string(const json& fv) {
  std::string out = "(";
  for (std::size_t i = 0; i < fv.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(fv[i].get<std::size_t>());
  }
  return out + ")";
}

std::string chains_string(const json& root) {
  std::string out;
  const json& chains = root.at("chains");
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (i) out += ";";
    for (std::size_t k = 0; k < chains[i].size(); ++k) {
      if (k) out += ",";
      out += chains[i][k].get<std::string>();
    }
  }
  const json& block = root.at("universal_block");
  if (!block.empty()) {
    out += "|";
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += ",";
      out += block[k].get<std::string>();
    }
  }
  return out;
}

int run_tubes(const Options& opt, const std::string& text) {
  SpecHandle spec;
  if (int rc = load_spec(opt, text, &spec)) return rc;
  char* out = nullptr;
  if (cga_status st = cga_spec_tubes_json(spec.ptr, &out); st != CGA_OK) {
    return fail(st);
  }
  std::string payload = take(out);
  if (opt.format == "json") {
    std::cout << payload << "\n";
    return 0;
  }
  json j = json::parse(payload);
  for (const auto& tube : j.at("tubes")) {
    std::string nodes;
    for (const auto& n : tube.at("nodes")) {
      if (!nodes.empty()) nodes += ",";
      nodes += n.get<std::string>();
    }
    std::cout << "{" << nodes << "} " << tube.at("kind").get<std::string>()
              << "\n";
  }
  std::cout << j.at("count").get<std::size_t>() << " tubes: "
            << j.at("inner").get<std::size_t>() << " inner, "
            << j.at("outer").get<std::size_t>() << " outer, "
            << j.at("component").get<std::size_t>() << " component\n";
  return 0;
}

int run_build(const Options& opt, const std::string& text) {
  SpecHandle spec;
  if (int rc = load_spec(opt, text, &spec)) return rc;
  CollectionHandle coll;
  if (cga_status st = cga_build(spec.ptr, effective_guard(opt), &coll.ptr);
      st != CGA_OK) {
    return fail(st);
  }
  std::vector<std::size_t> picks;
  if (int rc = select_components(opt, cga_collection_size(coll.ptr), &picks)) {
    return rc;
  }
  bool out_is_dir = picks.size() > 1 && !opt.out.empty();
  if (out_is_dir) {
    std::error_code ec;
    std::filesystem::create_directories(opt.out, ec);
    if (ec) {
      std::cerr << "error: cannot create " << opt.out << "\n";
      return kExitInput;
    }
  }
  for (std::size_t i : picks) {
    char* out = nullptr;
    if (cga_status st = cga_component_summary_json(coll.ptr, i, &out);
        st != CGA_OK) {
      return fail(st);
    }
    json summary = json::parse(take(out));
    std::cout << "component " << i << ": root=["
              << chains_string(summary.at("root")) << "] f-vector="
              << fvec_string(summary.at("f_vector")) << " faces="
              << summary.at("faces").get<std::size_t>() << "\n";
    if (!opt.out.empty()) {
      char* dump = nullptr;
      if (cga_status st = cga_component_dump_json(coll.ptr, i, &dump);
          st != CGA_OK) {
        return fail(st);
      }
      std::string path = out_is_dir
                             ? opt.out + "/component" + std::to_string(i) + ".json"
                             : opt.out;
      if (!write_file(path, take(dump) + "\n")) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitInput;
      }
    }
  }
  return 0;
}

int run_verify(const Options& opt, const std::string& text) {
  int is_dump = 0;
  if (cga_status st = cga_input_is_dump(text.c_str(), &is_dump); st != CGA_OK) {
    return fail(st);
  }
  if (is_dump) {
    int ok = 0;
    char* out = nullptr;
    if (cga_status st = cga_dump_verify_json(text.c_str(), &ok, &out);
        st != CGA_OK) {
      return fail(st);
    }
    std::cout << take(out) << "\n";
    return ok ? 0 : kExitVerify;
  }
  SpecHandle spec;
  if (int rc = load_spec(opt, text, &spec)) return rc;
  CollectionHandle coll;
  if (cga_status st = cga_build(spec.ptr, effective_guard(opt), &coll.ptr);
      st != CGA_OK) {
    return fail(st);
  }
  std::vector<std::size_t> picks;
  if (int rc = select_components(opt, cga_collection_size(coll.ptr), &picks)) {
    return rc;
  }
  json reports = json::array();
  bool all_ok = true;
  for (std::size_t i : picks) {
    int ok = 0;
    char* out = nullptr;
    if (cga_status st = cga_component_verify_json(coll.ptr, i, &ok, &out);
        st != CGA_OK) {
      return fail(st);
    }
    reports.push_back(json::parse(take(out)));
    all_ok = all_ok && ok;
  }
  std::string payload = reports.dump(2);
  std::cout << payload << "\n";
  if (!opt.out.empty() && !write_file(opt.out, payload + "\n")) {
    std::cerr << "error: cannot write " << opt.out << "\n";
    return kExitInput;
  }
  return all_ok ? 0 : kExitVerify;
}

int run_oracle(const Options& opt, const std::string& text) {
  SpecHandle spec;
  if (int rc = load_spec(opt, text, &spec)) return rc;
  int ok = 0;
  char* out = nullptr;
  if (cga_status st =
          cga_oracle_json(spec.ptr, effective_guard(opt), 0, &ok, &out);
      st != CGA_OK) {
    return fail(st);
  }
  std::string payload = take(out);
  std::cout << payload << "\n";
  if (!opt.out.empty() && !write_file(opt.out, payload + "\n")) {
    std::cerr << "error: cannot write " << opt.out << "\n";
    return kExitInput;
  }
  return ok ? 0 : kExitVerify;
}

int run_export(const Options& opt, const std::string& text, bool skeleton) {
  SpecHandle spec;
  if (int rc = load_spec(opt, text, &spec)) return rc;
  CollectionHandle coll;
  if (cga_status st = cga_build(spec.ptr, effective_guard(opt), &coll.ptr);
      st != CGA_OK) {
    return fail(st);
  }
  std::vector<std::size_t> picks;
  if (int rc = select_components(opt, cga_collection_size(coll.ptr), &picks)) {
    return rc;
  }
  std::string payload;
  for (std::size_t i : picks) {
    char* out = nullptr;
    cga_status st = skeleton ? cga_component_skeleton_dot(coll.ptr, i, &out)
                             : cga_component_hasse_dot(coll.ptr, i, &out);
    if (st != CGA_OK) return fail(st);
    payload += take(out);
  }
  if (!opt.out.empty()) {
    if (!write_file(opt.out, payload)) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return kExitInput;
    }
  } else {
    std::cout << payload;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colorful graph associahedra"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_component) {
    cmd->add_option("input", opt.input, "graph spec JSON file")->required();
    cmd->add_option("--palette", opt.palette,
                    "override palette (comma-separated colors)");
    cmd->add_option("--max-faces", opt.max_faces, "face guard")
        ->each([&](const std::string&) { opt.max_faces_set = true; });
    if (with_component) {
      cmd->add_option("--component", opt.component, "component index or 'all'");
    }
  };

  CLI::App* tubes = app.add_subcommand("tubes", "list tubes with classification");
  add_common(tubes, false);
  opt.format = "text";
  tubes->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* build = app.add_subcommand("build", "build face posets");
  add_common(build, true);
  build->add_option("--out", opt.out, "dump file (or directory for several)");

  CLI::App* verify = app.add_subcommand("verify", "run the axiom suite");
  add_common(verify, true);
  verify->add_option("--out", opt.out, "also write the report here");

  CLI::App* oracle = app.add_subcommand("oracle", "run the cross-check oracles");
  add_common(oracle, false);
  oracle->add_option("--out", opt.out, "also write the report here");

  CLI::App* exp = app.add_subcommand("export", "emit DOT");
  add_common(exp, true);
  bool skeleton = false, hasse = false;
  exp->add_flag("--skeleton", skeleton, "1-skeleton of each component");
  exp->add_flag("--hasse", hasse, "Hasse diagram of each component");
  exp->add_option("--out", opt.out, "write DOT here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  std::string text;
  if (!read_file(opt.input, &text)) {
    std::cerr << "error: cannot read " << opt.input << "\n";
    return kExitInput;
  }

  if (tubes->parsed()) return run_tubes(opt, text);
  if (build->parsed()) return run_build(opt, text);
  if (verify->parsed()) return run_verify(opt, text);
  if (oracle->parsed()) return run_oracle(opt, text);
  if (exp->parsed()) {
    if (skeleton == hasse) {
      std::cerr << "error: choose exactly one of --skeleton or --hasse\n";
      return kExitInput;
    }
    return run_export(opt, text, skeleton);
  }
  return kExitInput;
}
