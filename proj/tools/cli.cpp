#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "tam/constructions.hpp"
#include "tam/explore.hpp"
#include "tam/fuzzy.hpp"
#include "tam/render.hpp"
#include "tam/tdsl.hpp"

namespace tam::cli {
namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

// Parse errors gain the file name; the offending line follows on its own.
[[noreturn]] void rethrow_with_path(const ParseError& e, const std::string& path) {
  throw Error(path + ":" + e.what() + "\n  | " + e.excerpt());
}

TileSetDocument load_tileset(const std::string& path) {
  auto text = read_file(path);
  try {
    return parse_tileset(text);
  } catch (const ParseError& e) {
    rethrow_with_path(e, path);
  }
}

Assembly load_assembly(const std::string& path, const TileSet& tiles) {
  auto text = read_file(path);
  try {
    return parse_assembly(text, tiles);
  } catch (const ParseError& e) {
    rethrow_with_path(e, path);
  }
}

std::vector<Point> load_shape(const std::string& path) {
  auto text = read_file(path);
  try {
    return parse_shape(text);
  } catch (const ParseError& e) {
    rethrow_with_path(e, path);
  }
}

struct CapOptions {
  std::size_t max_tiles = 64;
  std::size_t max_supertiles = 1'000'000;
  unsigned threads = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-tiles", max_tiles, "largest supertile explored")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-supertiles", max_supertiles, "producible set size cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--threads", threads, "worker threads (0: all cores)")->capture_default_str();
  }

  ExploreConfig config(Temperature tau) const {
    ExploreConfig cfg;
    cfg.temperature = tau;
    cfg.max_tiles = max_tiles;
    cfg.max_supertiles = max_supertiles;
    cfg.threads = threads;
    return cfg;
  }
};

int cmd_validate(const std::string& path, std::ostream& out) {
  auto doc = load_tileset(path);
  out << "ok: " << doc.tiles.size() << " tile types, " << doc.tiles.glue_count() - 1
      << " glues, temperature " << doc.temperature.value() << "\n";
  return kSuccess;
}

int cmd_explore(const std::string& path, std::optional<int> temp, const CapOptions& caps,
                const std::string& out_dir, bool terminals_only, std::ostream& out) {
  auto doc = load_tileset(path);
  const Temperature tau = temp ? Temperature(*temp) : doc.temperature;
  auto result = explore(doc.tiles, caps.config(tau));
  const auto& set = result.set;
  const auto terms = terminals(set, doc.tiles, tau);

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    auto listing = manifest(set, doc.tiles, terminals_only);
    write_file(fs::path(out_dir) / "manifest.txt", listing);
    // supertile_<k>.asm holds the supertile on manifest line k.
    std::istringstream lines(listing);
    std::string line;
    for (std::size_t k = 1; std::getline(lines, line); ++k) {
      auto key = line.substr(0, line.find(' '));
      const auto& s = set[*set.find(key)].supertile;
      write_file(fs::path(out_dir) / ("supertile_" + std::to_string(k) + ".asm"),
                 serialize_assembly(s.assembly(), doc.tiles));
    }
  }

  out << "temperature: " << tau.value() << "\n"
      << "supertiles: " << set.size() << "\n"
      << "terminals: " << terms.size() << (set.saturated() ? "" : " (within explored universe)") << "\n"
      << "saturated: " << (set.saturated() ? "true" : "false") << "\n"
      << "cap_hits: " << result.report.cap_hits << "\n"
      << "combination_queries: " << result.report.combination_queries << "\n";
  return set.saturated() ? kSuccess : kInconclusive;
}

int cmd_fuzzy(const std::string& path, const CapOptions& caps, const std::string& shape_path,
              const std::string& report_path, std::ostream& out) {
  auto doc = load_tileset(path);
  std::optional<std::vector<Point>> shape;
  if (!shape_path.empty()) shape = load_shape(shape_path);
  auto report = fuzzy_check(doc.tiles, caps.config(Temperature(2)), shape);
  auto text = format_report(report, doc.tiles);
  if (report_path.empty()) {
    out << text;
  } else {
    write_file(report_path, text);
    out << "verdict: " << to_string(report.verdict) << "\n"
        << "violations: " << report.violations.size() << "\n";
  }
  switch (report.verdict) {
    case Verdict::Pass: return kSuccess;
    case Verdict::Fail: return kFail;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_gen(const std::string& kind, std::optional<int> n, const std::string& id, const std::string& out_path,
            std::ostream& out) {
  std::optional<TileSet> tiles;
  Temperature tau(2);
  if (kind == "demo") {
    if (id.empty()) throw Error("gen demo needs --id");
    tiles = gen_demo(id);
  } else {
    if (!n) throw Error("gen " + kind + " needs --n");
    if (kind == "comb") {
      tiles = gen_comb(*n);
      tau = Temperature(1);
    } else if (kind == "counter") {
      tiles = gen_counter(*n);
    } else {
      tiles = gen_fuzzy_square(*n);
    }
  }
  auto text = serialize_tileset(*tiles, tau);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return kSuccess;
}

int cmd_render(const std::string& asm_path, const std::string& tds_path, const std::string& svg_path,
               const RenderOptions& options, std::ostream& out) {
  auto doc = load_tileset(tds_path);
  auto a = load_assembly(asm_path, doc.tiles);
  auto svg = render_svg(a, doc.tiles, options);
  if (svg_path.empty()) {
    out << svg;
  } else {
    write_file(svg_path, svg);
  }
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-handed tile assembly simulator and fuzzy temperature verifier", "tamsim"};
  app.require_subcommand(1);

  std::string tds_path;
  auto* validate = app.add_subcommand("validate", "parse-check a tile set");
  validate->add_option("tileset", tds_path, "tile set (.tds)")->required();

  std::string explore_path, out_dir;
  std::optional<int> temp;
  bool terminals_only = false;
  CapOptions explore_caps;
  auto* explore_cmd = app.add_subcommand("explore", "enumerate producible supertiles");
  explore_cmd->add_option("tileset", explore_path, "tile set (.tds)")->required();
  explore_cmd->add_option("--temp", temp, "temperature (default: the file's, else 2)")->check(CLI::Range(1, 1 << 20));
  explore_caps.add_to(explore_cmd);
  explore_cmd->add_option("--out", out_dir, "directory for manifest.txt and supertile_<k>.asm");
  explore_cmd->add_flag("--terminals-only", terminals_only, "list terminal supertiles only");

  std::string fuzzy_path, shape_path, report_path;
  CapOptions fuzzy_caps;
  auto* fuzzy = app.add_subcommand("fuzzy", "check fuzzy temperature fault-tolerance");
  fuzzy->add_option("tileset", fuzzy_path, "tile set (.tds)")->required();
  fuzzy_caps.add_to(fuzzy);
  fuzzy->add_option("--shape", shape_path, "target shape (.asm, names ignored)");
  fuzzy->add_option("--report", report_path, "write the full report here");

  std::string kind, demo_id, gen_out;
  std::optional<int> gen_n;
  auto* gen = app.add_subcommand("gen", "write a generated tile set");
  gen->add_option("kind", kind, "comb, counter, square or demo")
      ->required()
      ->check(CLI::IsMember({"comb", "counter", "square", "demo"}));
  gen->add_option("--n", gen_n, "square side, or counter width");
  gen->add_option("--id", demo_id, "demo: all_strength2, strength1_pair or error_prone");
  gen->add_option("--out", gen_out, "output file (.tds)");

  std::string render_asm, render_tds, svg_path;
  RenderOptions render_options;
  auto* render = app.add_subcommand("render", "draw an assembly as SVG");
  render->add_option("assembly", render_asm, "assembly (.asm)")->required();
  render->add_option("--tileset", render_tds, "tile set (.tds)")->required();
  render->add_option("--svg", svg_path, "output file");
  render->add_option("--cell", render_options.cell_size, "cell size in pixels")
      ->check(CLI::Range(8, 4096))
      ->capture_default_str();
  render->add_flag("--labels", render_options.show_labels, "draw glue labels");
  render->add_flag("--ticks", render_options.show_ticks, "one tick per unit of bond strength");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e, out, err);
      return kSuccess;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(tds_path, out);
    if (*explore_cmd) return cmd_explore(explore_path, temp, explore_caps, out_dir, terminals_only, out);
    if (*fuzzy) return cmd_fuzzy(fuzzy_path, fuzzy_caps, shape_path, report_path, out);
    if (*gen) return cmd_gen(kind, gen_n, demo_id, gen_out, out);
    if (*render) return cmd_render(render_asm, render_tds, svg_path, render_options, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace tam::cli
