// kmosaic — knot mosaic toolbox.
//
// Subcommands operate on mosaic files (text or JSON, "-" for stdin) and
// print results on stdout. Exit codes: 0 success, 1 domain failure (invalid
// mosaic, unsatisfied constraint, negative verdict), 2 usage or parse error,
// 3 oracle failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kmosaic/kmosaic.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;
constexpr int exit_oracle = 3;

struct command_error {
  int code;
  std::string message;
};

kmosaic::mosaic load_mosaic(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw command_error{exit_usage, "cannot open '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return kmosaic::parse_mosaic(text);
}

void print_mosaic(const kmosaic::mosaic& m, bool as_json) {
  std::cout << kmosaic::write_mosaic(
      m, as_json ? kmosaic::mosaic_format::json : kmosaic::mosaic_format::text);
}

nlohmann::json jones_json(const kmosaic::jones_poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"exponent_quarter_units", it->first}, {"coefficient", it->second}});
  return {{"display", kmosaic::to_display_string(p)}, {"terms", terms}};
}

int run(int argc, char** argv) {
  using namespace kmosaic;

  CLI::App app{"knot mosaic toolbox"};
  app.require_subcommand(1);
  int exit_code = exit_ok;

  // validate FILE
  {
    auto* cmd = app.add_subcommand("validate", "check suitable connectivity");
    auto file = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "mosaic file or -")->required();
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=, &exit_code]() {
      const bool ok = is_suitably_connected(load_mosaic(*file));
      if (*as_json)
        std::cout << nlohmann::json{{"suitably_connected", ok}}.dump() << "\n";
      else
        std::cout << "suitably_connected: " << (ok ? "true" : "false") << "\n";
      exit_code = ok ? exit_ok : exit_domain;
    });
  }

  // stats FILE
  {
    auto* cmd = app.add_subcommand("stats", "dimension, crossing and component counts");
    auto file = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "mosaic file or -")->required();
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=, &exit_code]() {
      const mosaic m = load_mosaic(*file);
      const bool connected = is_suitably_connected(m);
      nlohmann::json doc{{"n", m.dimension()}, {"crossings", number_of_crossings(m)}};
      std::ostringstream line;
      line << "n=" << m.dimension() << " crossings=" << number_of_crossings(m);
      if (connected) {
        const int components = number_of_components(m);
        doc["components"] = components;
        line << " components=" << components;
      } else {
        doc["suitably_connected"] = false;
        exit_code = exit_domain;
      }
      std::cout << (*as_json ? doc.dump() : line.str()) << "\n";
    });
  }

  // pd FILE [--strict]
  {
    auto* cmd = app.add_subcommand("pd", "planar diagram code as JSON");
    auto file = std::make_shared<std::string>();
    auto strict = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "mosaic file or -")->required();
    cmd->add_flag("--strict", *strict, "fail when crossing-free components are skipped");
    cmd->add_flag("--json", "output is always JSON");
    cmd->callback([=, &exit_code]() {
      const pd_code code = planar_diagram_code(load_mosaic(*file));
      std::cout << write_pd_json(code);
      if (*strict && !code.skipped_components.empty()) exit_code = exit_domain;
    });
  }

  // jones FILE
  {
    auto* cmd = app.add_subcommand("jones", "Jones polynomial via the Kauffman bracket");
    auto file = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    auto cap = std::make_shared<int>(default_crossing_cap);
    cmd->add_option("file", *file, "mosaic file or -")->required();
    cmd->add_option("--max-crossings", *cap, "state-sum crossing cap");
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=]() {
      const jones_poly jones = jones_polynomial(load_mosaic(*file), *cap);
      if (*as_json)
        std::cout << jones_json(jones).dump() << "\n";
      else
        std::cout << to_display_string(jones) << "\n";
    });
  }

  // random -n N [constraints]
  {
    auto* cmd = app.add_subcommand("random", "generate a random mosaic");
    auto spec = std::make_shared<generation_spec>();
    auto crossings = std::make_shared<int>(-1);
    auto components = std::make_shared<int>(-1);
    auto any_tiles = std::make_shared<bool>(false);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("-n,--dimension", spec->n, "mosaic dimension")->required();
    cmd->add_option("--crossings", *crossings, "exact crossing-tile count");
    cmd->add_option("--components", *components, "exact component count");
    cmd->add_flag("--unknot", spec->unknot, "keep only unknots");
    cmd->add_option("--seed", spec->seed, "RNG seed (default 0)");
    cmd->add_flag("--any-tiles", *any_tiles, "uniform tiles, no connectivity");
    cmd->add_option("--max-attempts", spec->max_attempts, "retry budget (default 5000)");
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=]() {
      if (*crossings >= 0) spec->crossings = *crossings;
      if (*components >= 0) spec->components = *components;
      spec->suitably_connected = !*any_tiles;
      print_mosaic(random_mosaic(*spec), *as_json);
    });
  }

  // tangle VALUE
  {
    auto* cmd = app.add_subcommand("tangle", "rational tangle mosaic");
    auto value = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("value", *value, "integer twist count, or inf")->required();
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=]() {
      tangle_value v;
      if (*value == "inf" || *value == "infinity") {
        v = tangle_value::infinity();
      } else {
        try {
          std::size_t used = 0;
          v = tangle_value::integer(std::stoll(*value, &used));
          if (used != value->size()) throw std::invalid_argument(*value);
        } catch (const std::exception&) {
          throw command_error{exit_usage, "tangle value must be an integer or 'inf'"};
        }
      }
      print_mosaic(rational_tangle(v), *as_json);
    });
  }

  // join A B
  {
    auto* cmd = app.add_subcommand("join", "join two integer tangles");
    auto a = std::make_shared<long long>();
    auto b = std::make_shared<long long>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("a", *a, "first twist count")->required();
    cmd->add_option("b", *b, "second twist count")->required();
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=]() { print_mosaic(tangle_join(*a, *b), *as_json); });
  }

  // zoom FILE / flip FILE
  for (const bool zoom_mode : {true, false}) {
    auto* cmd = app.add_subcommand(zoom_mode ? "zoom" : "flip",
                                   zoom_mode ? "expand tiles to 3x3 blocks"
                                             : "mirror across a vertical axis");
    auto file = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "mosaic file or -")->required();
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=]() {
      const mosaic m = load_mosaic(*file);
      print_mosaic(zoom_mode ? zoom(m) : flip(m), *as_json);
    });
  }

  // render FILE [--svg|--ascii-only]
  {
    auto* cmd = app.add_subcommand("render", "draw a mosaic");
    auto file = std::make_shared<std::string>();
    auto svg = std::make_shared<bool>(false);
    auto plain = std::make_shared<bool>(false);
    auto opts = std::make_shared<render_options>();
    cmd->add_option("file", *file, "mosaic file or -")->required();
    cmd->add_flag("--svg", *svg, "emit SVG instead of glyphs");
    cmd->add_flag("--ascii-only", *plain, "avoid box-drawing characters");
    cmd->add_option("--tile-size", opts->tile_size, "svg cell size");
    cmd->add_option("--gap", opts->gap, "svg under-strand break half-width");
    cmd->callback([=]() {
      const mosaic m = load_mosaic(*file);
      opts->unicode = !*plain;
      if (*svg)
        std::cout << render_svg(m, *opts);
      else
        std::cout << render_ascii(m, *opts) << "\n";
    });
  }

  // count -n N [--limit L]
  {
    auto* cmd = app.add_subcommand("count", "enumerate suitably connected mosaics");
    auto n = std::make_shared<int>();
    auto limit = std::make_shared<long long>(-1);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("-n,--dimension", *n, "mosaic dimension")->required();
    cmd->add_option("--limit", *limit, "stop after this many mosaics");
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=]() {
      std::optional<std::uint64_t> bound;
      if (*limit >= 0) bound = static_cast<std::uint64_t>(*limit);
      const std::uint64_t count = iterate_mosaics(*n, {}, bound);
      if (*as_json)
        std::cout << nlohmann::json{{"n", *n}, {"count", count}}.dump() << "\n";
      else
        std::cout << count << "\n";
    });
  }

  // unknot FILE [--oracle CMD]
  {
    auto* cmd = app.add_subcommand("unknot", "unknot detection");
    auto file = std::make_shared<std::string>();
    auto oracle_cmd = std::make_shared<std::string>();
    auto cap = std::make_shared<int>(default_crossing_cap);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "mosaic file or -")->required();
    cmd->add_option("--oracle", *oracle_cmd,
                    "external rank oracle command (default $KMOSAIC_ORACLE)");
    cmd->add_option("--max-crossings", *cap, "heuristic state-sum cap");
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=, &exit_code]() {
      std::string command = *oracle_cmd;
      if (command.empty())
        if (const char* env = std::getenv("KMOSAIC_ORACLE")) command = env;
      const rank_oracle oracle = command.empty() ? rank_oracle{} : command_oracle(command);
      const unknot_verdict verdict = is_unknot(load_mosaic(*file), oracle, *cap);
      if (*as_json)
        std::cout << nlohmann::json{{"unknot", verdict.result},
                                    {"method", name_of(verdict.method)}}
                         .dump()
                  << "\n";
      else
        std::cout << "unknot: " << (verdict.result ? "true" : "false")
                  << "\nmethod: " << name_of(verdict.method) << "\n";
      exit_code = verdict.result ? exit_ok : exit_domain;
    });
  }

  // isotopic FILE1 FILE2
  {
    auto* cmd = app.add_subcommand("isotopic", "compare component counts and Jones polynomials");
    auto file1 = std::make_shared<std::string>();
    auto file2 = std::make_shared<std::string>();
    auto cap = std::make_shared<int>(default_crossing_cap);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("file1", *file1, "mosaic file or -")->required();
    cmd->add_option("file2", *file2, "mosaic file")->required();
    cmd->add_option("--max-crossings", *cap, "state-sum crossing cap");
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=, &exit_code]() {
      static const char* note =
          "matching invariants are necessary but not sufficient for isotopy";
      const bool match = possibly_isotopic(load_mosaic(*file1), load_mosaic(*file2), *cap);
      if (*as_json)
        std::cout << nlohmann::json{{"invariants_match", match}, {"note", note}}.dump() << "\n";
      else
        std::cout << "invariants_match: " << (match ? "true" : "false") << "\nnote: " << note
                  << "\n";
      exit_code = match ? exit_ok : exit_domain;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  } catch (const command_error& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const kmosaic::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const kmosaic::bad_tile_error& e) {
    // Tile values outside 0..10 are rejected at parse time.
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const kmosaic::not_square_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const kmosaic::oracle_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_oracle;
  } catch (const kmosaic::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
