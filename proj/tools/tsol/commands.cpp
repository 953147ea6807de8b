#include "commands.hpp"

#include <CLI11.hpp>
#include <httplib.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <atomic>
#include <csignal>
#include <fstream>
#include <sstream>

#include "api.hpp"
#include "json_codec.hpp"

namespace tsol::cli {

namespace {

using codec::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Source {
  std::string in;
  int line = 0;
  std::vector<int> pnk;

  void attach(CLI::App* sub) {
    auto* group = sub->add_option_group("source", "input pattern");
    group->add_option("-i,--in", in, "pattern file (.pts)");
    group->add_option("--line", line, "top edge of T_n at the origin")->check(CLI::Range(1, 64));
    group->add_option("--pnk", pnk, "P_{n,k} at the origin")->expected(2);
    group->require_option(1);
  }

  Pattern load() const {
    if (!in.empty()) return parse_pattern(read_file(in));
    if (line > 0) return p_nk(line, 0, {0, 0});
    return p_nk(pnk[0], pnk[1], {0, 0});
  }
};

struct Output {
  std::string path;
  std::ostream* stdout_ = nullptr;

  void write(const std::string& text) const {
    if (path.empty()) {
      *stdout_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw IoError("cannot write " + path);
  }
};

TepFamily load_rule(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return parse_tep_family(read_file(spec.substr(1)));
  return TepFamily::from_rule(spec);
}

std::string render_set(const Pattern& u) {
  std::string out = "{";
  bool first = true;
  for (Point c : u) {
    out += (first ? "(" : ", (") + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
    first = false;
  }
  return out + "}\n";
}

std::atomic<httplib::Server*> g_server{nullptr};

extern "C" void on_interrupt(int) {
  if (auto* s = g_server.load()) s->stop();
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("tsol");
  spdlog::set_default_logger(logger);
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("TSOL_LOG")) {
    const std::string v(env);
    if (v == "error") level = spdlog::level::err;
    else if (v == "warn") level = spdlog::level::warn;
    else if (v == "info") level = spdlog::level::info;
    else if (v == "debug") level = spdlog::level::debug;
  }
  spdlog::set_level(level);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (!spdlog::get("tsol")) configure_logging();

  CLI::App app{"Triangle solitaire workbench"};
  app.require_subcommand(1);
  Output output{"", &out};
  bool as_json = false;

  // fill
  Source fill_src;
  bool ascii = false;
  auto* fill_cmd = app.add_subcommand("fill", "filling closure with its triangle decomposition");
  fill_src.attach(fill_cmd);
  fill_cmd->add_option("-o,--out", output.path, "output file");
  fill_cmd->add_flag("--ascii", ascii, "render the filling as ASCII art");
  fill_cmd->add_flag("--json", as_json, "JSON output");

  // normal-form
  Source nf_src;
  auto* nf_cmd = app.add_subcommand("normal-form", "canonical orbit representative");
  nf_src.attach(nf_cmd);
  nf_cmd->add_option("-o,--out", output.path, "output file");
  nf_cmd->add_flag("--json", as_json, "JSON output");

  // path
  std::string path_from, path_to;
  auto* path_cmd = app.add_subcommand("path", "legal move sequence between two patterns");
  path_cmd->add_option("-i,--in", path_from, "start pattern (.pts)")->required();
  path_cmd->add_option("-o,--out,--to", path_to, "target pattern (.pts); default: the normal form");
  path_cmd->add_flag("--json", as_json, "JSON output");

  // orbit
  Source orbit_src;
  bool count_only = false;
  std::size_t cap = kDefaultVertexCap;
  auto* orbit_cmd = app.add_subcommand("orbit", "orbit by breadth-first search");
  orbit_src.attach(orbit_cmd);
  orbit_cmd->add_flag("--count", count_only, "print only the orbit size");
  orbit_cmd->add_option("--cap", cap, "vertex cap")->check(CLI::PositiveNumber);
  orbit_cmd->add_option("-o,--out", output.path, "output file");

  // diameter
  Source diam_src;
  auto* diam_cmd = app.add_subcommand("diameter", "exact diameter of the orbit graph");
  diam_src.attach(diam_cmd);
  diam_cmd->add_option("--cap", cap, "vertex cap")->check(CLI::PositiveNumber);
  diam_cmd->add_option("-o,--out", output.path, "output file");

  // census
  int census_max = 5, census_diam = 5;
  auto* census_cmd = app.add_subcommand("census", "line-orbit sizes, bounds and diameters");
  census_cmd->add_option("--line", census_max, "largest n (rows 1..n)")->check(CLI::Range(1, 8));
  census_cmd->add_option("--diameter-up-to", census_diam, "largest n with a diameter column")
      ->check(CLI::Range(0, 8));
  census_cmd->add_option("--cap", cap, "vertex cap")->check(CLI::PositiveNumber);
  census_cmd->add_option("-o,--out", output.path, "output file");
  census_cmd->add_flag("--json", as_json, "JSON twin of the table");

  // excess-sets
  Source ex_src;
  int max_card = -1;
  bool maximal = false;
  auto* ex_cmd = app.add_subcommand("excess-sets", "subsets whose removal keeps the filling");
  ex_src.attach(ex_cmd);
  ex_cmd->add_option("--max-card", max_card, "largest subset size")->check(CLI::NonNegativeNumber);
  ex_cmd->add_flag("--maximal", maximal, "only inclusion-maximal sets");
  ex_cmd->add_option("-o,--out", output.path, "output file");

  // tep-complete
  std::string rule, assignment_file;
  int tep_n = 0;
  auto* tc_cmd = app.add_subcommand("tep-complete", "complete an assignment on T_n");
  tc_cmd->add_option("--rule", rule, "xor | add:<m> | affine:<u>:<v>:<c>:<m> | @family-file")->required();
  tc_cmd->add_option("-n,--size", tep_n, "triangle size")->required()->check(CLI::Range(1, 64));
  tc_cmd->add_option("-i,--in", assignment_file, "assignment file (<x> <y> <symbol>)")->required();
  tc_cmd->add_option("-o,--out", output.path, "output file");
  tc_cmd->add_flag("--json", as_json, "JSON output");

  // tep-compile
  std::string basis_from, basis_to;
  auto* tk_cmd = app.add_subcommand("tep-compile", "basis change as basic permutations");
  tk_cmd->add_option("--rule", rule, "xor | add:<m> | affine:<u>:<v>:<c>:<m> | @family-file")->required();
  tk_cmd->add_option("-n,--size", tep_n, "triangle size")->required()->check(CLI::Range(1, 64));
  tk_cmd->add_option("-i,--in", basis_from, "source basis (.pts)")->required();
  tk_cmd->add_option("-o,--out,--to", basis_to, "target basis (.pts)")->required();

  // walk
  Source walk_src;
  std::uint64_t steps = 100, seed = 1;
  auto* walk_cmd = app.add_subcommand("walk", "random orbit element by random legal moves");
  walk_src.attach(walk_cmd);
  walk_cmd->add_option("--steps", steps, "number of moves");
  walk_cmd->add_option("--seed", seed, "random seed");
  walk_cmd->add_option("-o,--out", output.path, "output file");

  // serve
  int port = 8080;
  std::string static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "JSON API over HTTP on localhost");
  serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--static", static_dir, "directory of static UI assets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (fill_cmd->parsed()) {
      const Pattern p = fill_src.load();
      const Pattern f = fill(p);
      const ExcessReport r = excess(p);
      if (as_json) {
        json parts = json::array();
        for (std::size_t i = 0; i < r.decomposition.parts.size(); ++i)
          parts.push_back({{"v", codec::to_json(r.decomposition.parts[i].anchor)},
                           {"k", r.decomposition.parts[i].size},
                           {"excess", r.decomposition.excess_per_part[i]}});
        output.write(json{{"filling", codec::to_json(f)}, {"parts", parts}, {"excess", r.excess}}.dump(2) + "\n");
        return 0;
      }
      std::string text = "# excess " + std::to_string(r.excess) + "\n";
      for (std::size_t i = 0; i < r.decomposition.parts.size(); ++i) {
        const auto& part = r.decomposition.parts[i];
        text += "# part " + std::to_string(part.anchor.x) + " " + std::to_string(part.anchor.y) +
                " k=" + std::to_string(part.size) +
                " excess=" + std::to_string(r.decomposition.excess_per_part[i]) + "\n";
      }
      output.write(text + (ascii ? render_ascii(f) : render_pattern(f)));
    } else if (nf_cmd->parsed()) {
      const NormalForm nf = normal_form(nf_src.load());
      output.write(as_json ? codec::to_json(nf).dump(2) + "\n" : render_normal_form(nf));
    } else if (path_cmd->parsed()) {
      const Pattern from = parse_pattern(read_file(path_from));
      const MoveSequence seq = path_to.empty()
                                   ? to_normal_form(from)
                                   : path_between(from, parse_pattern(read_file(path_to)));
      output.write(as_json ? codec::to_json(seq).dump(2) + "\n" : render_move_sequence(seq));
    } else if (orbit_cmd->parsed()) {
      const Pattern p = orbit_src.load();
      if (count_only) {
        output.write(std::to_string(orbit_size(p, cap)) + "\n");
      } else {
        const OrbitMasks om = orbit_masks(p, cap);
        std::string text;
        for (std::size_t i = 0; i < om.states.size(); ++i) {
          text += std::to_string(om.distance[i]) + ":";
          for (Point c : om.frame.decode(om.states[i]))
            text += " " + std::to_string(c.x) + "," + std::to_string(c.y);
          text += "\n";
        }
        output.write(text);
      }
    } else if (diam_cmd->parsed()) {
      output.write(std::to_string(diameter(diam_src.load(), cap)) + "\n");
    } else if (census_cmd->parsed()) {
      std::vector<OrbitSizeReport> rows;
      for (int n = 1; n <= census_max; ++n) {
        rows.push_back(check_orbit_size_bounds(n, cap, n <= census_diam));
        spdlog::info("census n={} orbit={}", n, rows.back().orbit_size);
      }
      output.write(as_json ? codec::to_json(rows).dump(2) + "\n" : render_census_text(rows));
    } else if (ex_cmd->parsed()) {
      const Pattern p = ex_src.load();
      const auto sets = maximal ? maximal_excess_sets(p)
                                : excess_sets(p, max_card < 0 ? static_cast<int>(p.size()) : max_card);
      std::string text = "# excess " + std::to_string(excess(p).excess) + "\n";
      for (const auto& u : sets) text += render_set(u);
      output.write(text);
    } else if (tc_cmd->parsed()) {
      const TepFamily fam = load_rule(rule);
      const Assignment done = complete(fam, parse_assignment(read_file(assignment_file)), tep_n);
      const std::size_t total = static_cast<std::size_t>(tep_n) * (tep_n + 1) / 2;
      if (as_json) {
        output.write(json{{"assignment", codec::to_json(done)},
                          {"complete", done.size() == total},
                          {"valid", is_valid(fam, done)}}.dump(2) + "\n");
      } else {
        output.write("# domain " + std::to_string(done.size()) + "/" + std::to_string(total) + "\n" +
                     render_assignment(done));
      }
    } else if (tk_cmd->parsed()) {
      const TepFamily fam = load_rule(rule);
      const CompiledBasisChange c = compile_basis_change(
          fam, parse_pattern(read_file(basis_from)), parse_pattern(read_file(basis_to)), tep_n);
      std::string text = "# path_moves " + std::to_string(c.path_moves) + " reorder " +
                         std::to_string(c.reorder_perms) + "\n";
      text += "source";
      for (Point p : c.source_order) text += " " + std::to_string(p.x) + "," + std::to_string(p.y);
      text += "\ntarget";
      for (Point p : c.target_order) text += " " + std::to_string(p.x) + "," + std::to_string(p.y);
      text += "\n";
      for (const auto& perm : c.perms) {
        text += "perm " + std::to_string(perm.cell_i) + " " + std::to_string(perm.cell_j);
        for (auto v : perm.table) text += " " + std::to_string(v);
        text += "\n";
      }
      out << text;
    } else if (walk_cmd->parsed()) {
      output.write(render_pattern(random_walk(walk_src.load(), steps, seed)));
    } else if (serve_cmd->parsed()) {
      httplib::Server server;
      api::Service service;
      service.install(server, static_dir);
      if (!server.bind_to_port("127.0.0.1", port)) {
        err << "error: cannot listen on port " << port << "\n";
        return 1;
      }
      g_server.store(&server);
      std::signal(SIGINT, on_interrupt);
      std::signal(SIGTERM, on_interrupt);
      spdlog::warn("serving on http://127.0.0.1:{}", port);
      server.listen_after_bind();
      g_server.store(nullptr);
      spdlog::info("server stopped");
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace tsol::cli
