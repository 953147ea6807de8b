#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "commands.hpp"
#include "tsol/tsol.hpp"

namespace fs = std::filesystem;
using namespace tsol;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run tsol_run(std::vector<std::string> args) {
  args.insert(args.begin(), "tsol");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tsol-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path / name);
    return {std::istreambuf_iterator<char>(in), {}};
  }
};

}  // namespace

TEST_CASE("normal-form on a line file") {
  TempDir tmp;
  auto f = tmp.write("line5.pts", render_pattern(p_nk(5, 0, {0, 0})));
  auto r = tsol_run({"normal-form", "-i", f});
  CHECK(r.status == 0);
  CHECK(r.out == "part 0 4 n=5 k=0\n");
  auto j = tsol_run({"normal-form", "--pnk", "4", "2", "--json"});
  CHECK(j.status == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["parts"][0]["n"] == 4);
  CHECK(parsed["parts"][0]["k"] == 2);
}

TEST_CASE("orbit count") {
  auto r = tsol_run({"orbit", "--line", "2", "--count"});
  CHECK(r.status == 0);
  CHECK(r.out == "3\n");
  CHECK(tsol_run({"orbit", "--line", "4", "--count"}).out == "122\n");
  auto listing = tsol_run({"orbit", "--line", "2"});
  CHECK(listing.out == "0: 0,1 1,1\n1: 1,1 1,0\n1: 0,1 1,0\n");
  auto capped = tsol_run({"orbit", "--line", "5", "--count", "--cap", "10"});
  CHECK(capped.status == 2);
  CHECK(capped.err.find("cap") != std::string::npos);
}

TEST_CASE("path between different orbits") {
  TempDir tmp;
  auto a = tmp.write("a.pts", "0 0\n1 0\n");
  auto b = tmp.write("b.pts", "0 0\n2 0\n");
  auto r = tsol_run({"path", "-i", a, "-o", b});
  CHECK(r.status == 2);
  CHECK(r.err.find("not in the same orbit") != std::string::npos);
}

TEST_CASE("path output replays") {
  TempDir tmp;
  Pattern p = random_walk(p_nk(4, 0, {0, 0}), 50, 5);
  auto a = tmp.write("a.pts", render_pattern(p));
  auto b = tmp.write("b.pts", render_pattern(edges_of_triangle(4, {0, 0})[2]));
  auto r = tsol_run({"path", "-i", a, "--to", b});
  REQUIRE(r.status == 0);
  auto seq = parse_move_sequence(r.out);
  CHECK(seq.start == p);
  CHECK(replay(seq) == edges_of_triangle(4, {0, 0})[2]);
  auto nf = tsol_run({"path", "-i", a});
  CHECK(replay(parse_move_sequence(nf.out)) == p_nk(4, 0, {0, 0}));
  auto j = tsol_run({"path", "-i", a, "--json"});
  CHECK(nlohmann::json::parse(j.out).contains("moves"));
}

TEST_CASE("fill output") {
  auto r = tsol_run({"fill", "--pnk", "3", "1", "--ascii"});
  CHECK(r.status == 0);
  CHECK(r.out == "# excess 1\n# part 0 0 k=3 excess=1\n# origin 0 0\n###\n.##\n..#\n");
  auto j = nlohmann::json::parse(tsol_run({"fill", "--line", "3", "--json"}).out);
  CHECK(j["excess"] == 0);
  CHECK(j["filling"]["cells"].size() == 6);
}

TEST_CASE("diameter and census") {
  CHECK(tsol_run({"diameter", "--line", "3"}).out == "4\n");
  auto c = tsol_run({"census", "--line", "3"});
  CHECK(c.status == 0);
  CHECK(c.out.find("orbit_size") != std::string::npos);
  auto j = nlohmann::json::parse(tsol_run({"census", "--line", "3", "--json"}).out);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["orbit_size"] == 16);
  CHECK(j["rows"][0]["upper_bound_expr"].is_null());
}

TEST_CASE("excess-sets output") {
  auto r = tsol_run({"excess-sets", "--pnk", "2", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "# excess 1\n{}\n{(0,1)}\n{(1,1)}\n{(1,0)}\n");
  auto m = tsol_run({"excess-sets", "--line", "3", "--maximal"});
  CHECK(m.out == "# excess 0\n{}\n");
}

TEST_CASE("tep commands") {
  TempDir tmp;
  auto a = tmp.write("a.txt", "0 2 1\n1 2 0\n2 2 1\n");
  auto r = tsol_run({"tep-complete", "--rule", "xor", "-n", "3", "-i", a});
  CHECK(r.status == 0);
  CHECK(r.out == "# domain 6/6\n0 2 1\n1 2 0\n2 2 1\n1 1 1\n2 1 1\n2 0 0\n");
  auto bad = tsol_run({"tep-complete", "--rule", "mul:2", "-n", "3", "-i", a});
  CHECK(bad.status == 2);
  auto nt = tsol_run({"tep-complete", "--rule", "affine:2:1:0:4", "-n", "3", "-i", a});
  CHECK(nt.status == 2);

  auto p = tmp.write("p.pts", render_pattern(edges_of_triangle(3, {0, 0})[0]));
  auto q = tmp.write("q.pts", render_pattern(edges_of_triangle(3, {0, 0})[2]));
  auto c = tsol_run({"tep-compile", "--rule", "add:3", "-n", "3", "-i", p, "-o", q});
  CHECK(c.status == 0);
  CHECK(c.out.rfind("# path_moves", 0) == 0);
  CHECK(c.out.find("\nperm ") != std::string::npos);
  auto nb = tsol_run({"tep-compile", "--rule", "xor", "-n", "3", "-i", p, "-o", p + "x"});
  CHECK(nb.status == 1);
}

TEST_CASE("walk is deterministic") {
  auto a = tsol_run({"walk", "--line", "5", "--steps", "100", "--seed", "9"});
  auto b = tsol_run({"walk", "--line", "5", "--steps", "100", "--seed", "9"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(same_orbit(parse_pattern(a.out), p_nk(5, 0, {0, 0})));
}

TEST_CASE("errors map to exit codes") {
  TempDir tmp;
  CHECK(tsol_run({"normal-form", "-i", (tmp.path / "missing.pts").string()}).status == 1);
  auto bad = tmp.write("bad.pts", "1 two\n");
  auto r = tsol_run({"normal-form", "-i", bad});
  CHECK(r.status == 1);
  CHECK(r.err.find("line 1") != std::string::npos);
  CHECK(tsol_run({"normal-form"}).status != 0);
  CHECK(tsol_run({"normal-form", "--line", "3", "--pnk", "3", "1"}).status != 0);
  CHECK(tsol_run({"frobnicate"}).status != 0);
  CHECK(tsol_run({"normal-form", "--pnk", "3", "9"}).status == 2);
}

TEST_CASE("output file option") {
  TempDir tmp;
  auto out = (tmp.path / "nf.txt").string();
  auto r = tsol_run({"normal-form", "--line", "3", "-o", out});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(tmp.read("nf.txt") == "part 0 2 n=3 k=0\n");
}
