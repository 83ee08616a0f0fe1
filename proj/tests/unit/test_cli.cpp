#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(MWBIS_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mwbis_cli_" + name);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path write_text(const std::string& name,
                                 const std::string& content) {
  const auto path = temp_path(name);
  std::ofstream out(path);
  out << content;
  return path;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

constexpr const char* kHeader =
    "solver,instance,n,B,weight,budget,micros,oracle,ratio_num,ratio_den";

const std::string kPrism =
    "mwbis 6 3 2\n"
    "v 0 1000 1\n"
    "v 1 1000 1\n"
    "v 2 1000 1\n"
    "v 3 2000 1\n"
    "v 4 2000 1\n"
    "v 5 2000 1\n"
    "e 0 3\n"
    "e 1 4\n"
    "e 2 5\n"
    "level 1 0 1 2\n"
    "level 2 3 4 5\n";

TEST_CASE("cli generates and validates every family") {
  const std::vector<std::pair<std::string, std::string>> families{
      {"tree", "-n 9"},
      {"forest", "-n 9 --trees 3"},
      {"cycle", "-n 7"},
      {"graph", "-n 8 --p 400"},
      {"intervals", "-n 8 --span 40"},
      {"claw-free", "-n 10 --d 2"},
      {"mbf-tight", "--d 3"},
      {"mwbrf-bad", "--d 2 --M 4"},
      {"simply-nested", "--levels 4 3 --spokes 700"},
      {"knapsack", "-n 8 --capacity 20"},
  };
  for (const auto& [family, extra] : families) {
    CAPTURE(family);
    const auto path = temp_path("family_" + family + ".mwbis");
    const CliResult gen = run_cli("generate " + family + " " + path.string() +
                                  " --seed 3 " + extra);
    CHECK(gen.status == 0);

    const CliResult check = run_cli("validate " + path.string());
    CHECK(check.status == 0);
    CHECK(!check.out.empty());
    std::filesystem::remove(path);
  }
}

TEST_CASE("cli generate is deterministic per seed") {
  const auto a = temp_path("det_a.mwbis");
  const auto b = temp_path("det_b.mwbis");
  CHECK(run_cli("generate graph " + a.string() + " --seed 42 -n 9").status == 0);
  CHECK(run_cli("generate graph " + b.string() + " --seed 42 -n 9").status == 0);
  const std::string text = slurp(a);
  CHECK(!text.empty());
  CHECK(text == slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("cli run tree reports an exact ratio in csv") {
  const auto path = temp_path("run_tree.mwbis");
  REQUIRE(run_cli("generate tree " + path.string() + " --seed 7 -n 10")
              .status == 0);
  const CliResult r =
      run_cli("run tree " + path.string() + " --oracle --format csv");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == kHeader);
  const auto fields = fields_of(lines[1]);
  REQUIRE(fields.size() == 10);
  CHECK(fields[0] == "tree");
  CHECK(fields[2] == "10");
  CHECK(fields[4] == fields[7]);
  CHECK(fields[8] == "1");
  CHECK(fields[9] == "1");
  std::filesystem::remove(path);
}

TEST_CASE("cli run mbf on the tight star loses the full factor") {
  const auto path = temp_path("run_mbf.mwbis");
  REQUIRE(run_cli("generate mbf-tight " + path.string() + " --d 3").status ==
          0);
  const CliResult r =
      run_cli("run mbf " + path.string() + " --oracle --format csv");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  const auto fields = fields_of(lines[1]);
  REQUIRE(fields.size() == 10);
  CHECK(fields[4] == "1000");
  CHECK(fields[7] == "3000");
  CHECK(fields[8] == "1");
  CHECK(fields[9] == "3");
  std::filesystem::remove(path);
}

TEST_CASE("cli run ptas meets its bound on the prism") {
  const auto path = write_text("run_ptas.mwbis", kPrism);
  const CliResult r =
      run_cli("run ptas " + path.string() + " -k 1 --oracle --format csv");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  const auto fields = fields_of(lines[1]);
  REQUIRE(fields.size() == 10);
  CHECK(fields[4] == "2000");
  CHECK(fields[7] == "3000");
  CHECK(fields[8] == "2");
  CHECK(fields[9] == "3");

  const CliResult band =
      run_cli("run band " + path.string() + " --oracle --format csv");
  CHECK(band.status == 0);
  const auto band_fields = fields_of(lines_of(band.out)[1]);
  CHECK(band_fields[4] == "3000");
  CHECK(band_fields[8] == "1");
  CHECK(band_fields[9] == "1");
  std::filesystem::remove(path);
}

TEST_CASE("cli exits 2 on a malformed file") {
  const auto path = write_text("broken.mwbis", "mwbis 2 1\n");
  CHECK(run_cli("validate " + path.string()).status == 2);
  CHECK(run_cli("run tree " + path.string()).status == 2);
  std::filesystem::remove(path);
}

TEST_CASE("cli exits 3 on an incompatible solver") {
  const auto graph = temp_path("mismatch_graph.mwbis");
  REQUIRE(run_cli("generate tree " + graph.string() + " --seed 5 -n 6")
              .status == 0);
  CHECK(run_cli("run interval " + graph.string()).status == 3);
  CHECK(run_cli("run band " + graph.string()).status == 3);

  const auto leveled = write_text("mismatch_leveled.mwbis", kPrism);
  CHECK(run_cli("run tree " + leveled.string()).status == 3);
  CHECK(run_cli("run knapsack " + leveled.string()).status == 3);

  std::filesystem::remove(graph);
  std::filesystem::remove(leveled);
}

TEST_CASE("cli exits 2 on an unknown solver") {
  const auto path = temp_path("unknown_solver.mwbis");
  REQUIRE(run_cli("generate tree " + path.string() + " --seed 5 -n 6")
              .status == 0);
  CHECK(run_cli("run wibble " + path.string()).status == 2);
  std::filesystem::remove(path);
}

TEST_CASE("cli reduce rewrites a knapsack as a star tree") {
  const auto kp = temp_path("reduce_in.mwbis");
  const auto star = temp_path("reduce_out.mwbis");
  REQUIRE(run_cli("generate knapsack " + kp.string() +
                  " --seed 9 -n 8 --capacity 20")
              .status == 0);
  CHECK(run_cli("reduce knapsack-to-star " + kp.string() + " " + star.string())
            .status == 0);
  CHECK(run_cli("validate " + star.string()).status == 0);

  const CliResult direct =
      run_cli("run knapsack " + kp.string() + " --oracle --format csv");
  const CliResult via_tree =
      run_cli("run tree " + star.string() + " --format csv");
  CHECK(direct.status == 0);
  CHECK(via_tree.status == 0);
  const auto direct_fields = fields_of(lines_of(direct.out)[1]);
  const auto tree_fields = fields_of(lines_of(via_tree.out)[1]);
  CHECK(direct_fields[4] == tree_fields[4]);
  CHECK(direct_fields[8] == "1");
  CHECK(direct_fields[9] == "1");

  std::filesystem::remove(kp);
  std::filesystem::remove(star);
}

TEST_CASE("cli greedy verifies the claw bound when asked") {
  const auto path = temp_path("greedy_claw.mwbis");
  REQUIRE(run_cli("generate claw-free " + path.string() +
                  " --seed 11 -n 10 --d 2")
              .status == 0);
  const CliResult r =
      run_cli("greedy --algo mbf --check-claw 2 " + path.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("claw-free: verified for d=2") != std::string::npos);

  const CliResult bad =
      run_cli("greedy --algo mbf --check-claw 1 " + path.string());
  CHECK(bad.status == 2);
  std::filesystem::remove(path);
}

TEST_CASE("cli bench times each requested size") {
  const CliResult r =
      run_cli("bench tree --sizes 8 10 --reps 1 --format csv");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == kHeader);
  CHECK(fields_of(lines[1])[2] == "8");
  CHECK(fields_of(lines[2])[2] == "10");
}

}  // namespace
