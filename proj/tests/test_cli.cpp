#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "reembed/generators.hpp"
#include "reembed/graph.hpp"

using namespace reembed;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int exit_code;
  std::string output;
};

class CliFixture {
 public:
  CliFixture() {
    dir_ = fs::temp_directory_path() /
           ("reembed_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~CliFixture() { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& bytes) const {
    const fs::path p = dir_ / name;
    std::ofstream out(p, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return p;
  }

  Invocation run(const std::string& args) const {
    const fs::path out_path = dir_ / "stdout.txt";
    const std::string cmd = std::string(REEMBED_CLI_PATH) + " " + args + " > " +
                            out_path.string() + " 2> " + (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(status), buf.str()};
  }

  const fs::path& dir() const { return dir_; }

 private:
  fs::path dir_;
};

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) {
    if (c == '\n') ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("cli count") {
  CliFixture cli;
  const fs::path k4 = cli.write("k4.pc", write_planar_code({tetrahedron()}));

  SUBCASE("all surfaces") {
    const auto r = cli.run("count " + k4.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "pp\t7\ntorus\t7\nklein\t21\n");
  }
  SUBCASE("single surface") {
    const auto r = cli.run("count " + k4.string() + " --surface torus");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "torus\t7\n");
  }
  SUBCASE("rotation text input") {
    const fs::path txt = cli.write("k4.txt", "4 6\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n");
    const auto r = cli.run("count " + txt.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "pp\t7\ntorus\t7\nklein\t21\n");
  }
}

TEST_CASE("cli enumerate") {
  CliFixture cli;
  const fs::path k4 = cli.write("k4.pc", write_planar_code({tetrahedron()}));

  SUBCASE("projective plane lines") {
    const auto r = cli.run("enumerate " + k4.string() + " --surface pp");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    int k2 = 0, k4_count = 0, total = 0;
    while (std::getline(lines, line)) {
      ++total;
      if (line.rfind("pp\tK2\t-\t", 0) == 0) ++k2;
      if (line.rfind("pp\tK4\t-\t", 0) == 0) ++k4_count;
    }
    CHECK(total == 7);
    CHECK(k2 == 6);
    CHECK(k4_count == 1);
  }
  SUBCASE("first line is a single twisted edge") {
    const auto r = cli.run("enumerate " + k4.string() + " --surface pp --limit 1");
    CHECK(r.output == "pp\tK2\t-\t0\n");
  }
  SUBCASE("klein with limit") {
    const auto r = cli.run("enumerate " + k4.string() + " --surface klein --limit 5");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 5);
  }
  SUBCASE("klein kinds carry m") {
    const auto r = cli.run("enumerate " + k4.string() + " --surface klein");
    CHECK(count_lines(r.output) == 21);
    CHECK(r.output.find("klein\tK2M\t1\t") != std::string::npos);
    CHECK(r.output.find("klein\tK11M\t2\t") != std::string::npos);
    CHECK(r.output.find("klein\tA1\t-\t") != std::string::npos);
  }
}

TEST_CASE("cli distribution") {
  CliFixture cli;
  const fs::path k4 = cli.write("k4.pc", write_planar_code({tetrahedron()}));
  const auto r = cli.run("distribution " + k4.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("2\ttrue\tsphere\t1\n") != std::string::npos);
  CHECK(r.output.find("1\tfalse\tprojective\t7\n") != std::string::npos);
  CHECK(r.output.find("0\ttrue\ttorus\t7\n") != std::string::npos);
  CHECK(r.output.find("0\tfalse\tklein\t21\n") != std::string::npos);
  CHECK(r.output.find("-1\tfalse\tN3\t28\n") != std::string::npos);
  long long total = 0;
  std::istringstream lines(r.output);
  std::string line;
  while (std::getline(lines, line)) {
    total += std::stoll(line.substr(line.rfind('\t') + 1));
  }
  CHECK(total == 64);

  SUBCASE("deterministic across job counts") {
    const auto a = cli.run("distribution " + k4.string() + " --jobs 1");
    const auto b = cli.run("distribution " + k4.string() + " --jobs 3");
    CHECK(a.output == b.output);
  }
  SUBCASE("edge cap refusal") {
    const fs::path dode = cli.write("dode.pc", write_planar_code({dodecahedron()}));
    CHECK(cli.run("distribution " + dode.string()).exit_code == 2);
  }
}

TEST_CASE("cli gen round trips") {
  CliFixture cli;
  const fs::path out = cli.dir() / "gen.pc";
  for (const std::string spec :
       {std::string("tetrahedron"), std::string("cube"), std::string("dodecahedron"),
        std::string("prism:5"), std::string("trunc:7:3")}) {
    const auto r = cli.run("gen " + spec + " -o " + out.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(out, std::ios::binary);
    const auto maps = parse_planar_code(in);
    REQUIRE(maps.size() == 1);
    CHECK(validate_cubic_planar(maps[0]).all_ok());
  }
}

TEST_CASE("cli verify") {
  CliFixture cli;
  const fs::path k4 = cli.write("k4.pc", write_planar_code({tetrahedron()}));
  const auto r = cli.run("verify " + k4.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output == "OK\n");

  const fs::path dode = cli.write("dode.pc", write_planar_code({dodecahedron()}));
  const auto r2 = cli.run("verify " + dode.string());
  CHECK(r2.exit_code == 0);
  CHECK(r2.output == "OK\n");
}

TEST_CASE("cli rejects non-conforming graphs with exit 2") {
  CliFixture cli;
  // K33 in rotation text: cubic and 3-connected but not planar with any rotation
  const fs::path bad = cli.write(
      "k33.txt", "6 9\n0: 3 4 5\n1: 3 4 5\n2: 3 4 5\n3: 0 1 2\n4: 0 1 2\n5: 0 1 2\n");
  CHECK(cli.run("count " + bad.string()).exit_code == 2);
  CHECK(cli.run("verify " + bad.string()).exit_code == 2);

  const fs::path garbage = cli.write("garbage.txt", "this is not a graph\n");
  CHECK(cli.run("count " + garbage.string()).exit_code == 2);
}

TEST_CASE("cli output is stable across runs") {
  CliFixture cli;
  const fs::path box = cli.write("cube.pc", write_planar_code({cube()}));
  const auto a = cli.run("enumerate " + box.string() + " --surface torus");
  const auto b = cli.run("enumerate " + box.string() + " --surface torus");
  CHECK(a.output == b.output);
  CHECK(count_lines(a.output) == 27);
}
