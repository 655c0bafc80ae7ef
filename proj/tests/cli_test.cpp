#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliFixture {
  fs::path dir;

  CliFixture() {
    dir = fs::temp_directory_path() /
          ("uqdraw_cli_test_" + std::to_string(static_cast<long>(::getpid())));
    fs::create_directories(dir);
  }
  ~CliFixture() { fs::remove_all(dir); }

  fs::path write(const std::string& name, const std::string& content) const {
    const fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }

  RunResult run(const std::string& args) const {
    const fs::path out_file = dir / "stdout.txt";
    const std::string cmd = std::string(UQDRAW_CLI_PATH) + " " + args + " > " +
                            out_file.string() + " 2> " + (dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{code, slurp(out_file)};
  }
};

const std::string kPrefixSuffix3 =
    "family v1\n"
    "universe a b c\n"
    "state\n"
    "state a\n"
    "state c\n"
    "state a b\n"
    "state a c\n"
    "state b c\n"
    "state a b c\n";

const std::string kPowerSet3 =
    "family v1\n"
    "universe a b c\n"
    "state\nstate a\nstate b\nstate c\n"
    "state a b\nstate a c\nstate b c\n"
    "state a b c\n";

}  // namespace

TEST_CASE("cli: validate, recognize, and exit codes") {
  CliFixture fx;
  const auto ps3 = fx.write("ps3.family", kPrefixSuffix3);
  const auto pow3 = fx.write("pow3.family", kPowerSet3);
  const auto broken = fx.write("broken.family",
                               "family v1\nuniverse a b\nstate\nstate a\nstate b\n");
  const auto garbled = fx.write("garbled.family", "family v1\nuniverse a\nstate q\n");

  const RunResult ok = fx.run("validate " + ps3.string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "ok\n");

  const RunResult invalid = fx.run("validate " + broken.string());
  CHECK(invalid.exit_code == 2);
  CHECK(invalid.out.rfind("invalid-family\n", 0) == 0);
  CHECK(invalid.out.find("L2") != std::string::npos);

  const RunResult negative = fx.run("recognize " + pow3.string());
  CHECK(negative.exit_code == 2);
  CHECK(negative.out == "not-st-planar\n");

  const RunResult oracle_negative = fx.run("recognize --oracle " + pow3.string());
  CHECK(oracle_negative.exit_code == 2);
  CHECK(oracle_negative.out == "not-st-planar\n");

  const RunResult positive = fx.run("recognize " + ps3.string());
  CHECK(positive.exit_code == 0);
  CHECK(positive.out == "st-planar\nx-order: a b c\ny-order: c b a\n");

  const RunResult parse_error = fx.run("validate " + garbled.string());
  CHECK(parse_error.exit_code == 1);
  CHECK(parse_error.out.empty());

  const RunResult usage = fx.run("no-such-command");
  CHECK(usage.exit_code == 1);

  const RunResult missing_file = fx.run("validate " + (fx.dir / "nope.family").string());
  CHECK(missing_file.exit_code == 1);
}

TEST_CASE("cli: draw, zones, to-arrangement, roundtrip, regions") {
  CliFixture fx;
  const auto ps3 = fx.write("ps3.family", kPrefixSuffix3);
  const auto drawing_path = fx.dir / "ps3.drawing";

  const RunResult drew = fx.run("draw " + ps3.string() + " -o " + drawing_path.string());
  CHECK(drew.exit_code == 0);
  CHECK(fs::exists(drawing_path));

  const RunResult zones = fx.run("zones " + drawing_path.string());
  CHECK(zones.exit_code == 0);
  CHECK(zones.out.rfind("zones v1\ncount 3\n", 0) == 0);

  const RunResult arr = fx.run("to-arrangement " + drawing_path.string());
  CHECK(arr.exit_code == 0);
  CHECK(arr.out == "arrangement v1\nuniverse a b c\npermutation 2 1 0\n");

  const RunResult rt = fx.run("roundtrip " + drawing_path.string());
  CHECK(rt.exit_code == 0);
  CHECK(rt.out == "roundtrip: ok\n");

  // regions of the emitted arrangement reproduce the family file.
  const auto arr_path = fx.dir / "ps3.arrangement";
  CHECK(fx.run("to-arrangement " + drawing_path.string() + " -o " + arr_path.string())
            .exit_code == 0);
  const RunResult regions = fx.run("regions " + arr_path.string());
  CHECK(regions.exit_code == 0);
  CHECK(regions.out == kPrefixSuffix3);

  const RunResult census = fx.run("census --n 2");
  CHECK(census.exit_code == 0);
  CHECK(census.out.find("labeled-classes   2") != std::string::npos);

  const RunResult census_too_big = fx.run("census --n 9");
  CHECK(census_too_big.exit_code == 1);
}

TEST_CASE("cli: graph output and compacted draw") {
  CliFixture fx;
  const auto ps3 = fx.write("ps3.family", kPrefixSuffix3);

  const RunResult graph = fx.run("graph " + ps3.string());
  CHECK(graph.exit_code == 0);
  CHECK(graph.out.rfind("graph v1\nuniverse a b c\n", 0) == 0);

  const RunResult compacted = fx.run("draw --compact " + ps3.string());
  CHECK(compacted.exit_code == 0);
  CHECK(compacted.out.find("vertex 2 2 a b c") != std::string::npos);

  const auto svg_path = fx.dir / "ps3.svg";
  const RunResult rendered =
      fx.run("draw " + ps3.string() + " --svg " + svg_path.string() + " --labels");
  CHECK(rendered.exit_code == 0);
  CHECK(slurp(svg_path).rfind("<?xml", 0) == 0);

  // --unit rescales the grid: max coordinate 3, unit 10, margin 10/2+12.
  const auto drawing_path = fx.dir / "ps3.drawing";
  CHECK(fx.run("draw " + ps3.string() + " -o " + drawing_path.string()).exit_code == 0);
  const auto small_svg = fx.dir / "small.svg";
  CHECK(fx.run("render " + drawing_path.string() + " --unit 10 --svg " +
               small_svg.string())
            .exit_code == 0);
  CHECK(slurp(small_svg).find("viewBox=\"0 0 64 64\"") != std::string::npos);
}
