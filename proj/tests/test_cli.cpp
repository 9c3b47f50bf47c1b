// End-to-end tests of the riesz binary: exit codes, file formats, and
// determinism of seeded commands. The binary path comes from the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "riesz/serialize.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = RIESZ_CLI_PATH;

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path path = fs::temp_directory_path() / "riesz_cli_tests";
    fs::remove_all(path);
    fs::create_directories(path);
    return path;
  }();
  return dir;
}

struct RunResult {
  int exit_code;
  std::string output;  // stdout
  std::string errors;  // stderr
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path out = work_dir() / ("stdout_" + std::to_string(counter) + ".txt");
  const fs::path err = work_dir() / ("stderr_" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string command =
      kCli + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{exit_code, slurp(out), slurp(err)};
}

std::string value_of(const std::string& output, const std::string& key) {
  const std::string needle = key + ": ";
  const size_t start = output.find(needle);
  if (start == std::string::npos) return "";
  const size_t begin = start + needle.size();
  const size_t end = output.find('\n', begin);
  return output.substr(begin, end - begin);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

}  // namespace

TEST_CASE("gen + energy reproduce hand values") {
  const fs::path triangle = work_dir() / "triangle.json";
  CHECK(run("gen --named ngon --n 3 --alpha 1 --out " + triangle.string()).exit_code == 0);

  const RunResult energy = run("energy --input " + triangle.string());
  REQUIRE(energy.exit_code == 0);
  const double raw = riesz::parse_decimal(value_of(energy.output, "raw_energy"));
  CHECK(raw == doctest::Approx(3.4641016151377544).epsilon(1e-12));
  CHECK(value_of(energy.output, "n") == "3");
  CHECK(value_of(energy.output, "d") == "1");

  // Flag overrides the file's alpha.
  const fs::path square = work_dir() / "square.json";
  CHECK(run("gen --named ngon --n 4 --alpha 1 --out " + square.string()).exit_code == 0);
  const RunResult overridden = run("energy --input " + square.string() + " --alpha 2");
  REQUIRE(overridden.exit_code == 0);
  CHECK(riesz::parse_decimal(value_of(overridden.output, "raw_energy")) ==
        doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("gen validates constraints") {
  CHECK(run("gen --named simplex --d 2 --n 5 --out /dev/null").exit_code == 2);
  CHECK(run("gen --named ngon --d 2 --n 5 --out /dev/null").exit_code == 2);
  CHECK(run("gen --named nonsense --out /dev/null").exit_code == 2);
  const RunResult simplex = run("gen --named simplex --d 2");
  CHECK(simplex.exit_code == 0);
  CHECK(simplex.output.find("\"points\"") != std::string::npos);
}

TEST_CASE("malformed JSON exits 2 and names the byte offset") {
  const fs::path bad = work_dir() / "bad.json";
  write_file(bad, "{\"d\": 1, \"alpha\" \"1\"}");
  const RunResult result = run("energy --input " + bad.string());
  CHECK(result.exit_code == 2);
  CHECK(result.errors.find("byte") != std::string::npos);
}

TEST_CASE("colliding input exits 3") {
  const fs::path collide = work_dir() / "collide.json";
  write_file(collide,
             R"({"d": 1, "alpha": "1", "points": [["1","0"],["1","1e-9"]]})");
  const RunResult result = run("energy --input " + collide.string());
  CHECK(result.exit_code == 3);
}

TEST_CASE("certify: triangle gives an ascent direction, exit 0") {
  const fs::path triangle = work_dir() / "cert_triangle.json";
  CHECK(run("gen --named ngon --n 3 --alpha 1 --out " + triangle.string()).exit_code == 0);

  const fs::path cert_path = work_dir() / "triangle_cert.json";
  const RunResult result = run("certify --input " + triangle.string() + " --seed 7 --out " +
                               cert_path.string());
  REQUIRE(result.exit_code == 0);
  CHECK(value_of(result.output, "kind") == "AscentDirection");

  const riesz::Certificate cert = riesz::read_certificate_file(cert_path.string());
  CHECK(cert.kind == riesz::CertificateKind::AscentDirection);
  CHECK(*cert.second_variation_value > 0.0);
  CHECK(*cert.fd_confirmation > 0.0);

  // Same seed: byte-identical certificate.
  const std::string first = slurp(cert_path);
  CHECK(run("certify --input " + triangle.string() + " --seed 7 --out " + cert_path.string())
            .exit_code == 0);
  CHECK(slurp(cert_path) == first);
}

TEST_CASE("certify below the condition exits 4") {
  const fs::path config = work_dir() / "below.json";
  CHECK(run("gen --named random --d 3 --n 4 --seed 5 --alpha 0.5 --out " + config.string())
            .exit_code == 0);
  const fs::path cert_path = work_dir() / "below_cert.json";
  const RunResult result =
      run("certify --input " + config.string() + " --out " + cert_path.string());
  CHECK(result.exit_code == 4);
  CHECK(value_of(result.output, "kind") == "ConditionNotMet");
}

TEST_CASE("optimize: named simplex classifies as a minimum") {
  const fs::path out = work_dir() / "tetra.json";
  const RunResult result =
      run("optimize --named simplex --d 2 --alpha 1 --out " + out.string());
  REQUIRE(result.exit_code == 0);
  CHECK(value_of(result.output, "classification") == "Minimum");
  CHECK(fs::exists(work_dir() / "tetra.report.json"));
  CHECK(fs::exists(work_dir() / "tetra.spectrum.csv"));

  // The optimized file is a valid configuration file.
  const RunResult energy = run("energy --input " + out.string());
  CHECK(energy.exit_code == 0);
}

TEST_CASE("optimize: pentagon is already critical") {
  const fs::path out = work_dir() / "pentagon.json";
  const RunResult result =
      run("optimize --named ngon --n 5 --alpha 2 --out " + out.string());
  REQUIRE(result.exit_code == 0);
  CHECK(value_of(result.output, "iterations") == "0");
  const double gradient = riesz::parse_decimal(value_of(result.output, "gradient_norm"));
  CHECK(gradient <= 1e-8);
}

TEST_CASE("optimize: random start never reports a maximum") {
  const fs::path out = work_dir() / "random7.json";
  const RunResult result =
      run("optimize --named random --d 2 --n 7 --seed 1 --alpha 1 --out " + out.string());
  REQUIRE(result.exit_code == 0);
  CHECK(value_of(result.output, "classification") != "Maximum");
}

TEST_CASE("classify a generated critical fixture") {
  const fs::path tetra = work_dir() / "classify_tetra.json";
  CHECK(run("gen --named simplex --d 2 --alpha 1 --out " + tetra.string()).exit_code == 0);
  const RunResult result = run("classify --input " + tetra.string());
  REQUIRE(result.exit_code == 0);
  CHECK(value_of(result.output, "classification") == "Minimum");
  CHECK(value_of(result.output, "num_zero") == "3");

  // Non-critical input is an input error.
  const fs::path random = work_dir() / "classify_random.json";
  CHECK(run("gen --named random --d 2 --n 5 --seed 2 --out " + random.string()).exit_code == 0);
  CHECK(run("classify --input " + random.string()).exit_code == 2);
}

TEST_CASE("curve emits a self-consistent CSV") {
  const fs::path pair = work_dir() / "pair.json";
  CHECK(run("gen --named antipodal --d 1 --alpha 2 --out " + pair.string()).exit_code == 0);
  const fs::path csv_path = work_dir() / "curve.csv";
  const RunResult result =
      run("curve --input " + pair.string() +
          " --index 0 --seed 3 --t-min -0.1 --t-max 0.1 --samples 201 --out " +
          csv_path.string());
  REQUIRE(result.exit_code == 0);

  const std::string csv = slurp(csv_path);
  REQUIRE(csv.find("# f_second_0: ") != std::string::npos);
  REQUIRE(csv.find("t,scaled_energy,raw_energy") != std::string::npos);

  // Parse the header value and the samples.
  std::istringstream lines(csv);
  std::string line;
  double f_second = 0.0;
  std::vector<double> ts, values;
  while (std::getline(lines, line)) {
    if (line.rfind("# f_second_0: ", 0) == 0) {
      f_second = riesz::parse_decimal(line.substr(14));
    } else if (!line.empty() && line[0] != '#' && line[0] != 't') {
      const size_t first = line.find(',');
      const size_t second = line.find(',', first + 1);
      ts.push_back(riesz::parse_decimal(line.substr(0, first)));
      values.push_back(riesz::parse_decimal(line.substr(first + 1, second - first - 1)));
    }
  }
  REQUIRE(ts.size() == 201);

  // Hand expansion for the antipodal pair at alpha = 2: f(t) = 1 + t^2/4, so
  // f''(0) = 1/2; the header must agree with a central difference of the rows.
  CHECK(f_second == doctest::Approx(0.5).epsilon(1e-8));
  const size_t mid = 100;
  CHECK(ts[mid] == 0.0);  // the grid hits zero exactly for a symmetric range
  const double dt = ts[mid + 1] - ts[mid];
  const double fd = (values[mid + 1] - 2.0 * values[mid] + values[mid - 1]) / (dt * dt);
  CHECK(std::abs(fd - f_second) <= 1e-4 * std::abs(f_second));

  // The t = 0 row equals the configuration's scaled energy.
  const RunResult energy = run("energy --input " + pair.string());
  CHECK(values[mid] == riesz::parse_decimal(value_of(energy.output, "scaled_energy")));
}

TEST_CASE("curve marks retraction collisions as NaN rows") {
  // Rotating a square vertex toward its neighbor collides once
  // 1 - <x_0(t), x_1> drops below the cap, i.e. for |t| beyond ~2.2e4.
  const fs::path square = work_dir() / "curve_square.json";
  CHECK(run("gen --named ngon --n 4 --alpha 2 --out " + square.string()).exit_code == 0);
  const fs::path csv_path = work_dir() / "curve_collide.csv";
  const RunResult result =
      run("curve --input " + square.string() +
          " --index 0 --seed 1 --t-min -40000 --t-max 40000 --samples 5 --out " +
          csv_path.string());
  REQUIRE(result.exit_code == 0);
  const std::string csv = slurp(csv_path);
  CHECK(csv.find("# collisions: ") != std::string::npos);
  CHECK(csv.find("# collisions: none") == std::string::npos);
  CHECK(csv.find(",nan,nan") != std::string::npos);
}

TEST_CASE("gen with a seed is deterministic") {
  const fs::path a = work_dir() / "gen_a.json";
  const fs::path b = work_dir() / "gen_b.json";
  CHECK(run("gen --named random --d 3 --n 6 --seed 11 --out " + a.string()).exit_code == 0);
  CHECK(run("gen --named random --d 3 --n 6 --seed 11 --out " + b.string()).exit_code == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("curve rejects bad sampling parameters") {
  const fs::path pair = work_dir() / "pair2.json";
  CHECK(run("gen --named antipodal --d 1 --out " + pair.string()).exit_code == 0);
  CHECK(run("curve --input " + pair.string() + " --samples 2").exit_code == 2);
  CHECK(run("curve --input " + pair.string() + " --index 9").exit_code == 2);
}

TEST_CASE("sweep: grid rows, aggregate line, determinism") {
  const fs::path dir_a = work_dir() / "sweep_a";
  const fs::path dir_b = work_dir() / "sweep_b";
  const std::string grid = "--d 1 --n 2,3 --alpha 1,2 --restarts 2 --seed 42 --jobs 2 --out ";
  REQUIRE(run("sweep " + grid + dir_a.string()).exit_code == 0);
  REQUIRE(run("sweep " + grid + dir_b.string()).exit_code == 0);

  const std::string csv = slurp(dir_a / "summary.csv");
  CHECK(csv == slurp(dir_b / "summary.csv"));  // byte-identical reruns

  size_t result_rows = 0;
  bool aggregate_ok = false;
  std::istringstream lines(csv);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("result,", 0) == 0) {
      ++result_rows;
      CHECK(line.find("Maximum") == std::string::npos);
    }
    if (line.rfind("aggregate,", 0) == 0) {
      aggregate_ok = line.find("NoMaximum") != std::string::npos &&
                     line.find("maximum_classifications=0") != std::string::npos;
    }
  }
  CHECK(result_rows == 8);  // 1 * 2 * 2 * 2
  CHECK(aggregate_ok);
}

TEST_CASE("sweep rejects an empty grid") {
  CHECK(run("sweep --d 1 --n 2 --restarts 1 --out /tmp/riesz_sweep_empty").exit_code == 2);
}
