#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  static const fs::path dir = [] {
    const fs::path base = fs::temp_directory_path() / "ncsn_cli_tests";
    fs::remove_all(base);
    fs::create_directories(base);
    return base;
  }();
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + NCSN_CLI_PATH + "\" " + args +
                          " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (const char ch : text) {
    if (ch == '\n') {
      ++lines;
    }
  }
  return lines;
}

fs::path write_quick_config() {
  const fs::path path = work_dir() / "quick.cfg";
  std::ofstream out(path);
  out << "x = 20\ncells = 200\nn = 16\nm = 10\nc = 0.9\nsigma_t = 1\n"
         "model = exponential\nq = 1\nxi = 1e-6\nsolver = si\n";
  return path;
}

}  // namespace

TEST_CASE("solve writes the solution and report artifacts", "[cli]") {
  const fs::path cfg = write_quick_config();
  const fs::path out = work_dir() / "solve_a";
  const int code = run_cli("solve --config " + cfg.string() + " --out-dir " +
                           out.string());
  REQUIRE(code == 0);

  const std::string solution = read_file(out / "solution.csv");
  REQUIRE(count_lines(solution) == 401);
  REQUIRE(solution.rfind("x,phi,f\n", 0) == 0);

  const std::string report = read_file(out / "report.csv");
  REQUIRE(count_lines(report) == 2);
  REQUIRE(report.rfind("iterations,converged,rho_estimate,wall_time_seconds\n",
                       0) == 0);
  const std::string row = report.substr(report.find('\n') + 1);
  const std::size_t comma = row.find(',');
  REQUIRE(row.substr(comma + 1, 1) == "1");
}

TEST_CASE("repeated runs produce byte-identical solutions", "[cli]") {
  const fs::path cfg = write_quick_config();
  const fs::path out_a = work_dir() / "det_a";
  const fs::path out_b = work_dir() / "det_b";
  REQUIRE(run_cli("solve --config " + cfg.string() + " --out-dir " +
                  out_a.string()) == 0);
  REQUIRE(run_cli("solve --config " + cfg.string() + " --out-dir " +
                  out_b.string()) == 0);
  REQUIRE(read_file(out_a / "solution.csv") ==
          read_file(out_b / "solution.csv"));
}

TEST_CASE("requested psi moment columns appear in the header", "[cli]") {
  const fs::path cfg = write_quick_config();
  const fs::path out = work_dir() / "moments";
  REQUIRE(run_cli("solve --config " + cfg.string() + " --out-dir " +
                  out.string() + " --psi-moments 0,2") == 0);
  const std::string solution = read_file(out / "solution.csv");
  REQUIRE(solution.rfind("x,phi,f,psi0,psi2\n", 0) == 0);
}

TEST_CASE("flag overrides and failure exit codes", "[cli]") {
  const fs::path cfg = write_quick_config();
  const fs::path out = work_dir() / "codes";

  // Exhausting the iteration cap exits 2.
  REQUIRE(run_cli("solve --config " + cfg.string() + " --out-dir " +
                  out.string() + " --max_iterations 3") == 2);

  // Invalid configuration exits 1.
  REQUIRE(run_cli("solve --config " + cfg.string() + " --out-dir " +
                  out.string() + " --c 1.0") == 1);

  // Unwritable output location exits 3.
  const fs::path blocker = work_dir() / "blocker";
  {
    std::ofstream file(blocker);
    file << "occupied\n";
  }
  REQUIRE(run_cli("solve --config " + cfg.string() + " --out-dir " +
                  (blocker / "sub").string()) == 3);
}

TEST_CASE("scan emits one row per scattering ratio and solver", "[cli]") {
  const fs::path out = work_dir() / "scan.csv";
  const std::string base_flags =
      " --x 20 --cells 20 --n 4 --m 3 --sigma_t 1 --model exponential"
      " --q 1 --xi 1e-6";
  REQUIRE(run_cli("scan --c-list 0.5,0.7 --solvers si --out " + out.string() +
                  base_flags) == 0);
  const std::string scan = read_file(out);
  REQUIRE(count_lines(scan) == 3);
  REQUIRE(scan.rfind("c,solver,iterations,rho_estimate\n", 0) == 0);
  REQUIRE(scan.find("\n0.5,si,") != std::string::npos);
  REQUIRE(scan.find("\n0.69999999999999996,si,") != std::string::npos);
}

TEST_CASE("an empty scan produces only the header", "[cli]") {
  const fs::path out = work_dir() / "scan_empty.csv";
  REQUIRE(run_cli("scan --c-list \"\" --solvers si --out " + out.string() +
                  " --x 20 --cells 20 --n 4 --m 3 --sigma_t 1"
                  " --model exponential --q 1 --xi 1e-6") == 0);
  const std::string scan = read_file(out);
  REQUIRE(scan == "c,solver,iterations,rho_estimate\n");
}

TEST_CASE("verify runs its reference comparisons clean", "[cli]") {
  REQUIRE(run_cli("verify") == 0);
}
