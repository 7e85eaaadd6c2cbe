#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(QRC_BENCH_EXE) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("qrc_cli_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
};

const std::string kSmall = "--n-qubits 3 --subintervals 2 --samples 2 --disorder 1,3 "
                           "--set washout=20 --set train=60 --set test=30";

} // namespace

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("xor") == 2);
  CHECK(run("stm --no-such-flag") == 2);
  CHECK(run("stm --preset huge") == 2);
  CHECK(run("stm --n-qubits 13") == 2);
  CHECK(run("stm --set bogus=1") == 2);
  CHECK(run("stm --set samples") == 2);
  CHECK(run("stm --config /nonexistent.cfg") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("cli rejects unknown config keys") {
  TempDir tmp;
  std::ofstream(tmp.path / "bad.cfg") << "n_qubits = 3\nmystery = 1\n";
  CHECK(run("pc --config " + (tmp.path / "bad.cfg").string()) == 2);
}

TEST_CASE("cli runs are reproducible byte for byte") {
  TempDir tmp;
  const fs::path a = tmp.path / "a.csv", b = tmp.path / "b.csv";
  REQUIRE(run("stm " + kSmall + " --out " + a.string()) == 0);
  REQUIRE(run("stm " + kSmall + " --out " + b.string()) == 0);
  CHECK(fs::exists(tmp.path / "a.json"));
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("task,N,alpha,B,W,tau,V,k_delta,sample,seed,C,wall_ms\n", 0) == 0);
}

TEST_CASE("cli config file and overrides layer") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "run.cfg";
  std::ofstream(cfg) << "# small otoc run\ntask = otoc\nn_qubits = 3\nsamples = 2\ntau = 0, 1, 2\n";
  const fs::path out = tmp.path / "o.csv";
  REQUIRE(run("otoc --config " + cfg.string() + " --alpha 0.4,1.2 --out " + out.string()) == 0);
  CHECK(fs::exists(tmp.path / "o_tau_th.csv"));
  const std::string csv = slurp(out);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 2 * 3);
  CHECK(run("stm --config " + cfg.string()) == 2);
}
