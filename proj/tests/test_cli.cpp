#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ciso/analyzer.hpp"
#include "support.hpp"

using namespace ciso;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CISO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, k);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / ("ciso_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli exit codes") {
  const fs::path dir = scratch();
  const std::string data = CISO_SOURCE_DIR "/data/";

  Run ok = run("analyze " + data + "heis1_riem.json");
  CHECK(ok.status == 0);
  CHECK(nlohmann::json::parse(ok.out)["global"]["theorem6_bound"] == 4);

  CHECK(run("").status == 1);
  CHECK(run("analyze").status == 1);

  write(dir / "bad.json", "{\"n\": 1");
  CHECK(run("analyze " + (dir / "bad.json").string()).status == 2);
  CHECK(run("analyze " + (dir / "missing.json").string()).status == 2);

  write(dir / "flat.json", R"({"n": 1, "frame": [["1", "0", "0"], ["0", "1", "0"]], "signature": ["+", "+"]})");
  Run flat = run("analyze " + (dir / "flat.json").string());
  CHECK(flat.status == 3);
  CHECK(nlohmann::json::parse(flat.out)["status"] == "NOT_CONTACT");

  StructureSpec jordan;
  jordan.structure = unsupported_structure();
  write(dir / "jordan.json", emit_structure(jordan));
  Run partial = run("analyze " + (dir / "jordan.json").string() + " --out " + (dir / "jordan_report.json").string());
  CHECK(partial.status == 4);
  CHECK(nlohmann::json::parse(slurp(dir / "jordan_report.json"))["status"] == "UNSUPPORTED_PENCIL");

  fs::remove_all(dir);
}

TEST_CASE("cli subcommands") {
  const fs::path dir = scratch();
  Run model = run("model heisenberg --n 2 --freq 2,1/2 --signature +,+,+,+ --emit " + (dir / "m.json").string());
  CHECK(model.status == 0);
  CHECK(slurp(dir / "m.json") == slurp(CISO_SOURCE_DIR "/data/heis2_deformed.json"));
  CHECK(run("model heisenberg --n 2 --freq 2 --signature +,+,+,+").status == 2);

  Run pro = run("prolongation " + (dir / "m.json").string());
  CHECK(pro.status == 0);
  auto doc = nlohmann::json::parse(pro.out);
  CHECK(doc["g1_dimension"] == 0);
  CHECK(doc["levi_civita_uniqueness"] == true);

  Run b = run("bounds --dim-m 5 --rk-h 4 --index 1");
  CHECK(b.status == 0);
  CHECK(nlohmann::json::parse(b.out)["thm1_bound"] == 7);
  fs::remove_all(dir);
}

TEST_CASE("cli reports are byte-identical across runs") {
  const std::string spec = CISO_SOURCE_DIR "/data/heis2_deformed.json";
  Run a = run("analyze " + spec + " --seed 7");
  Run b = run("analyze " + spec + " --seed 7");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run("analyze " + spec + " --seed 8").out != a.out);
}
