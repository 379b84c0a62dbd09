#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;  // stdout and stderr together
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(WSPD_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  while (std::fgets(buf, sizeof buf, p)) r.out += buf;
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("wspd_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("wspd-euclid on two points") {
  const fs::path dir = scratch();
  write(dir / "two.txt", "0 0\n1 0\n");
  const Run r = cli("wspd-euclid --eps 0.5 " + (dir / "two.txt").string());
  CHECK(r.status == 0);
  CHECK(has(r.out, "pairs=1\n"));
  CHECK(has(r.out, "validation=ok\n"));
  CHECK(has(r.out, "wall_ms="));
}

TEST_CASE("distill with an SVG overlay") {
  const fs::path dir = scratch();
  write(dir / "curve.txt", "0 0\n4 0\n2 2\n2 -2\n");
  const Run r = cli("distill " + (dir / "curve.txt").string() + " --svg " + (dir / "out.svg").string() + " --out " +
                    (dir / "out.txt").string());
  CHECK(r.status == 0);
  CHECK(has(r.out, "vertices_out=3\n"));
  const std::string svg = read(dir / "out.svg");
  CHECK(has(svg, "<svg"));
  CHECK(has(svg, "stroke=\"#aaa\""));
  CHECK(has(svg, "stroke=\"black\""));
  CHECK(has(read(dir / "out.txt"), "-2"));
}

TEST_CASE("tampered pair file fails validation") {
  const fs::path dir = scratch();
  const std::string pts = (dir / "pts.txt").string();
  CHECK(cli("gen --kind uniform --n 30 --seed 4 --out " + pts).status == 0);
  const std::string pairs = (dir / "pairs.txt").string();
  CHECK(cli("wspd-euclid --eps 0.5 " + pts + " --out " + pairs).status == 0);

  // Round trip: the untouched dump validates.
  Run ok = cli("validate --eps 0.5 " + pairs + " " + pts);
  CHECK(ok.status == 0);
  CHECK(has(ok.out, "valid=1"));

  // Drop the last pair line.
  std::string text = read(pairs);
  text.pop_back();
  text.erase(text.rfind('\n') + 1);
  const std::string tampered = (dir / "tampered.txt").string();
  write(tampered, text);
  const Run bad = cli("validate --eps 0.5 " + tampered + " " + pts);
  CHECK(bad.status == 1);
  CHECK(has(bad.out, "valid=0"));
  CHECK(has(bad.out, "missing {"));
}

TEST_CASE("generators are deterministic") {
  const Run a = cli("gen --kind clustered --n 50 --seed 9");
  const Run b = cli("gen --kind clustered --n 50 --seed 9");
  const Run c = cli("gen --kind clustered --n 50 --seed 10");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(cli("gen --kind serpentine --n 20").status == 0);
}

TEST_CASE("errors surface with useful messages") {
  const fs::path dir = scratch();
  write(dir / "bad.txt", "0 0\n1 1\n1 zz\n");
  Run r = cli("wspd-euclid --eps 0.5 " + (dir / "bad.txt").string());
  CHECK(r.status == 2);
  CHECK(has(r.out, "line 3"));

  write(dir / "far.txt", "0 0\n5 0\n");
  r = cli("wspd-udg --eps 0.5 " + (dir / "far.txt").string());
  CHECK(r.status == 2);
  CHECK(has(r.out, "disconnected"));

  write(dir / "two.txt", "0 0\n1 0\n");
  r = cli("wspd-euclid --eps 1.5 " + (dir / "two.txt").string());
  CHECK(r.status == 2);
  CHECK(has(r.out, "eps"));
  r = cli("shortcut --alpha 0.5 " + (dir / "two.txt").string());
  CHECK(r.status == 2);
}

TEST_CASE("map and curve commands") {
  const fs::path dir = scratch();
  write(dir / "dom.txt", "0 0\n1 0\n0 1\n1 1\n");
  write(dir / "img.txt", "0 0\n2 0\n0 2\n2 2\n");
  Run r = cli("dilation --eps 0.1 " + (dir / "dom.txt").string() + " " + (dir / "img.txt").string());
  CHECK(r.status == 0);
  CHECK(has(r.out, "lipschitz_lower=2\n"));
  r = cli("distortion --eps 0.1 " + (dir / "dom.txt").string() + " " + (dir / "img.txt").string());
  CHECK(r.status == 0);
  const auto at = r.out.find("distortion=");
  REQUIRE(at != std::string::npos);
  const double d = std::stod(r.out.substr(at + 11));
  CHECK(d >= 1.0 - 1e-12);
  CHECK(d <= 1.1);
  write(dir / "col.txt", "0 0\n2 0\n0 2\n0 0\n");
  r = cli("distortion --eps 0.1 " + (dir / "dom.txt").string() + " " + (dir / "col.txt").string());
  CHECK(has(r.out, "distortion=inf"));

  write(dir / "hairpin.txt", "0 0\n1 0\n1 0.1\n0 0.1\n");
  r = cli("shortcut --alpha 3 --eps 0.1 " + (dir / "hairpin.txt").string() + " --log " + (dir / "log.txt").string());
  CHECK(r.status == 0);
  CHECK(has(r.out, "vertices_out=2\n"));
  CHECK(read(dir / "log.txt").rfind("0 3 ", 0) == 0);
}

TEST_CASE("graph-metric constructions validate") {
  const fs::path dir = scratch();
  const std::string pts = (dir / "udg.txt").string();
  CHECK(cli("gen --kind udg --n 80 --seed 2 --out " + pts).status == 0);
  Run r = cli("wspd-udg --eps 0.5 " + pts + " --svg " + (dir / "udg.svg").string());
  CHECK(r.status == 0);
  CHECK(has(r.out, "validation=ok"));
  r = cli("wspd-optimal --eps 0.5 --metric graph " + pts);
  CHECK(r.status == 0);
  CHECK(has(r.out, "validation=ok"));
  fs::remove_all(dir);
}
