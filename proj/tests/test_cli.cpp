#include "loclaurent/cli.hpp"
#include "loclaurent/dataset.hpp"
#include "loclaurent/examples.hpp"
#include "loclaurent/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace loclaurent;
namespace fs = std::filesystem;

namespace {

const fs::path kRoot = LOCLAURENT_SOURCE_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &stem) {
  return (kRoot / "data" / "examples" / (stem + ".json")).string();
}

std::string read_file(const fs::path &p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path temp_file(const std::string &name, const std::string &content) {
  const auto p = fs::temp_directory_path() / ("loclaurent_test_" + name);
  std::ofstream(p) << content;
  return p;
}

/// Runs the installed binary through the shell and captures stdout.
Outcome run_binary(const std::string &args) {
  const std::string cmd = std::string("\"") + LOCLAURENT_CLI + "\" " + args + " 2>/dev/null";
  std::string out;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
    out.append(buf, n);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out, {}};
}

} // namespace

TEST_CASE("cmd_validate") {
  const auto ok = run({"validate", data("sphere-1-1")});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("OK") != std::string::npos);

  auto text = read_file(data("sphere-1-1"));
  text.replace(text.find("\"weight\": -1"), 12, "\"weight\": 0");
  const auto bad = run({"validate", temp_file("w0.json", text).string()});
  CHECK(bad.code == cli::kDomainFailure);
  CHECK(bad.out.find("components[1] 'north'.summands[0]") != std::string::npos);

  const auto malformed = run({"validate", temp_file("bad.json", "{ not json").string()});
  CHECK(malformed.code == cli::kUsageError);
  CHECK(malformed.err.find("line 1") != std::string::npos);

  CHECK(run({"validate", "/nonexistent/file.json"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
}

TEST_CASE("cmd_character") {
  const auto r = run({"character", data("sphere-1-1")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("character: z^-1 + 1 + z\n") != std::string::npos);
  CHECK(r.out.find("invariant_part: 1\n") != std::string::npos);
  CHECK(r.out.find("dimension: 3\n") != std::string::npos);

  const auto e = run({"character", data("sphere-1-1"), "--eval", "2"});
  CHECK(e.out.find("value=7/2") != std::string::npos);

  CHECK(run({"character", data("point-space")}).out.find("character: 1\n") != std::string::npos);

  SUBCASE("json mirrors text") {
    const auto j = run({"character", data("cp2-triangle"), "--json", "--eval", "3/2"});
    REQUIRE(j.code == cli::kOk);
    const auto report = character_report_from_json(j.out);
    CHECK(report.invariant == 2);
    CHECK(report.dimension == 10);
    REQUIRE(report.eval_value.has_value());
    CHECK(report.eval_value == Scalar(2743, 324));
    CHECK(to_json(report) == j.out);
  }
  SUBCASE("evaluation at a denominator root") {
    // z0 = 1 is a root of every weight +-1 denominator; the polynomial route still answers
    const auto at1 = run({"character", data("sphere-1-1"), "--eval", "1"});
    CHECK(at1.code == cli::kOk);
    CHECK(at1.out.find("value=3") != std::string::npos);
    CHECK(run({"character", data("sphere-1-1"), "--eval", "0"}).code == cli::kDenominatorVanishes);
    CHECK(run({"character", data("sphere-1-1"), "--eval", "1.5"}).code == cli::kUsageError);
  }
  SUBCASE("inconsistent data") {
    auto text = read_file(data("sphere-1-1"));
    text.replace(text.find("\"line_class\": \"1\""), 17, "\"line_class\": \"2\"");
    CHECK(run({"character", temp_file("incons.json", text).string()}).code ==
          cli::kInconsistentData);
  }
  SUBCASE("order margin does not change the report body") {
    const auto a = run({"character", data("cp2-triangle"), "--order", "3"});
    const auto b = run({"character", data("cp2-triangle"), "--order", "30"});
    CHECK(a.out.substr(0, a.out.find("window")) == b.out.substr(0, b.out.find("window")));
    CHECK(a.out.find("window: [-7, 5]") != std::string::npos);
    CHECK(run({"character", data("cp2-triangle"), "--order", "-1"}).code == cli::kUsageError);
  }
}

TEST_CASE("cmd_verify") {
  const auto red = run({"verify", data("sphere-1-1"), "--reduction"});
  CHECK(red.code == cli::kOk);
  CHECK(red.out.find("[reduction] PASS") != std::string::npos);
  CHECK(red.out.find("Q(M)^S1 = 1  ==  Q(M+)^S1 = 1") != std::string::npos);
  CHECK(red.out.find("Q(M+)^S1 = 1  ==  Q(M_red) = 1") != std::string::npos);

  const auto p2 = run({"verify", data("shifted-sphere"), "--prop2"});
  CHECK(p2.code == cli::kOk);
  CHECK(p2.out.find("[prop2] PASS") != std::string::npos);
  CHECK(p2.out.find("Q(M)^S1 = 1  ==  (q0)_! l0 = 1") != std::string::npos);

  const auto pre = run({"verify", data("sphere-1-1"), "--prop2"});
  CHECK(pre.code == cli::kDomainFailure);
  CHECK(pre.out.find("[prop2] PRECONDITION") != std::string::npos);

  const auto all = run({"verify", data("sphere-1-1")});
  CHECK(all.code == cli::kOk);
  CHECK(all.out.find("prop2=SKIPPED") != std::string::npos);
  CHECK(all.out.find("overall=PASS") != std::string::npos);

  const auto against = run({"verify", data("sphere-1-1"), "--prop1", "--against", data("sphere-3-1")});
  CHECK(against.code == cli::kOk);
  CHECK(against.out.find("Q(M)^S1 = 1  ==  Q(N)^S1 = 1") != std::string::npos);

  auto text = read_file(data("sphere-1-1"));
  text.replace(text.find("\"reduced_quantization\": \"1\""), 27, "\"reduced_quantization\": \"5\"");
  const auto wrong = run({"verify", temp_file("wrongred.json", text).string(), "--reduction"});
  CHECK(wrong.code == cli::kDomainFailure);
  CHECK(wrong.out.find("overall=FAIL") != std::string::npos);
}

TEST_CASE("cmd_examples") {
  const auto list = run({"examples", "list"});
  CHECK(list.code == cli::kOk);
  for (const char *name : {"sphere(1,1)", "shifted-sphere", "cp2-triangle", "dual-number-synthetic"}) {
    CHECK(list.out.find(name) != std::string::npos);
  }
  const auto emitted = run({"examples", "emit", "sphere(1,1)", "-"});
  CHECK(emitted.code == cli::kOk);
  CHECK(emitted.out == read_file(data("sphere-1-1")));

  const auto path = fs::temp_directory_path() / "loclaurent_test_emit.json";
  CHECK(run({"examples", "emit", "cp2-triangle", path.string()}).code == cli::kOk);
  CHECK(run({"validate", path.string()}).code == cli::kOk);
  CHECK(run({"character", path.string()}).out == run({"character", data("cp2-triangle")}).out);

  const auto nosuch = run({"examples", "emit", "nosuch", "-"});
  CHECK(nosuch.code == cli::kDomainFailure);
  CHECK(nosuch.err.find("nosuch") != std::string::npos);
}

TEST_CASE("golden outputs") {
  std::size_t compared = 0;
  for (const auto &entry : fs::directory_iterator(kRoot / "data" / "examples")) {
    const auto stem = entry.path().stem().string();
    INFO(stem);
    const auto golden = kRoot / "tests" / "golden";
    CHECK(run({"character", data(stem)}).out == read_file(golden / (stem + ".character.txt")));
    CHECK(run({"character", data(stem), "--json"}).out ==
          read_file(golden / (stem + ".character.json")));
    CHECK(run({"verify", data(stem)}).out == read_file(golden / (stem + ".verify.txt")));
    compared += 3;
  }
  CHECK(compared == 3 * bundled_examples().size());
}

TEST_CASE("binary is deterministic and honours the margin variable") {
  const std::string file = "\"" + data("dual-number-synthetic") + "\"";
  const auto first = run_binary("character " + file);
  const auto second = run_binary("character " + file);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == read_file(kRoot / "tests" / "golden" / "dual-number-synthetic.character.txt"));

  const auto narrow = run_binary("character " + file);
  ::setenv(cli::kMarginEnv, "2", 1);
  const auto env = run_binary("character " + file);
  const auto flag = run_binary("character " + file + " --order 5");
  ::setenv(cli::kMarginEnv, "oops", 1);
  const auto bad = run_binary("character " + file);
  ::unsetenv(cli::kMarginEnv);
  CHECK(env.code == 0);
  CHECK(env.out.find("window: [-3, 3]") != std::string::npos);
  CHECK(flag.out.find("window: [-6, 6]") != std::string::npos);
  CHECK(bad.code == cli::kUsageError);
  CHECK(narrow.out.find("window: [-17, 17]") != std::string::npos);
}
