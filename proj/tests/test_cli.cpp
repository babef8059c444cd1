#include <string>

#include "doctest.h"

#include "cli_runner.hpp"
#include "sierpinski/bigint.hpp"

namespace {

const std::string kC4 = "4 4\n1 2\n2 3\n3 4\n4 1\n";
const std::string kK2 = "2 1\n1 2\n";
const std::string kP3 = "3 2\n1 2\n2 3\n";

struct TempInput {
  std::string path;
  explicit TempInput(const std::string& text) : path(cli::write_temp(text)) {}
  ~TempInput() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("info reports base and Sierpinski measures") {
  TempInput in(kC4);
  auto r = cli::run({"info", "--input", in.path, "--t", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "base graph: 4 vertices, 4 edges\n"
        "  min degree: 2\n"
        "  max degree: 2\n"
        "  degree classes:\n"
        "    2: 1 2 3 4\n"
        "S(G,3): 64 vertices, 84 edges\n"
        "  min degree: 2\n"
        "  max degree: 3\n");
}

TEST_CASE("info handles astronomically large t") {
  TempInput in(kC4);
  auto r = cli::run({"info", "--input", in.path, "--t", "200"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("S(G,200):") != std::string::npos);
  // 4^200, all 121 digits
  CHECK(r.output.find("258224987808690858965591917200301187432970579282922351283065"
                      "9356540647622016841194629645353280137831435903171972747493376") !=
        std::string::npos);
}

TEST_CASE("generate ranks emits a reloadable edge list") {
  TempInput in(kK2);
  auto r = cli::run({"generate", "--input", in.path, "--t", "2", "--format", "ranks"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "4 3\n2 3\n1 2\n3 4\n");

  // feed the generated edge list back through the parser via stdin
  auto again = cli::run({"info", "--input", "-", "--t", "1"}, r.output);
  CHECK(again.exit_code == 0);
  CHECK(again.output.find("base graph: 4 vertices, 3 edges") != std::string::npos);
}

TEST_CASE("generate words at t=1 lists the base edges") {
  TempInput in(kC4);
  auto r = cli::run({"generate", "--input", in.path, "--t", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 2\n1 4\n2 3\n3 4\n");
}

TEST_CASE("generate words uses dotted labels for t>1") {
  TempInput in(kK2);
  auto r = cli::run({"generate", "--input", in.path, "--t", "2", "--format", "words"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1.2 2.1\n1.1 1.2\n2.1 2.2\n");
}

TEST_CASE("generate dot output is well formed") {
  TempInput in(kK2);
  auto r = cli::run({"generate", "--input", in.path, "--t", "2", "--format", "dot"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("graph S {") == 0);
  CHECK(r.output.find("\"1.2\" -- \"2.1\";") != std::string::npos);
  CHECK(r.output.rfind("}\n") == r.output.size() - 2);
}

TEST_CASE("generate refuses instances beyond the cap, with a hint") {
  TempInput in(kC4);
  auto r = cli::run({"generate", "--input", in.path, "--t", "10"}, "", true);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("error:") != std::string::npos);
  CHECK(r.output.find("--cap") != std::string::npos);

  auto ok = cli::run({"generate", "--input", in.path, "--t", "10", "--cap",
                      "2000000", "--format", "ranks"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.substr(0, ok.output.find('\n')) == "1048576 1398100");
}

TEST_CASE("degseq prints the closed-form histogram") {
  TempInput in(kC4);
  auto r = cli::run({"degseq", "--input", in.path, "--t", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2: 24\n3: 40\n");

  TempInput p3(kP3);
  auto rp = cli::run({"degseq", "--input", p3.path, "--t", "2"});
  CHECK(rp.output == "1: 4\n2: 3\n3: 2\n");
}

TEST_CASE("degseq --oracle confirms the closed form") {
  TempInput in(kC4);
  auto r = cli::run({"degseq", "--input", in.path, "--t", "3", "--oracle"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2: 24\n3: 40\noracle: match\n");
}

TEST_CASE("degseq scales to t=100 with exact big integers") {
  TempInput in(kC4);
  auto r = cli::run({"degseq", "--input", in.path, "--t", "100"});
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "2: 535646014752996758513987364113720867507400997927597611767128\n"
        "3: 1071292029505993517027974728227441735014801995855195223534248\n");
}

TEST_CASE("zagreb evaluates every requested exponent") {
  TempInput in(kC4);
  auto r = cli::run({"zagreb", "--input", in.path, "--t", "3", "--alpha", "0,1,2,3"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0: 64\n1: 168\n2: 456\n3: 1272\n");
}

TEST_CASE("zagreb --oracle cross-checks by construction") {
  TempInput in(kC4);
  auto r = cli::run({"zagreb", "--input", in.path, "--t", "3", "--alpha", "2",
                     "--oracle"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2: 456\noracle: match\n");
}

TEST_CASE("zagreb rejects a negative exponent") {
  TempInput in(kC4);
  auto r = cli::run({"zagreb", "--input", in.path, "--t", "3", "--alpha=-1"}, "",
                    true);
  CHECK(r.exit_code != 0);
}

TEST_CASE("zagreb at t=100 matches the histogram moment") {
  TempInput in(kC4);
  auto r = cli::run({"zagreb", "--input", in.path, "--t", "100", "--alpha", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "2: 11784212324565928687307722010501859085162821954407147458876744\n");
}

TEST_CASE("verify exits zero when every check passes") {
  TempInput in(kC4);
  auto r = cli::run({"verify", "--input", in.path, "--t", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("overall: pass") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify respects --alpha-max") {
  TempInput in(kP3);
  auto r = cli::run({"verify", "--input", in.path, "--t", "2", "--alpha-max", "6"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("zagreb[6]") != std::string::npos);
  CHECK(r.output.find("leaf") != std::string::npos);
}

TEST_CASE("verify reports cap overflows as errors") {
  TempInput in(kC4);
  auto r = cli::run({"verify", "--input", in.path, "--t", "40"}, "", true);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("malformed input names the offending line") {
  TempInput in("3 2\n1 2\n2 2\n");
  auto r = cli::run({"info", "--input", in.path, "--t", "1"}, "", true);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("error:") != std::string::npos);
  CHECK(r.output.find("line 3") != std::string::npos);
}

TEST_CASE("missing input file is an error") {
  auto r = cli::run({"info", "--input", "/nonexistent/graph.txt", "--t", "1"}, "",
                    true);
  CHECK(r.exit_code != 0);
}

TEST_CASE("reads the graph from stdin when input is -") {
  auto r = cli::run({"degseq", "--input", "-", "--t", "2"}, kP3);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1: 4\n2: 3\n3: 2\n");
}

TEST_CASE("runs are deterministic") {
  TempInput in(kC4);
  auto a = cli::run({"verify", "--input", in.path, "--t", "3", "--alpha-max", "5"});
  auto b = cli::run({"verify", "--input", in.path, "--t", "3", "--alpha-max", "5"});
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  auto g1 = cli::run({"generate", "--input", in.path, "--t", "3", "--format", "ranks"});
  auto g2 = cli::run({"generate", "--input", in.path, "--t", "3", "--format", "ranks"});
  CHECK(g1.output == g2.output);
}

TEST_CASE("json-like output parses") {
  TempInput in(kC4);
  auto deg = cli::run({"degseq", "--input", in.path, "--t", "3", "--format",
                       "json-like"});
  CHECK(deg.exit_code == 0);
  CHECK(deg.output.find("[{\"count\":\"24\",\"degree\":2}") == 0);

  auto info = cli::run({"info", "--input", in.path, "--t", "3", "--format",
                        "json-like"});
  CHECK(info.exit_code == 0);
  CHECK(info.output.find("\"vertices\":\"64\"") != std::string::npos);

  auto zag = cli::run({"zagreb", "--input", in.path, "--t", "3", "--alpha", "2",
                       "--format", "json-like"});
  CHECK(zag.exit_code == 0);
  CHECK(zag.output.find("\"value\":\"456\"") != std::string::npos);

  auto ver = cli::run({"verify", "--input", in.path, "--t", "2", "--format",
                       "json-like"});
  CHECK(ver.exit_code == 0);
  CHECK(ver.output.find("\"overall\":true") != std::string::npos);
}

TEST_CASE("usage errors exit nonzero") {
  auto none = cli::run({}, "", true);
  CHECK(none.exit_code != 0);
  auto bad = cli::run({"frobnicate"}, "", true);
  CHECK(bad.exit_code != 0);
  TempInput in(kC4);
  auto not_int = cli::run({"degseq", "--input", in.path, "--t", "abc"}, "", true);
  CHECK(not_int.exit_code != 0);
  auto zero_t = cli::run({"degseq", "--input", in.path, "--t", "0"}, "", true);
  CHECK(zero_t.exit_code != 0);
}
