#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "abcvote/cli.hpp"

using namespace abcvote::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("abcvote_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream s(text);
  for (std::string l; std::getline(s, l);) {
    if (l == line) return true;
  }
  return false;
}

const std::string mixed = "m 5\nk 3\n3: 0 1\n2: 2\n2: 2 3\n1: 4\n1: 0 4\n";

}  // namespace

TEST_CASE("compute prints committee and exact score") {
  const auto r = run({"compute", "--rule", "pav", "--format", "kv", "-"}, mixed);
  CHECK(r.code == exit_ok);
  CHECK(has_line(r.out, "committee=0,1,2"));
  CHECK(has_line(r.out, "score=19/2"));
  CHECK(has_line(r.out, "k=3"));
  CHECK(r.out.find("time") == std::string::npos);
  const auto text = run({"compute", "--rule", "cc", "--k", "4", "-"}, mixed);
  CHECK(has_line(text.out, "committee: 0,1,2,4"));
  CHECK(has_line(text.out, "k: 4"));
  CHECK(text.out.find("time: ") != std::string::npos);
}

TEST_CASE("kv output is identical in serial and parallel mode") {
  const auto a = run({"compute", "--rule", "mav", "--tiebreak", "prefer-jr", "--format", "kv", "-"}, mixed);
  const auto b = run({"compute", "--rule", "mav", "--tiebreak", "prefer-jr", "--format", "kv", "--serial", "-"}, mixed);
  CHECK(a.code == exit_ok);
  CHECK(a.out == b.out);
}

TEST_CASE("check exit codes follow the verdict") {
  auto r = run({"check", "--axiom", "jr", "--committee", "0,1,4", "--format", "kv", "-"}, mixed);
  CHECK(r.code == exit_fail);
  CHECK(has_line(r.out, "verdict=fail"));
  CHECK(has_line(r.out, "witness.candidates=2"));
  CHECK(has_line(r.out, "witness.voters=1,2"));
  CHECK(has_line(r.out, "witness.size=4"));
  r = run({"check", "--axiom", "ejr", "--committee", "0,2,4", "-"}, mixed);
  CHECK(r.code == exit_ok);
  CHECK(has_line(r.out, "verdict: pass"));
  r = run({"check", "--axiom", "ell-jr:2", "--committee", "0,2,4", "--format", "kv", "-"}, mixed);
  CHECK(has_line(r.out, "axiom=ell-jr:2"));
}

TEST_CASE("find runs the greedy constructions") {
  CHECK(has_line(run({"find", "--axiom", "jr", "--format", "kv", "-"}, mixed).out, "committee=0,2,4"));
  const auto four = "m 4\n1: 0 1\n1: 0 2\n1: 1 3\n1: 2 3\n";
  const auto r = run({"find", "--axiom", "sjr", "--k", "2", "--format", "kv", "-"}, four);
  CHECK(r.code == exit_fail);
  CHECK(has_line(r.out, "committee=none"));
}

TEST_CASE("corpus emit, verify and list") {
  auto r = run({"corpus", "--name", "no-sjr-committee"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("# labels 0=a 1=b 2=c 3=d") != std::string::npos);
  CHECK(r.out.find("m 4\nk 2\n") != std::string::npos);
  r = run({"corpus", "--name", "rav-fails-jr-extended", "--param", "k=12", "--verify", "--format", "kv"});
  CHECK(r.code == exit_ok);
  CHECK(has_line(r.out, "verdict=pass"));
  r = run({"corpus", "--list"});
  CHECK(r.out.find("weighted-rav-fails-jr s=8 w2=1/8") != std::string::npos);
  r = run({"corpus", "--name", "av-ignores-singleton", "--param", "k=2"});
  CHECK(r.code == exit_usage);
  CHECK(r.err.find("k >= 3") != std::string::npos);
  CHECK(run({"corpus", "--name", "disjoint-pairs", "--param", "k"}).code == exit_usage);
}

TEST_CASE("reduce emits the instance or checks it") {
  std::string graph = "L 3 R 3\n";
  for (int l = 0; l < 3; ++l) {
    for (int r = 0; r < 3; ++r) graph += "edge " + std::to_string(l) + " " + std::to_string(r) + "\n";
  }
  auto r = run({"reduce", "--graph", "-", "--ell", "3"}, graph);
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("# committee 3,4,5,6\nm 10\nk 4\n") == 0);
  r = run({"reduce", "--graph", "-", "--ell", "3", "--check", "--format", "kv"}, graph);
  CHECK(r.code == exit_fail);
  CHECK(has_line(r.out, "witness.level=3"));
  const auto missing = graph.substr(0, graph.size() - std::string("edge 2 2\n").size());
  CHECK(run({"reduce", "--graph", "-", "--ell", "3", "--check"}, missing).code == exit_ok);
}

TEST_CASE("random and oracle") {
  const auto r = run({"random", "--seed", "42", "--n", "5", "--m", "4", "--k", "2"});
  CHECK(r.out == "m 4\nk 2\n1: 0 1 2 3\n1: 1 2 3\n1: 0 3\n1: 0 1 3\n1: 0 1\n");
  const auto o = run({"oracle", "--trials", "20", "--format", "kv"});
  CHECK(o.code == exit_ok);
  CHECK(has_line(o.out, "verdict=pass"));
  CHECK(run({"oracle", "--trials", "5", "--search-rav-jr", "3"}).code == exit_ok);
}

TEST_CASE("error exit codes") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"compute", "--rule", "borda", "-"}, mixed).code == exit_usage);
  CHECK(run({"compute", "--rule", "av", "--k", "9", "-"}, mixed).code == exit_usage);
  CHECK(run({"compute", "--rule", "av", "-"}, "m 3\n1: 0\n").code == exit_usage);  // no k anywhere
  CHECK(run({"check", "--axiom", "ejr", "--committee", "0,x", "-"}, mixed).code == exit_usage);
  CHECK(run({"check", "--axiom", "bogus", "--committee", "0", "-"}, mixed).code == exit_usage);
  auto r = run({"compute", "--rule", "av", "-"}, "m 3\nk 1\n1: 7\n");
  CHECK(r.code == exit_parse);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"compute", "--rule", "av", "/nonexistent/file"}).code == exit_usage);
  r = run({"compute", "--rule", "pav", "--budget", "1", "-"}, mixed);
  CHECK(r.code == exit_budget);
  CHECK(r.err.find("budget") != std::string::npos);
  CHECK(run({"compute", "--help"}).code == exit_ok);
}

TEST_CASE("the installed binary uses the same exit codes") {
  const auto path = temp_file("mixed.txt", mixed);
  const auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  const std::string tool = ABCVOTE_TOOL;
  CHECK(status(tool + " check --axiom jr --committee 0,2,4 " + path) == 0);
  CHECK(status(tool + " check --axiom jr --committee 0,1,4 " + path) == 1);
  CHECK(status(tool + " frobnicate") == 2);
  CHECK(status(tool + " compute --rule av " + temp_file("bad.txt", "m 2\n1: 3\n")) == 3);
  CHECK(status(tool + " compute --rule pav --budget 1 " + path) == 4);
}
