#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "canon4/corpus.hpp"

using namespace canon4;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(CANON4_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("corpus payloads are canonical under parse and emit") {
  auto entries = load_corpus(default_corpus_dir());
  CHECK(entries.size() >= 20);
  for (const auto& e : entries) {
    json again = e.scheme ? emit_scheme(*e.scheme) : emit_cubic(*e.cubic);
    CHECK_MESSAGE(again == e.raw["payload"], e.name);
    CHECK(canonical_entry(e.raw) == e.raw);
  }
}

TEST_CASE("parse errors carry a location") {
  json bad = json::parse(R"({"name":"bad","kind":"scheme","payload":{"type":"scheme","name":"bad","q":"x1*x4-x2*x3","f":"x1^3+x5^3"},"expect":{"source":"derived"}})");
  try {
    parse_entry(bad, "bad.json");
    FAIL("no error");
  } catch (const ParseError& e) {
    std::string m = e.what();
    CHECK(m.find("bad.json") != std::string::npos);
    CHECK(m.find("/f") != std::string::npos);
    CHECK(m.find("x5") != std::string::npos);
  }
  json no_source = json::parse(R"({"name":"n","kind":"cubic","payload":{"type":"cubic","name":"n","F":"x0^3"},"expect":{}})");
  CHECK_THROWS_AS(parse_entry(no_source), ParseError);
}

TEST_CASE("report exit codes") {
  Report r;
  CHECK(r.exit_code() == 0);
  r.checks.push_back({"g", "e", "c", "1", "1", "derived", Outcome::Pass, ""});
  CHECK(r.exit_code() == 0);
  r.checks.push_back({"g", "e", "c", "1", "2", "stated", Outcome::Flagged, "recorded"});
  CHECK(r.exit_code() == 2);
  r.checks.push_back({"g", "e", "c", "1", "2", "stated", Outcome::Fail, ""});
  CHECK(r.exit_code() == 1);
  json j = r.to_json();
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["flagged"] == 1);
  CHECK(j["checks"][1]["source"] == "stated");
}

TEST_CASE("filters select groups") {
  CorpusOptions opt;
  opt.filter = "lattices";
  Report lat = run_corpus(opt);
  for (const auto& c : lat.checks) CHECK(c.group == "lattices");
  CHECK(lat.count(Outcome::Fail) == 0);
  CHECK(lat.count(Outcome::Flagged) == 1);
  opt.filter = "boundary";
  Report b = run_corpus(opt);
  CHECK(b.checks.size() == 3);
  CHECK(b.exit_code() == 2);
  opt.filter = "divisors";
  CHECK(run_corpus(opt).exit_code() == 0);
}

TEST_CASE("cli: lattice, divisor and singularity commands") {
  Run r = run("lat roots \"E8+A2\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"roots\": 246") != std::string::npos);
  r = run("lat disc \"U(3)+E8\"");
  CHECK(r.out.find("(3,3)") != std::string::npos);
  r = run("div convert --class \"9l-1d\" --to eta-h");
  CHECK(r.out.find("3eta+2h") != std::string::npos);
  r = run("div alpha --class 9,1,1,1");
  CHECK(r.out.find("5/9") != std::string::npos);
  r = run("div pencil --config quadric");
  CHECK(r.out.find("\"singular_fibers\": 34") != std::string::npos);
  r = run("lat borcherds");
  CHECK(r.out.find("\"coefficient\": \"9/2\"") != std::string::npos);
  std::string f = temp_file("canon4_c2a5.json", R"({"type":"scheme","name":"c","q":"x1*x4-x2*x3","f":"x1*x3^2+x2^2*x4"})");
  r = run("sing classify --scheme " + f);
  CHECK(r.code == 0);
  CHECK(r.out.find("A5") != std::string::npos);
  r = run("stab verdict --scheme " + f);
  CHECK(r.out.find("2.i.alpha") != std::string::npos);
}

TEST_CASE("cli: errors exit nonzero with a message") {
  std::string f = temp_file("canon4_bad.json", R"({"type":"scheme","name":"b","q":"x1*x4-x2*x3","f":"x1^3+x5^3"})");
  Run r = run("sing classify --scheme " + f);
  CHECK(r.code == 1);
  CHECK(r.out.find("x5") != std::string::npos);
  CHECK(r.out.find("canon4_bad.json") != std::string::npos);
  CHECK(run("lat roots F4").code == 1);
  CHECK(run("nosuchcommand").code != 0);
}

TEST_CASE("cli: corpus run exit code reflects flagged discrepancies") {
  Run r = run("corpus run --filter boundary");
  CHECK(r.code == 2);
  CHECK(r.out.find("[flagged]") != std::string::npos);
  CHECK(run("corpus run --filter divisors").code == 0);
}
