#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canon4/model.hpp"
#include "canon4/polyio.hpp"

namespace canon4 {

struct CorpusEntry {
  std::string name;
  std::string file;
  json raw;
  std::optional<TwoThreeScheme> scheme;
  std::optional<CubicThreefold> cubic;
  json expect;
  std::vector<std::string> tags;
  bool has_tag(const std::string& t) const;
};

// Entries sorted by name; ParseError names the file and JSON pointer.
std::vector<CorpusEntry> load_corpus(const std::string& dir);
CorpusEntry parse_entry(const json& j, const std::string& file = "");
// Payload rewritten through parse and emit.
json canonical_entry(const json& j);

enum class Outcome { Pass, Fail, Flagged };
std::string to_string(Outcome o);

struct Check {
  std::string group;
  std::string entry;
  std::string name;
  std::string computed;
  std::string expected;
  std::string source;  // "stated" or "derived"
  Outcome outcome = Outcome::Pass;
  std::string note;
};

struct Report {
  std::vector<Check> checks;
  int count(Outcome o) const;
  // 0 all pass, 1 any failure, 2 only flagged discrepancies.
  int exit_code() const;
  json to_json() const;
  std::string text() const;
};

struct CorpusOptions {
  std::string dir;
  std::string filter;  // group or entry name; empty runs everything
  std::uint64_t seed = 7;
  int frames = 100;
  int random_instances = 20;
  int random_lines = 20;
};

std::vector<std::string> corpus_groups();
Report run_corpus(const CorpusOptions& opt);

std::string default_corpus_dir();

}  // namespace canon4
