#pragma once

#include <string>
#include <vector>

#include "pellcf/poly.hpp"

namespace pellcf {

struct CorpusEntry {
  std::string label;
  Poly poly;
  int line = 0;
};

struct CorpusIssue {
  int line = 0;
  std::string message;
};

struct Corpus {
  std::vector<CorpusEntry> entries;  // file order
  std::vector<CorpusIssue> issues;   // per-line parse failures
  std::vector<std::string> warnings;
};

// One "label: polynomial-expression" per line; '#' starts a comment, blank
// lines are skipped. Bad lines are collected in issues; throws only when
// the file cannot be read or every non-empty line fails.
Corpus load_corpus(const std::string& path);

}  // namespace pellcf
