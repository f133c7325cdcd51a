#include "pellcf/corpus.hpp"

#include <fstream>
#include <stdexcept>

#include "pellcf/parse.hpp"

namespace pellcf {

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  Corpus corpus;
  std::string line;
  int lineno = 0;
  int considered = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    ++considered;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      corpus.issues.push_back({lineno, "missing ':' separator"});
      continue;
    }
    auto lend = line.find_last_not_of(" \t\r", colon - 1);
    if (colon == 0 || lend == std::string::npos || lend < first) {
      corpus.issues.push_back({lineno, "empty label"});
      continue;
    }
    std::string label = line.substr(first, lend - first + 1);
    try {
      Poly poly = parse_poly(std::string_view(line).substr(colon + 1));
      corpus.entries.push_back({label, poly, lineno});
    } catch (const ParseError& err) {
      corpus.issues.push_back({lineno, err.what()});
    }
  }
  if (considered == 0) corpus.warnings.push_back("corpus file has no entries");
  if (considered > 0 && corpus.entries.empty())
    throw std::runtime_error("every line of " + path + " failed to parse");
  return corpus;
}

}  // namespace pellcf
