#pragma once

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pica/automaton.hpp"
#include "pica/picture.hpp"

#ifndef PICA_CORPUS_DIR
#error "PICA_CORPUS_DIR must point at tests/corpus"
#endif

namespace corpus {

inline std::filesystem::path dir() { return PICA_CORPUS_DIR; }

inline pica::Automaton2D load(const std::string& rel) { return pica::read_automaton_file(dir() / rel); }

/// Every .aut file in a corpus subdirectory, by file name.
inline std::vector<pica::Automaton2D> machines(const std::string& sub) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir() / sub))
    if (e.path().extension() == ".aut") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<pica::Automaton2D> out;
  for (const auto& f : files) out.push_back(pica::read_automaton_file(f));
  return out;
}

using Pair = std::pair<pica::Automaton2D, pica::Automaton2D>;

inline std::vector<Pair> pairs(const std::string& rel) {
  std::istringstream in(pica::read_text_file(dir() / rel));
  std::vector<Pair> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == ';') continue;
    std::istringstream fields(line);
    std::string a, b;
    fields >> a >> b;
    out.emplace_back(load(a), load(b));
  }
  return out;
}

}  // namespace corpus
