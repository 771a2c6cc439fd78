#pragma once

// File formats.
//
//   median: {"size": n, "labels": [...], "triples": [[x, y, z, m], ...]}
//           Every triple of distinct elements must be listed once in some
//           order; permutations and the absorption entries are filled in.
//   group:  {"order": n, "table": [[...], ...], "labels": [...]}
//   words:  {"names": ["x1", ...], "words": ["x1^-2 x2", ...]}

#include <string>
#include <vector>

#include "medianforge/group_words.hpp"
#include "medianforge/median_core.hpp"

namespace medianforge {

/// Throws MalformedInput with the path on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Rejects tables failing the median axioms unless `unchecked`.
MedianTable parse_median_json(const std::string& text, bool unchecked = false);
MedianTable load_median_file(const std::string& path, bool unchecked = false);
/// Lists the triples x < y < z only.
std::string median_to_json(const MedianTable& m);

FiniteGroup parse_group_json(const std::string& text);
FiniteGroup load_group_file(const std::string& path);
std::string group_to_json(const FiniteGroup& g);

struct WordFile {
  std::vector<std::string> names;
  std::vector<std::string> words;
};

WordFile parse_word_json(const std::string& text);
std::string word_file_to_json(const WordFile& w);

}  // namespace medianforge
