#pragma once

// Worked examples shipped as data, both as objects and as file contents in
// the formats of io.hpp.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "medianforge/group_words.hpp"
#include "medianforge/median_core.hpp"

namespace medianforge {

struct Fixture {
  std::string name;
  std::string content;
};

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(const std::string& data);

/// Every fixture file, sorted by name.
std::vector<Fixture> fixtures();
/// Writes fixtures() into `dir` (which must exist) and returns the paths.
std::vector<std::string> write_fixtures(const std::string& dir);

/// Relabels m by x -> perm[x].
MedianTable permuted(const MedianTable& m, const std::vector<ElementId>& perm);

/// H = 1, X = {1, x1, x2, x3} (ids 0..3): the four stars followed by the
/// three squares, named star_<center> and square_<pairing>.
std::vector<std::pair<std::string, MedianTable>> four_point_tables();
/// The square with opposite pairs (1, x2) and (x1, x3).
MedianTable four_point_square();

/// H = Z/2, I = {1, 2}: the square with h1 acting as the half turn, and
/// the 4-chain 1, i, h1 i, h1 with h1 acting as reversal.
MedianTable z2_two_orbit_square();
MedianTable z2_two_orbit_chain();

/// H = Z/2, I = {1, 2, 3}: the 6-chain on which h1 acts by reversal.
MedianTable config_median();
/// Generator names for the configuration example.
std::vector<std::string> config_names();
/// i^-2 h j^3 g with h = g = h1.
std::string config_word();

/// Z/4 with X = {0, 1}: the retraction 2 -> 1, 3 -> 0.
std::vector<std::uint32_t> z4_admissible_map();

}  // namespace medianforge
