#include "medianforge/fixtures.hpp"

#include <algorithm>

#include <json.hpp>

#include "medianforge/errors.hpp"
#include "medianforge/io.hpp"

namespace medianforge {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

MedianTable permuted(const MedianTable& m, const std::vector<ElementId>& perm) {
  if (perm.size() != m.size()) throw MalformedInput("permutation size does not match table");
  std::vector<ElementId> back(m.size());
  for (ElementId x = 0; x < m.size(); ++x) back[perm[x]] = x;
  return MedianTable::unchecked(TernaryTable::from_function(m.size(), [&](ElementId x, ElementId y, ElementId z) {
    return perm[m(back[x], back[y], back[z])];
  }));
}

std::vector<std::pair<std::string, MedianTable>> four_point_tables() {
  const std::vector<std::string> names = {"1", "x1", "x2", "x3"};
  std::vector<std::pair<std::string, MedianTable>> out;
  const auto star = shapes::star(3);
  for (ElementId c = 0; c < 4; ++c) {
    std::vector<ElementId> perm(4);
    perm[0] = c;
    ElementId next = 0;
    for (ElementId leaf = 1; leaf < 4; ++leaf) {
      if (next == c) ++next;
      perm[leaf] = next++;
    }
    out.emplace_back("star_" + names[c], permuted(star, perm));
  }
  // Cycle orders a, b, c, d with opposite pairs (a, c) and (b, d).
  out.emplace_back("square_1x2_x1x3", shapes::square(0, 1, 2, 3));
  out.emplace_back("square_1x1_x2x3", shapes::square(0, 2, 1, 3));
  out.emplace_back("square_1x3_x1x2", shapes::square(0, 1, 3, 2));
  return out;
}

MedianTable four_point_square() { return shapes::square(0, 1, 2, 3); }

MedianTable config_median() {
  // Ids (i - 1) * 2 + h; the chain position of (h, i) is i - 1 for h = 0
  // and 6 - i for h = 1.
  const std::vector<ElementId> pos = {0, 5, 1, 4, 2, 3};
  return permuted(shapes::chain(6), [&] {
    std::vector<ElementId> perm(6);
    for (ElementId id = 0; id < 6; ++id) perm[pos[id]] = id;
    return perm;
  }());
}

MedianTable z2_two_orbit_square() { return shapes::square(0, 2, 1, 3); }

MedianTable z2_two_orbit_chain() { return permuted(shapes::chain(4), {0, 2, 3, 1}); }

std::vector<std::string> config_names() { return {"i", "j"}; }

std::string config_word() { return "i^-2 h1 j^3 h1"; }

std::vector<std::uint32_t> z4_admissible_map() { return {0, 1, 1, 0}; }

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  for (std::size_t n : {2, 3, 4}) {
    out.push_back({"z" + std::to_string(n) + ".json", group_to_json(FiniteGroup::cyclic(n))});
  }
  for (const auto& [name, m] : four_point_tables()) out.push_back({name + ".json", median_to_json(m)});
  out.push_back({"segment.json", median_to_json(shapes::chain(2))});
  out.push_back({"z2_square.json", median_to_json(z2_two_orbit_square())});
  out.push_back({"z2_chain.json", median_to_json(z2_two_orbit_chain())});
  out.push_back({"config_median.json", median_to_json(config_median())});
  out.push_back({"config_word.json", word_file_to_json({config_names(), {config_word()}})});
  nlohmann::json adm;
  adm["group"] = "z4.json";
  adm["subset"] = {0, 1};
  adm["phi"] = z4_admissible_map();
  out.push_back({"z4_admissible.json", adm.dump() + "\n"});
  std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
  return out;
}

std::vector<std::string> write_fixtures(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& f : fixtures()) {
    const std::string path = dir + "/" + f.name;
    write_text_file(path, f.content);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace medianforge
