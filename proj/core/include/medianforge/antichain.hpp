#pragma once

// Antichain calculus shared by free median elements (sets as bit masks)
// and closure expressions (sets as sorted word-id vectors).
//
// A family {F_i} stands for the union of the basic opens U(F_i); the
// lattice operations are
//   join: union of the families, then drop non-minimal members
//   meet: all pairwise unions F u G, then drop non-minimal members
// since U(F) n U(G) = U(F u G).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <vector>

namespace medianforge::antichain {

template <class Set>
struct SetTraits;

template <>
struct SetTraits<std::uint32_t> {
  static bool subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }
  static std::uint32_t unite(std::uint32_t a, std::uint32_t b) { return a | b; }
  static bool meets(std::uint32_t a, std::uint32_t b) { return (a & b) != 0; }
  static bool less(std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  }
};

template <class T>
struct SetTraits<std::vector<T>> {
  static bool subset(const std::vector<T>& a, const std::vector<T>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }
  static std::vector<T> unite(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static bool meets(const std::vector<T>& a, const std::vector<T>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return true;
      if (*i < *j) {
        ++i;
      } else {
        ++j;
      }
    }
    return false;
  }
  static bool less(const std::vector<T>& a, const std::vector<T>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// Sorts canonically, removes duplicates and non-minimal members.
template <class Set>
std::vector<Set> minimalize(std::vector<Set> family) {
  using Tr = SetTraits<Set>;
  std::sort(family.begin(), family.end(), [](const Set& a, const Set& b) { return Tr::less(a, b); });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  // Members are ordered by size, so a member can only be absorbed by an
  // earlier one.
  std::vector<Set> out;
  for (auto& f : family) {
    bool absorbed = false;
    for (const auto& g : out) {
      if (Tr::subset(g, f)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) out.push_back(std::move(f));
  }
  return out;
}

template <class Set>
std::vector<Set> join(const std::vector<Set>& a, const std::vector<Set>& b) {
  std::vector<Set> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return minimalize(std::move(all));
}

template <class Set>
std::vector<Set> meet(const std::vector<Set>& a, const std::vector<Set>& b) {
  std::vector<Set> all;
  all.reserve(a.size() * b.size());
  for (const auto& f : a)
    for (const auto& g : b) all.push_back(SetTraits<Set>::unite(f, g));
  return minimalize(std::move(all));
}

/// (a ^ b) v (b ^ c) v (c ^ a).
template <class Set>
std::vector<Set> median(const std::vector<Set>& a, const std::vector<Set>& b,
                        const std::vector<Set>& c) {
  return join(join(meet(a, b), meet(b, c)), meet(c, a));
}

/// True iff S meets every member.
template <class Set>
bool is_transversal(const std::vector<Set>& family, const Set& s) {
  for (const auto& f : family) {
    if (!SetTraits<Set>::meets(f, s)) return false;
  }
  return true;
}

/// Minimal transversals by incremental (Berge) dualization: process the
/// members one at a time, extending each current transversal that misses
/// the member by one of the member's elements, then minimalize.
template <class Set, class Singletons>
std::vector<Set> minimal_transversals_berge(const std::vector<Set>& family, Singletons&& singletons) {
  std::vector<Set> current{Set{}};
  for (const auto& f : family) {
    std::vector<Set> next;
    for (const auto& t : current) {
      if (SetTraits<Set>::meets(t, f)) {
        next.push_back(t);
        continue;
      }
      for (const auto& e : singletons(f)) next.push_back(SetTraits<Set>::unite(t, e));
    }
    current = minimalize(std::move(next));
  }
  return current;
}

}  // namespace medianforge::antichain
