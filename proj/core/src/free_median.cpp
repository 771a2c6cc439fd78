#include "medianforge/free_median.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>

#include "medianforge/antichain.hpp"
#include "medianforge/errors.hpp"

namespace medianforge {

namespace {

BaseMask base_mask(std::size_t n) {
  return n >= 32 ? ~BaseMask{0} : static_cast<BaseMask>((std::uint64_t{1} << n) - 1);
}

void require_same_base(const FmsOpen& x, const FmsOpen& y) {
  if (x.base() != y.base()) throw MalformedInput("free median operands have different bases");
}

// Monotone Boolean functions on n variables as truth tables (bit S set iff
// f(S)), built by the cofactor recursion f = f0 + x_n f1 with f0 <= f1.
std::vector<std::uint64_t> monotone_functions(std::size_t n) {
  if (n == 0) return {0, 1};
  const auto prev = monotone_functions(n - 1);
  const std::size_t half = std::size_t{1} << (n - 1);
  std::vector<std::uint64_t> out;
  for (auto f0 : prev)
    for (auto f1 : prev)
      if ((f0 & ~f1) == 0) out.push_back(f0 | (f1 << half));
  return out;
}

}  // namespace

FmsOpen::FmsOpen(std::size_t base, std::vector<BaseMask> family) : base_(base) {
  if (base > kFmsMaxBase) throw GuardExceeded("free median base limited to 30 generators");
  const BaseMask full = base_mask(base);
  for (auto f : family) {
    if (f == 0) throw MalformedInput("free median family members must be nonempty");
    if ((f & ~full) != 0) throw MalformedInput("free median family member outside the base");
  }
  family_ = antichain::minimalize(std::move(family));
}

bool fms_condition_intersecting(const FmsOpen& x) {
  for (auto f : x.family())
    for (auto g : x.family())
      if ((f & g) == 0) return false;
  return true;
}

bool fms_condition_transversal(const FmsOpen& x) {
  const BaseMask full = base_mask(x.base());
  if (x.base() > 24) throw GuardExceeded("transversal scan limited to 24 generators");
  for (std::uint64_t e = 0; e <= full; ++e) {
    const auto s = static_cast<BaseMask>(e);
    if (!fms_eval(x, s)) continue;
    bool contains = false;
    for (auto f : x.family()) {
      if ((f & ~s) == 0) {
        contains = true;
        break;
      }
    }
    if (!contains) return false;
  }
  return true;
}

bool fms_is_element(const FmsOpen& x) {
  return !x.empty() && fms_condition_intersecting(x) && fms_condition_transversal(x);
}

FmsElement::FmsElement(FmsOpen open) : open_(std::move(open)) {
  if (!fms_is_element(open_)) throw DomainError("family is not an element of the free median algebra");
}

FmsElement fms_generator(std::size_t base, std::size_t a) {
  if (a >= base) throw MalformedInput("generator index out of range");
  return FmsElement(FmsOpen(base, {BaseMask{1} << a}));
}

FmsOpen fms_negate(const FmsOpen& x) {
  if (x.empty()) throw DomainError("negation of the empty family");
  BaseMask support = 0;
  for (auto f : x.family()) support |= f;
  std::vector<BaseMask> transversals;
  for (BaseMask s = support;; s = (s - 1) & support) {
    if (s != 0 && antichain::is_transversal(x.family(), s)) transversals.push_back(s);
    if (s == 0) break;
  }
  return FmsOpen(x.base(), std::move(transversals));
}

FmsOpen fms_join(const FmsOpen& x, const FmsOpen& y) {
  require_same_base(x, y);
  return FmsOpen(x.base(), antichain::join(x.family(), y.family()));
}

FmsOpen fms_meet(const FmsOpen& x, const FmsOpen& y) {
  require_same_base(x, y);
  return FmsOpen(x.base(), antichain::meet(x.family(), y.family()));
}

FmsElement fms_median(const FmsElement& x, const FmsElement& y, const FmsElement& z) {
  require_same_base(x.open(), y.open());
  require_same_base(x.open(), z.open());
  return FmsElement(
      FmsOpen(x.base(), antichain::median(x.family(), y.family(), z.family())));
}

bool fms_eval(const FmsOpen& x, BaseMask s) { return antichain::is_transversal(x.family(), s); }

Bitset fms_truth_table(const FmsOpen& x) {
  if (x.base() > 20) throw GuardExceeded("truth tables limited to 20 generators");
  const std::size_t rows = std::size_t{1} << x.base();
  Bitset t(rows);
  for (std::size_t s = 0; s < rows; ++s) t.set(s, fms_eval(x, static_cast<BaseMask>(s)));
  return t;
}

FmsOpen fms_from_truth_table(std::size_t base, const Bitset& table) {
  const std::size_t rows = std::size_t{1} << base;
  if (table.size() != rows) throw MalformedInput("truth table size does not match base");
  const BaseMask full = base_mask(base);
  // S is false iff some member lies inside A \ S, so the members are the
  // complements of the maximal false points.
  std::vector<BaseMask> family;
  for (std::size_t s = 0; s < rows; ++s) {
    if (table.test(s)) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < base && maximal; ++b) {
      const std::size_t up = s | (std::size_t{1} << b);
      if (up != s && !table.test(up)) maximal = false;
    }
    if (maximal) family.push_back(full & ~static_cast<BaseMask>(s));
  }
  return FmsOpen(base, std::move(family));
}

std::vector<FmsElement> fms_enumerate(std::size_t base) {
  if (base == 0) throw DomainError("free median base must be nonempty");
  if (base > kFmsMaxEnumerateBase) throw GuardExceeded("fms enumeration limited to base size 5");
  const std::size_t rows = std::size_t{1} << base;
  std::vector<FmsElement> out;
  for (auto f : monotone_functions(base)) {
    // Families of nonempty members are exactly the monotone functions true
    // on A; the constant-true function is the empty family.
    if (((f >> (rows - 1)) & 1U) == 0 || (f & 1U) != 0) continue;
    Bitset table(rows);
    for (std::size_t s = 0; s < rows; ++s) table.set(s, (f >> s) & 1U);
    auto open = fms_from_truth_table(base, table);
    if (fms_condition_intersecting(open) && fms_condition_transversal(open)) {
      out.emplace_back(std::move(open));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bitset> fms_majority_closure(std::size_t base) {
  if (base == 0) throw DomainError("free median base must be nonempty");
  if (base > kFmsMaxEnumerateBase) throw GuardExceeded("majority closure limited to base size 5");
  const std::size_t rows = std::size_t{1} << base;
  std::set<Bitset> seen;
  std::vector<Bitset> all;
  for (std::size_t a = 0; a < base; ++a) {
    Bitset t(rows);
    for (std::size_t s = 0; s < rows; ++s) t.set(s, (s >> a) & 1U);
    if (seen.insert(t).second) all.push_back(t);
  }
  std::size_t done = 0;
  while (done < all.size()) {
    const std::size_t end = all.size();
    // Majority is symmetric, and a round only needs triples with at least
    // one element from the previous round.
    for (std::size_t i = 0; i < end; ++i)
      for (std::size_t j = i; j < end; ++j)
        for (std::size_t k = std::max(done, j); k < end; ++k) {
          auto t = Bitset::majority(all[i], all[j], all[k]);
          if (seen.insert(t).second) all.push_back(std::move(t));
        }
    done = end;
  }
  return {seen.begin(), seen.end()};
}

MedianTable fms_median_table(std::size_t base) {
  if (base > 4) throw GuardExceeded("fms median table limited to base size 4");
  const auto elems = fms_enumerate(base);
  std::map<FmsElement, ElementId> index;
  for (ElementId i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back(to_string(e));
  return MedianTable::unchecked(
      TernaryTable::from_function(elems.size(),
                                  [&](ElementId x, ElementId y, ElementId z) {
                                    return index.at(fms_median(elems[x], elems[y], elems[z]));
                                  }),
      std::move(labels));
}

FmsOpen fms_permute(const FmsOpen& x, const std::vector<std::size_t>& perm) {
  if (perm.size() != x.base()) throw MalformedInput("permutation size does not match base");
  std::vector<BaseMask> family;
  for (auto f : x.family()) {
    BaseMask g = 0;
    for (std::size_t a = 0; a < x.base(); ++a)
      if ((f >> a) & 1U) g |= BaseMask{1} << perm[a];
    family.push_back(g);
  }
  return FmsOpen(x.base(), std::move(family));
}

std::string to_string(const FmsOpen& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.family().size(); ++i) {
    if (i) out += ",";
    out += "{";
    bool first = true;
    for (std::size_t a = 0; a < x.base(); ++a) {
      if ((x.family()[i] >> a) & 1U) {
        if (!first) out += ",";
        out += static_cast<char>('a' + a);
        first = false;
      }
    }
    out += "}";
  }
  return out + "}";
}

FmsOpen parse_fms(std::size_t base, const std::string& text) {
  std::vector<BaseMask> family;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw MalformedInput("expected '" + std::string(1, c) + "' at offset " + std::to_string(pos) +
                           " in free median element");
    }
    ++pos;
  };
  expect('{');
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      expect('{');
      BaseMask f = 0;
      while (true) {
        skip();
        if (pos >= text.size()) throw MalformedInput("unterminated free median member");
        const char c = text[pos];
        if (c < 'a' || c >= static_cast<char>('a' + base)) {
          throw MalformedInput(std::string("unknown base letter '") + c + "'");
        }
        f |= BaseMask{1} << (c - 'a');
        ++pos;
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        expect('}');
        break;
      }
      family.push_back(f);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect('}');
      break;
    }
  }
  skip();
  if (pos != text.size()) throw MalformedInput("trailing characters after free median element");
  return FmsOpen(base, std::move(family));
}

}  // namespace medianforge
