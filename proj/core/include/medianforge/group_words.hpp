#pragma once

// Finite groups by Cayley table and reduced words in the free product
// H * F(I'), where I = {1, ..., k} indexes the H-orbits of X = H x I and
// I' = {2, ..., k} is a free base.
//
// A reduced word alternates between single H-letters (h != 1) and runs of
// free generators with no adjacent cancelling pair. The tree order is the
// prefix order on reduced words and X embeds as the words h and h.i.

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "medianforge/free_median.hpp"

namespace medianforge {

/// Group on {0..n-1} with identity 0, given by its multiplication table.
class FiniteGroup {
 public:
  /// Validates closure, identity 0, inverses and associativity.
  explicit FiniteGroup(std::vector<std::vector<std::uint32_t>> table,
                       std::vector<std::string> labels = {});

  static FiniteGroup trivial() { return cyclic(1); }
  static FiniteGroup cyclic(std::size_t n);
  /// Direct product with lexicographic ids (a, b) -> a * |B| + b.
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t order() const { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t pow(std::uint32_t a, long long k) const;
  std::size_t element_order(std::uint32_t a) const { return orders_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<std::uint32_t>> table_rows() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<std::string> labels_;
};

struct MsfgResult {
  bool ok = true;
  /// An element x != 1 with x^p = 1 for an odd prime p.
  std::optional<std::uint32_t> witness;
  std::size_t prime = 0;
};

/// True iff every element order is a power of 2.
MsfgResult msfg_check(const FiniteGroup& g);

struct FmsFixedPoint {
  std::uint32_t g;
  FmsElement x;
};

/// Searches fms(G) under left translation of the base G for g != 1 fixing
/// some element. Guarded to |G| <= 4.
std::optional<FmsFixedPoint> fms_fixed_point(const FiniteGroup& g);

enum class LetterKind : std::uint8_t { H = 0, Gen = 1, Inv = 2 };

struct Letter {
  LetterKind kind = LetterKind::H;
  /// H element (never 0) for H-letters, orbit index i in 2..k otherwise.
  std::uint16_t index = 0;

  static Letter h(std::uint32_t e) { return {LetterKind::H, static_cast<std::uint16_t>(e)}; }
  static Letter gen(std::uint32_t i) { return {LetterKind::Gen, static_cast<std::uint16_t>(i)}; }
  static Letter gen_inv(std::uint32_t i) { return {LetterKind::Inv, static_cast<std::uint16_t>(i)}; }

  bool is_h() const { return kind == LetterKind::H; }
  /// Order key: H-letters by element, then x_i before x_i^-1, by i.
  std::uint32_t key() const {
    return kind == LetterKind::H ? index
                                 : 0x10000U + 2U * index + (kind == LetterKind::Inv ? 1U : 0U);
  }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) { return a.key() <=> b.key(); }
};

using LetterVec = boost::container::small_vector<Letter, 14>;

/// A reduced word; construct through FreeProduct::normalize or the
/// arithmetic helpers so that the invariant holds.
class Word {
 public:
  Word() = default;

  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const LetterVec& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  /// First letter; requires a nonempty word.
  const Letter& origin() const { return letters_.front(); }
  const Letter& terminal() const { return letters_.back(); }
  /// The first `n` letters.
  Word prefix(std::size_t n) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Length first, then lexicographic by letter key.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  friend class FreeProduct;
  LetterVec letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// A point h.b_i of X = H x I. i = 1 encodes the basepoint orbit.
struct XPoint {
  std::uint32_t h = 0;
  std::uint32_t i = 1;

  friend bool operator==(const XPoint&, const XPoint&) = default;
  friend auto operator<=>(const XPoint&, const XPoint&) = default;
};

/// The factorization u v = u'' . h . v'' with lengths adding up.
struct ProductFactorization {
  Word u2;
  std::uint32_t h = 0;
  Word v2;
};

class FreeProduct {
 public:
  /// `indices` is |I| >= 1. Generator names default to x1, ..., x_{k-1}
  /// for i = 2, ..., k.
  FreeProduct(FiniteGroup h, std::size_t indices, std::vector<std::string> generator_names = {});

  const FiniteGroup& group() const { return h_; }
  std::size_t indices() const { return k_; }
  std::size_t x_size() const { return h_.order() * k_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  /// Reduces an arbitrary letter sequence. H-letters equal to the identity
  /// are dropped; out-of-range letters throw MalformedInput.
  Word normalize(const std::vector<Letter>& letters) const;
  Word mul(const Word& u, const Word& v) const;
  Word inv(const Word& u) const;
  /// u^-1 v.
  Word left_divide(const Word& u, const Word& v) const { return mul(inv(u), v); }

  Word h_word(std::uint32_t e) const;
  Word gen_word(std::uint32_t i, long long power = 1) const;

  bool leq(const Word& u, const Word& v) const;
  Word meet(const Word& u, const Word& v) const;
  Word tree_y(const Word& u, const Word& v, const Word& w) const;

  XPoint phi(const Word& w) const;
  /// phi of u v without forming the whole product.
  XPoint phi_product(const Word& u, const Word& v) const;
  std::uint32_t theta_hat(const Word& w) const;
  Word embed(const XPoint& x) const;
  bool in_x(const Word& w) const;

  /// Dense id (i - 1) |H| + h.
  std::size_t x_id(const XPoint& x) const { return (x.i - 1) * h_.order() + x.h; }
  XPoint x_point(std::size_t id) const;
  XPoint act(std::uint32_t h, const XPoint& x) const { return {h_.mul(h, x.h), x.i}; }

  ProductFactorization factorize(const Word& u, const Word& v) const;

  /// Number of reduced words of length <= r, by the child-count recursion.
  std::size_t ball_count(std::size_t r) const;
  /// All reduced words of length <= r, sorted. Throws GuardExceeded past
  /// `max_words`.
  std::vector<Word> ball(std::size_t r, std::size_t max_words = 2'000'000) const;

  /// Tokens `hN` (H element N), generator names, either with `^k`; `1` or
  /// an empty string is the identity.
  Word parse(const std::string& text) const;
  std::string to_string(const Word& w) const;
  std::string to_string(const XPoint& x) const;

 private:
  void push(LetterVec& stack, Letter l) const;
  void check_letter(const Letter& l) const;

  FiniteGroup h_;
  std::size_t k_;
  std::vector<std::string> names_;
};

}  // namespace medianforge
