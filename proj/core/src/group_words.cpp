#include "medianforge/group_words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "medianforge/errors.hpp"

namespace medianforge {

namespace {

Letter inverse_letter(const FiniteGroup& g, Letter l) {
  switch (l.kind) {
    case LetterKind::H: return Letter::h(g.inv(l.index));
    case LetterKind::Gen: return Letter::gen_inv(l.index);
    case LetterKind::Inv: return Letter::gen(l.index);
  }
  return l;
}

bool cancels(Letter a, Letter b) {
  return a.index == b.index && ((a.kind == LetterKind::Gen && b.kind == LetterKind::Inv) ||
                                (a.kind == LetterKind::Inv && b.kind == LetterKind::Gen));
}

bool is_h_token(const std::string& s) {
  if (s.size() < 2 || s[0] != 'h') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<std::uint32_t>> rows, std::vector<std::string> labels)
    : n_(rows.size()), labels_(std::move(labels)) {
  if (n_ == 0) throw MalformedInput("group must be nonempty");
  if (!labels_.empty() && labels_.size() != n_) throw MalformedInput("group label count mismatch");
  table_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw MalformedInput("Cayley table must be square");
    for (auto v : row) {
      if (v >= n_) throw MalformedInput("Cayley table entry out of range");
      table_.push_back(v);
    }
  }
  for (std::uint32_t a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw MalformedInput("element 0 is not the identity");
  }
  inverse_.assign(n_, 0);
  for (std::uint32_t a = 0; a < n_; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw MalformedInput("element " + std::to_string(a) + " has no inverse");
  }
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b)
      for (std::uint32_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw MalformedInput("Cayley table is not associative at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
        }
  orders_.assign(n_, 1);
  for (std::uint32_t a = 0; a < n_; ++a) {
    std::uint32_t x = a;
    while (x != 0) {
      x = mul(x, a);
      ++orders_[a];
    }
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = static_cast<std::uint32_t>((a + b) % n);
  return FiniteGroup(std::move(rows));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto xa = static_cast<std::uint32_t>(x / b.order()), xb = static_cast<std::uint32_t>(x % b.order());
      const auto ya = static_cast<std::uint32_t>(y / b.order()), yb = static_cast<std::uint32_t>(y % b.order());
      rows[x][y] = static_cast<std::uint32_t>(a.mul(xa, ya) * b.order() + b.mul(xb, yb));
    }
  return FiniteGroup(std::move(rows));
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, long long k) const {
  std::uint32_t base = k < 0 ? inv(a) : a;
  const auto steps = static_cast<unsigned long long>(k < 0 ? -k : k) % orders_[a];
  std::uint32_t r = 0;
  for (unsigned long long s = 0; s < steps; ++s) r = mul(r, base);
  return r;
}

std::vector<std::vector<std::uint32_t>> FiniteGroup::table_rows() const {
  std::vector<std::vector<std::uint32_t>> rows(n_, std::vector<std::uint32_t>(n_));
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b) rows[a][b] = mul(a, b);
  return rows;
}

MsfgResult msfg_check(const FiniteGroup& g) {
  MsfgResult r;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    std::size_t ord = g.element_order(a);
    while (ord % 2 == 0) ord /= 2;
    if (ord == 1) continue;
    std::size_t p = 3;
    while (ord % p != 0) p += 2;
    r.ok = false;
    r.prime = p;
    r.witness = g.pow(a, static_cast<long long>(g.element_order(a) / p));
    return r;
  }
  return r;
}

std::optional<FmsFixedPoint> fms_fixed_point(const FiniteGroup& g) {
  if (g.order() > 4) throw GuardExceeded("fixed point search limited to groups of order 4");
  const auto elems = fms_enumerate(g.order());
  for (std::uint32_t s = 1; s < g.order(); ++s) {
    std::vector<std::size_t> perm(g.order());
    for (std::uint32_t a = 0; a < g.order(); ++a) perm[a] = g.mul(s, a);
    for (const auto& x : elems) {
      if (fms_permute(x.open(), perm) == x.open()) return FmsFixedPoint{s, x};
    }
  }
  return std::nullopt;
}

Word Word::prefix(std::size_t n) const {
  Word w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, length())));
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (auto c = a[i].key() <=> b[i].key(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& l : w.letters()) {
    h ^= l.key();
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

FreeProduct::FreeProduct(FiniteGroup h, std::size_t indices, std::vector<std::string> names)
    : h_(std::move(h)), k_(indices), names_(std::move(names)) {
  if (k_ == 0) throw MalformedInput("index set must be nonempty");
  if (k_ > 60000 || h_.order() > 60000) throw GuardExceeded("free product too large");
  if (names_.empty()) {
    for (std::size_t i = 2; i <= k_; ++i) names_.push_back("x" + std::to_string(i - 1));
  }
  if (names_.size() != k_ - 1) throw MalformedInput("need one generator name per index i >= 2");
  for (const auto& n : names_) {
    if (n.empty() || n == "1" || is_h_token(n) || n.find_first_of(" \t^") != std::string::npos) {
      throw MalformedInput("invalid generator name '" + n + "'");
    }
  }
}

void FreeProduct::check_letter(const Letter& l) const {
  if (l.is_h()) {
    if (l.index >= h_.order()) throw MalformedInput("H-letter out of range");
  } else if (l.index < 2 || l.index > k_) {
    throw MalformedInput("generator index out of range");
  }
}

void FreeProduct::push(LetterVec& stack, Letter l) const {
  if (l.is_h()) {
    if (l.index == 0) return;
    if (!stack.empty() && stack.back().is_h()) {
      const auto e = h_.mul(stack.back().index, l.index);
      stack.pop_back();
      if (e != 0) stack.push_back(Letter::h(e));
      return;
    }
    stack.push_back(l);
    return;
  }
  if (!stack.empty() && cancels(stack.back(), l)) {
    stack.pop_back();
    return;
  }
  stack.push_back(l);
}

Word FreeProduct::normalize(const std::vector<Letter>& letters) const {
  Word w;
  for (const auto& l : letters) {
    check_letter(l);
    push(w.letters_, l);
  }
  return w;
}

Word FreeProduct::mul(const Word& u, const Word& v) const {
  Word w = u;
  for (const auto& l : v.letters_) push(w.letters_, l);
  return w;
}

Word FreeProduct::inv(const Word& u) const {
  Word w;
  w.letters_.reserve(u.length());
  for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it) {
    w.letters_.push_back(inverse_letter(h_, *it));
  }
  return w;
}

Word FreeProduct::h_word(std::uint32_t e) const { return normalize({Letter::h(e)}); }

Word FreeProduct::gen_word(std::uint32_t i, long long power) const {
  std::vector<Letter> ls;
  const Letter l = power < 0 ? Letter::gen_inv(i) : Letter::gen(i);
  for (long long p = 0; p < (power < 0 ? -power : power); ++p) ls.push_back(l);
  return normalize(ls);
}

bool FreeProduct::leq(const Word& u, const Word& v) const {
  return u.length() <= v.length() && std::equal(u.letters_.begin(), u.letters_.end(), v.letters_.begin());
}

Word FreeProduct::meet(const Word& u, const Word& v) const {
  std::size_t n = 0;
  const std::size_t lim = std::min(u.length(), v.length());
  while (n < lim && u[n] == v[n]) ++n;
  return u.prefix(n);
}

Word FreeProduct::tree_y(const Word& u, const Word& v, const Word& w) const {
  Word a = meet(u, v), b = meet(v, w), c = meet(w, u);
  if (b.length() > a.length()) a = std::move(b);
  if (c.length() > a.length()) a = std::move(c);
  return a;
}

XPoint FreeProduct::phi(const Word& w) const {
  if (w.is_identity()) return {0, 1};
  const Letter& o = w[0];
  if (o.kind == LetterKind::Gen) return {0, o.index};
  if (o.kind == LetterKind::Inv) return {0, 1};
  if (w.length() >= 2 && w[1].kind == LetterKind::Gen) return {o.index, w[1].index};
  return {o.index, 1};
}

XPoint FreeProduct::phi_product(const Word& u, const Word& v) const {
  // phi reads two letters, so it suffices to know how many leading letters
  // of u survive the reduction of u v.
  std::size_t intact = u.length();
  for (const auto& l : v.letters_) {
    if (intact == 0) break;
    const Letter& top = u[intact - 1];
    if (top.is_h() && l.is_h()) {
      if (h_.mul(top.index, l.index) == 0) {
        --intact;
        continue;
      }
      --intact;
      break;
    }
    if (cancels(top, l)) {
      --intact;
      continue;
    }
    break;
  }
  if (intact >= 2) return phi(u);
  return phi(mul(u, v));
}

std::uint32_t FreeProduct::theta_hat(const Word& w) const {
  if (w.is_identity() || !w[0].is_h()) return 0;
  return w[0].index;
}

Word FreeProduct::embed(const XPoint& x) const {
  if (x.h >= h_.order() || x.i < 1 || x.i > k_) throw MalformedInput("X-point out of range");
  Word w;
  if (x.h != 0) w.letters_.push_back(Letter::h(x.h));
  if (x.i != 1) w.letters_.push_back(Letter::gen(x.i));
  return w;
}

bool FreeProduct::in_x(const Word& w) const { return embed(phi(w)) == w; }

XPoint FreeProduct::x_point(std::size_t id) const {
  if (id >= x_size()) throw MalformedInput("X-point id out of range");
  return {static_cast<std::uint32_t>(id % h_.order()), static_cast<std::uint32_t>(id / h_.order() + 1)};
}

ProductFactorization FreeProduct::factorize(const Word& u, const Word& v) const {
  const Word a = meet(inv(u), v);
  const Word u1 = mul(u, a);
  const Word v1 = left_divide(a, v);
  const auto tu = theta_hat(inv(u1));
  const auto tv = theta_hat(v1);
  ProductFactorization f;
  f.u2 = mul(u1, h_word(tu));
  f.v2 = mul(h_word(h_.inv(tv)), v1);
  f.h = h_.mul(h_.inv(tu), tv);
  return f;
}

std::size_t FreeProduct::ball_count(std::size_t r) const {
  const std::size_t hs = h_.order() - 1;
  const std::size_t gs = 2 * (k_ - 1);
  std::size_t total = 1, ends_h = hs, ends_g = gs;
  for (std::size_t len = 1; len <= r; ++len) {
    total += ends_h + ends_g;
    const std::size_t nh = ends_g * hs;
    const std::size_t ng = ends_h * gs + ends_g * (gs > 0 ? gs - 1 : 0);
    ends_h = nh;
    ends_g = ng;
  }
  return total;
}

std::vector<Word> FreeProduct::ball(std::size_t r, std::size_t max_words) const {
  if (ball_count(r) > max_words) {
    throw GuardExceeded("ball of radius " + std::to_string(r) + " exceeds " +
                        std::to_string(max_words) + " words");
  }
  std::vector<Letter> alphabet;
  for (std::uint32_t e = 1; e < h_.order(); ++e) alphabet.push_back(Letter::h(e));
  for (std::uint32_t i = 2; i <= k_; ++i) {
    alphabet.push_back(Letter::gen(i));
    alphabet.push_back(Letter::gen_inv(i));
  }
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<Word> out{Word{}};
  std::size_t start = 0;
  for (std::size_t len = 1; len <= r; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = start; k < end; ++k) {
      for (const auto& l : alphabet) {
        if (!out[k].is_identity()) {
          const Letter& t = out[k].terminal();
          if (t.is_h() && l.is_h()) continue;
          if (cancels(t, l)) continue;
        }
        Word w = out[k];
        w.letters_.push_back(l);
        out.push_back(std::move(w));
      }
    }
    start = end;
  }
  return out;
}

Word FreeProduct::parse(const std::string& text) const {
  std::istringstream in(text);
  std::string tok;
  std::vector<Letter> letters;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string base = tok;
    long long power = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = tok.substr(0, caret);
      const std::string exp = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        power = std::stoll(exp, &used);
        if (used != exp.size()) throw MalformedInput("bad exponent");
      } catch (const std::logic_error&) {
        throw MalformedInput("bad exponent in token '" + tok + "'");
      }
    }
    if (is_h_token(base)) {
      unsigned long e = 0;
      try {
        e = std::stoul(base.substr(1));
      } catch (const std::logic_error&) {
        throw MalformedInput("bad H-letter '" + base + "'");
      }
      if (e >= h_.order()) throw MalformedInput("H-letter '" + base + "' out of range");
      letters.push_back(Letter::h(h_.pow(static_cast<std::uint32_t>(e), power)));
      continue;
    }
    auto it = std::find(names_.begin(), names_.end(), base);
    if (it == names_.end()) throw MalformedInput("unknown generator '" + base + "'");
    const auto i = static_cast<std::uint32_t>(it - names_.begin() + 2);
    const Letter l = power < 0 ? Letter::gen_inv(i) : Letter::gen(i);
    for (long long p = 0; p < (power < 0 ? -power : power); ++p) letters.push_back(l);
  }
  return normalize(letters);
}

std::string FreeProduct::to_string(const Word& w) const {
  if (w.is_identity()) return "1";
  std::string out;
  std::size_t k = 0;
  while (k < w.length()) {
    if (!out.empty()) out += ' ';
    const Letter l = w[k];
    if (l.is_h()) {
      out += "h" + std::to_string(l.index);
      ++k;
      continue;
    }
    std::size_t run = 1;
    while (k + run < w.length() && w[k + run] == l) ++run;
    out += names_[l.index - 2];
    const long long p = static_cast<long long>(run) * (l.kind == LetterKind::Inv ? -1 : 1);
    if (p != 1) out += "^" + std::to_string(p);
    k += run;
  }
  return out;
}

std::string FreeProduct::to_string(const XPoint& x) const { return to_string(embed(x)); }

}  // namespace medianforge
