#include "assoc/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>

#include "assoc/errors.hpp"

namespace assoc {

namespace {

struct Layout {
  std::vector<int> left, right, parent, leaf;  // leaf number (1-based) or 0 for nodes
  int root = -1;
};

Layout layout(const std::vector<bool>& shape) {
  Layout L;
  const std::size_t n = shape.size();
  L.left.assign(n, -1);
  L.right.assign(n, -1);
  L.parent.assign(n, -1);
  L.leaf.assign(n, 0);
  std::vector<int> st;
  int leafno = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!shape[i]) {
      L.leaf[i] = ++leafno;
    } else {
      int r = st.back();
      st.pop_back();
      int l = st.back();
      st.pop_back();
      L.left[i] = l;
      L.right[i] = r;
      L.parent[l] = L.parent[r] = static_cast<int>(i);
    }
    st.push_back(static_cast<int>(i));
  }
  L.root = st.back();
  return L;
}

bool well_formed(const std::vector<bool>& shape) {
  if (shape.empty()) return false;
  long depth = 0;
  for (bool node : shape) {
    if (node) {
      if (depth < 2) return false;
      --depth;
    } else {
      ++depth;
    }
  }
  return depth == 1;
}

// Beards met on the way from the lower edge of each entry down to the root.
std::vector<int> beards_below(const Layout& L, const std::vector<bool>& beards) {
  std::vector<int> under(beards.size(), 0);
  for (int i = static_cast<int>(beards.size()) - 1; i >= 0; --i) {
    // postorder: parents come after children, so walk backwards
    int p = L.parent[i];
    under[i] = (beards[i] ? 1 : 0) + (p >= 0 ? under[p] : 0);
  }
  return under;
}

const char* kSharp = "♯";
const char* kFlat = "♭";
const char* kNatural = "♮";

enum class Tok { Leaf, At, Sharp, Flat, Natural };

struct Token {
  Tok kind;
  int leaf = 0;
  std::size_t offset = 0;
};

std::vector<Token> tokenize(std::string_view w, bool bearded) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) { throw ParseError(msg, out.size() + 1, i); };
  while (i < w.size()) {
    unsigned char c = static_cast<unsigned char>(w[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    Token t;
    t.offset = i;
    if (c == 'x') {
      std::size_t j = i + 1;
      while (j < w.size() && std::isdigit(static_cast<unsigned char>(w[j]))) ++j;
      if (j == i + 1) fail("'x' must be followed by a leaf number");
      t.kind = Tok::Leaf;
      t.leaf = std::stoi(std::string(w.substr(i + 1, j - i - 1)));
      out.push_back(t);
      i = j;
      continue;
    }
    if (!bearded && c == '@') {
      t.kind = Tok::At;
      out.push_back(t);
      ++i;
      continue;
    }
    if (bearded) {
      std::optional<Tok> k;
      std::size_t len = 1;
      if (c == '#') k = Tok::Sharp;
      if (c == 'b') k = Tok::Flat;
      if (c == 'n') k = Tok::Natural;
      auto starts = [&](const char* s) { return w.substr(i).substr(0, 3) == std::string_view(s); };
      if (!k && starts(kSharp)) k = Tok::Sharp, len = 3;
      if (!k && starts(kFlat)) k = Tok::Flat, len = 3;
      if (!k && starts(kNatural)) k = Tok::Natural, len = 3;
      if (k) {
        t.kind = *k;
        out.push_back(t);
        i += len;
        continue;
      }
    }
    fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
  }
  return out;
}

void expect_leaf(const Token& t, int& next, std::size_t index) {
  if (t.leaf != next)
    throw ParseError("expected leaf x" + std::to_string(next) + ", found x" + std::to_string(t.leaf), index + 1,
                     t.offset);
  ++next;
}

std::string leaf_name(int i) { return "x" + std::to_string(i); }

}  // namespace

// ---------------------------------------------------------------- trees

TrivalentTree::TrivalentTree(std::vector<bool> shape) : shape_(std::move(shape)) {
  if (!well_formed(shape_)) throw DomainError("malformed tree shape");
}

TrivalentTree TrivalentTree::leaf() { return TrivalentTree(std::vector<bool>{false}); }

TrivalentTree TrivalentTree::join(const TrivalentTree& l, const TrivalentTree& r) {
  std::vector<bool> s = l.shape_;
  s.insert(s.end(), r.shape_.begin(), r.shape_.end());
  s.push_back(true);
  return TrivalentTree(std::move(s));
}

BeardedTree::BeardedTree(TrivalentTree tree, std::vector<bool> beards)
    : tree_(std::move(tree)), beards_(std::move(beards)) {
  const auto& shape = tree_.shape();
  if (beards_.size() != shape.size()) throw DomainError("beard marks do not match the tree");
  auto under = beards_below(layout(shape), beards_);
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (!shape[i] && under[i] != 1)
      throw DomainError("beard condition violated: a leaf meets " + std::to_string(under[i]) + " beards");
}

std::size_t BeardedTree::beard_count() const { return std::count(beards_.begin(), beards_.end(), true); }

std::size_t BeardedTree::lower_node_count() const {
  const auto& shape = tree_.shape();
  auto under = beards_below(layout(shape), beards_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (shape[i] && under[i] == 0) ++c;
  return c;
}

std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<TrivalentTree> enum_trivalent(std::size_t n) {
  if (n == 0) throw DomainError("trees need at least one leaf");
  if (n > kMaxTrivalentLeaves)
    throw SizeLimitError("enum_trivalent: n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxTrivalentLeaves));
  std::vector<std::vector<TrivalentTree>> by_size(n + 1);
  by_size[1].push_back(TrivalentTree::leaf());
  for (std::size_t m = 2; m <= n; ++m)
    for (std::size_t k = 1; k < m; ++k)
      for (const auto& l : by_size[k])
        for (const auto& r : by_size[m - k]) by_size[m].push_back(TrivalentTree::join(l, r));
  auto out = std::move(by_size[n]);
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(word(out[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<TrivalentTree> sorted;
  sorted.reserve(out.size());
  for (const auto& [w, i] : keys) sorted.push_back(out[i]);
  return sorted;
}

std::vector<BeardedTree> enum_bearded(std::size_t n) {
  if (n > kMaxBeardedLeaves)
    throw SizeLimitError("enum_bearded: n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxBeardedLeaves));
  std::vector<std::pair<std::string, BeardedTree>> keyed;
  for (const auto& t : enum_trivalent(n)) {
    Layout L = layout(t.shape());
    std::vector<bool> beards(t.shape().size(), false);
    std::function<void(int, std::function<void()>)> place;
    // Enumerates beard placements in the subtree at i, calling k for each.
    std::function<void(int, bool, std::function<void()>)> rec = [&](int i, bool covered, std::function<void()> k) {
      if (covered) {
        beards[i] = false;
        if (L.leaf[i]) {
          k();
        } else {
          rec(L.left[i], true, [&, i, k] { rec(L.right[i], true, k); });
        }
        return;
      }
      beards[i] = true;
      if (L.leaf[i]) {
        k();
      } else {
        rec(L.left[i], true, [&, i, k] { rec(L.right[i], true, k); });
        beards[i] = false;
        rec(L.left[i], false, [&, i, k] { rec(L.right[i], false, k); });
      }
      beards[i] = false;
    };
    rec(L.root, false, [&] {
      BeardedTree b(t, beards);
      keyed.emplace_back(bearded_word(b), b);
    });
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<BeardedTree> out;
  out.reserve(keyed.size());
  for (auto& [w, b] : keyed) out.push_back(std::move(b));
  return out;
}

unsigned long long count_bearded(std::size_t n) {
  if (n == 0) return 0;
  std::vector<unsigned long long> b(n + 1, 0);
  b[1] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    unsigned long long s = catalan(m - 1);
    for (std::size_t k = 1; k < m; ++k) s += b[k] * b[m - k];
    b[m] = s;
  }
  return b[n];
}

// ---------------------------------------------------------------- shadows and words

RatVec shadow_a(const TrivalentTree& t) {
  RatVec a(t.leaves(), Rat(0));
  int cur = -1;
  for (bool node : t.shape()) {
    if (node)
      a[cur] += 1;
    else
      ++cur;
  }
  return a;
}

namespace {

void prefix_tokens(const Layout& L, int i, std::vector<int>& out) {
  if (L.leaf[i]) {
    out.push_back(L.leaf[i]);
    return;
  }
  out.push_back(0);
  prefix_tokens(L, L.left[i], out);
  prefix_tokens(L, L.right[i], out);
}

}  // namespace

RatVec shadow_b(const TrivalentTree& t) {
  Layout L = layout(t.shape());
  std::vector<int> toks;
  prefix_tokens(L, L.root, toks);
  RatVec b(t.leaves(), Rat(0));
  long pending = 0;
  for (int x : toks) {
    if (x == 0) {
      ++pending;
    } else {
      b[x - 1] = pending;
      pending = 0;
    }
  }
  return b;
}

std::string word(const TrivalentTree& t) {
  std::string s;
  int leafno = 0;
  for (bool node : t.shape()) s += node ? std::string("@") : leaf_name(++leafno);
  return s;
}

std::string word_primed(const TrivalentTree& t) {
  Layout L = layout(t.shape());
  std::vector<int> toks;
  prefix_tokens(L, L.root, toks);
  std::string s;
  for (int x : toks) s += x == 0 ? std::string("@") : leaf_name(x);
  return s;
}

TrivalentTree parse_word(std::string_view w) {
  auto toks = tokenize(w, false);
  if (toks.empty()) throw ParseError("empty word", 1, 0);
  std::vector<bool> shape;
  std::size_t depth = 0;
  int next = 1;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == Tok::Leaf) {
      expect_leaf(toks[i], next, i);
      shape.push_back(false);
      ++depth;
    } else {
      if (depth < 2) throw ParseError("'@' needs two operands", i + 1, toks[i].offset);
      shape.push_back(true);
      --depth;
    }
  }
  if (depth != 1)
    throw ParseError("unbalanced word: " + std::to_string(depth) + " subtrees remain", toks.size() + 1, w.size());
  return TrivalentTree(std::move(shape));
}

TrivalentTree parse_word_primed(std::string_view w) {
  auto toks = tokenize(w, false);
  if (toks.empty()) throw ParseError("empty word", 1, 0);
  std::size_t pos = 0;
  int next = 1;
  std::vector<bool> shape;
  std::function<void()> parse = [&] {
    if (pos >= toks.size()) throw ParseError("word ends before the tree is complete", pos + 1, w.size());
    const Token& t = toks[pos];
    if (t.kind == Tok::Leaf) {
      expect_leaf(t, next, pos);
      ++pos;
      shape.push_back(false);
      return;
    }
    ++pos;
    parse();
    parse();
    shape.push_back(true);
  };
  parse();
  if (pos != toks.size()) throw ParseError("trailing tokens after a complete tree", pos + 1, toks[pos].offset);
  return TrivalentTree(std::move(shape));
}

// ---------------------------------------------------------------- bearded words

namespace {

std::string sym(Tok k, bool unicode) {
  switch (k) {
    case Tok::Sharp: return unicode ? kSharp : "#";
    case Tok::Flat: return unicode ? kFlat : "b";
    case Tok::Natural: return unicode ? kNatural : "n";
    default: return "@";
  }
}

// Node symbols: upper nodes (a beard on their own edge or further down)
// are sharps, lower nodes are flats.
void bearded_prefix(const Layout& L, const std::vector<bool>& beards, const std::vector<int>& under, int i,
                    bool unicode, std::string& out) {
  if (beards[i]) out += sym(Tok::Natural, unicode);
  if (L.leaf[i]) {
    out += leaf_name(L.leaf[i]);
    return;
  }
  out += sym(under[i] ? Tok::Sharp : Tok::Flat, unicode);
  bearded_prefix(L, beards, under, L.left[i], unicode, out);
  bearded_prefix(L, beards, under, L.right[i], unicode, out);
}

struct Partial {
  std::vector<bool> shape, beards;
  bool covered = false;
};

BeardedTree finish(std::vector<Partial>& st, std::size_t ntok, std::size_t end) {
  if (st.size() != 1)
    throw ParseError("unbalanced word: " + std::to_string(st.size()) + " subtrees remain", ntok + 1, end);
  if (!st[0].covered) throw ParseError("beard condition violated: some path meets no beard", ntok + 1, end);
  return BeardedTree(TrivalentTree(std::move(st[0].shape)), std::move(st[0].beards));
}

}  // namespace

std::string bearded_word(const BeardedTree& t, bool unicode) {
  const auto& shape = t.tree().shape();
  Layout L = layout(shape);
  auto under = beards_below(L, t.beards());
  std::string s;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    s += shape[i] ? sym(under[i] ? Tok::Sharp : Tok::Flat, unicode) : leaf_name(L.leaf[i]);
    if (t.beards()[i]) s += sym(Tok::Natural, unicode);
  }
  return s;
}

std::string bearded_word_primed(const BeardedTree& t, bool unicode) {
  Layout L = layout(t.tree().shape());
  auto under = beards_below(L, t.beards());
  std::string s;
  bearded_prefix(L, t.beards(), under, L.root, unicode, s);
  return s;
}

BeardedTree parse_bearded(std::string_view w) {
  auto toks = tokenize(w, true);
  if (toks.empty()) throw ParseError("empty word", 1, 0);
  std::vector<Partial> st;
  int next = 1;
  bool last_was_natural = true;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    switch (t.kind) {
      case Tok::Leaf:
        expect_leaf(t, next, i);
        st.push_back(Partial{{false}, {false}, false});
        last_was_natural = false;
        break;
      case Tok::Natural:
        if (st.empty() || last_was_natural) throw ParseError("beard without a preceding branch", i + 1, t.offset);
        if (st.back().covered) throw ParseError("beard condition violated: second beard on a path", i + 1, t.offset);
        st.back().beards.back() = true;
        st.back().covered = true;
        last_was_natural = true;
        break;
      default: {
        if (st.size() < 2) throw ParseError("node needs two operands", i + 1, t.offset);
        Partial r = std::move(st.back());
        st.pop_back();
        Partial l = std::move(st.back());
        st.pop_back();
        if (l.covered != r.covered)
          throw ParseError("beard condition violated: operands disagree on beards", i + 1, t.offset);
        if (l.covered && t.kind != Tok::Flat)
          throw ParseError("node below a beard must be written with the flat symbol", i + 1, t.offset);
        if (!l.covered && t.kind != Tok::Sharp)
          throw ParseError("node above the beard must be written with the sharp symbol", i + 1, t.offset);
        l.shape.insert(l.shape.end(), r.shape.begin(), r.shape.end());
        l.beards.insert(l.beards.end(), r.beards.begin(), r.beards.end());
        l.shape.push_back(true);
        l.beards.push_back(false);
        st.push_back(std::move(l));
        last_was_natural = false;
      }
    }
  }
  return finish(st, toks.size(), w.size());
}

BeardedTree parse_bearded_primed(std::string_view w) {
  auto toks = tokenize(w, true);
  if (toks.empty()) throw ParseError("empty word", 1, 0);
  std::size_t pos = 0;
  int next = 1;
  std::function<Partial(bool)> parse = [&](bool covered_below) -> Partial {
    if (pos >= toks.size()) throw ParseError("word ends before the tree is complete", pos + 1, w.size());
    bool beard = false;
    if (toks[pos].kind == Tok::Natural) {
      if (covered_below) throw ParseError("beard condition violated: second beard on a path", pos + 1, toks[pos].offset);
      beard = true;
      ++pos;
      if (pos >= toks.size()) throw ParseError("word ends after a beard", pos + 1, w.size());
    }
    const Token& t = toks[pos];
    bool covered = covered_below || beard;
    Partial out;
    if (t.kind == Tok::Leaf) {
      expect_leaf(t, next, pos);
      ++pos;
      if (!covered) throw ParseError("beard condition violated: leaf path meets no beard", pos, t.offset);
      out.shape = {false};
      out.beards = {beard};
    } else if (t.kind == Tok::Sharp || t.kind == Tok::Flat) {
      // upper nodes have their beard on their own edge or further down
      if (covered && t.kind != Tok::Sharp)
        throw ParseError("node above the beard must be written with the sharp symbol", pos + 1, t.offset);
      if (!covered && t.kind != Tok::Flat)
        throw ParseError("node below a beard must be written with the flat symbol", pos + 1, t.offset);
      ++pos;
      Partial l = parse(covered);
      Partial r = parse(covered);
      out.shape = std::move(l.shape);
      out.shape.insert(out.shape.end(), r.shape.begin(), r.shape.end());
      out.shape.push_back(true);
      out.beards = std::move(l.beards);
      out.beards.insert(out.beards.end(), r.beards.begin(), r.beards.end());
      out.beards.push_back(beard);
    } else {
      throw ParseError("unexpected symbol", pos + 1, t.offset);
    }
    return out;
  };
  Partial p = parse(false);
  if (pos != toks.size()) throw ParseError("trailing tokens after a complete tree", pos + 1, toks[pos].offset);
  return BeardedTree(TrivalentTree(std::move(p.shape)), std::move(p.beards));
}

namespace {

Rat segment_value(long sharps, long flats, bool natural, const Rat& a) {
  Rat v = sharps;
  if (natural) v += a + Rat(flats) * (1 - a);
  return v;
}

}  // namespace

RatVec v_coords(const BeardedTree& t, const Rat& a) {
  auto toks = tokenize(bearded_word(t), true);
  RatVec v(t.leaves());
  long sharps = 0, flats = 0;
  bool natural = false;
  int cur = 0;
  auto flush = [&] {
    if (cur > 0) v[cur - 1] = segment_value(sharps, flats, natural, a);
    sharps = flats = 0;
    natural = false;
  };
  for (const auto& tk : toks) {
    if (tk.kind == Tok::Leaf) {
      flush();
      cur = tk.leaf;
    } else if (tk.kind == Tok::Sharp) {
      ++sharps;
    } else if (tk.kind == Tok::Flat) {
      ++flats;
    } else {
      natural = true;
    }
  }
  flush();
  return v;
}

RatVec u_coords(const BeardedTree& t, const Rat& a) {
  auto toks = tokenize(bearded_word_primed(t), true);
  RatVec u(t.leaves());
  long sharps = 0, flats = 0;
  bool natural = false;
  for (const auto& tk : toks) {
    if (tk.kind == Tok::Leaf) {
      u[tk.leaf - 1] = segment_value(sharps, flats, natural, a);
      sharps = flats = 0;
      natural = false;
    } else if (tk.kind == Tok::Sharp) {
      ++sharps;
    } else if (tk.kind == Tok::Flat) {
      ++flats;
    } else {
      natural = true;
    }
  }
  return u;
}

std::set<RatVec> k_lattice(std::size_t n) {
  std::set<RatVec> out;
  for (const auto& t : enum_trivalent(n)) out.insert(shadow_a(t));
  return out;
}

std::set<RatVec> k_lattice_dual(std::size_t n) {
  std::set<RatVec> out;
  for (const auto& t : enum_trivalent(n)) out.insert(shadow_b(t));
  return out;
}

std::set<RatVec> j_lattice(std::size_t n, const Rat& a) {
  std::set<RatVec> out;
  for (const auto& t : enum_bearded(n)) out.insert(v_coords(t, a));
  return out;
}

std::set<RatVec> j_lattice_dual(std::size_t n, const Rat& a) {
  std::set<RatVec> out;
  for (const auto& t : enum_bearded(n)) out.insert(u_coords(t, a));
  return out;
}

std::string bracketed(const TrivalentTree& t) {
  Layout L = layout(t.shape());
  std::function<std::string(int)> rec = [&](int i) -> std::string {
    if (L.leaf[i]) return leaf_name(L.leaf[i]);
    return "(" + rec(L.left[i]) + rec(L.right[i]) + ")";
  };
  return rec(L.root);
}

}  // namespace assoc
