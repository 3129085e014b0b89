#include "assoc/barcx.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "assoc/degeneracy.hpp"
#include "assoc/errors.hpp"
#include "assoc/homeo.hpp"

namespace assoc {

// ---------------------------------------------------------------- monoids

FiniteMonoid::FiniteMonoid(std::vector<std::string> names, std::vector<std::vector<int>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const int n = size();
  if (n == 0) throw MonoidError("monoid has no elements");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (names_[a] == names_[b]) throw MonoidError("duplicate element '" + names_[a] + "'");
  if (static_cast<int>(table_.size()) != n) throw MonoidError("table has " + std::to_string(table_.size()) + " rows, expected " + std::to_string(n));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n)
      throw MonoidError("row " + names_[a] + " has " + std::to_string(table_[a].size()) + " entries, expected " + std::to_string(n));
    for (int v : table_[a])
      if (v < 0 || v >= n) throw MonoidError("table entry out of range in row " + names_[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int l = mul(mul(a, b), c), r = mul(a, mul(b, c));
        if (l != r)
          throw MonoidError("not associative: (" + names_[a] + "*" + names_[b] + ")*" + names_[c] + " = " + names_[l] +
                            " but " + names_[a] + "*(" + names_[b] + "*" + names_[c] + ") = " + names_[r]);
      }
  unit_ = -1;
  for (int u = 0; u < n && unit_ < 0; ++u) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(u, a) == a && mul(a, u) == a;
    if (ok) unit_ = u;
  }
  if (unit_ < 0) throw MonoidError("no two-sided unit");
}

int FiniteMonoid::index_of(std::string_view name) const {
  for (int a = 0; a < size(); ++a)
    if (names_[a] == name) return a;
  throw MonoidError("unknown element '" + std::string(name) + "'");
}

FiniteMonoid FiniteMonoid::parse(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rows;
  bool in_table = false, seen_elements = false;
  auto add_rows = [&](const std::string& chunk) {
    std::stringstream ss(chunk);
    std::string part;
    while (std::getline(ss, part, '/')) {
      std::stringstream ws(part);
      std::vector<std::string> row;
      for (std::string w; ws >> w;) row.push_back(w);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  };
  std::stringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (key == "elements") {
      std::stringstream ws(line.substr(colon + 1));
      for (std::string w; ws >> w;) names.push_back(w);
      seen_elements = true;
      in_table = false;
    } else if (key == "table") {
      in_table = true;
      add_rows(line.substr(colon + 1));
    } else if (in_table) {
      add_rows(line);
    } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw MonoidError("unrecognized line '" + line + "'");
    }
  }
  if (!seen_elements) throw MonoidError("missing 'elements:' line");
  std::vector<std::vector<int>> table;
  for (const auto& row : rows) {
    std::vector<int> r;
    for (const auto& w : row) {
      auto it = std::find(names.begin(), names.end(), w);
      if (it == names.end()) throw MonoidError("unknown element '" + w + "' in table");
      r.push_back(static_cast<int>(it - names.begin()));
    }
    table.push_back(std::move(r));
  }
  return FiniteMonoid(std::move(names), std::move(table));
}

FiniteMonoid FiniteMonoid::builtin(std::string_view name) {
  if (name == "triv") return FiniteMonoid({"e"}, {{0}});
  if (name == "c2") return FiniteMonoid({"e", "g"}, {{0, 1}, {1, 0}});
  if (name == "c3") return FiniteMonoid({"e", "g", "h"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  throw MonoidError("unknown builtin monoid '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- cells

BarEnds parse_ends(std::string_view s) {
  if (s == "yxz") return {true, true};
  if (s == "*x*") return {false, false};
  if (s == "xx*") return {true, false};
  if (s == "*xx") return {false, true};
  throw DomainError("unknown ends '" + std::string(s) + "'");
}

std::string ends_name(const BarEnds& e) {
  if (e.left && e.right) return "yxz";
  if (e.left) return "xx*";
  if (e.right) return "*xx";
  return "*x*";
}

void BarContext::check(const BarPoint& p) const {
  const auto& c = p.cell;
  if (p.sigma.n() != c.rank() + 2)
    throw DomainError("bar point: carrier K(" + std::to_string(p.sigma.n()) + ") does not match rank " +
                      std::to_string(c.rank()));
  if (c.y.has_value() != ends_.left || c.z.has_value() != ends_.right)
    throw DomainError("bar point: end labels do not match the ends " + ends_name(ends_));
  auto in_range = [&](int v) { return v >= 0 && v < monoid_.size(); };
  if ((c.y && !in_range(*c.y)) || (c.z && !in_range(*c.z))) throw DomainError("bar point: invalid end label");
  for (int v : c.x)
    if (!in_range(v)) throw DomainError("bar point: invalid label");
}

bool BarContext::is_normal_cell(const BarCell& c) const {
  if (model_ == BarModel::Hopf) return true;
  for (int v : c.x)
    if (v == monoid_.unit()) return false;
  return true;
}

BarCell BarContext::multiply(const BarCell& c, std::size_t k, std::size_t t) const {
  std::vector<std::optional<int>> labels;
  labels.push_back(c.y);
  for (int v : c.x) labels.emplace_back(v);
  labels.push_back(c.z);
  if (k < 1 || t < 2 || k + t - 1 > labels.size()) throw DomainError("multiply: span out of range");
  const bool has_left = k == 1, has_right = k + t - 1 == labels.size();
  std::optional<int> prod;
  bool star = false;
  for (std::size_t i = k - 1; i < k + t - 1; ++i) {
    if (!labels[i]) {
      star = true;
      continue;
    }
    prod = prod ? monoid_.mul(*prod, *labels[i]) : *labels[i];
  }
  if (star) prod.reset();
  // an end that is the base point absorbs the span
  if (has_left && !c.y) prod.reset();
  if (has_right && !c.z) prod.reset();
  std::vector<std::optional<int>> out(labels.begin(), labels.begin() + (k - 1));
  out.push_back(prod);
  out.insert(out.end(), labels.begin() + (k + t - 1), labels.end());
  BarCell r;
  r.y = out.front();
  r.z = out.back();
  for (std::size_t i = 1; i + 1 < out.size(); ++i) r.x.push_back(*out[i]);
  return r;
}

BarPoint BarContext::face_step(const BarPoint& p, const KDecomposition& d) const {
  return BarPoint{d.rho, multiply(p.cell, d.face.j, d.face.t)};
}

BarPoint BarContext::collapse_step(const BarPoint& p, std::size_t i) const {
  if (i < 1 || i > p.cell.rank() || p.cell.x[i - 1] != monoid_.unit())
    throw DomainError("collapse_step: label " + std::to_string(i) + " is not the unit");
  BarPoint out{d_k(i + 1, p.sigma), p.cell};
  out.cell.x.erase(out.cell.x.begin() + (i - 1));
  return out;
}

BarPoint BarContext::normal_form(const BarPoint& start) const {
  check(start);
  BarPoint p = start;
  while (true) {
    if (model_ == BarModel::Strict) {
      bool collapsed = false;
      for (std::size_t i = 1; i <= p.cell.rank(); ++i)
        if (p.cell.x[i - 1] == monoid_.unit()) {
          p = collapse_step(p, i);
          collapsed = true;
          break;
        }
      if (collapsed) continue;
    }
    if (on_boundary(p.sigma)) {
      p = face_step(p, face_decompose(p.sigma));
      continue;
    }
    return p;
  }
}

std::set<BarPoint> BarContext::normal_forms_all_orders(const BarPoint& start) const {
  check(start);
  std::map<BarPoint, std::set<BarPoint>> memo;
  std::function<const std::set<BarPoint>&(const BarPoint&)> rec = [&](const BarPoint& p) -> const std::set<BarPoint>& {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::set<BarPoint> out;
    bool moved = false;
    if (model_ == BarModel::Strict)
      for (std::size_t i = 1; i <= p.cell.rank(); ++i)
        if (p.cell.x[i - 1] == monoid_.unit()) {
          const auto& sub = rec(collapse_step(p, i));
          out.insert(sub.begin(), sub.end());
          moved = true;
        }
    if (p.sigma.n() >= 3)
      for (const auto& d : face_decompositions(p.sigma)) {
        const auto& sub = rec(face_step(p, d));
        out.insert(sub.begin(), sub.end());
        moved = true;
      }
    if (!moved) out.insert(p);
    return memo.emplace(p, std::move(out)).first->second;
  };
  return rec(start);
}

// ---------------------------------------------------------------- complexes

namespace {

std::vector<std::vector<int>> label_words(const std::vector<int>& alphabet, std::size_t r) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int a : alphabet) {
        auto v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<int> interior_alphabet(const BarContext& ctx) {
  std::vector<int> out;
  for (int a = 0; a < ctx.monoid().size(); ++a)
    if (ctx.model() == BarModel::Hopf || a != ctx.monoid().unit()) out.push_back(a);
  return out;
}

std::vector<std::optional<int>> end_choices(const BarContext& ctx, bool present) {
  std::vector<std::optional<int>> out;
  if (!present) return {std::nullopt};
  for (int a = 0; a < ctx.monoid().size(); ++a) out.emplace_back(a);
  return out;
}

}  // namespace

BarComplex build_bar(const BarContext& ctx, std::size_t n) {
  if (n > kMaxBarRank)
    throw SizeLimitError("build_bar: n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxBarRank));
  BarComplex bc;
  bc.ends = ctx.ends();
  bc.model = ctx.model();
  bc.n = n;
  auto alphabet = interior_alphabet(ctx);
  for (std::size_t r = 0; r <= n; ++r) {
    std::vector<BarCell> cells;
    for (const auto& y : end_choices(ctx, ctx.ends().left))
      for (const auto& w : label_words(alphabet, r))
        for (const auto& z : end_choices(ctx, ctx.ends().right)) cells.push_back(BarCell{y, w, z});
    for (std::size_t idx = 0; idx < cells.size() && r >= 1; ++idx) {
      const std::size_t m = r + 2;
      for (std::size_t t = 2; t < m; ++t)
        for (std::size_t k = 1; k <= m + 1 - t; ++k) {
          Attachment a;
          a.rank = r;
          a.index = idx;
          a.face = KFaceId{k, m + 1 - t, t};
          a.target = ctx.multiply(cells[idx], k, t);
          if (ctx.model() == BarModel::Strict) {
            BarCell kept = a.target;
            kept.x.clear();
            for (std::size_t i = 0; i < a.target.x.size(); ++i) {
              if (a.target.x[i] == ctx.monoid().unit())
                a.collapse.push_back(i + 1);
              else
                kept.x.push_back(a.target.x[i]);
            }
            a.target = std::move(kept);
          }
          bc.attachments.push_back(std::move(a));
        }
    }
    bc.cells.push_back(std::move(cells));
  }
  return bc;
}

long long euler(const BarComplex& bc) {
  long long chi = 0;
  for (std::size_t r = 0; r < bc.cells.size(); ++r) chi += (r % 2 == 0 ? 1 : -1) * static_cast<long long>(bc.cells[r].size());
  return chi;
}

ProjectiveFiltration projective_filtration(const FiniteMonoid& x, std::size_t n, BarModel model) {
  ProjectiveFiltration pf;
  pf.e = build_bar(BarContext(x, BarEnds{true, false}, model), n);
  pf.p = build_bar(BarContext(x, BarEnds{false, false}, model), n);
  for (const auto& c : pf.e.cells[n])
    if (c.y == x.unit()) pf.d_top.push_back(c);
  return pf;
}

BarCell forget_left(const BarCell& c) {
  BarCell out = c;
  out.y.reset();
  return out;
}

BarPoint forget_left(const BarPoint& p) { return BarPoint{p.sigma, forget_left(p.cell)}; }

BarPoint map_labels(const BarPoint& p, const std::vector<int>& f) {
  BarPoint out = p;
  auto at = [&](int v) {
    if (v < 0 || static_cast<std::size_t>(v) >= f.size()) throw DomainError("map_labels: label outside the map");
    return f[v];
  };
  if (out.cell.y) out.cell.y = at(*out.cell.y);
  if (out.cell.z) out.cell.z = at(*out.cell.z);
  for (auto& v : out.cell.x) v = at(v);
  return out;
}

bool is_homomorphism(const FiniteMonoid& from, const FiniteMonoid& to, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != from.size()) return false;
  for (int v : f)
    if (v < 0 || v >= to.size()) return false;
  if (f[from.unit()] != to.unit()) return false;
  for (int a = 0; a < from.size(); ++a)
    for (int b = 0; b < from.size(); ++b)
      if (f[from.mul(a, b)] != to.mul(f[a], f[b])) return false;
  return true;
}

PrimedPoint primed_point(const BarPoint& p) { return PrimedPoint{omega(rat(1, 2), p.sigma), p.cell}; }

BarComplex primed_model(const BarComplex& bc) {
  BarComplex out = bc;
  out.primed = true;
  return out;
}

}  // namespace assoc
