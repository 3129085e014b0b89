#include "assoc/export.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "assoc/errors.hpp"
#include "assoc/trees.hpp"

namespace assoc {

using nlohmann::json;

namespace {

json rat_json(const Rat& x) {
  if (!x.get_num().fits_slong_p() || !x.get_den().fits_slong_p()) throw Error("rational too large for JSON export");
  return json::array({x.get_num().get_si(), x.get_den().get_si()});
}

json vec_json(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_json(x));
  return out;
}

Rat rat_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("expected [num, den]", 1, 0);
  long den = j[1].get<long>();
  if (den == 0) throw ParseError("zero denominator", 1, 0);
  return rat(j[0].get<long>(), den);
}

RatVec vec_from(const json& j) {
  if (!j.is_array()) throw ParseError("expected a coordinate list", 1, 0);
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from(x));
  return v;
}

json halfspaces_json(const std::vector<Halfspace>& hs) {
  json out = json::array();
  for (const auto& h : hs) out.push_back({{"normal", vec_json(h.normal)}, {"offset", rat_json(h.offset)}});
  return out;
}

std::vector<Halfspace> halfspaces_from(const json& j) {
  std::vector<Halfspace> out;
  for (const auto& h : j) out.push_back({vec_from(h.at("normal")), rat_from(h.at("offset"))});
  return out;
}

}  // namespace

PolytopeData polytope_data(std::string_view family, std::size_t n, const Rat& a) {
  PolytopeData p;
  p.family = std::string(family);
  p.n = n;
  if (n == 0) throw DomainError("polytope arity must be at least 1");
  std::set<RatVec> verts;
  if (family == "k") {
    if (n > kMaxExportK) throw SizeLimitError("K(n) export limited to n <= " + std::to_string(kMaxExportK));
    p.hrep = k_hrep(n);
    verts = k_lattice(n);
  } else if (family == "j") {
    if (n > kMaxExportJ) throw SizeLimitError("J(n) export limited to n <= " + std::to_string(kMaxExportJ));
    p.a = a;
    p.hrep = j_hrep(n, a);
    verts = j_lattice(n, a);
  } else {
    throw DomainError("unknown polytope family '" + std::string(family) + "'");
  }
  p.vertices.assign(verts.begin(), verts.end());
  return p;
}

std::string to_json(const PolytopeData& p) {
  json j;
  j["family"] = p.family;
  j["n"] = p.n;
  if (p.a) j["a"] = rat_json(*p.a);
  json vs = json::array();
  for (const auto& v : p.vertices) vs.push_back(vec_json(v));
  j["vertices"] = vs;
  j["hrep"] = {{"dim", p.hrep.dim},
               {"inequalities", halfspaces_json(p.hrep.inequalities)},
               {"equalities", halfspaces_json(p.hrep.equalities)}};
  return j.dump(2);
}

PolytopeData polytope_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte > 0 ? e.byte - 1 : 0);
  }
  try {
    PolytopeData p;
    p.family = j.at("family").get<std::string>();
    p.n = j.at("n").get<std::size_t>();
    if (j.contains("a")) p.a = rat_from(j["a"]);
    for (const auto& v : j.at("vertices")) p.vertices.push_back(vec_from(v));
    const auto& h = j.at("hrep");
    p.hrep.dim = h.at("dim").get<std::size_t>();
    p.hrep.inequalities = halfspaces_from(h.at("inequalities"));
    p.hrep.equalities = halfspaces_from(h.at("equalities"));
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polytope JSON: ") + e.what(), 1, 0);
  }
}

// ---------------------------------------------------------------- OFF

namespace {

using Pt2 = std::pair<Rat, Rat>;

// Half-plane index then cross product; exact.
bool angle_less(const Pt2& p, const Pt2& q) {
  auto half = [](const Pt2& v) { return v.second < 0 || (v.second == 0 && v.first < 0) ? 1 : 0; };
  int hp = half(p), hq = half(q);
  if (hp != hq) return hp < hq;
  return p.first * q.second - p.second * q.first > 0;
}

// Orders points of a planar polygon around their centroid. `drop` is the
// coordinate ignored when projecting to the plane.
std::vector<std::size_t> cyclic_order(const std::vector<RatVec>& pts, const std::vector<std::size_t>& idx,
                                      std::size_t drop) {
  const std::size_t d = pts[idx[0]].size();
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < d && axes.size() < 2; ++i)
    if (i != drop) axes.push_back(i);
  while (axes.size() < 2) axes.push_back(0);
  Rat cx = 0, cy = 0;
  for (auto i : idx) {
    cx += pts[i][axes[0]];
    cy += pts[i][axes[1]];
  }
  cx /= static_cast<long>(idx.size());
  cy /= static_cast<long>(idx.size());
  auto out = idx;
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    Pt2 pa{pts[a][axes[0]] - cx, pts[a][axes[1]] - cy};
    Pt2 pb{pts[b][axes[0]] - cx, pts[b][axes[1]] - cy};
    return angle_less(pa, pb);
  });
  return out;
}

}  // namespace

std::string to_off(const PolytopeData& p) {
  const bool k = p.family == "k";
  if (k && p.n > kMaxOffK) throw SizeLimitError("OFF export of K(n) limited to n <= " + std::to_string(kMaxOffK));
  if (!k && p.n > kMaxOffJ) throw SizeLimitError("OFF export of J(n) limited to n <= " + std::to_string(kMaxOffJ));
  // free coordinates
  const std::size_t lo = k ? 1 : 0, hi = p.n >= 1 ? p.n - 1 : 0;
  std::vector<RatVec> free;
  for (const auto& v : p.vertices) {
    RatVec f(v.begin() + lo, v.begin() + std::max(lo, hi));
    while (f.size() < 3) f.push_back(0);
    free.push_back(f);
  }
  const std::size_t dim = hi > lo ? hi - lo : 0;
  std::vector<std::vector<std::size_t>> tight(p.vertices.size());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) tight[i] = tight_inequalities(p.hrep, p.vertices[i]);
  std::vector<std::vector<std::size_t>> faces;
  if (dim <= 2) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (dim == 0 || !tight[i].empty()) idx.push_back(i);
    if (!idx.empty()) faces.push_back(dim == 2 ? cyclic_order(free, idx, 2) : idx);
  } else {
    for (std::size_t h = 0; h < p.hrep.inequalities.size(); ++h) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < free.size(); ++i) {
        const auto& t = tight[i];
        // on facet h and on its boundary (some other facet tight as well)
        if (std::find(t.begin(), t.end(), h) != t.end() && t.size() >= 2) idx.push_back(i);
      }
      if (idx.size() < 3) continue;
      // drop the free axis with the largest normal component
      const auto& nrm = p.hrep.inequalities[h].normal;
      std::size_t drop = 0;
      Rat best = -1;
      for (std::size_t c = 0; c < 3; ++c) {
        Rat comp = lo + c < nrm.size() ? abs(nrm[lo + c]) : Rat(0);
        if (comp > best) best = comp, drop = c;
      }
      faces.push_back(cyclic_order(free, idx, drop));
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size() && f.size() >= 2; ++i) {
      std::size_t a = f[i], b = f[(i + 1) % f.size()];
      if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
    }
  std::ostringstream out;
  out << "OFF\n" << free.size() << ' ' << faces.size() << ' ' << edges.size() << '\n';
  for (const auto& f : free) out << str(f[0]) << ' ' << str(f[1]) << ' ' << str(f[2]) << '\n';
  for (const auto& f : faces) {
    out << f.size();
    for (auto i : f) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------- bar complexes

std::string to_json(const BarComplex& bc, const FiniteMonoid& x) {
  auto cell_json = [&](const BarCell& c) {
    json j;
    j["y"] = c.y ? json(x.name(*c.y)) : json("*");
    json labels = json::array();
    for (int v : c.x) labels.push_back(x.name(v));
    j["x"] = labels;
    j["z"] = c.z ? json(x.name(*c.z)) : json("*");
    return j;
  };
  json j;
  j["ends"] = ends_name(bc.ends);
  j["model"] = bc.model == BarModel::Strict ? "strict" : "hopf";
  j["carrier"] = bc.primed ? "J0" : "K";
  j["n"] = bc.n;
  j["monoid"] = x.names();
  json counts = json::array();
  json cells = json::array();
  for (std::size_t r = 0; r < bc.cells.size(); ++r) {
    counts.push_back(bc.cells[r].size());
    for (std::size_t i = 0; i < bc.cells[r].size(); ++i) {
      json c = cell_json(bc.cells[r][i]);
      c["rank"] = r;
      c["index"] = i;
      cells.push_back(c);
    }
  }
  j["counts"] = counts;
  j["euler"] = euler(bc);
  j["cells"] = cells;
  json att = json::array();
  for (const auto& a : bc.attachments)
    att.push_back({{"rank", a.rank},
                   {"index", a.index},
                   {"face", {{"j", a.face.j}, {"r", a.face.r}, {"t", a.face.t}}},
                   {"target", cell_json(a.target)},
                   {"collapse", a.collapse}});
  j["attachments"] = att;
  return j.dump(2);
}

}  // namespace assoc
