#pragma once
// Two-sided bar constructions over finite discrete monoids as explicit
// cell complexes, and the projective-space filtration.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/associahedron.hpp"
#include "assoc/multiplihedron.hpp"
#include "assoc/operadcat.hpp"

namespace assoc {

class FiniteMonoid {
 public:
  // Validates the table; throws MonoidError naming the failing instance.
  FiniteMonoid(std::vector<std::string> names, std::vector<std::vector<int>> table);

  // "elements: e g\ntable: e g / g e"; rows may also sit on separate lines.
  static FiniteMonoid parse(std::string_view text);
  // c2, c3, triv
  static FiniteMonoid builtin(std::string_view name);

  int size() const { return static_cast<int>(names_.size()); }
  int unit() const { return unit_; }
  int mul(int a, int b) const { return table_[a][b]; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  int unit_ = 0;
};

// Labels of a cell: optional ends y, z and the rank-r interior labels.
// An empty end is the base point.
struct BarCell {
  std::optional<int> y;
  std::vector<int> x;
  std::optional<int> z;

  std::size_t rank() const { return x.size(); }
  auto operator<=>(const BarCell&) const = default;
  bool operator==(const BarCell&) const = default;
};

struct BarPoint {
  KPoint sigma;  // in K(rank + 2)
  BarCell cell;
  bool operator<(const BarPoint& o) const {
    return sigma < o.sigma || (sigma == o.sigma && cell < o.cell);
  }
  bool operator==(const BarPoint&) const = default;
};

enum class BarModel { Strict, Hopf };

struct BarEnds {
  bool left = false;   // Y = X
  bool right = false;  // Z = X
  bool operator==(const BarEnds&) const = default;
};

// "yxz", "*x*", "xx*"
BarEnds parse_ends(std::string_view s);
std::string ends_name(const BarEnds& e);

class BarContext {
 public:
  BarContext(FiniteMonoid monoid, BarEnds ends, BarModel model)
      : monoid_(std::move(monoid)), ends_(ends), model_(model) {}

  const FiniteMonoid& monoid() const { return monoid_; }
  const BarEnds& ends() const { return ends_; }
  BarModel model() const { return model_; }

  void check(const BarPoint& p) const;
  bool is_normal_cell(const BarCell& c) const;

  // Multiplies labels k..k+t-1 of (y, x_1..x_r, z).
  BarCell multiply(const BarCell& c, std::size_t k, std::size_t t) const;
  // One face step: rho with the multiplied labels.
  BarPoint face_step(const BarPoint& p, const KDecomposition& d) const;
  // One unit collapse at interior label i (1-based).
  BarPoint collapse_step(const BarPoint& p, std::size_t i) const;

  // Unit collapses first (lowest index), then the first face decomposition.
  BarPoint normal_form(const BarPoint& p) const;
  // Normal forms reached by every rewrite order.
  std::set<BarPoint> normal_forms_all_orders(const BarPoint& p) const;

 private:
  FiniteMonoid monoid_;
  BarEnds ends_;
  BarModel model_;
};

struct Attachment {
  std::size_t rank = 0, index = 0;  // the attached cell
  KFaceId face;
  BarCell target;
  // Interior labels that became units and were collapsed; the face point
  // d_k(tau)(rho) is glued to apply_deg(collapse, rho) in the target.
  DegIndexList collapse;
};

struct BarComplex {
  BarEnds ends;
  BarModel model = BarModel::Strict;
  std::size_t n = 0;
  std::vector<std::vector<BarCell>> cells;  // by rank 0..n
  std::vector<Attachment> attachments;
  bool primed = false;  // carriers J_0(r+2) instead of K(r+2)

  std::size_t count(std::size_t r) const { return r < cells.size() ? cells[r].size() : 0; }
};

inline constexpr std::size_t kMaxBarRank = 8;

// B_n(Y, X, Z): every nondegenerate cell of rank <= n and its facet
// attachments.
BarComplex build_bar(const BarContext& ctx, std::size_t n);

long long euler(const BarComplex& bc);

struct ProjectiveFiltration {
  BarComplex e;  // E^{n+1} = B_n(X, X, *)
  BarComplex p;  // P^n = B_n(*, X, *)
  std::vector<BarCell> d_top;  // the rank-n cells (e, x_1..x_n, *) added to E^n to form D^n
};

ProjectiveFiltration projective_filtration(const FiniteMonoid& x, std::size_t n, BarModel model = BarModel::Strict);

// Forgets the left end (the projections p and q).
BarCell forget_left(const BarCell& c);
BarPoint forget_left(const BarPoint& p);

// Label-wise image under a monoid homomorphism given as an index map.
BarPoint map_labels(const BarPoint& p, const std::vector<int>& f);
bool is_homomorphism(const FiniteMonoid& from, const FiniteMonoid& to, const std::vector<int>& f);

// The same cells over J_0 carriers; points move by omega at a = 1/2.
struct PrimedPoint {
  JPoint rho;
  BarCell cell;
};
PrimedPoint primed_point(const BarPoint& p);
BarComplex primed_model(const BarComplex& bc);

}  // namespace assoc
