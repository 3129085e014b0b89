#pragma once
// The multiplihedra J^a(n), the delta operators and the sweep decomposition
// of J^b(n) over J^a.

#include <cstddef>
#include <variant>
#include <vector>

#include "assoc/associahedron.hpp"

namespace assoc {

class JPoint {
 public:
  JPoint(RatVec v, Rat a);

  std::size_t n() const { return v_.size(); }
  const RatVec& v() const { return v_; }
  const Rat& a() const { return a_; }
  const Rat& operator[](std::size_t i) const { return v_[i]; }

  bool operator==(const JPoint& o) const { return a_ == o.a_ && v_ == o.v_; }
  bool operator<(const JPoint& o) const { return a_ < o.a_ || (a_ == o.a_ && v_ < o.v_); }

 private:
  RatVec v_;
  Rat a_;
};

// Face identifiers.
struct JInsertFace {  // J^a_j(r,t) = delta_j(J(r) x K(t))
  std::size_t j, r, t;
};
struct JGraftFace {  // J^a(t; n_1..n_t)
  std::vector<std::size_t> sizes;
};
struct JSpecialFace {  // J^a_j(n): v_j = 0
  std::size_t j;
};
struct JZeroFace {};  // J^a_0(n)
struct JZeroInsertFace {  // J^a_k(r,s)_0
  std::size_t k, r, s;
};
using JFaceId = std::variant<JInsertFace, JGraftFace, JSpecialFace, JZeroFace, JZeroInsertFace>;

struct JInsertDecomposition {
  JInsertFace face;
  JPoint rho;  // J^a(r)
  KPoint tau;  // K(t)
};

struct JGraftDecomposition {
  KPoint tau;               // K(t)
  std::vector<JPoint> rhos;  // J^a(n_i)
};

HRep j_hrep(std::size_t n, const Rat& a);

// (0, v_1, ..., v_{n-1}, v_n + 1 - a) in K(n+1)
KPoint embed_in_k(const JPoint& p);

// delta^a_j(tau)(rho)
JPoint delta_insert(const JPoint& rho, const KPoint& tau, std::size_t j);
// delta^a(tau; rho_1..rho_t)
JPoint delta_graft(const KPoint& tau, const std::vector<JPoint>& rhos);
// delta^{b/a}(outer; rho_1..rho_t) with outer in J^{(b-a)/(1-a)}(t)
JPoint delta_rel(const JPoint& outer, const std::vector<JPoint>& rhos);

bool in_j_zero(const JPoint& p);
bool j_face_membership(const JPoint& p, const JFaceId& face);
bool on_boundary(const JPoint& p);

std::vector<JInsertDecomposition> j_insert_decompositions(const JPoint& p);
std::vector<JGraftDecomposition> j_graft_decompositions(const JPoint& p);

// Last coordinate shifted by b - a.
JPoint shift_embed(const JPoint& p, const Rat& b);

struct SweepInJa {
  JPoint point;  // at parameter a
};
struct SweepGraft {
  JPoint outer;               // at parameter (b-a)/(1-a)
  std::vector<JPoint> rhos;   // at parameter a
};
using SweepResult = std::variant<SweepInJa, SweepGraft>;

SweepResult sweep_decompose(const JPoint& p, const Rat& a);
JPoint recompose(const SweepResult& s, const Rat& b);

}  // namespace assoc
