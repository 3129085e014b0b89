#pragma once
// Special points, the radial homeomorphisms omega and the Stasheff
// degeneracies, and the rescaling maps between multiplihedra.

#include <cstddef>
#include <memory>
#include <variant>
#include <vector>

#include "assoc/multiplihedron.hpp"

namespace assoc {

// (0, 1 - a/2, 1, ..., 1, 1 + a/2); alpha(a, 2) is the single point (0, 1).
KPoint alpha(const Rat& a, std::size_t n);
// (a, 1, ..., 1)
JPoint beta(const Rat& a, std::size_t n);

// Radial homeomorphism K(n) -> J^a_0(n).
JPoint omega(const Rat& a, const KPoint& sigma);
// One value per face decomposition of the exit point; all agree when omega
// is well defined there.
std::vector<JPoint> omega_values(const Rat& a, const KPoint& sigma);

// omega^{a t}
JPoint eta(const Rat& a, const Rat& t, const KPoint& sigma);
// embed_in_k(omega^t(sigma))
KPoint eta1(const Rat& t, const KPoint& sigma);

// Stasheff degeneracies, radial from alpha(1, n).
KPoint d_s(std::size_t j, const KPoint& sigma);
std::vector<KPoint> d_s_values(std::size_t j, const KPoint& sigma);

// Formal delta-expressions over J points.
struct FormalJExpr;
using FormalJExprPtr = std::shared_ptr<const FormalJExpr>;

struct BasePoint {
  JPoint point;
};
struct DeltaJ {  // delta_j(tau)(rho)
  std::size_t j;
  FormalJExprPtr rho;
  KPoint tau;
};
struct DeltaGraft {  // delta^a(tau; rho_1..rho_t)
  KPoint tau;
  std::vector<FormalJExprPtr> rhos;
};
struct DeltaRel {  // delta^{b/a}(outer; rho_1..rho_t)
  FormalJExprPtr outer;
  std::vector<FormalJExprPtr> rhos;
};

struct FormalJExpr {
  std::variant<BasePoint, DeltaJ, DeltaGraft, DeltaRel> node;
};

FormalJExprPtr make_base(JPoint p);
FormalJExprPtr make_delta_j(std::size_t j, FormalJExprPtr rho, KPoint tau);
FormalJExprPtr make_delta_graft(KPoint tau, std::vector<FormalJExprPtr> rhos);
FormalJExprPtr make_delta_rel(FormalJExprPtr outer, std::vector<FormalJExprPtr> rhos);

JPoint evaluate(const FormalJExpr& e);
Rat parameter(const FormalJExpr& e);

// Multiplies every sweep parameter by b/a.
FormalJExprPtr f_ab(const Rat& a, const Rat& b, const FormalJExprPtr& e);

// Pointwise model of the rescaling J^a(n) -> J^{lambda a}(n).
JPoint rescale(const Rat& lambda, const JPoint& p);
std::vector<JPoint> rescale_values(const Rat& lambda, const JPoint& p);

// Projection J^a(n) -> K(n), the rescaling with lambda = 0.
KPoint pi_geometric(const JPoint& p);

}  // namespace assoc
