#pragma once
// Formal morphisms of the operadic categories built from K and J, their
// unit-augmented versions and the canonical left representations.

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "assoc/multiplihedron.hpp"

namespace assoc {

// Strictly increasing indices (i_1 < ... < i_k) in 1..m, a morphism m -> m-k.
using DegIndexList = std::vector<std::size_t>;

// m -> n: (tau_0..tau_{m+1}) with tau_i in K(a_i), sum a_i = n + 2.
struct KMorphism {
  std::size_t source = 0, target = 0;
  std::vector<KPoint> tau;
  bool operator==(const KMorphism&) const = default;
};

// m -> n': (rho_0..rho_{m+1}) with rho_i in J^a(a_i), sum a_i = n + 2.
struct JMorphism {
  std::size_t source = 0, target = 0;
  std::vector<JPoint> rho;
  bool operator==(const JMorphism&) const = default;
};

KMorphism make_k_morphism(std::vector<KPoint> tau);
JMorphism make_j_morphism(std::vector<JPoint> rho);
KMorphism k_identity(std::size_t m);
JMorphism j_unit(std::size_t m, const Rat& a);  // all factors in J^a(1)

void check_deg_list(const DegIndexList& d, std::size_t m);

// g o f
KMorphism compose_k(const KMorphism& g, const KMorphism& f);
// J tuple m -> n' after K tuple l -> m
JMorphism compose_j(const JMorphism& g, const KMorphism& f);
// K tuple m' -> n' after J tuple l -> m'
JMorphism compose_mixed(const KMorphism& g, const JMorphism& f);
// outer o inner, inner applied first
DegIndexList compose_deg(const DegIndexList& outer, const DegIndexList& inner);

// (i) o T = T' o E with E empty or a single index.
std::pair<KMorphism, DegIndexList> push_deg(std::size_t i, const KMorphism& t);
std::pair<JMorphism, DegIndexList> push_deg(std::size_t i, const JMorphism& t);

// Objects n and n'.
struct Obj {
  std::size_t n = 0;
  bool primed = false;
  bool operator==(const Obj&) const = default;
};

// Normalized unital morphism: a degeneracy list followed by a tuple.
struct UnitalMorphism {
  DegIndexList deg;
  std::variant<KMorphism, JMorphism> tuple;
  bool primed_source = false;  // K tuples between primed objects

  Obj source() const;
  Obj target() const;
  bool operator==(const UnitalMorphism&) const = default;
};

UnitalMorphism unital(KMorphism t, bool primed = false);
UnitalMorphism unital(JMorphism t);
UnitalMorphism unital_deg(DegIndexList d, std::size_t m, bool primed = false);

// g o f; throws DomainError on mismatched or empty hom-sets.
UnitalMorphism compose(const UnitalMorphism& g, const UnitalMorphism& f);

enum class Rep { KBar, J0Bar, JBar, KBreve, J0Breve, JBreve };

using RepElement = std::variant<KPoint, JPoint>;

RepElement rep_apply(Rep rep, const UnitalMorphism& m, const RepElement& x);

// d_{j_1+1} o ... o d_{j_k+1}
KPoint apply_deg(const DegIndexList& d, const KPoint& x);
JPoint apply_deg(const DegIndexList& d, const JPoint& x);

}  // namespace assoc
