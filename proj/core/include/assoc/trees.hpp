#pragma once
// Planar trivalent trees, bearded trees, their word languages and the
// lattice points they cast onto K(n) and J(n).
//
// A tree is stored by its postorder (reverse Polish) shape: `false` for a
// leaf, `true` for a node joining the two subtrees before it. Leaves are
// numbered left to right. Beards sit on the edge just below an entry.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/rat.hpp"

namespace assoc {

inline constexpr std::size_t kMaxTrivalentLeaves = 12;
inline constexpr std::size_t kMaxBeardedLeaves = 9;

class TrivalentTree {
 public:
  // Throws DomainError unless `shape` is a well-formed postorder shape.
  explicit TrivalentTree(std::vector<bool> shape);
  static TrivalentTree leaf();
  static TrivalentTree join(const TrivalentTree& left, const TrivalentTree& right);

  std::size_t leaves() const { return (shape_.size() + 1) / 2; }
  const std::vector<bool>& shape() const { return shape_; }

  bool operator==(const TrivalentTree&) const = default;
  bool operator<(const TrivalentTree& o) const { return shape_ < o.shape_; }

 private:
  std::vector<bool> shape_;
};

class BeardedTree {
 public:
  // Throws DomainError when some leaf-to-root path does not meet exactly one beard.
  BeardedTree(TrivalentTree tree, std::vector<bool> beards);

  const TrivalentTree& tree() const { return tree_; }
  const std::vector<bool>& beards() const { return beards_; }
  std::size_t leaves() const { return tree_.leaves(); }
  std::size_t beard_count() const;
  std::size_t lower_node_count() const;  // nodes strictly above a beard

  bool operator==(const BeardedTree&) const = default;
  bool operator<(const BeardedTree& o) const {
    return tree_ < o.tree_ || (tree_ == o.tree_ && beards_ < o.beards_);
  }

 private:
  TrivalentTree tree_;
  std::vector<bool> beards_;
};

std::size_t catalan(std::size_t n);

// All trees with n leaves, ordered by their words.
std::vector<TrivalentTree> enum_trivalent(std::size_t n);
std::vector<BeardedTree> enum_bearded(std::size_t n);

// Independent count of bearded trees: B(1) = 1,
// B(n) = C_{n-1} + sum_{k=1}^{n-1} B(k) B(n-k).
unsigned long long count_bearded(std::size_t n);

// a_i: nodes on the down-left line from leaf i; b_i: down-right line.
RatVec shadow_a(const TrivalentTree& t);
RatVec shadow_b(const TrivalentTree& t);

// "x1x2@x3@" (postorder) and "@@x1x2x3" (prefix).
std::string word(const TrivalentTree& t);
std::string word_primed(const TrivalentTree& t);
TrivalentTree parse_word(std::string_view w);
TrivalentTree parse_word_primed(std::string_view w);

// Bearded words over x<i>, '#' (upper node), 'b' (lower node), 'n' (beard).
// The Unicode sharp, flat and natural signs are accepted by the parsers and
// emitted when `unicode` is set.
std::string bearded_word(const BeardedTree& t, bool unicode = false);
std::string bearded_word_primed(const BeardedTree& t, bool unicode = false);
BeardedTree parse_bearded(std::string_view w);
BeardedTree parse_bearded_primed(std::string_view w);

// Coordinates in J^a(n): upper nodes weigh 1, lower nodes 1-a, beards a.
RatVec v_coords(const BeardedTree& t, const Rat& a = Rat(1, 2));
RatVec u_coords(const BeardedTree& t, const Rat& a = Rat(1, 2));

std::set<RatVec> k_lattice(std::size_t n);
std::set<RatVec> k_lattice_dual(std::size_t n);
std::set<RatVec> j_lattice(std::size_t n, const Rat& a = Rat(1, 2));
std::set<RatVec> j_lattice_dual(std::size_t n, const Rat& a = Rat(1, 2));

// Bracketed rendering such as "((x1x2)x3)".
std::string bracketed(const TrivalentTree& t);

}  // namespace assoc
