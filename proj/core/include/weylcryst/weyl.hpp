#pragma once

// Finite reflection groups as explicit matrix groups: breadth-first closure
// with a canonical element order, shortest generator words, Coxeter matrix
// and diagram, diagram automorphisms, and the reflection classification.

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "weylcryst/exactla.hpp"

namespace weylcryst::weyl {

using exactla::IntMatrix;
using exactla::Rat;
using exactla::RatMatrix;
using exactla::RatVector;

struct GroupTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DiagramTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element order: breadth-first layer (word length), then lexicographic on the
// flattened exact matrix entries within a layer. Index 0 is the identity.
class WeylGroup {
 public:
  // Closure of a nonempty set of orthogonal generator matrices. Throws
  // GroupTooLarge when the element count would exceed `ceiling`.
  static WeylGroup generate(const std::vector<RatMatrix>& generators, long ceiling = 2000000);

  // The one-element group on a given ambient dimension.
  static WeylGroup trivial(int dim);

  int dimension() const { return dim_; }
  int generator_count() const { return int(gen_elements_.size()); }
  long size() const { return long(elements_.size()); }

  const RatMatrix& matrix(int e) const { return elements_[e]; }
  int identity() const { return 0; }
  int generator(int g) const { return gen_elements_[g]; }

  // Index lookup; -1 when the matrix is not an element.
  int find(const RatMatrix& m) const;

  int multiply(int a, int b) const;
  int multiply_generator(int a, int g) const { return mult_gen_[size_t(a) * gen_elements_.size() + g]; }
  // Elements are orthogonal, so the inverse is the transpose.
  int inverse(int a) const;
  int conjugate(int w, int a) const;  // w a w^-1
  bool is_involution(int a) const;

  // Shortest word in generator indices; empty for the identity. Fixed by the
  // breadth-first-then-lex construction order.
  std::vector<int> word(int e) const;
  // Fold the generator matrices along a word (independent of the tables).
  RatMatrix evaluate_word(const std::vector<int>& w) const;

 private:
  int dim_ = 0;
  std::vector<RatMatrix> elements_;
  std::vector<int> gen_elements_;
  std::vector<std::pair<int, int>> parent_;  // (parent element, generator)
  std::vector<int> mult_gen_;
  std::vector<RatMatrix> gen_matrices_;
  std::map<std::vector<Rat>, int> index_;
};

// m(i, j) = order of s_i s_j; 1 on the diagonal.
IntMatrix coxeter_matrix(const WeylGroup& w);

struct CoxeterDiagram {
  int nodes = 0;
  // (i, j, label) with i < j, sorted; only pairs with m >= 3 are edges.
  std::vector<std::tuple<int, int, int>> edges;

  bool operator==(const CoxeterDiagram&) const = default;
};

CoxeterDiagram diagram_from_coxeter(const IntMatrix& m);

// All node permutations preserving the Coxeter matrix, identity first,
// lexicographically sorted. Brute force; DiagramTooLarge above 10 nodes.
std::vector<std::vector<int>> diagram_automorphisms(const CoxeterDiagram& d);

// Elements acting as reflections: involutions whose fixed space has
// codimension one. Sorted element indices.
std::vector<int> classify_reflections(const WeylGroup& w);

// True when the joint fixed space of the group is trivial.
bool is_essential(const WeylGroup& w);

}  // namespace weylcryst::weyl
