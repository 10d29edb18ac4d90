#pragma once

// Root systems in their standard coordinate realizations: simple roots per
// type, full root sets by reflection orbit closure, root and weight lattices,
// and the named lattice families used throughout the project.

#include <optional>
#include <string>
#include <vector>

#include "weylcryst/exactla.hpp"

namespace weylcryst::rootsys {

using exactla::Int;
using exactla::Rat;
using exactla::RatMatrix;
using exactla::RatVector;

struct UnsupportedType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotARoot : std::domain_error {
  using std::domain_error::domain_error;
};

enum class Type { A, B, C, D, E6, E7, E8, F4, G2 };

std::string to_string(Type t);
Type type_from_string(const std::string& s);

struct RootSystem {
  Type type;
  int rank;
  int ambient_dim;
  std::vector<RatVector> simple_roots;  // basis, fixed conventional order
  std::vector<RatVector> roots;         // full root set, lex-sorted

  bool is_root(const RatVector& v) const;
};

// Admissible ranks: A >= 1, B/C >= 2, D >= 3; exceptional types have fixed
// rank. Throws UnsupportedType otherwise.
RootSystem build_root_system(Type t, int rank);

// Orbit closure of an arbitrary independent simple-root list (used for
// synthetic systems such as reducible direct sums in tests). The type label
// of the result is meaningless and set to A.
RootSystem build_from_simple_roots(const std::vector<RatVector>& simple);

// Reflection through a root of r, as a matrix on the ambient space.
// Throws NotARoot when `root` is not in r.roots.
RatMatrix reflection_matrix(const RootSystem& r, const RatVector& root);

// Reflection through an arbitrary nonzero vector (no membership requirement).
RatMatrix reflection_through(const RatVector& v);

// Matrices of the simple reflections, in simple-root order.
std::vector<RatMatrix> simple_reflections(const RootSystem& r);

// Canonical basis (columns) of the lattice spanned by the roots.
RatMatrix root_lattice(const RootSystem& r);

// Canonical basis of the weight lattice inside span(R): vectors x with
// integral pairing against every coroot. Contains the root lattice; the
// containment is checked at construction.
RatMatrix weight_lattice(const RootSystem& r);

// Order of s_a s_b for two reflections; bails out above 12 (not a valid
// finite root system pairing).
int product_order(const RatMatrix& a, const RatMatrix& b);

// Connectivity of the Coxeter diagram of the simple roots.
bool is_irreducible(const RootSystem& r);

// Named lattice families realized by explicit bases.
//   CL_l     : standard cubic lattice Z^l
//   CCL_l    : Z^(l-1) extended by the half-sum of all coordinates
//   FL_l     : vectors of Z^l with even coordinate sum
//   Omega_l  : FL_l extended by the half-sum (l even)
//   Lambda   : rank-l sublattices of the A_l weight lattice, parameter a | l+1
//   Q6/P6/Q7/P7 : root/weight lattices of E6 and E7 in the 8-dim realization
enum class Family { CL, CCL, FL, Omega, Lambda, Q6, P6, Q7, P7 };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

// Canonical basis of the family lattice. `lambda_a` is required for Lambda
// (a positive divisor of l + 1) and ignored otherwise.
RatMatrix family_lattice(Family f, int l, const std::optional<Int>& lambda_a = std::nullopt);

// A named lattice: family tag ("CL", ..., "QofR", "PofR", "custom"), rank
// (column count; may be below the ambient dimension), basis columns.
struct LatticeSpec {
  std::string family;
  int rank = 0;
  RatMatrix basis;

  bool operator==(const LatticeSpec&) const = default;
};

LatticeSpec family_spec(Family f, int l, const std::optional<Int>& lambda_a = std::nullopt);
LatticeSpec root_lattice_spec(const RootSystem& r);
LatticeSpec weight_lattice_spec(const RootSystem& r);
// Tags an explicit basis; columns must be linearly independent.
LatticeSpec custom_spec(const std::string& name, const RatMatrix& basis);

// Standard dot product.
Rat dot(const RatVector& a, const RatVector& b);

}  // namespace weylcryst::rootsys
