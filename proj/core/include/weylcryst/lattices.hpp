#pragma once

// Lattices with a finite orthogonal group action, in exact arithmetic:
// generator actions in lattice coordinates, the root/weight sandwich test,
// bounded enumeration of stable finite-index sublattices (centerings), the
// scalar maximality order, absolute irreducibility, and a three-valued
// desk-scale integral-equivalence test.

#include <optional>
#include <string>
#include <vector>

#include "weylcryst/exactla.hpp"
#include "weylcryst/rootsys.hpp"
#include "weylcryst/weyl.hpp"

namespace weylcryst::lattices {

using exactla::Int;
using exactla::IntMatrix;
using exactla::IntVector;
using exactla::Rat;
using exactla::RatMatrix;
using exactla::RatVector;

struct NotInvariant : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotFaithful : std::domain_error {
  using std::domain_error::domain_error;
};
struct BoundTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A lattice stable under a finite matrix group. `action_matrices[i]` is the
// i-th generator written in lattice coordinates; each is integral with
// determinant +-1 (checked at construction).
struct InvariantLattice {
  rootsys::LatticeSpec spec;
  const weyl::WeylGroup* group = nullptr;  // set by the group-checked overload
  std::vector<RatMatrix> generators;       // ambient generator matrices
  std::vector<IntMatrix> action_matrices;

  int rank() const { return spec.basis.cols(); }
};

// Generator-only construction: validates stability (integral unimodular
// action) but cannot certify faithfulness of the full group.
InvariantLattice make_invariant_lattice(const std::vector<RatMatrix>& generators,
                                        const rootsys::LatticeSpec& spec);

// Group-checked construction: additionally verifies that no non-identity
// group element fixes the lattice pointwise (NotFaithful otherwise).
InvariantLattice make_invariant_lattice(const weyl::WeylGroup& group,
                                        const rootsys::LatticeSpec& spec);

// True iff Q(R) <= L <= P(R) and L is stable under every simple reflection.
bool check_invariant_sandwich(const rootsys::LatticeSpec& lattice, const rootsys::RootSystem& r);

// A finite-index stable sublattice. `coords` is the Hermite-normal coordinate
// matrix in the parent basis; `sub_basis` the same columns in ambient
// coordinates; `index` = |det coords|.
struct Centering {
  RatMatrix sub_basis;
  IntMatrix coords;
  Int index;

  bool operator==(const Centering&) const = default;
};

// All stable sublattices of index <= max_index, complete, sorted by (index,
// coordinate matrix). Enumerates Hermite-normal candidate matrices of bounded
// determinant and filters by stability; throws BoundTooLarge when more than
// `work_ceiling` candidates would be inspected or the rank exceeds 6.
std::vector<Centering> enumerate_centerings(const InvariantLattice& lattice, const Int& max_index,
                                            long work_ceiling = 50000000);

// C with the content (gcd of all coordinate entries) divided out: the unique
// scalar-maximal centering above C. Scalars are nonzero; the degenerate
// multiplier 0 is excluded from the order.
Centering maximal_centering(const Centering& c, const InvariantLattice& lattice);

// True iff the commutant of the generator action has dimension 1 over Q.
bool absolutely_irreducible(const InvariantLattice& lattice);

enum class ZVerdict { isomorphic, distinct, unknown };

std::string to_string(ZVerdict v);

struct ZEquivalenceResult {
  ZVerdict verdict;
  std::string detail;               // separating invariant, or map provenance
  std::optional<IntMatrix> map;     // unimodular equivariant map when isomorphic
};

// Three-valued integral-equivalence test under the generator correspondence
// i <-> i. "distinct" when a module invariant separates (elementary divisors
// of (A_g - 1) per generator; fixed-rank data per conjugacy class when both
// sides share a group); "isomorphic" when a unimodular solution of the
// equivariance system is found among integer points with kernel coefficients
// in [-box, box]; "unknown" otherwise. Never claims completeness.
ZEquivalenceResult z_equivalence_small(const InvariantLattice& a, const InvariantLattice& b,
                                       long box = 3);

}  // namespace weylcryst::lattices
