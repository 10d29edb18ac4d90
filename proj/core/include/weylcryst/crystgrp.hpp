#pragma once

// Crystallographic groups presented as a finite point group acting on an
// invariant lattice plus a vector system (one translation representative per
// point-group element). Exact coset arithmetic in V >| O(V), split detection
// by coboundary solving, coset Diophantine solvers, reflection coset
// profiles, and finite quotients modulo m times the translation lattice.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylcryst/exactla.hpp"
#include "weylcryst/lattices.hpp"
#include "weylcryst/rootsys.hpp"
#include "weylcryst/weyl.hpp"

namespace weylcryst::crystgrp {

using exactla::Int;
using exactla::IntMatrix;
using exactla::IntVector;
using exactla::Rat;
using exactla::RatMatrix;
using exactla::RatVector;

struct InconsistentVectorSystem : std::domain_error {
  using std::domain_error::domain_error;
};
struct MixedParents : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInGroup : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotAnInvolution : std::domain_error {
  using std::domain_error::domain_error;
};
struct QuotientTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CrystGroup;

// An element (v, g) of the group: translation part v in ambient coordinates,
// linear part g as a point-group element index. Only valid pairs exist:
// v - t_g must lie in the lattice (checked on entry).
struct GroupElement {
  const CrystGroup* parent = nullptr;
  RatVector v;
  int g = 0;

  bool operator==(const GroupElement&) const = default;
};

// Immutable once built. The vector system is stored on every point-group
// element in lattice coordinates, reduced to the fundamental domain [0,1)^n,
// so equal groups have equal representations.
class CrystGroup {
 public:
  // Extends generator translations to the whole point group along its
  // breadth-first words, then checks closure at every (element, generator)
  // pair; that closure proves the full cocycle condition by induction on the
  // word length of the right factor. Throws InconsistentVectorSystem when two
  // words for one element disagree modulo the lattice. The lattice must carry
  // its defining group (the group-checked construction).
  static CrystGroup build_from_generators(lattices::InvariantLattice lattice,
                                          const std::vector<RatVector>& generator_translations);

  // Owning variant: keeps the point group alive alongside the group.
  static CrystGroup build_from_generators(std::shared_ptr<const weyl::WeylGroup> point_group,
                                          const rootsys::LatticeSpec& spec,
                                          const std::vector<RatVector>& generator_translations);

  // The semidirect product: every generator translation zero.
  static CrystGroup split_group(lattices::InvariantLattice lattice);

  const weyl::WeylGroup& point_group() const { return *group_; }
  std::shared_ptr<const weyl::WeylGroup> shared_point_group() const { return owner_; }
  const lattices::InvariantLattice& lattice() const { return lattice_; }
  int dimension() const { return group_->dimension(); }
  int rank() const { return lattice_.rank(); }
  long point_group_size() const { return group_->size(); }

  // Canonical representative translation of the coset of e.
  RatVector translation(int e) const;
  // The same in lattice coordinates; every entry lies in [0, 1).
  const RatVector& translation_coords(int e) const { return coords_[size_t(e)]; }
  // Action of element e in lattice coordinates (integral, determinant +-1).
  const IntMatrix& action(int e) const { return actions_[size_t(e)]; }

  GroupElement canonical(int e) const;
  GroupElement identity_element() const;
  // Validated entry point; throws NotInGroup unless v - t_e is in the lattice.
  GroupElement element(const RatVector& v, int e) const;
  bool contains(const RatVector& v, int e) const;

  // One instance of the cocycle identity: t_g + g t_h - t_{gh} in L.
  bool cocycle_holds(int g, int h) const;

  bool operator==(const CrystGroup& o) const {
    return lattice_.spec == o.lattice_.spec && coords_ == o.coords_;
  }

 private:
  CrystGroup() = default;

  std::shared_ptr<const weyl::WeylGroup> owner_;  // empty in the non-owning mode
  const weyl::WeylGroup* group_ = nullptr;
  lattices::InvariantLattice lattice_;
  std::vector<RatVector> coords_;    // per element, lattice coordinates in [0,1)
  std::vector<IntMatrix> actions_;   // per element, lattice coordinates
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& a);
GroupElement square(const GroupElement& a);
bool is_identity(const GroupElement& a);

// A vector v with t_s - (1 - s)v in L for every generator s. The cocycle
// condition propagates the identity from generators to the whole group, so
// existence is equivalent to splitness.
std::optional<RatVector> split_witness(const CrystGroup& w);
bool is_split(const CrystGroup& w);

// An involution in the coset (t_g + L, g): requires g^2 = 1 and solves
// (1 + g)(t_g + x) = 0 over x in L. Returns a witness element or nothing.
std::optional<GroupElement> coset_involution_exists(const CrystGroup& w, int g);

// Elements z_g, z_h of the cosets of g and h with z_g^2 = z_h^2: requires
// g^2 = h^2 and solves (1+g)(t_g+x) = (1+h)(t_h+y) over x, y in L.
std::optional<std::pair<GroupElement, GroupElement>> coset_equal_squares(const CrystGroup& w,
                                                                         int g, int h);

// Three-way version: one joint system over three lattice offsets.
std::optional<std::array<GroupElement, 3>> coset_equal_squares_triple(const CrystGroup& w, int g1,
                                                                      int g2, int g3);

// z_g in the coset of g commuting with an involution z_h in the coset of h:
// requires gh = hg and h^2 = 1; the involution and commutation conditions
// form one joint linear Diophantine system.
std::optional<std::pair<GroupElement, GroupElement>> coset_commuting_with_involution(
    const CrystGroup& w, int g, int h);

// Ranks and mod-2 quotient sizes of the fixed and negated sublattices of an
// involution g: (rank L^g, rank L_g, |L^g/2L^g|, |L_g/2L_g|). Conjugation by
// any element of the coset of g acts on the translation lattice as g alone,
// so the profile depends only on g.
struct CosetProfile {
  int fixed_rank = 0;
  int negated_rank = 0;
  Int fixed_mod2_size;
  Int negated_mod2_size;

  bool operator==(const CosetProfile&) const = default;
};
CosetProfile reflection_coset_profile(const CrystGroup& w, int g);

// |W0| * m^rank, without materializing the quotient.
Int quotient_order(const CrystGroup& w, long m);

// The quotient W / mT as exact element arithmetic on packed ids. An id
// encodes (y, g) with y in [0,m)^n the lattice-coordinate offset from the
// canonical representative of g's coset: id = g * m^n + sum y_i m^i.
class FiniteQuotient {
 public:
  FiniteQuotient(const CrystGroup& w, long m, const Int& ceiling = Int(200000));

  std::uint64_t size() const { return size_; }
  long modulus() const { return m_; }
  int lattice_rank() const { return n_; }
  long point_group_size() const { return n0_; }

  std::uint64_t identity() const { return 0; }
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inverse(std::uint64_t a) const;
  long element_order(std::uint64_t a) const;

  int linear_part(std::uint64_t a) const { return int(a / mpow_); }
  std::vector<long> translation_part(std::uint64_t a) const;
  std::uint64_t encode(const std::vector<long>& y, int g) const;

  // Images of the lattice basis vectors and of the point-group generators;
  // they generate the quotient.
  std::vector<std::uint64_t> generators() const;

 private:
  std::shared_ptr<const weyl::WeylGroup> owner_;
  const weyl::WeylGroup* group_ = nullptr;
  long m_ = 1;
  int n_ = 0;
  long n0_ = 1;
  std::uint64_t mpow_ = 1;
  std::uint64_t size_ = 1;
  long den_ = 1;                 // common denominator of the stored coordinates
  std::vector<long> actions_;    // n0 * n * n, row-major per element
  std::vector<long> coords_;     // n0 * n, canonical coordinates scaled by den_

  // Lattice coordinates of t_g + g t_h - t_{gh}; integral by the cocycle.
  void defect(int g, int h, int gh, long* out) const;
};

FiniteQuotient finite_quotient(const CrystGroup& w, long m, const Int& ceiling = Int(200000));

}  // namespace weylcryst::crystgrp
