#pragma once

// The distinguishing layer: the shipped catalog of crystallographic-group
// representatives per (type, rank, lattice family), generator tuples reduced
// by diagram automorphisms, the per-case coset predicate profiles, and the
// pairwise distinguishing driver.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylcryst/crystgrp.hpp"

namespace weylcryst::invariants {

using crystgrp::CrystGroup;
using crystgrp::GroupElement;
using exactla::Int;
using exactla::RatVector;

struct UnknownCatalogEntry : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct FamilyMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadCatalogData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which battery of coset predicates separates the non-split classes of a
// family. Routing is data-driven from the class count: one or two classes
// need the split test at most; three or more get a case battery.
enum class CaseLabel {
  SplitOnly,          // <= 2 classes: splitness alone decides
  InvolutionPattern,  // involution existence per generator coset
  ForkEqualSquares,   // equal squares across the two fork cosets
  TripleOrCommuting,  // triple equal squares / commuting with an involution
  ShortCosetSquares,  // involutions in one fixed coset plus squares against the long coset
};

std::string to_string(CaseLabel label);
CaseLabel case_label_from_string(const std::string& s);

// One row of the shipped catalog. `representatives[k]` holds the generator
// translations (ambient coordinates) of the k-th class; class 1 is always
// the split group.
struct CaseFamily {
  rootsys::Type type = rootsys::Type::A;
  int rank = 0;
  rootsys::Family family = rootsys::Family::CL;
  std::optional<Int> lambda_a;
  int class_count = 0;
  CaseLabel label = CaseLabel::SplitOnly;
  std::vector<std::vector<RatVector>> representatives;

  std::string name() const;  // e.g. "B3-CL", "A5-Lambda/2"
};

// Every lattice-table row of rank <= 6, parsed once from the embedded data
// (checksum-verified). BadCatalogData on corruption.
const std::vector<CaseFamily>& catalog_families();

const CaseFamily& catalog_entry(rootsys::Type type, int rank, rootsys::Family family,
                                std::optional<Int> lambda_a = std::nullopt);

// Parses names like "D6-FL" or "A5-Lambda/2". UnknownCatalogEntry otherwise.
const CaseFamily& catalog_entry(const std::string& name);

// Builds every representative of the row; they share one point group.
std::vector<CrystGroup> catalog(rootsys::Type type, int rank, rootsys::Family family,
                                std::optional<Int> lambda_a = std::nullopt);

// The raw embedded catalog text, exactly as shipped (header line + payload).
const std::string& catalog_text();

// Permutations of the generator indices preserving the Coxeter matrix,
// identity first, then lexicographic.
std::vector<std::vector<int>> diagram_automorphisms(const weyl::WeylGroup& group);

// Canonical generator tuples twisted by each diagram automorphism: position i
// carries the coset representative of generator sigma(i). Every returned
// tuple passes eta_check; the canonical tuple (identity twist) comes first.
std::vector<std::vector<GroupElement>> reduced_eta_realizers(const CrystGroup& w);

// Validates a candidate realizer tuple: (1) the assignment s_i -> linear part
// extends to an automorphism of the point group (Coxeter relations hold and
// the parts generate), and (2) an element of the point group is a conjugate
// of a generator exactly when its image's fixed and negated sublattices have
// ranks (l-1, 1), read off the mod-2 quotient sizes.
bool eta_check(const CrystGroup& w, const std::vector<GroupElement>& tuple);

// Coset predicate profile of one group under one case battery, evaluated as
// the conjunction over every reduced realizer tuple. Positive verdicts carry
// witness elements (not part of equality).
struct ChiProfile {
  CaseLabel label = CaseLabel::SplitOnly;
  bool split = false;
  std::vector<char> involution_in_coset;        // one flag per generator position
  std::vector<std::pair<int, int>> square_pairs;  // case-relevant positions (0-based)
  std::vector<char> equal_squares;              // parallel to square_pairs
  char triple_equal_squares = 0;                // TripleOrCommuting only
  char commuting_with_involution = 0;           // TripleOrCommuting only
  std::vector<GroupElement> witnesses;

  bool same_verdicts(const ChiProfile& other) const;
};

ChiProfile chi_profile(const CrystGroup& w, CaseLabel label);

// First invariant separating the two groups under the given battery:
// "split" first, then the case flags in a fixed order. std::nullopt when
// every verdict agrees. FamilyMismatch unless the groups share their point
// group and lattice.
std::optional<std::string> distinguish(const CrystGroup& a, const CrystGroup& b, CaseLabel label);

}  // namespace weylcryst::invariants
