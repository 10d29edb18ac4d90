#pragma once

// Genus probing at desk scale: isomorphism-invariant fingerprints of the
// finite quotients W/mT, an exhaustive backtracking isomorphism test for
// small quotients, and the least-separating-modulus scan.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylcryst/crystgrp.hpp"
#include "weylcryst/lattices.hpp"

namespace weylcryst::lattices {

// Invariant statistics of the quotient W/mT. Records that differ certify
// non-isomorphic quotients; equal records prove nothing by themselves.
struct GenusFingerprint {
  long modulus = 1;
  Int order;
  std::vector<std::pair<long, std::uint64_t>> order_histogram;  // (element order, count)
  std::vector<Int> abelian_invariants;  // invariant factors d1 | d2 | ... of G/[G,G]
  Int center_order;
  Int derived_order;

  bool operator==(const GenusFingerprint&) const = default;
};

// Builds W/mT as a multiplication table and extracts the record above.
// Invariant under change of lattice basis and conjugation of the whole group.
GenusFingerprint genus_fingerprint(const crystgrp::CrystGroup& w, long m,
                                   const Int& ceiling = Int(200000));

// Exhaustive generator-mapping backtracking; decides isomorphism completely
// for quotients of order <= iso_limit, BoundTooLarge above.
bool quotients_isomorphic(const crystgrp::FiniteQuotient& a, const crystgrp::FiniteQuotient& b,
                          std::uint64_t iso_limit = 2000);

// Outcome of the modulus scan. `detail` names the invariant that separated,
// or says the scan was inconclusive; no isomorphism claim is made either way.
struct GenusScan {
  std::optional<long> separating_modulus;
  std::string detail;
};

// First m in 1..max_m whose quotients provably differ: fingerprints compared
// first, then (on a tie, when the order is within iso_limit) the exhaustive
// test. The paper never states where two given extensions separate, so the
// result is reported empirically.
GenusScan least_separating_modulus(const crystgrp::CrystGroup& a, const crystgrp::CrystGroup& b,
                                   long max_m, const Int& ceiling = Int(200000),
                                   std::uint64_t iso_limit = 2000);

}  // namespace weylcryst::lattices
