#include "weylcryst/invariants.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

namespace weylcryst::invariants {

namespace {

using crystgrp::MixedParents;

// Right-multiplies element a by the image of generator g, where the image is
// given as a point-group word. Pure table lookups.
int fold_word(const weyl::WeylGroup& pg, int a, const std::vector<int>& w) {
  for (int letter : w) a = pg.multiply_generator(a, letter);
  return a;
}

// Reflections of the point group: the conjugation orbit of the generators.
std::vector<char> reflection_set(const weyl::WeylGroup& pg) {
  std::vector<char> refl(size_t(pg.size()), 0);
  std::queue<int> q;
  for (int i = 0; i < pg.generator_count(); ++i) {
    int e = pg.generator(i);
    if (!refl[size_t(e)]) {
      refl[size_t(e)] = 1;
      q.push(e);
    }
  }
  while (!q.empty()) {
    int r = q.front();
    q.pop();
    for (int i = 0; i < pg.generator_count(); ++i) {
      int c = pg.conjugate(pg.generator(i), r);
      if (!refl[size_t(c)]) {
        refl[size_t(c)] = 1;
        q.push(c);
      }
    }
  }
  return refl;
}

// Ranks of the fixed and negated sublattices of every point-group element,
// in lattice coordinates.
struct SublatticeRanks {
  std::vector<int> fixed;
  std::vector<int> negated;
};

SublatticeRanks sublattice_ranks(const CrystGroup& w) {
  const long n = w.point_group_size();
  const int r = w.rank();
  SublatticeRanks out;
  out.fixed.resize(size_t(n));
  out.negated.resize(size_t(n));
  for (long e = 0; e < n; ++e) {
    exactla::RatMatrix minus_one = w.action(int(e)).to_rational();
    exactla::RatMatrix plus_one = minus_one;
    for (int i = 0; i < r; ++i) {
      minus_one(i, i) -= 1;
      plus_one(i, i) += 1;
    }
    out.fixed[size_t(e)] = r - exactla::rank(minus_one);
    out.negated[size_t(e)] = r - exactla::rank(plus_one);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> diagram_automorphisms(const weyl::WeylGroup& group) {
  return weyl::diagram_automorphisms(weyl::diagram_from_coxeter(weyl::coxeter_matrix(group)));
}

std::vector<std::vector<GroupElement>> reduced_eta_realizers(const CrystGroup& w) {
  const weyl::WeylGroup& pg = w.point_group();
  const int l = pg.generator_count();
  std::vector<std::vector<GroupElement>> out;
  for (const std::vector<int>& sigma : diagram_automorphisms(pg)) {
    std::vector<GroupElement> tuple;
    tuple.reserve(size_t(l));
    for (int i = 0; i < l; ++i) tuple.push_back(w.canonical(pg.generator(sigma[size_t(i)])));
    out.push_back(std::move(tuple));
  }
  return out;
}

bool eta_check(const CrystGroup& w, const std::vector<GroupElement>& tuple) {
  const weyl::WeylGroup& pg = w.point_group();
  const int l = pg.generator_count();
  if (int(tuple.size()) != l) return false;
  for (const GroupElement& e : tuple) {
    if (e.parent == nullptr || !(e.parent == &w || *e.parent == w))
      throw MixedParents("eta_check: tuple element from a different group");
  }

  std::vector<std::vector<int>> image_word(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) image_word[size_t(i)] = pg.word(tuple[size_t(i)].g);

  // The assignment extends to a homomorphism exactly when every Coxeter
  // relator maps to the identity.
  exactla::IntMatrix cox = weyl::coxeter_matrix(pg);
  for (int i = 0; i < l; ++i) {
    for (int j = i; j < l; ++j) {
      int pair = fold_word(pg, fold_word(pg, pg.identity(), image_word[size_t(i)]),
                           image_word[size_t(j)]);
      std::vector<int> pair_word = pg.word(pair);
      long m = cox(i, j).get_si();
      int p = pg.identity();
      for (long k = 0; k < m; ++k) p = fold_word(pg, p, pair_word);
      if (p != pg.identity()) return false;
    }
  }

  // Surjective, hence bijective: the images generate the whole group.
  {
    std::vector<char> seen(size_t(pg.size()), 0);
    seen[0] = 1;
    long count = 1;
    std::queue<int> q;
    q.push(pg.identity());
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int i = 0; i < l; ++i) {
        int b = fold_word(pg, a, image_word[size_t(i)]);
        if (!seen[size_t(b)]) {
          seen[size_t(b)] = 1;
          ++count;
          q.push(b);
        }
      }
    }
    if (count != pg.size()) return false;
  }

  // The image of every element, walking the breadth-first order so each
  // element extends an already-mapped shorter one by a single generator.
  const long n = pg.size();
  std::vector<int> image(static_cast<size_t>(n));
  image[0] = pg.identity();
  for (long e = 1; e < n; ++e) {
    std::vector<int> wd = pg.word(int(e));
    int last = wd.back();
    int shorter = pg.multiply_generator(int(e), last);
    image[size_t(e)] = fold_word(pg, image[size_t(shorter)], image_word[size_t(last)]);
  }

  // Reflections must map exactly onto the elements whose fixed and negated
  // sublattices have ranks (l-1, 1); equivalently the mod-2 quotients of the
  // fixed and negated sublattices have sizes 2^(l-1) and 2.
  std::vector<char> refl = reflection_set(pg);
  SublatticeRanks ranks = sublattice_ranks(w);
  const int r = w.rank();
  for (long e = 0; e < n; ++e) {
    int img = image[size_t(e)];
    bool looks_like_reflection =
        ranks.fixed[size_t(img)] == r - 1 && ranks.negated[size_t(img)] == 1;
    if (bool(refl[size_t(e)]) != looks_like_reflection) return false;
  }
  return true;
}

bool ChiProfile::same_verdicts(const ChiProfile& other) const {
  return label == other.label && split == other.split &&
         involution_in_coset == other.involution_in_coset &&
         square_pairs == other.square_pairs && equal_squares == other.equal_squares &&
         triple_equal_squares == other.triple_equal_squares &&
         commuting_with_involution == other.commuting_with_involution;
}

ChiProfile chi_profile(const CrystGroup& w, CaseLabel label) {
  ChiProfile p;
  p.label = label;
  p.split = crystgrp::is_split(w);
  if (label == CaseLabel::SplitOnly) return p;

  const weyl::WeylGroup& pg = w.point_group();
  const int l = pg.generator_count();
  std::vector<std::vector<int>> sigmas = diagram_automorphisms(pg);

  switch (label) {
    case CaseLabel::ForkEqualSquares:
      p.square_pairs.emplace_back(l - 2, l - 1);
      break;
    case CaseLabel::ShortCosetSquares:
      p.square_pairs.emplace_back(1, l - 1);
      break;
    default:
      break;
  }
  const bool wants_triple = label == CaseLabel::TripleOrCommuting;

  // Conjunction over every reduced realizer twist; the profile must not
  // depend on which realizer presented the group.
  p.involution_in_coset.assign(size_t(l), 1);
  p.equal_squares.assign(p.square_pairs.size(), 1);
  p.triple_equal_squares = wants_triple ? 1 : 0;
  p.commuting_with_involution = wants_triple ? 1 : 0;

  std::vector<std::optional<GroupElement>> involution_witness(static_cast<size_t>(l));
  std::vector<std::vector<GroupElement>> pair_witness(p.square_pairs.size());
  std::vector<GroupElement> triple_witness;
  std::vector<GroupElement> commuting_witness;

  for (size_t si = 0; si < sigmas.size(); ++si) {
    const std::vector<int>& sigma = sigmas[si];
    auto gen_at = [&](int pos) { return pg.generator(sigma[size_t(pos)]); };

    for (int i = 0; i < l; ++i) {
      auto z = crystgrp::coset_involution_exists(w, gen_at(i));
      if (!z) p.involution_in_coset[size_t(i)] = 0;
      if (si == 0 && z) involution_witness[size_t(i)] = *std::move(z);
    }
    for (size_t k = 0; k < p.square_pairs.size(); ++k) {
      auto z = crystgrp::coset_equal_squares(w, gen_at(p.square_pairs[k].first),
                                             gen_at(p.square_pairs[k].second));
      if (!z) p.equal_squares[k] = 0;
      if (si == 0 && z) pair_witness[k] = {std::move(z->first), std::move(z->second)};
    }
    if (wants_triple) {
      auto z3 = crystgrp::coset_equal_squares_triple(w, gen_at(0), gen_at(1), gen_at(2));
      if (!z3) p.triple_equal_squares = 0;
      if (si == 0 && z3) triple_witness.assign(z3->begin(), z3->end());
      auto zc = crystgrp::coset_commuting_with_involution(w, gen_at(0), gen_at(3));
      if (!zc) p.commuting_with_involution = 0;
      if (si == 0 && zc) {
        commuting_witness.push_back(std::move(zc->first));
        commuting_witness.push_back(std::move(zc->second));
      }
    }
  }

  // Witnesses back surviving verdicts only; a flag killed by a later twist
  // drops its candidate.
  for (int i = 0; i < l; ++i)
    if (p.involution_in_coset[size_t(i)] && involution_witness[size_t(i)])
      p.witnesses.push_back(*std::move(involution_witness[size_t(i)]));
  for (size_t k = 0; k < p.square_pairs.size(); ++k)
    if (p.equal_squares[k])
      for (GroupElement& z : pair_witness[k]) p.witnesses.push_back(std::move(z));
  if (p.triple_equal_squares)
    for (GroupElement& z : triple_witness) p.witnesses.push_back(std::move(z));
  if (p.commuting_with_involution)
    for (GroupElement& z : commuting_witness) p.witnesses.push_back(std::move(z));
  return p;
}

std::optional<std::string> distinguish(const CrystGroup& a, const CrystGroup& b, CaseLabel label) {
  const weyl::WeylGroup& pa = a.point_group();
  const weyl::WeylGroup& pb = b.point_group();
  bool same_family = a.lattice().spec == b.lattice().spec && pa.size() == pb.size() &&
                     pa.generator_count() == pb.generator_count() &&
                     pa.dimension() == pb.dimension();
  if (same_family && &pa != &pb) {
    for (int i = 0; i < pa.generator_count() && same_family; ++i)
      same_family = pa.matrix(pa.generator(i)) == pb.matrix(pb.generator(i));
  }
  if (!same_family)
    throw FamilyMismatch("distinguish: groups come from different (type, rank, lattice) rows");

  ChiProfile qa = chi_profile(a, label);
  ChiProfile qb = chi_profile(b, label);
  if (qa.split != qb.split) return "split";
  for (size_t i = 0; i < qa.involution_in_coset.size(); ++i) {
    if (qa.involution_in_coset[i] != qb.involution_in_coset[i])
      return "involutions(s_" + std::to_string(i + 1) + ")";
  }
  for (size_t k = 0; k < qa.square_pairs.size(); ++k) {
    if (qa.equal_squares[k] != qb.equal_squares[k]) {
      return "equal-squares(s_" + std::to_string(qa.square_pairs[k].first + 1) + ",s_" +
             std::to_string(qa.square_pairs[k].second + 1) + ")";
    }
  }
  if (qa.triple_equal_squares != qb.triple_equal_squares) return "triple-squares(s_1,s_2,s_3)";
  if (qa.commuting_with_involution != qb.commuting_with_involution)
    return "commuting-involution(s_1,s_4)";
  return std::nullopt;
}

}  // namespace weylcryst::invariants
