#include <doctest.h>

#include <set>
#include <string>

#include "weylcryst/lattices.hpp"
#include "weylcryst/rootsys.hpp"
#include "weylcryst/weyl.hpp"

using namespace weylcryst::exactla;
using namespace weylcryst::rootsys;
using namespace weylcryst::weyl;
using namespace weylcryst::lattices;

namespace {

WeylGroup group_of(Type t, int rank) {
  return WeylGroup::generate(simple_reflections(build_root_system(t, rank)));
}

RatMatrix basis_from_columns(const std::vector<RatVector>& cols) {
  RatMatrix m(int(cols[0].size()), int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.set_column(int(j), cols[j]);
  return m;
}

std::string canon(const RatMatrix& generators) {
  return write_matrix(lattice_canonical_basis(generators));
}

// Independent oracle: enumerate upper-triangular row-Hermite candidates and
// filter by rational-solve stability. Returns canonical ambient bases.
std::set<std::string> oracle_centerings(const InvariantLattice& lat, long bound) {
  int l = lat.rank();
  std::set<std::string> found;
  std::vector<std::vector<Int>> rows;
  std::function<void(int, long)> rec = [&](int row, long det) {
    if (row == l) {
      RatMatrix u(l, l);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) u(i, j) = Rat(rows[size_t(i)][size_t(j)]);
      bool stable = true;
      for (const auto& a : lat.action_matrices) {
        RatMatrix img = a.to_rational() * u;
        for (int j = 0; j < l && stable; ++j) {
          auto x = solve_rational(u, img.column_vector(j));
          stable = x.has_value() && [&] {
            for (const auto& q : *x)
              if (q.get_den() != 1) return false;
            return true;
          }();
        }
        if (!stable) break;
      }
      if (stable) found.insert(canon(lat.spec.basis * u));
      return;
    }
    for (long d = 1; det * d <= bound; ++d) {
      std::vector<Int> r(size_t(l), 0);
      r[size_t(row)] = d;
      // Entries right of the diagonal in [0, d).
      std::vector<long> off(size_t(l - row - 1), 0);
      while (true) {
        for (int k = row + 1; k < l; ++k) r[size_t(k)] = off[size_t(k - row - 1)];
        rows.push_back(r);
        rec(row + 1, det * d);
        rows.pop_back();
        size_t s = 0;
        while (s < off.size() && ++off[s] >= d) off[s++] = 0;
        if (s == off.size()) break;
      }
    }
  };
  rec(0, 1);
  return found;
}

}  // namespace

TEST_CASE("invariant lattice construction") {
  WeylGroup b3 = group_of(Type::B, 3);
  InvariantLattice cl = make_invariant_lattice(b3, family_spec(Family::CL, 3));
  REQUIRE(cl.action_matrices.size() == 3);
  for (const auto& a : cl.action_matrices) {
    Rat det = determinant(a.to_rational());
    CHECK((det == 1 || det == -1));
  }
  CHECK(cl.group == &b3);

  // A lattice outside the span of its images.
  RatMatrix line = basis_from_columns({{Rat(1), Rat(0), Rat(0)}});
  WeylGroup a2 = group_of(Type::A, 2);
  CHECK_THROWS_AS((void)make_invariant_lattice(a2, custom_spec("line", line)), NotInvariant);

  // Stable span but fractional action.
  RatMatrix skew = basis_from_columns({{Rat(1), Rat(0), Rat(0)},
                                       {Rat(0), Rat(1), Rat(0)},
                                       {Rat(0), Rat(0), Rat(2)}});
  CHECK_THROWS_AS((void)make_invariant_lattice(b3, custom_spec("skew", skew)), NotInvariant);

  // The fixed line of A_2 is stable but the action on it is trivial.
  RatMatrix diag = basis_from_columns({{Rat(1), Rat(1), Rat(1)}});
  CHECK_THROWS_AS((void)make_invariant_lattice(a2, custom_spec("fix", diag)), NotFaithful);
  // Generator-only construction cannot see the faithfulness failure.
  std::vector<RatMatrix> gens;
  for (int g = 0; g < a2.generator_count(); ++g) gens.push_back(a2.matrix(a2.generator(g)));
  CHECK_NOTHROW((void)make_invariant_lattice(gens, custom_spec("fix", diag)));
}

TEST_CASE("sandwich test between root and weight lattices") {
  RootSystem b3 = build_root_system(Type::B, 3);
  RootSystem b4 = build_root_system(Type::B, 4);
  CHECK(!check_invariant_sandwich(family_spec(Family::FL, 3), b3));
  CHECK(check_invariant_sandwich(family_spec(Family::CL, 3), b3));
  CHECK(check_invariant_sandwich(family_spec(Family::CCL, 3), b3));
  CHECK(check_invariant_sandwich(family_spec(Family::CCL, 4), b4));
  for (auto [t, rank] : std::vector<std::pair<Type, int>>{
           {Type::B, 3}, {Type::C, 3}, {Type::D, 4}, {Type::A, 2}, {Type::F4, 4}, {Type::G2, 2}}) {
    RootSystem r = build_root_system(t, rank);
    CHECK(check_invariant_sandwich(root_lattice_spec(r), r));
    CHECK(check_invariant_sandwich(weight_lattice_spec(r), r));
  }
  // D_6: all four families sit between Q and P.
  RootSystem d6 = build_root_system(Type::D, 6);
  CHECK(check_invariant_sandwich(family_spec(Family::FL, 6), d6));
  CHECK(check_invariant_sandwich(family_spec(Family::CL, 6), d6));
  CHECK(check_invariant_sandwich(family_spec(Family::Omega, 6), d6));
  CHECK(!check_invariant_sandwich(family_spec(Family::CL, 5), d6));
}

TEST_CASE("centering enumeration on the integers") {
  WeylGroup triv = WeylGroup::trivial(1);
  InvariantLattice z = make_invariant_lattice(std::vector<RatMatrix>{},
                                              custom_spec("Z", RatMatrix::identity(1)));
  (void)triv;
  std::vector<Centering> cs = enumerate_centerings(z, 3);
  REQUIRE(cs.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(cs[size_t(i)].index == i + 1);
}

TEST_CASE("centerings of the cubic lattice under B_3") {
  WeylGroup b3 = group_of(Type::B, 3);
  InvariantLattice cl = make_invariant_lattice(b3, family_spec(Family::CL, 3));
  std::vector<Centering> cs = enumerate_centerings(cl, 8);

  // Index 1 is the lattice itself.
  CHECK(cs.front().index == 1);
  CHECK(cs.front().coords == IntMatrix::identity(3));

  std::set<std::string> got;
  for (const auto& c : cs) got.insert(canon(c.sub_basis));
  CHECK(got.count(canon(family_lattice(Family::CL, 3))) == 1);
  CHECK(got.count(canon(family_lattice(Family::FL, 3))) == 1);
  CHECK(got.count(canon(family_lattice(Family::CCL, 3) * Rat(2))) == 1);
  CHECK(got.count(canon(family_lattice(Family::CL, 3) * Rat(2))) == 1);
  // [CL : 2FL] = 16 and [CL : 4CL] = 64 exceed this bound.
  CHECK(got.count(canon(family_lattice(Family::FL, 3) * Rat(2))) == 0);

  // Exactly one stable sublattice of index 2, the parity lattice.
  int idx2 = 0;
  for (const auto& c : cs) idx2 += (c.index == 2);
  CHECK(idx2 == 1);

  // Coordinates are in Hermite normal form already.
  for (const auto& c : cs) CHECK(hermite_normal_form(c.coords).h == c.coords);

  // Closed under the group action.
  for (const auto& c : cs)
    for (int g = 0; g < b3.generator_count(); ++g)
      CHECK(canon(b3.matrix(b3.generator(g)) * c.sub_basis) == canon(c.sub_basis));

  // Complete against the independent oracle.
  std::set<std::string> oracle = oracle_centerings(cl, 8);
  CHECK(got == oracle);
  CHECK(got.size() == cs.size());

  // The larger bound picks up 2FL_3.
  std::vector<Centering> cs16 = enumerate_centerings(cl, 16);
  std::set<std::string> got16;
  for (const auto& c : cs16) got16.insert(canon(c.sub_basis));
  CHECK(got16.count(canon(family_lattice(Family::FL, 3) * Rat(2))) == 1);
  CHECK(got16 == oracle_centerings(cl, 16));

  CHECK_THROWS_AS((void)enumerate_centerings(cl, 16, 10), BoundTooLarge);
}

TEST_CASE("maximal centerings divide out the content") {
  WeylGroup b3 = group_of(Type::B, 3);
  InvariantLattice cl = make_invariant_lattice(b3, family_spec(Family::CL, 3));
  std::vector<Centering> cs = enumerate_centerings(cl, 8);
  for (const auto& c : cs) {
    Centering m = maximal_centering(c, cl);
    CHECK(m.index <= c.index);
    if (c.coords == IntMatrix::identity(3)) CHECK(m.coords == IntMatrix::identity(3));
  }
  // 2CL -> CL.
  Centering two_cl;
  two_cl.coords = IntMatrix::identity(3);
  for (int i = 0; i < 3; ++i) two_cl.coords(i, i) = 2;
  two_cl.index = 8;
  two_cl.sub_basis = cl.spec.basis * two_cl.coords.to_rational();
  CHECK(maximal_centering(two_cl, cl).coords == IntMatrix::identity(3));

  // FL has content 1; 6FL rescales back to FL.
  RatMatrix fl = family_lattice(Family::FL, 3);
  Centering fl_c;
  fl_c.sub_basis = fl;
  fl_c.coords = to_integer(fl);  // FL basis has integer coordinates in CL
  fl_c.index = 2;
  CHECK(maximal_centering(fl_c, cl).coords == fl_c.coords);
  Centering fl6;
  fl6.coords = to_integer(fl * Rat(6));
  fl6.index = 2 * 216;
  fl6.sub_basis = fl * Rat(6);
  CHECK(maximal_centering(fl6, cl).coords == fl_c.coords);
  CHECK(maximal_centering(fl6, cl).index == 2);
}

TEST_CASE("maximal centering classes stabilize when the bound doubles") {
  auto maximal_classes = [](const InvariantLattice& lat, long bound, long ceiling) {
    std::set<std::string> classes;
    for (const auto& c : enumerate_centerings(lat, bound, ceiling))
      classes.insert(canon(maximal_centering(c, lat).sub_basis));
    return classes;
  };
  struct Row {
    Type t;
    int rank;
    long bound;
  };
  // Bound = (index of connection)^2 * 4 per case.
  for (Row row : {Row{Type::B, 3, 16}, Row{Type::C, 3, 16}, Row{Type::D, 4, 64}}) {
    WeylGroup w = group_of(row.t, row.rank);
    RootSystem r = build_root_system(row.t, row.rank);
    InvariantLattice q = make_invariant_lattice(w, root_lattice_spec(r));
    auto s1 = maximal_classes(q, row.bound, 400000000L);
    auto s2 = maximal_classes(q, 2 * row.bound, 400000000L);
    CHECK(s1 == s2);
    CHECK(!s1.empty());
    // Reproducible run to run.
    CHECK(maximal_classes(q, row.bound, 400000000L) == s1);
  }
}

TEST_CASE("absolute irreducibility") {
  WeylGroup b3 = group_of(Type::B, 3);
  RootSystem rb3 = build_root_system(Type::B, 3);
  CHECK(absolutely_irreducible(make_invariant_lattice(b3, root_lattice_spec(rb3))));

  // Trivial action on Z^2: commutant is the full matrix algebra.
  InvariantLattice z2 = make_invariant_lattice(std::vector<RatMatrix>{},
                                               custom_spec("Z2", RatMatrix::identity(2)));
  CHECK(!absolutely_irreducible(z2));

  // Reducible control: two orthogonal A_1 factors.
  RootSystem a1a1 = build_from_simple_roots({{Rat(1), Rat(-1), Rat(0), Rat(0)},
                                             {Rat(0), Rat(0), Rat(1), Rat(-1)}});
  CHECK(!is_irreducible(a1a1));
  InvariantLattice red = make_invariant_lattice(simple_reflections(a1a1), root_lattice_spec(a1a1));
  CHECK(!absolutely_irreducible(red));

  // Equivalence with diagram connectivity across the shipped systems.
  std::vector<std::pair<Type, int>> rows;
  for (int l = 1; l <= 6; ++l) rows.emplace_back(Type::A, l);
  for (int l = 2; l <= 6; ++l) rows.emplace_back(Type::B, l);
  for (int l = 2; l <= 6; ++l) rows.emplace_back(Type::C, l);
  for (int l = 3; l <= 6; ++l) rows.emplace_back(Type::D, l);
  rows.emplace_back(Type::G2, 2);
  rows.emplace_back(Type::F4, 4);
  rows.emplace_back(Type::E6, 6);
  for (auto [t, l] : rows) {
    RootSystem r = build_root_system(t, l);
    InvariantLattice q = make_invariant_lattice(simple_reflections(r), root_lattice_spec(r));
    CHECK(absolutely_irreducible(q) == is_irreducible(r));
  }
}

TEST_CASE("sandwiched lattices of low rank are absolutely irreducible") {
  struct Row {
    Type t;
    int rank;
    Family f;
  };
  for (Row row : {Row{Type::B, 3, Family::CL}, Row{Type::B, 3, Family::CCL},
                  Row{Type::B, 4, Family::CL}, Row{Type::B, 4, Family::CCL},
                  Row{Type::C, 3, Family::FL}, Row{Type::C, 4, Family::FL},
                  Row{Type::D, 4, Family::FL}, Row{Type::D, 4, Family::CL},
                  Row{Type::D, 4, Family::CCL}, Row{Type::D, 6, Family::FL},
                  Row{Type::D, 6, Family::CL}, Row{Type::D, 6, Family::Omega},
                  Row{Type::D, 6, Family::CCL}}) {
    RootSystem r = build_root_system(row.t, row.rank);
    REQUIRE(check_invariant_sandwich(family_spec(row.f, row.rank), r));
    InvariantLattice lat =
        make_invariant_lattice(simple_reflections(r), family_spec(row.f, row.rank));
    CHECK(absolutely_irreducible(lat));
  }
}

TEST_CASE("integral equivalence, three valued") {
  WeylGroup b3 = group_of(Type::B, 3);
  InvariantLattice cl = make_invariant_lattice(b3, family_spec(Family::CL, 3));
  InvariantLattice fl = make_invariant_lattice(b3, family_spec(Family::FL, 3));
  InvariantLattice cl2 =
      make_invariant_lattice(b3, custom_spec("2CL", family_lattice(Family::CL, 3) * Rat(2)));

  // Scaling is an isomorphism.
  ZEquivalenceResult scaled = z_equivalence_small(cl, cl2);
  CHECK(scaled.verdict == ZVerdict::isomorphic);
  REQUIRE(scaled.map.has_value());
  Rat det = determinant(scaled.map->to_rational());
  CHECK((det == 1 || det == -1));

  // The cubic and parity lattices differ as modules.
  CHECK(z_equivalence_small(cl, fl).verdict == ZVerdict::distinct);

  // Rank-2 pair: same rational representation, inequivalent over Z.
  RatMatrix alpha(2, 2), alpha2(2, 2);
  alpha(0, 0) = 1;
  alpha(1, 1) = -1;
  alpha2(0, 0) = 1;
  alpha2(0, 1) = 1;
  alpha2(1, 1) = -1;
  InvariantLattice la =
      make_invariant_lattice(std::vector<RatMatrix>{alpha}, custom_spec("Za", RatMatrix::identity(2)));
  InvariantLattice lb =
      make_invariant_lattice(std::vector<RatMatrix>{alpha2}, custom_spec("Zb", RatMatrix::identity(2)));
  CHECK(z_equivalence_small(la, lb).verdict == ZVerdict::distinct);
  CHECK(z_equivalence_small(la, la).verdict == ZVerdict::isomorphic);

  // Every centering is equivalent to its maximal rescaling.
  for (const auto& c : enumerate_centerings(cl, 8)) {
    Centering m = maximal_centering(c, cl);
    InvariantLattice lc = make_invariant_lattice(b3, custom_spec("c", c.sub_basis));
    InvariantLattice lm = make_invariant_lattice(b3, custom_spec("m", m.sub_basis));
    CHECK(z_equivalence_small(lc, lm).verdict == ZVerdict::isomorphic);
  }
}
