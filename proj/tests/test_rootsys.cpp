#include <doctest.h>

#include "weylcryst/exactla.hpp"
#include "weylcryst/rootsys.hpp"

using namespace weylcryst::exactla;
using namespace weylcryst::rootsys;

namespace {

RatVector vec(const std::vector<long>& v) {
  RatVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

void check_root_system_axioms(const RootSystem& r) {
  // Reflection stability, coroot integrality, indivisibility.
  for (const auto& a : r.roots) {
    RatMatrix s = reflection_matrix(r, a);
    Rat aa = dot(a, a);
    REQUIRE(aa > 0);
    for (const auto& b : r.roots) {
      CHECK(r.is_root(s * b));
      Rat pairing = Rat(2) * dot(b, a) / aa;
      CHECK(pairing.get_den() == 1);
    }
    RatVector twice(a.size()), half(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      twice[i] = a[i] * 2;
      half[i] = a[i] / 2;
    }
    CHECK(!r.is_root(twice));
    CHECK(!r.is_root(half));
  }
  // Every root is an all-nonnegative or all-nonpositive integral combination
  // of the simple roots.
  RatMatrix basis(r.ambient_dim, r.rank);
  for (int j = 0; j < r.rank; ++j) basis.set_column(j, r.simple_roots[j]);
  for (const auto& a : r.roots) {
    auto c = solve_rational(basis, a);
    REQUIRE(c);
    bool nonneg = true, nonpos = true;
    for (const Rat& q : *c) {
      CHECK(q.get_den() == 1);
      if (q < 0) nonneg = false;
      if (q > 0) nonpos = false;
    }
    CHECK((nonneg || nonpos));
  }
}

}  // namespace

TEST_CASE("root counts per type") {
  CHECK(build_root_system(Type::A, 2).roots.size() == 6);
  CHECK(build_root_system(Type::B, 3).roots.size() == 18);
  CHECK(build_root_system(Type::C, 3).roots.size() == 18);
  CHECK(build_root_system(Type::D, 3).roots.size() == 12);
  CHECK(build_root_system(Type::D, 4).roots.size() == 24);
  CHECK(build_root_system(Type::D, 6).roots.size() == 60);
  CHECK(build_root_system(Type::E6, 6).roots.size() == 72);
  CHECK(build_root_system(Type::E7, 7).roots.size() == 126);
  CHECK(build_root_system(Type::E8, 8).roots.size() == 240);
  CHECK(build_root_system(Type::F4, 4).roots.size() == 48);
  CHECK(build_root_system(Type::G2, 2).roots.size() == 12);
}

TEST_CASE("root system axioms hold") {
  for (auto r : {build_root_system(Type::A, 2), build_root_system(Type::B, 3),
                 build_root_system(Type::C, 3), build_root_system(Type::D, 4),
                 build_root_system(Type::F4, 4), build_root_system(Type::G2, 2)})
    check_root_system_axioms(r);
}

TEST_CASE("membership frozen examples") {
  RootSystem c3 = build_root_system(Type::C, 3);
  CHECK(c3.is_root(vec({2, 0, 0})));
  CHECK(c3.is_root(vec({0, 0, -2})));
  CHECK(!c3.is_root(vec({1, 0, 0})));

  RootSystem b3 = build_root_system(Type::B, 3);
  CHECK(b3.is_root(vec({1, 0, 0})));
  CHECK(b3.is_root(vec({1, -1, 0})));
  CHECK(!b3.is_root(vec({2, 0, 0})));

  RootSystem d3 = build_root_system(Type::D, 3);
  for (const auto& a : d3.roots) {
    int nonzero = 0;
    for (const Rat& q : a)
      if (q != 0) {
        CHECK(abs(q) == 1);
        ++nonzero;
      }
    CHECK(nonzero == 2);
  }
}

TEST_CASE("last simple reflection of B flips the last coordinate") {
  RootSystem b4 = build_root_system(Type::B, 4);
  RatMatrix s = simple_reflections(b4).back();
  RatMatrix expect = RatMatrix::identity(4);
  expect(3, 3) = -1;
  CHECK(s == expect);
}

TEST_CASE("reflection_matrix rejects non-roots") {
  RootSystem b3 = build_root_system(Type::B, 3);
  CHECK_THROWS_AS((void)reflection_matrix(b3, vec({1, 1, 1})), NotARoot);
}

TEST_CASE("admissibility errors") {
  CHECK_THROWS_AS((void)build_root_system(Type::A, 0), UnsupportedType);
  CHECK_THROWS_AS((void)build_root_system(Type::B, 1), UnsupportedType);
  CHECK_THROWS_AS((void)build_root_system(Type::D, 2), UnsupportedType);
  CHECK_THROWS_AS((void)build_root_system(Type::E6, 7), UnsupportedType);
  CHECK_THROWS_AS((void)build_root_system(Type::G2, 3), UnsupportedType);
  CHECK_THROWS_AS((void)family_lattice(Family::Omega, 5), UnsupportedFamily);
  CHECK_THROWS_AS((void)family_lattice(Family::Lambda, 3, Int(3)), UnsupportedFamily);
  CHECK_THROWS_AS((void)family_lattice(Family::Lambda, 3), UnsupportedFamily);
  CHECK_THROWS_AS((void)type_from_string("H3"), UnsupportedType);
  CHECK_THROWS_AS((void)family_from_string("XX"), UnsupportedFamily);
}

TEST_CASE("root and weight lattices of the classical types") {
  RootSystem b3 = build_root_system(Type::B, 3);
  CHECK(root_lattice(b3) == family_lattice(Family::CL, 3));
  CHECK(weight_lattice(b3) == family_lattice(Family::CCL, 3));
  auto idx = lattice_index(weight_lattice(b3), root_lattice(b3));
  REQUIRE(idx);
  CHECK(*idx == 2);

  RootSystem c3 = build_root_system(Type::C, 3);
  CHECK(root_lattice(c3) == family_lattice(Family::FL, 3));

  RootSystem d6 = build_root_system(Type::D, 6);
  CHECK(root_lattice(d6) == family_lattice(Family::FL, 6));
  auto idx4 = lattice_index(weight_lattice(d6), root_lattice(d6));
  REQUIRE(idx4);
  CHECK(*idx4 == 4);

  // The three proper intermediate lattices of D_6 are CL and Omega (the third
  // is equivalent to Omega and not cataloged separately).
  RatMatrix p = weight_lattice(d6), q = root_lattice(d6);
  for (auto f : {Family::CL, Family::Omega}) {
    RatMatrix l = family_lattice(f, 6);
    auto up = lattice_index(p, l);
    auto down = lattice_index(l, q);
    REQUIRE(up);
    REQUIRE(down);
    CHECK(*up == 2);
    CHECK(*down == 2);
  }
}

TEST_CASE("lattices of the exceptional types match the cataloged bases") {
  RootSystem e6 = build_root_system(Type::E6, 6);
  CHECK(root_lattice(e6) == family_lattice(Family::Q6, 6));
  CHECK(weight_lattice(e6) == family_lattice(Family::P6, 6));
  auto i6 = lattice_index(weight_lattice(e6), root_lattice(e6));
  REQUIRE(i6);
  CHECK(*i6 == 3);

  RootSystem e7 = build_root_system(Type::E7, 7);
  CHECK(root_lattice(e7) == family_lattice(Family::Q7, 7));
  CHECK(weight_lattice(e7) == family_lattice(Family::P7, 7));
  auto i7 = lattice_index(weight_lattice(e7), root_lattice(e7));
  REQUIRE(i7);
  CHECK(*i7 == 2);

  RootSystem e8 = build_root_system(Type::E8, 8);
  CHECK(root_lattice(e8) == family_lattice(Family::Omega, 8));
  CHECK(weight_lattice(e8) == root_lattice(e8));

  RootSystem f4 = build_root_system(Type::F4, 4);
  CHECK(root_lattice(f4) == family_lattice(Family::CCL, 4));
  CHECK(weight_lattice(f4) == root_lattice(f4));
}

TEST_CASE("family lattice membership") {
  RatMatrix fl3 = family_lattice(Family::FL, 3);
  CHECK(in_lattice(fl3, {Rat(1), Rat(1), Rat(0)}));
  CHECK(!in_lattice(fl3, {Rat(1), Rat(0), Rat(0)}));

  RatMatrix ccl4 = family_lattice(Family::CCL, 4);
  CHECK(in_lattice(ccl4, RatVector(4, Rat(1, 2))));
  CHECK(in_lattice(ccl4, {Rat(1), Rat(0), Rat(0), Rat(0)}));
  CHECK(!in_lattice(ccl4, {Rat(1, 2), Rat(0), Rat(0), Rat(0)}));

  RatMatrix om6 = family_lattice(Family::Omega, 6);
  CHECK(in_lattice(om6, RatVector(6, Rat(1, 2))));
  CHECK(in_lattice(om6, {Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}));
  CHECK(!in_lattice(om6, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}));
}

TEST_CASE("Lambda family endpoints") {
  RootSystem a3 = build_root_system(Type::A, 3);
  CHECK(family_lattice(Family::Lambda, 3, Int(1)) == weight_lattice(a3));
  CHECK(family_lattice(Family::Lambda, 3, Int(4)) == root_lattice(a3));
  // Intermediate divisor: sandwiched strictly between Q and P.
  RatMatrix mid = family_lattice(Family::Lambda, 3, Int(2));
  auto up = lattice_index(weight_lattice(a3), mid);
  auto down = lattice_index(mid, root_lattice(a3));
  REQUIRE(up);
  REQUIRE(down);
  CHECK(*up == 2);
  CHECK(*down == 2);
}

TEST_CASE("irreducibility via diagram connectivity") {
  CHECK(is_irreducible(build_root_system(Type::B, 3)));
  CHECK(is_irreducible(build_root_system(Type::D, 4)));
  CHECK(is_irreducible(build_root_system(Type::A, 2)));
  CHECK(is_irreducible(build_root_system(Type::G2, 2)));
  RootSystem a1a1 = build_from_simple_roots({vec({1, 0}), vec({0, 1})});
  CHECK(a1a1.roots.size() == 4);
  CHECK(!is_irreducible(a1a1));
}

TEST_CASE("weight lattice pairs integrally with all coroots") {
  for (auto r : {build_root_system(Type::B, 4), build_root_system(Type::D, 5),
                 build_root_system(Type::F4, 4)}) {
    RatMatrix p = weight_lattice(r);
    for (int j = 0; j < p.cols(); ++j) {
      RatVector w = p.column_vector(j);
      for (const auto& a : r.roots) {
        Rat pairing = Rat(2) * dot(w, a) / dot(a, a);
        CHECK(pairing.get_den() == 1);
      }
    }
  }
}
