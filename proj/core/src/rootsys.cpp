#include "weylcryst/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace weylcryst::rootsys {

using exactla::lattice_canonical_basis;
using exactla::lattice_index;

std::string to_string(Type t) {
  switch (t) {
    case Type::A: return "A";
    case Type::B: return "B";
    case Type::C: return "C";
    case Type::D: return "D";
    case Type::E6: return "E6";
    case Type::E7: return "E7";
    case Type::E8: return "E8";
    case Type::F4: return "F4";
    case Type::G2: return "G2";
  }
  throw UnsupportedType("bad type enum");
}

Type type_from_string(const std::string& s) {
  if (s == "A") return Type::A;
  if (s == "B") return Type::B;
  if (s == "C") return Type::C;
  if (s == "D") return Type::D;
  if (s == "E6") return Type::E6;
  if (s == "E7") return Type::E7;
  if (s == "E8") return Type::E8;
  if (s == "F4") return Type::F4;
  if (s == "G2") return Type::G2;
  throw UnsupportedType("unknown root system type: " + s);
}

Rat dot(const RatVector& a, const RatVector& b) {
  Rat acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatMatrix reflection_through(const RatVector& v) {
  const int n = int(v.size());
  Rat nn = dot(v, v);
  RatMatrix s = RatMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) -= Rat(2) * v[i] * v[j] / nn;
  return s;
}

namespace {

RatVector reflect(const RatVector& x, const RatVector& a, const Rat& aa) {
  Rat c = Rat(2) * dot(x, a) / aa;
  RatVector y = x;
  for (size_t i = 0; i < x.size(); ++i) y[i] -= c * a[i];
  return y;
}

RatVector unit(int n, int i) {
  RatVector v(n, Rat(0));
  v[i] = 1;
  return v;
}

std::vector<RatVector> simple_roots_for(Type t, int rank, int& ambient) {
  std::vector<RatVector> b;
  switch (t) {
    case Type::A: {
      if (rank < 1) throw UnsupportedType("type A needs rank >= 1");
      ambient = rank + 1;
      for (int i = 0; i < rank; ++i) {
        RatVector v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        b.push_back(v);
      }
      break;
    }
    case Type::B:
    case Type::C: {
      if (rank < 2) throw UnsupportedType("types B and C need rank >= 2");
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVector v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        b.push_back(v);
      }
      RatVector last(ambient, Rat(0));
      last[rank - 1] = (t == Type::B) ? 1 : 2;
      b.push_back(last);
      break;
    }
    case Type::D: {
      if (rank < 3) throw UnsupportedType("type D needs rank >= 3");
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVector v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        b.push_back(v);
      }
      RatVector last(ambient, Rat(0));
      last[rank - 2] = 1;
      last[rank - 1] = 1;
      b.push_back(last);
      break;
    }
    case Type::E6:
    case Type::E7:
    case Type::E8: {
      int want = t == Type::E6 ? 6 : (t == Type::E7 ? 7 : 8);
      if (rank != want) throw UnsupportedType("exceptional type has fixed rank");
      ambient = 8;
      RatVector a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      b.push_back(a1);
      RatVector a2(8, Rat(0));
      a2[0] = 1;
      a2[1] = 1;
      b.push_back(a2);
      for (int i = 0; i + 2 < want; ++i) {
        RatVector v(8, Rat(0));
        v[i] = -1;
        v[i + 1] = 1;
        b.push_back(v);
      }
      break;
    }
    case Type::F4: {
      if (rank != 4) throw UnsupportedType("F4 has rank 4");
      ambient = 4;
      b.push_back({Rat(0), Rat(1), Rat(-1), Rat(0)});
      b.push_back({Rat(0), Rat(0), Rat(1), Rat(-1)});
      b.push_back({Rat(0), Rat(0), Rat(0), Rat(1)});
      b.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
      break;
    }
    case Type::G2: {
      if (rank != 2) throw UnsupportedType("G2 has rank 2");
      ambient = 3;
      b.push_back({Rat(1), Rat(-1), Rat(0)});
      b.push_back({Rat(-2), Rat(1), Rat(1)});
      break;
    }
  }
  return b;
}

std::vector<RatVector> orbit_closure(const std::vector<RatVector>& simple) {
  std::set<RatVector> seen(simple.begin(), simple.end());
  std::vector<Rat> norms;
  norms.reserve(simple.size());
  for (const auto& a : simple) norms.push_back(dot(a, a));
  std::vector<RatVector> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    RatVector x = queue.back();
    queue.pop_back();
    for (size_t i = 0; i < simple.size(); ++i) {
      RatVector y = reflect(x, simple[i], norms[i]);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};  // std::set iterates in lex order
}

}  // namespace

bool RootSystem::is_root(const RatVector& v) const {
  return std::binary_search(roots.begin(), roots.end(), v);
}

RootSystem build_root_system(Type t, int rank) {
  RootSystem r;
  r.type = t;
  r.rank = rank;
  r.simple_roots = simple_roots_for(t, rank, r.ambient_dim);
  r.roots = orbit_closure(r.simple_roots);
  return r;
}

RootSystem build_from_simple_roots(const std::vector<RatVector>& simple) {
  if (simple.empty()) throw UnsupportedType("need at least one simple root");
  RootSystem r;
  r.type = Type::A;
  r.rank = int(simple.size());
  r.ambient_dim = int(simple[0].size());
  r.simple_roots = simple;
  r.roots = orbit_closure(simple);
  return r;
}

RatMatrix reflection_matrix(const RootSystem& r, const RatVector& root) {
  if (!r.is_root(root)) throw NotARoot("vector is not a root of the system");
  return reflection_through(root);
}

std::vector<RatMatrix> simple_reflections(const RootSystem& r) {
  std::vector<RatMatrix> out;
  out.reserve(r.simple_roots.size());
  for (const auto& a : r.simple_roots) out.push_back(reflection_through(a));
  return out;
}

RatMatrix root_lattice(const RootSystem& r) {
  RatMatrix gens(r.ambient_dim, int(r.simple_roots.size()));
  for (size_t j = 0; j < r.simple_roots.size(); ++j) gens.set_column(int(j), r.simple_roots[j]);
  return lattice_canonical_basis(gens);
}

RatMatrix weight_lattice(const RootSystem& r) {
  const int l = r.rank;
  // Cartan matrix c(j,k) = 2 (a_j, a_k) / (a_j, a_j).
  RatMatrix c(l, l);
  for (int j = 0; j < l; ++j) {
    Rat nn = dot(r.simple_roots[j], r.simple_roots[j]);
    for (int k = 0; k < l; ++k) c(j, k) = Rat(2) * dot(r.simple_roots[j], r.simple_roots[k]) / nn;
  }
  auto cinv = exactla::inverse(c);
  if (!cinv) throw UnsupportedType("simple roots are dependent");
  RatMatrix a(r.ambient_dim, l);
  for (int j = 0; j < l; ++j) a.set_column(j, r.simple_roots[j]);
  RatMatrix p = lattice_canonical_basis(a * (*cinv));
  // Sanity: the root lattice embeds with finite index.
  auto idx = lattice_index(p, root_lattice(r));
  if (!idx || *idx <= 0) throw UnsupportedType("weight lattice does not contain root lattice");
  return p;
}

int product_order(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix p = a * b;
  RatMatrix id = RatMatrix::identity(p.rows());
  RatMatrix acc = p;
  for (int k = 1; k <= 12; ++k) {
    if (acc == id) return k;
    acc = acc * p;
  }
  throw UnsupportedType("product of reflections has order above 12");
}

bool is_irreducible(const RootSystem& r) {
  const int l = r.rank;
  std::vector<RatMatrix> s = simple_reflections(r);
  std::vector<int> comp(l, -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < l; ++j)
      if (comp[j] == -1 && product_order(s[i], s[j]) >= 3) {
        comp[j] = 0;
        stack.push_back(j);
      }
  }
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::string to_string(Family f) {
  switch (f) {
    case Family::CL: return "CL";
    case Family::CCL: return "CCL";
    case Family::FL: return "FL";
    case Family::Omega: return "Omega";
    case Family::Lambda: return "Lambda";
    case Family::Q6: return "Q6";
    case Family::P6: return "P6";
    case Family::Q7: return "Q7";
    case Family::P7: return "P7";
  }
  throw UnsupportedFamily("bad family enum");
}

Family family_from_string(const std::string& s) {
  if (s == "CL") return Family::CL;
  if (s == "CCL") return Family::CCL;
  if (s == "FL") return Family::FL;
  if (s == "Omega") return Family::Omega;
  if (s == "Lambda") return Family::Lambda;
  if (s == "Q6") return Family::Q6;
  if (s == "P6") return Family::P6;
  if (s == "Q7") return Family::Q7;
  if (s == "P7") return Family::P7;
  throw UnsupportedFamily("unknown lattice family: " + s);
}

namespace {

RatVector half_sum(int n, int upto) {
  RatVector v(n, Rat(0));
  for (int i = 0; i < upto; ++i) v[i] = Rat(1, 2);
  return v;
}

}  // namespace

RatMatrix family_lattice(Family f, int l, const std::optional<Int>& lambda_a) {
  switch (f) {
    case Family::CL: {
      if (l < 1) throw UnsupportedFamily("CL needs l >= 1");
      return RatMatrix::identity(l);
    }
    case Family::CCL: {
      if (l < 2) throw UnsupportedFamily("CCL needs l >= 2");
      RatMatrix g(l, l);
      for (int i = 0; i + 1 < l; ++i) g(i, i) = 1;
      g.set_column(l - 1, half_sum(l, l));
      return lattice_canonical_basis(g);
    }
    case Family::FL: {
      if (l < 2) throw UnsupportedFamily("FL needs l >= 2");
      RatMatrix g(l, l);
      for (int i = 0; i + 1 < l; ++i) {
        g(i, i) = 1;
        g(i + 1, i) = -1;
      }
      g(l - 1, l - 1) = 2;
      return lattice_canonical_basis(g);
    }
    case Family::Omega: {
      if (l < 4 || l % 2 != 0) throw UnsupportedFamily("Omega needs even l >= 4");
      RatMatrix fl = family_lattice(Family::FL, l);
      RatMatrix g(l, l + 1);
      for (int j = 0; j < l; ++j) g.set_column(j, fl.column_vector(j));
      g.set_column(l, half_sum(l, l));
      return lattice_canonical_basis(g);
    }
    case Family::Lambda: {
      if (l < 1) throw UnsupportedFamily("Lambda needs l >= 1");
      if (!lambda_a) throw UnsupportedFamily("Lambda needs the divisor parameter");
      Int a = *lambda_a;
      if (a <= 0 || Int(l + 1) % a != 0) throw UnsupportedFamily("Lambda parameter must divide l + 1");
      const int n = l + 1;
      RatMatrix g(n, l);
      for (int i = 0; i + 1 < l; ++i) {
        g(i, i) = 1;
        g(i + 1, i) = -1;
      }
      RatVector v(n, Rat(0));
      Rat frac = Rat(a) / Rat(n);
      for (int i = 0; i < n; ++i) v[i] = -frac;
      v[0] += Rat(a);
      g.set_column(l - 1, v);
      return lattice_canonical_basis(g);
    }
    case Family::Q6:
    case Family::P6:
    case Family::Q7:
    case Family::P7: {
      const int n = 8;
      std::vector<RatVector> gens;
      int top = (f == Family::Q6) ? 5 : (f == Family::P6) ? 4 : (f == Family::Q7) ? 6 : 5;
      for (int i = 0; i < top; ++i) {
        RatVector v(n, Rat(0));
        v[0] += 1;
        v[i] += 1;
        gens.push_back(v);
      }
      RatVector h(n, Rat(-1, 2));
      h[0] = Rat(1, 2);
      h[7] = Rat(1, 2);
      gens.push_back(h);
      if (f == Family::P6) {
        RatVector w(n, Rat(0));
        w[0] = 1;
        w[4] = 1;
        w[5] = Rat(2, 3);
        w[6] = Rat(2, 3);
        w[7] = Rat(-2, 3);
        gens.push_back(w);
      } else if (f == Family::P7) {
        gens.push_back(half_sum(n, 6));
      }
      RatMatrix g(n, int(gens.size()));
      for (size_t j = 0; j < gens.size(); ++j) g.set_column(int(j), gens[j]);
      (void)l;
      return lattice_canonical_basis(g);
    }
  }
  throw UnsupportedFamily("bad family enum");
}

LatticeSpec family_spec(Family f, int l, const std::optional<Int>& lambda_a) {
  RatMatrix b = family_lattice(f, l, lambda_a);
  return LatticeSpec{to_string(f), b.cols(), b};
}

LatticeSpec root_lattice_spec(const RootSystem& r) {
  RatMatrix b = root_lattice(r);
  return LatticeSpec{"QofR", b.cols(), b};
}

LatticeSpec weight_lattice_spec(const RootSystem& r) {
  RatMatrix b = weight_lattice(r);
  return LatticeSpec{"PofR", b.cols(), b};
}

LatticeSpec custom_spec(const std::string& name, const RatMatrix& basis) {
  RatMatrix b = exactla::canonicalized(basis);
  if (exactla::rank(b) != b.cols())
    throw UnsupportedFamily("custom lattice basis has dependent columns");
  return LatticeSpec{name, b.cols(), b};
}

}  // namespace weylcryst::rootsys
