#include "weylcryst/lattices.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <thread>

namespace weylcryst::lattices {

namespace {

// Solve B X = M column-wise over Q. nullopt when some column is outside the
// column span of B.
std::optional<RatMatrix> solve_in_basis(const RatMatrix& b, const RatMatrix& m) {
  RatMatrix x(b.cols(), m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    auto col = exactla::solve_rational(b, m.column_vector(j));
    if (!col) return std::nullopt;
    x.set_column(j, *col);
  }
  return x;
}

IntMatrix action_in_lattice_coords(const RatMatrix& basis, const RatMatrix& g) {
  auto x = solve_in_basis(basis, g * basis);
  if (!x) throw NotInvariant("generator moves the lattice out of its span");
  if (!x->is_integral()) throw NotInvariant("generator action is not integral on the lattice");
  IntMatrix a = exactla::to_integer(*x);
  Rat det = exactla::determinant(x.value());
  if (det != 1 && det != -1) throw NotInvariant("generator action is not unimodular");
  return a;
}

}  // namespace

InvariantLattice make_invariant_lattice(const std::vector<RatMatrix>& generators,
                                        const rootsys::LatticeSpec& spec) {
  if (spec.basis.cols() < 1) throw NotInvariant("empty lattice basis");
  InvariantLattice out;
  out.spec = spec;
  out.spec.basis = exactla::canonicalized(spec.basis);
  if (exactla::rank(out.spec.basis) != out.spec.basis.cols())
    throw NotInvariant("lattice basis columns are dependent");
  for (const auto& g : generators) {
    if (g.rows() != out.spec.basis.rows()) throw exactla::DimensionMismatch("generator vs basis");
    out.generators.push_back(exactla::canonicalized(g));
    out.action_matrices.push_back(action_in_lattice_coords(out.spec.basis, out.generators.back()));
  }
  return out;
}

InvariantLattice make_invariant_lattice(const weyl::WeylGroup& group,
                                        const rootsys::LatticeSpec& spec) {
  std::vector<RatMatrix> gens;
  for (int g = 0; g < group.generator_count(); ++g) gens.push_back(group.matrix(group.generator(g)));
  InvariantLattice out = make_invariant_lattice(gens, spec);
  out.group = &group;
  for (int e = 1; e < group.size(); ++e)
    if (group.matrix(e) * out.spec.basis == out.spec.basis)
      throw NotFaithful("a non-identity element fixes the lattice pointwise");
  return out;
}

bool check_invariant_sandwich(const rootsys::LatticeSpec& lattice, const rootsys::RootSystem& r) {
  const RatMatrix& b = lattice.basis;
  if (b.rows() != r.ambient_dim || b.cols() != r.rank) return false;
  RatMatrix q = rootsys::root_lattice(r);
  RatMatrix p = rootsys::weight_lattice(r);
  for (int j = 0; j < q.cols(); ++j)
    if (!exactla::in_lattice(b, q.column_vector(j))) return false;
  for (int j = 0; j < b.cols(); ++j)
    if (!exactla::in_lattice(p, b.column_vector(j))) return false;
  // Stability under each simple reflection. s(L) <= L suffices: s preserves
  // the index, so the containment is an equality.
  for (const auto& s : rootsys::simple_reflections(r))
    for (int j = 0; j < b.cols(); ++j)
      if (!exactla::in_lattice(b, s * b.column_vector(j))) return false;
  return true;
}

namespace {

// Candidate coordinate matrices are enumerated in Hermite normal form: lower
// triangular, positive diagonal with product <= bound, row entries left of
// the diagonal reduced modulo the diagonal. The work is stratified by
// diagonal, which makes the candidate count exactly predictable and lets
// strata run on separate threads; the final sort restores a deterministic
// order regardless of scheduling.

std::vector<std::vector<long long>> diagonal_strata(int l, long long bound) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> d(size_t(l), 1);
  std::function<void(int, long long)> rec = [&](int i, long long prod) {
    if (i == l) {
      out.push_back(d);
      return;
    }
    for (long long v = 1; prod * v <= bound; ++v) {
      d[size_t(i)] = v;
      rec(i + 1, prod * v);
    }
    d[size_t(i)] = 1;
  };
  rec(0, 1);
  return out;
}

// Off-diagonal freedom of one stratum: prod_i d_i^i.
__int128 stratum_size(const std::vector<long long>& diag) {
  __int128 n = 1;
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t k = 0; k < i; ++k) n *= diag[i];
  return n;
}

// Forward substitution over the integers: decides whether a*h_j is an
// integer combination of the columns of the lower-triangular h, for all a
// and j. Returns 1 (stable), 0 (unstable), or -1 when intermediate values
// leave the guarded range and the exact path must decide.
int stable_ll(const std::vector<long long>& h, int l,
              const std::vector<std::vector<long long>>& actions) {
  constexpr long long kGuard = 1LL << 60;
  long long v[8], x[8];
  for (const auto& a : actions) {
    for (int j = 0; j < l; ++j) {
      for (int i = 0; i < l; ++i) {
        __int128 s = 0;
        for (int k = j; k < l; ++k) s += __int128(a[size_t(i * l + k)]) * h[size_t(k * l + j)];
        v[i] = (long long)s;
      }
      for (int i = 0; i < l; ++i) {
        __int128 r = v[i];
        for (int m = 0; m < i; ++m) r -= __int128(h[size_t(i * l + m)]) * x[m];
        long long d = h[size_t(i * l + i)];
        if (r % d != 0) return 0;
        __int128 q = r / d;
        if (q > kGuard || q < -kGuard) return -1;
        x[i] = (long long)q;
      }
    }
  }
  return 1;
}

// Exact version of the same test, used when the guarded path bails out.
bool stable_exact(const std::vector<long long>& h, int l, const std::vector<IntMatrix>& actions) {
  // All h entries fit in a long: the enumeration bound is capped at 2^20.
  IntVector v(static_cast<size_t>(l));
  IntVector x(static_cast<size_t>(l));
  for (const auto& a : actions) {
    for (int j = 0; j < l; ++j) {
      for (int i = 0; i < l; ++i) {
        v[size_t(i)] = 0;
        for (int k = j; k < l; ++k) v[size_t(i)] += a(i, k) * Int(long(h[size_t(k * l + j)]));
      }
      for (int i = 0; i < l; ++i) {
        Int r = v[size_t(i)];
        for (int m = 0; m < i; ++m) r -= Int(long(h[size_t(i * l + m)])) * x[size_t(m)];
        Int d(long(h[size_t(i * l + i)]));
        if (r % d != 0) return false;
        x[size_t(i)] = r / d;
      }
    }
  }
  return true;
}

struct StratumResult {
  std::vector<IntMatrix> stable;
};

void scan_stratum(const std::vector<long long>& diag, int l,
                  const std::vector<std::vector<long long>>& actions,
                  const std::vector<IntMatrix>& exact_actions, StratumResult& out) {
  std::vector<long long> h(size_t(l) * l, 0);
  for (int i = 0; i < l; ++i) h[size_t(i * l + i)] = diag[size_t(i)];
  // Odometer over all below-diagonal entries h(i, k), k < i, in [0, d_i).
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < i; ++k)
      if (diag[size_t(i)] > 1) slots.emplace_back(i, k);
  while (true) {
    int verdict = stable_ll(h, l, actions);
    if (verdict == -1) verdict = stable_exact(h, l, exact_actions) ? 1 : 0;
    if (verdict == 1) {
      IntMatrix m(l, l);
      for (int i = 0; i < l; ++i)
        for (int k = 0; k <= i; ++k) m(i, k) = long(h[size_t(i * l + k)]);
      out.stable.push_back(std::move(m));
    }
    size_t s = 0;
    for (; s < slots.size(); ++s) {
      auto [i, k] = slots[s];
      if (++h[size_t(i * l + k)] < diag[size_t(i)]) break;
      h[size_t(i * l + k)] = 0;
    }
    if (s == slots.size()) break;
  }
}

}  // namespace

std::vector<Centering> enumerate_centerings(const InvariantLattice& lattice, const Int& max_index,
                                            long work_ceiling) {
  if (max_index < 1) throw BoundTooLarge("max_index must be at least 1");
  int l = lattice.rank();
  if (l > 6) throw BoundTooLarge("centering enumeration is limited to rank 6");
  if (max_index > (Int(1) << 20)) throw BoundTooLarge("max_index beyond the supported range");
  long long bound = max_index.get_si();

  std::vector<std::vector<long long>> actions;
  for (const auto& a : lattice.action_matrices) {
    std::vector<long long> flat(size_t(l) * l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        if (abs(a(i, j)) > (1 << 20)) throw BoundTooLarge("action entries beyond the fast range");
        flat[size_t(i * l + j)] = a(i, j).get_si();
      }
    actions.push_back(std::move(flat));
  }

  std::vector<std::vector<long long>> strata = diagonal_strata(l, bound);
  __int128 total = 0;
  for (const auto& d : strata) total += stratum_size(d);
  if (total > __int128(work_ceiling)) throw BoundTooLarge("centering candidate ceiling exceeded");

  std::vector<StratumResult> results(strata.size());
  unsigned threads = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  if (total < 100000) threads = 1;
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < strata.size(); i = next.fetch_add(1))
      scan_stratum(strata[i], l, actions, lattice.action_matrices, results[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<Centering> out;
  for (const auto& res : results)
    for (const auto& cand : res.stable) {
      Centering c;
      c.coords = cand;
      Int det = 1;
      for (int i = 0; i < l; ++i) det *= cand(i, i);
      c.index = det;
      c.sub_basis = lattice.spec.basis * cand.to_rational();
      out.push_back(std::move(c));
    }
  std::sort(out.begin(), out.end(), [](const Centering& a, const Centering& b) {
    if (a.index != b.index) return a.index < b.index;
    for (int i = 0; i < a.coords.rows(); ++i)
      for (int j = 0; j < a.coords.cols(); ++j)
        if (a.coords(i, j) != b.coords(i, j)) return a.coords(i, j) < b.coords(i, j);
    return false;
  });
  return out;
}

Centering maximal_centering(const Centering& c, const InvariantLattice& lattice) {
  Int content = 0;
  for (int i = 0; i < c.coords.rows(); ++i)
    for (int j = 0; j < c.coords.cols(); ++j) content = gcd(content, c.coords(i, j));
  if (content == 0) throw NotInvariant("zero centering");
  Centering out;
  out.coords = IntMatrix(c.coords.rows(), c.coords.cols());
  for (int i = 0; i < c.coords.rows(); ++i)
    for (int j = 0; j < c.coords.cols(); ++j) out.coords(i, j) = c.coords(i, j) / content;
  Int scale = 1;
  for (int i = 0; i < c.coords.rows(); ++i) scale *= content;
  out.index = c.index / scale;
  out.sub_basis = lattice.spec.basis * out.coords.to_rational();
  return out;
}

bool absolutely_irreducible(const InvariantLattice& lattice) {
  if (lattice.action_matrices.empty()) return lattice.rank() == 1;
  std::vector<RatMatrix> mats;
  for (const auto& a : lattice.action_matrices) mats.push_back(a.to_rational());
  return exactla::commutant_dimension(mats) == 1;
}

std::string to_string(ZVerdict v) {
  switch (v) {
    case ZVerdict::isomorphic: return "isomorphic";
    case ZVerdict::distinct: return "distinct";
    case ZVerdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Elementary divisors of (A - 1), zeros included; an invariant of the
// Z-module with one distinguished operator.
std::vector<Int> displacement_divisors(const IntMatrix& a) {
  IntMatrix m = a - IntMatrix::identity(a.rows());
  auto snf = exactla::smith_normal_form(m);
  std::vector<Int> d;
  for (int i = 0; i < snf.s.rows(); ++i) d.push_back(snf.s(i, i));
  return d;
}

IntMatrix action_of_element(const InvariantLattice& lat, int e) {
  std::vector<int> w = lat.group->word(e);
  IntMatrix m = IntMatrix::identity(lat.rank());
  for (int g : w) m = m * lat.action_matrices[size_t(g)];
  return m;
}

std::vector<int> conjugacy_class_reps(const weyl::WeylGroup& w) {
  std::vector<char> seen(size_t(w.size()), 0);
  std::vector<int> reps;
  for (int e = 0; e < w.size(); ++e) {
    if (seen[size_t(e)]) continue;
    reps.push_back(e);
    // Orbit of e under conjugation.
    std::vector<int> frontier{e};
    seen[size_t(e)] = 1;
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int g = 0; g < w.generator_count(); ++g) {
        int y = w.conjugate(w.generator(g), x);
        if (!seen[size_t(y)]) {
          seen[size_t(y)] = 1;
          frontier.push_back(y);
        }
      }
    }
  }
  return reps;
}

}  // namespace

ZEquivalenceResult z_equivalence_small(const InvariantLattice& a, const InvariantLattice& b,
                                       long box) {
  if (a.rank() != b.rank() || a.action_matrices.size() != b.action_matrices.size())
    throw exactla::DimensionMismatch("lattices are not comparable");
  int n = a.rank();
  size_t k = a.action_matrices.size();

  // Invariant screen, generator by generator.
  for (size_t g = 0; g < k; ++g) {
    auto da = displacement_divisors(a.action_matrices[g]);
    auto db = displacement_divisors(b.action_matrices[g]);
    if (da != db)
      return {ZVerdict::distinct, "elementary divisors of (g-1) differ at generator " +
                                      std::to_string(g), std::nullopt};
  }
  // Conjugacy-class screen when both sides carry the same group.
  if (a.group != nullptr && a.group == b.group) {
    for (int rep : conjugacy_class_reps(*a.group)) {
      auto da = displacement_divisors(action_of_element(a, rep));
      auto db = displacement_divisors(action_of_element(b, rep));
      if (da != db)
        return {ZVerdict::distinct, "elementary divisors of (g-1) differ at class of element " +
                                        std::to_string(rep), std::nullopt};
    }
  }

  // Equivariance system: X A_g = B_g X for all generators, X integral.
  // vec(X) with x[i*n + j] = X(i, j).
  RatMatrix sys(int(k) * n * n, n * n);
  for (size_t g = 0; g < k; ++g) {
    const IntMatrix& ag = a.action_matrices[g];
    const IntMatrix& bg = b.action_matrices[g];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int row = int(g) * n * n + i * n + j;
        // (X A)(i,j) = sum_t X(i,t) A(t,j); (B X)(i,j) = sum_t B(i,t) X(t,j).
        for (int t = 0; t < n; ++t) {
          sys(row, i * n + t) += Rat(ag(t, j));
          sys(row, t * n + j) -= Rat(bg(i, t));
        }
      }
  }
  std::vector<IntVector> kernel = exactla::integer_kernel(sys);
  size_t dim = kernel.size();
  if (dim == 0) return {ZVerdict::distinct, "equivariance system has no nonzero solution", std::nullopt};
  double combos = 1;
  for (size_t i = 0; i < dim; ++i) combos *= double(2 * box + 1);
  if (dim > 8 || combos > 5e6)
    return {ZVerdict::unknown, "solution space too large for the box search", std::nullopt};

  std::vector<long> coeff(dim, -box);
  while (true) {
    IntMatrix x(n, n);
    bool zero = true;
    for (size_t i = 0; i < dim; ++i) {
      if (coeff[i] != 0) zero = false;
      for (int p = 0; p < n * n; ++p) x(p / n, p % n) += Int(coeff[i]) * kernel[i][size_t(p)];
    }
    if (!zero) {
      Rat det = exactla::determinant(x.to_rational());
      if (det == 1 || det == -1) {
        bool ok = true;
        for (size_t g = 0; g < k && ok; ++g)
          ok = (x * a.action_matrices[g] == b.action_matrices[g] * x);
        if (ok) return {ZVerdict::isomorphic, "unimodular equivariant map found", x};
      }
    }
    size_t i = 0;
    while (i < dim && ++coeff[i] > box) coeff[i++] = -box;
    if (i == dim) break;
  }
  return {ZVerdict::unknown, "no unimodular map in the search box", std::nullopt};
}

}  // namespace weylcryst::lattices
