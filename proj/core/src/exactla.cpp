#include "weylcryst/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace weylcryst::exactla {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  RatMatrix r(rows_, o.cols_);
  Rat acc;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      acc = 0;
      for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * o(k, j);
      r(i, j) = acc;
    }
  return r;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (cols_ != int(v.size())) throw DimensionMismatch("matrix-vector shape");
  RatVector r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat acc = 0;
    for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * v[k];
    r[i] = acc;
  }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

RatMatrix RatMatrix::column(int j) const {
  RatMatrix c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

void RatMatrix::set_column(int j, const RatVector& v) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

RatVector RatMatrix::column_vector(int j) const {
  RatVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::columns(int j0, int j1) const {
  RatMatrix r(rows_, j1 - j0);
  for (int i = 0; i < rows_; ++i)
    for (int j = j0; j < j1; ++j) r(i, j - j0) = (*this)(i, j);
  return r;
}

RatMatrix RatMatrix::hcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hcat row mismatch");
  RatMatrix r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

RatMatrix RatMatrix::vcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vcat column mismatch");
  RatMatrix r(a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
  }
  return r;
}

bool RatMatrix::is_integral() const {
  for (const Rat& q : a_)
    if (q.get_den() != 1) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const Rat& q : a_)
    if (q != 0) return false;
  return true;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  IntMatrix r(rows_, o.cols_);
  Int acc;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      acc = 0;
      for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * o(k, j);
      r(i, j) = acc;
    }
  return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != int(v.size())) throw DimensionMismatch("matrix-vector shape");
  IntVector r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * v[k];
    r[i] = acc;
  }
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = Rat((*this)(i, j));
  return r;
}

void IntMatrix::swap_columns(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_column_multiple(int j, const Int& f, int k) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) += f * (*this)(i, k);
}

void IntMatrix::negate_column(int j) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::add_row_multiple(int i, const Int& f, int k) {
  for (int j = 0; j < cols_; ++j) (*this)(i, j) += f * (*this)(k, j);
}

void IntMatrix::negate_row(int i) {
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& q = m(i, j);
      if (q.get_den() != 1) throw DimensionMismatch("matrix entry is not an integer");
      r(i, j) = q.get_num();
    }
  return r;
}

// --- Hermite normal form ------------------------------------------------------

HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  const int rows = m.rows(), cols = m.cols();
  int c = 0;  // next pivot column
  for (int i = 0; i < rows && c < cols; ++i) {
    // Clear row i to a single nonzero at column c via gcd reduction.
    for (;;) {
      int best = -1;
      for (int j = c; j < cols; ++j)
        if (h(i, j) != 0 && (best == -1 || cmp(abs(h(i, j)), abs(h(i, best))) < 0)) best = j;
      if (best == -1) break;  // row i is zero on [c, cols): no pivot here
      if (best != c) {
        h.swap_columns(c, best);
        u.swap_columns(c, best);
      }
      bool cleared = true;
      for (int j = c + 1; j < cols; ++j) {
        if (h(i, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, c).get_mpz_t());
        h.add_column_multiple(j, -q, c);
        u.add_column_multiple(j, -q, c);
        if (h(i, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(i, c) == 0) continue;
    if (h(i, c) < 0) {
      h.negate_column(c);
      u.negate_column(c);
    }
    // Reduce entries left of the pivot into [0, pivot).
    for (int j = 0; j < c; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, c).get_mpz_t());
      if (q != 0) {
        h.add_column_multiple(j, -q, c);
        u.add_column_multiple(j, -q, c);
      }
    }
    ++c;
  }
  return {h, u};
}

// --- Smith normal form --------------------------------------------------------

namespace {

// Position of an entry with minimal nonzero absolute value in m restricted to
// indices >= t, or (-1,-1) when that block is zero.
std::pair<int, int> min_nonzero(const IntMatrix& m, int t) {
  std::pair<int, int> best{-1, -1};
  for (int i = t; i < m.rows(); ++i)
    for (int j = t; j < m.cols(); ++j)
      if (m(i, j) != 0 &&
          (best.first == -1 || cmp(abs(m(i, j)), abs(m(best.first, best.second))) < 0))
        best = {i, j};
  return best;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const int n = std::min(m.rows(), m.cols());
  for (int t = 0; t < n; ++t) {
    for (;;) {
      auto [pi, pj] = min_nonzero(s, t);
      if (pi == -1) break;
      s.swap_rows(t, pi), u.swap_rows(t, pi);
      s.swap_columns(t, pj), v.swap_columns(t, pj);
      bool dirty = false;
      for (int i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / s(t, t);
        s.add_row_multiple(i, -q, t);
        u.add_row_multiple(i, -q, t);
        if (s(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / s(t, t);
        s.add_column_multiple(j, -q, t);
        v.add_column_multiple(j, -q, t);
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Pivot divides its row and column; enforce divisibility into the rest.
      bool fixed = true;
      for (int i = t + 1; i < s.rows() && fixed; ++i)
        for (int j = t + 1; j < s.cols() && fixed; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, 1, i);
            u.add_row_multiple(t, 1, i);
            fixed = false;
          }
      if (fixed) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {s, u, v};
}

// --- Diophantine systems --------------------------------------------------------

namespace {

// Clear denominators row by row; returns integer matrix [A | b].
void clear_denominators(const RatMatrix& a, const RatVector& b, IntMatrix& ai, IntVector& bi) {
  ai = IntMatrix(a.rows(), a.cols());
  bi = IntVector(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Int l = 1;
    for (int j = 0; j < a.cols(); ++j) l = lcm(l, a(i, j).get_den());
    l = lcm(l, b[i].get_den());
    for (int j = 0; j < a.cols(); ++j) {
      Rat scaled = a(i, j) * Rat(l);
      ai(i, j) = scaled.get_num();
    }
    Rat sb = b[i] * Rat(l);
    bi[i] = sb.get_num();
  }
}

}  // namespace

std::optional<DiophantineSolution> solve_integer_linear(const RatMatrix& a, const RatVector& b) {
  if (int(b.size()) != a.rows()) throw DimensionMismatch("rhs length");
  IntMatrix ai;
  IntVector bi;
  clear_denominators(a, b, ai, bi);
  SmithResult sm = smith_normal_form(ai);
  const int rows = ai.rows(), cols = ai.cols();
  IntVector c = sm.u * bi;
  int r = 0;
  while (r < std::min(rows, cols) && sm.s(r, r) != 0) ++r;
  IntVector y(cols, Int(0));
  for (int i = 0; i < rows; ++i) {
    if (i < r) {
      if (c[i] % sm.s(i, i) != 0) return std::nullopt;
      y[i] = c[i] / sm.s(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  DiophantineSolution out;
  out.particular = sm.v * y;
  out.kernel_basis.reserve(cols - r);
  for (int j = r; j < cols; ++j) {
    IntVector k(cols);
    for (int i = 0; i < cols; ++i) k[i] = sm.v(i, j);
    out.kernel_basis.push_back(std::move(k));
  }
  return out;
}

std::vector<IntVector> integer_kernel(const RatMatrix& a) {
  RatVector zero(a.rows(), Rat(0));
  auto sol = solve_integer_linear(a, zero);
  return sol->kernel_basis;  // homogeneous systems are always solvable
}

// --- Rational elimination --------------------------------------------------------

namespace {

// Row echelon reduction in place; returns pivot columns. When `track` is
// non-null it receives the same row operations (used for solving).
std::vector<int> echelon(RatMatrix& m, RatMatrix* track = nullptr) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p == -1) continue;
    if (p != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
      if (track)
        for (int j = 0; j < track->cols(); ++j) std::swap((*track)(p, j), (*track)(row, j));
    }
    Rat inv = 1 / m(row, col);
    for (int j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    if (track)
      for (int j = 0; j < track->cols(); ++j) (*track)(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
      if (track)
        for (int j = 0; j < track->cols(); ++j) (*track)(i, j) -= f * (*track)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const RatMatrix& m) {
  RatMatrix w = m;
  return int(echelon(w).size());
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  RatMatrix w = m;
  Rat det = 1;
  int n = m.rows();
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (w(i, col) != 0) {
        p = i;
        break;
      }
    if (p == -1) return Rat(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(w(p, j), w(col, j));
      det = -det;
    }
    det *= w(col, col);
    Rat inv = 1 / w(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (w(i, col) == 0) continue;
      Rat f = w(i, col) * inv;
      for (int j = col; j < n; ++j) w(i, j) -= f * w(col, j);
    }
  }
  return det;
}

RatMatrix nullspace(const RatMatrix& m) {
  RatMatrix w = m;
  std::vector<int> pivots = echelon(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  RatMatrix basis(m.cols(), int(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis(f, int(k)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], int(k)) = -w(int(r), f);
  }
  return basis;
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
  if (int(b.size()) != a.rows()) throw DimensionMismatch("rhs length");
  RatMatrix w = a;
  RatMatrix rhs(a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) rhs(i, 0) = b[i];
  std::vector<int> pivots = echelon(w, &rhs);
  RatVector x(a.cols(), Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs(int(r), 0);
  // Consistency: rows beyond the pivot count must have zero rhs.
  for (int i = int(pivots.size()); i < a.rows(); ++i)
    if (rhs(i, 0) != 0) return std::nullopt;
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  RatMatrix w = m;
  RatMatrix id = RatMatrix::identity(m.rows());
  std::vector<int> pivots = echelon(w, &id);
  if (int(pivots.size()) != m.rows()) return std::nullopt;
  return id;
}

// --- Lattice primitives -----------------------------------------------------------

std::optional<Int> lattice_index(const RatMatrix& ambient, const RatMatrix& sub) {
  if (ambient.rows() != sub.rows()) throw DimensionMismatch("ambient coordinate mismatch");
  if (rank(ambient) != ambient.cols()) throw NotASublattice("ambient columns are dependent");
  // Coordinates of sub generators in the ambient basis.
  RatMatrix coords(ambient.cols(), sub.cols());
  for (int j = 0; j < sub.cols(); ++j) {
    auto x = solve_rational(ambient, sub.column_vector(j));
    if (!x) throw NotASublattice("generator outside the ambient span");
    for (int i = 0; i < ambient.cols(); ++i) coords(i, j) = (*x)[i];
  }
  if (!coords.is_integral()) throw NotASublattice("generator outside the ambient lattice");
  HermiteResult hr = hermite_normal_form(to_integer(coords));
  Int idx = 1;
  int r = 0;
  for (int j = 0; j < hr.h.cols(); ++j) {
    int piv = -1;
    for (int i = 0; i < hr.h.rows(); ++i)
      if (hr.h(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv == -1) break;
    idx *= hr.h(piv, j);
    ++r;
  }
  if (r < ambient.cols()) return std::nullopt;
  return idx;
}

RatMatrix lattice_canonical_basis(const RatMatrix& generators) {
  Int scale = 1;
  for (int i = 0; i < generators.rows(); ++i)
    for (int j = 0; j < generators.cols(); ++j) scale = lcm(scale, generators(i, j).get_den());
  RatMatrix scaled = generators * Rat(scale);
  HermiteResult hr = hermite_normal_form(to_integer(scaled));
  int nonzero = 0;
  for (int j = 0; j < hr.h.cols(); ++j) {
    bool z = true;
    for (int i = 0; i < hr.h.rows(); ++i)
      if (hr.h(i, j) != 0) z = false;
    if (!z) nonzero = j + 1;
  }
  RatMatrix basis(generators.rows(), nonzero);
  for (int i = 0; i < generators.rows(); ++i)
    for (int j = 0; j < nonzero; ++j) basis(i, j) = Rat(hr.h(i, j)) / Rat(scale);
  return basis;
}

bool in_lattice(const RatMatrix& basis, const RatVector& v) {
  auto x = solve_rational(basis, v);
  if (!x) return false;
  for (const Rat& q : *x)
    if (q.get_den() != 1) return false;
  // With dependent generating sets a rational solution may hide an integral
  // one; callers pass bases, where the solution is unique.
  return true;
}

RatVector canonicalized(const RatVector& v) {
  RatVector out = v;
  for (Rat& q : out) q.canonicalize();
  return out;
}

RatMatrix canonicalized(const RatMatrix& m) {
  RatMatrix out = m;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j).canonicalize();
  return out;
}

RatMatrix sublattice_in_subspace(const RatMatrix& lattice, const RatMatrix& subspace) {
  if (lattice.rows() != subspace.rows()) throw DimensionMismatch("ambient coordinate mismatch");
  // Rows annihilating the subspace: x lies in span(subspace) iff ann * x = 0.
  RatMatrix ann = nullspace(subspace.transpose()).transpose();
  RatMatrix constraint = ann * lattice;
  std::vector<IntVector> kernel = integer_kernel(constraint);
  RatMatrix gens(lattice.rows(), int(kernel.size()));
  for (size_t k = 0; k < kernel.size(); ++k) {
    RatVector col(lattice.rows(), Rat(0));
    for (int j = 0; j < lattice.cols(); ++j)
      for (int i = 0; i < lattice.rows(); ++i) col[i] += lattice(i, j) * Rat(kernel[k][j]);
    gens.set_column(int(k), col);
  }
  return lattice_canonical_basis(gens);
}

int commutant_dimension(const std::vector<RatMatrix>& mats) {
  if (mats.empty()) throw DimensionMismatch("empty matrix list");
  const int n = mats[0].rows();
  for (const RatMatrix& m : mats)
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("commutant needs equal square matrices");
  // X M = M X, unknowns vec(X) column-major: (M^T (x) I - I (x) M) vec X = 0.
  RatMatrix sys(int(mats.size()) * n * n, n * n);
  int row0 = 0;
  for (const RatMatrix& m : mats) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int row = row0 + b * n + a;  // equation for entry (a, b) of XM - MX
        // (X M)(a,b) = sum_k X(a,k) M(k,b);  (M X)(a,b) = sum_k M(a,k) X(k,b)
        for (int k = 0; k < n; ++k) {
          sys(row, k * n + a) += m(k, b);   // X(a,k) has vec index k*n+a
          sys(row, b * n + k) -= m(a, k);   // X(k,b) has vec index b*n+k
        }
      }
    row0 += n * n;
  }
  return n * n - rank(sys);
}

// --- Serialization ------------------------------------------------------------------

std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  try {
    Rat q;
    if (s.find('/') == std::string::npos)
      q = Rat(Int(s));
    else
      q = Rat(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational: " + s);
  }
}

std::string write_matrix(const RatMatrix& m) {
  std::ostringstream os;
  os << m.rows() << " " << m.cols() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << rat_to_string(m(i, j));
    }
    os << "\n";
  }
  return os.str();
}

std::string write_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << " " << m.cols() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m(i, j).get_str();
    }
    os << "\n";
  }
  return os.str();
}

RatMatrix read_rational_matrix(const std::string& text) {
  std::istringstream is(text);
  int rows, cols;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0) throw ParseError("bad matrix header");
  RatMatrix m(rows, cols);
  std::string tok;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (!(is >> tok)) throw ParseError("matrix body too short");
      m(i, j) = rat_from_string(tok);
    }
  return m;
}

IntMatrix read_integer_matrix(const std::string& text) {
  RatMatrix m = read_rational_matrix(text);
  if (!m.is_integral()) throw ParseError("integer matrix has fractional entry");
  return to_integer(m);
}

}  // namespace weylcryst::exactla
