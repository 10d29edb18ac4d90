#pragma once

// Exact integer and rational linear algebra over GMP. No floating point
// anywhere; every result is an exact identity that callers can recheck.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylcryst::exactla {

using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotASublattice : std::domain_error {
  using std::domain_error::domain_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense rational matrix. mpq_class keeps every entry in lowest terms with a
// positive denominator, so value equality is entry equality.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
  }
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& s) const;

  RatMatrix column(int j) const;
  void set_column(int j, const RatVector& v);
  RatVector column_vector(int j) const;

  // Columns [j0, j1) as a new matrix.
  RatMatrix columns(int j0, int j1) const;

  // Horizontal concatenation.
  static RatMatrix hcat(const RatMatrix& a, const RatMatrix& b);
  // Vertical concatenation.
  static RatMatrix vcat(const RatMatrix& a, const RatMatrix& b);

  bool is_integral() const;
  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Dense arbitrary-precision integer matrix.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
  }
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator-(const IntMatrix& o) const;

  RatMatrix to_rational() const;

  void swap_columns(int a, int b);
  // column j += f * column k
  void add_column_multiple(int j, const Int& f, int k);
  void negate_column(int j);
  void swap_rows(int a, int b);
  void add_row_multiple(int i, const Int& f, int k);
  void negate_row(int i);

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Exact conversion; throws DimensionMismatch if any entry has denominator != 1.
IntMatrix to_integer(const RatMatrix& m);

// --- Normal forms -----------------------------------------------------------

// Column-style Hermite normal form: H = M * U with U unimodular.
// Convention: pivot rows strictly increase left to right, each pivot is the
// topmost nonzero entry of its column and positive, entries to the left of a
// pivot within its row are reduced into [0, pivot). Zero columns, if any, are
// trailing. Square full-rank inputs yield a lower-triangular H.
struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
};
HermiteResult hermite_normal_form(const IntMatrix& m);

// Smith normal form: S = U * M * V with U, V unimodular, S diagonal with
// nonnegative d_1 | d_2 | ... | d_r (then zeros).
struct SmithResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};
SmithResult smith_normal_form(const IntMatrix& m);

// --- Linear Diophantine systems ---------------------------------------------

// Solutions of A x = b with x integral: particular + Z-basis of the integer
// kernel. The kernel basis spans all integer solutions of A x = 0.
struct DiophantineSolution {
  IntVector particular;
  std::vector<IntVector> kernel_basis;
};

// Rational coefficients are allowed; rows are cleared to integers internally.
// Returns nullopt when no integral solution exists (not an error).
std::optional<DiophantineSolution> solve_integer_linear(const RatMatrix& a, const RatVector& b);

// Z-basis of the integer kernel of a rational matrix (saturated).
std::vector<IntVector> integer_kernel(const RatMatrix& a);

// --- Rational elimination ----------------------------------------------------

int rank(const RatMatrix& m);
Rat determinant(const RatMatrix& m);
// Columns form a basis of {x : m x = 0}.
RatMatrix nullspace(const RatMatrix& m);
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);

// --- Lattice primitives ------------------------------------------------------

// Index [ambient : sub] for lattices given by generating columns in the same
// ambient coordinates. nullopt means infinite index (rank drop). Throws
// NotASublattice when sub is not contained in the ambient lattice.
std::optional<Int> lattice_index(const RatMatrix& ambient, const RatMatrix& sub);

// Basis (columns) of the intersection of the lattice spanned by `lattice` and the
// subspace spanned by `subspace`, in ambient coordinates, HNF-canonical.
RatMatrix sublattice_in_subspace(const RatMatrix& lattice, const RatMatrix& subspace);

// Dimension over Q of {X : X M_i = M_i X for all i}. Matrices must be square
// of equal size (DimensionMismatch otherwise).
int commutant_dimension(const std::vector<RatMatrix>& mats);

// Canonical lattice basis for a rational generating set: scale to integers,
// HNF, drop zero columns, scale back. Two generating sets span the same
// lattice iff their canonical bases are equal.
RatMatrix lattice_canonical_basis(const RatMatrix& generators);

// Membership of a rational vector in the lattice spanned by basis columns.
bool in_lattice(const RatMatrix& basis, const RatVector& v);

// GMP's two-argument rational constructor does not reduce to lowest terms, so
// values built that way by callers break entry-wise equality. Library entry
// points normalize their inputs once with these.
RatVector canonicalized(const RatVector& v);
RatMatrix canonicalized(const RatMatrix& m);

// --- Text serialization -------------------------------------------------------

// Line-oriented format: "rows cols" header, then row-major entries separated
// by single spaces. RatMatrix entries are always written "num/den" (canonical
// lowest terms, positive den); IntMatrix entries are written as plain
// integers. Readers accept both spellings.
std::string write_matrix(const RatMatrix& m);
std::string write_matrix(const IntMatrix& m);
RatMatrix read_rational_matrix(const std::string& text);
IntMatrix read_integer_matrix(const std::string& text);

// Canonical "num/den" spelling used across serialization.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace weylcryst::exactla
