// Exact scalar types and the small amount of dense linear algebra the
// library needs: fraction-free determinant and rank, rational solving,
// and separating functionals for non-solvable systems.
//
// Everything is templated on the scalar so the same routines serve the
// integer lattice code (Integer) and the Cech complexes (Rational).

#ifndef TORICDEF_NUMERIC_HPP
#define TORICDEF_NUMERIC_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace toricdef {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Element of N (column vector).
using LatticeVector = Vector<Integer>;
/// Element of the dual lattice M (row vector), so that `u * v` is the pairing.
using Weight = RowVector<Integer>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Error codes shared by every module.
enum class ErrorCode {
  NonPrimitiveRay,
  NotSmooth,
  NotComplete,
  NotAFan,
  NotDim2,
  NotPrimitive,
  DimensionLimit,
  NotACocycle,
  BoxRequired,
  NotAdmissible,
  NontrivialTail,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// ---------------------------------------------------------------------------
// Construction helpers

LatticeVector lattice_vector(std::initializer_list<long> coords);
Weight weight(std::initializer_list<long> coords);
LatticeVector lattice_vector(const std::vector<long>& coords);
Weight weight(const std::vector<long>& coords);

std::vector<long> to_longs(const LatticeVector& v);
std::vector<long> to_longs(const Weight& u);

inline Integer pairing(const LatticeVector& v, const Weight& u) {
  Integer s = 0;
  for (Eigen::Index k = 0; k < v.size(); ++k) s += v(k) * u(k);
  return s;
}

/// Lexicographic order on any Eigen vector, for use as map/set comparator.
struct LexLess {
  template <typename A, typename B>
  bool operator()(const A& a, const B& b) const {
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index k = 0; k < n; ++k) {
      if (a(k) < b(k)) return true;
      if (b(k) < a(k)) return false;
    }
    return a.size() < b.size();
  }
};

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Integer arithmetic

/// Returns (g, s, t) with g = s*a + t*b = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b);

Integer content(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);
bool is_primitive(const Weight& u);

/// Scales a nonzero rational vector to the primitive lattice vector on its ray.
LatticeVector primitive_on_ray(const RatVector& v);

/// Floor and ceiling of a rational.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

/// "p" or "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

template <typename Derived>
Eigen::Matrix<Rational, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime> to_rational(
    const Eigen::MatrixBase<Derived>& m) {
  Eigen::Matrix<Rational, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime> out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

/// Bareiss determinant. Exact for any integral-domain scalar.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank via fraction-free row reduction.
template <typename Scalar>
std::size_t rank(Matrix<Scalar> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index r = 0;
  Scalar prev = 1;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(r).swap(a.row(p));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return static_cast<std::size_t>(r);
}

/// Solves a x = b over the rationals; empty if inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// A row vector phi with phi * a = 0 and phi * b != 0, if b is not in the
/// column space of a.
std::optional<RatVector> separating_functional(const RatMatrix& a, const RatVector& b);

/// Inverse of a unimodular integer matrix; throws if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace toricdef

#endif  // TORICDEF_NUMERIC_HPP
