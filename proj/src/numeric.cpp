#include "toricdef/numeric.hpp"

#include <sstream>

namespace toricdef {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimitiveRay: return "NON_PRIMITIVE_RAY";
    case ErrorCode::NotSmooth: return "NOT_SMOOTH";
    case ErrorCode::NotComplete: return "NOT_COMPLETE";
    case ErrorCode::NotAFan: return "NOT_A_FAN";
    case ErrorCode::NotDim2: return "NOT_DIM_2";
    case ErrorCode::NotPrimitive: return "NOT_PRIMITIVE";
    case ErrorCode::DimensionLimit: return "DIMENSION_LIMIT";
    case ErrorCode::NotACocycle: return "NOT_A_COCYCLE";
    case ErrorCode::BoxRequired: return "BOX_REQUIRED";
    case ErrorCode::NotAdmissible: return "NOT_ADMISSIBLE";
    case ErrorCode::NontrivialTail: return "NONTRIVIAL_TAIL";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

LatticeVector lattice_vector(std::initializer_list<long> coords) {
  return lattice_vector(std::vector<long>(coords));
}

Weight weight(std::initializer_list<long> coords) { return weight(std::vector<long>(coords)); }

LatticeVector lattice_vector(const std::vector<long>& coords) {
  LatticeVector v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t k = 0; k < coords.size(); ++k) v(static_cast<Eigen::Index>(k)) = coords[k];
  return v;
}

Weight weight(const std::vector<long>& coords) {
  Weight u(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t k = 0; k < coords.size(); ++k) u(static_cast<Eigen::Index>(k)) = coords[k];
  return u;
}

std::vector<long> to_longs(const LatticeVector& v) {
  std::vector<long> out;
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k).convert_to<long>());
  return out;
}

std::vector<long> to_longs(const Weight& u) {
  std::vector<long> out;
  for (Eigen::Index k = 0; k < u.size(); ++k) out.push_back(u(k).convert_to<long>());
  return out;
}

std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (Eigen::Index k = 0; k < v.size(); ++k) g = boost::multiprecision::gcd(g, abs(v(k)));
  return g;
}

bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

bool is_primitive(const Weight& u) {
  LatticeVector v = u.transpose();
  return content(v) == 1;
}

LatticeVector primitive_on_ray(const RatVector& v) {
  Integer den = 1;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    den = boost::multiprecision::lcm(den, Integer(denominator(v(k))));
  }
  LatticeVector out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    Rational scaled = v(k) * Rational(den);
    out(k) = numerator(scaled);
  }
  const Integer g = content(out);
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "zero vector has no primitive generator");
  for (Eigen::Index k = 0; k < out.size(); ++k) out(k) /= g;
  return out;
}

Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

Integer ceil(const Rational& q) { return -floor(-q); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer num(s.substr(0, slash));
  Integer den(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + s + "'");
  return Rational(num, den);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> rref(RatMatrix& m, Eigen::Index pivot_cols) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < pivot_cols && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(r).swap(m.row(p));
    const Rational inv = Rational(1) / m(r, c);
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw Error(ErrorCode::InvalidArgument, "solve: shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto pivots = rref(aug, a.cols());
  for (Eigen::Index i = static_cast<Eigen::Index>(pivots.size()); i < aug.rows(); ++i) {
    if (aug(i, a.cols()) != 0) return std::nullopt;
  }
  RatVector x = RatVector::Zero(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    x(pivots[k]) = aug(static_cast<Eigen::Index>(k), a.cols());
  }
  return x;
}

std::optional<RatVector> separating_functional(const RatMatrix& a, const RatVector& b) {
  // Row-reduce [a | I]; rows whose left block vanishes span the left kernel.
  RatMatrix aug = RatMatrix::Zero(a.rows(), a.cols() + a.rows());
  aug.leftCols(a.cols()) = a;
  for (Eigen::Index i = 0; i < a.rows(); ++i) aug(i, a.cols() + i) = 1;
  const auto pivots = rref(aug, a.cols());
  for (Eigen::Index i = static_cast<Eigen::Index>(pivots.size()); i < aug.rows(); ++i) {
    RatVector phi = aug.row(i).tail(a.rows()).transpose();
    Rational value = 0;
    for (Eigen::Index k = 0; k < phi.size(); ++k) value += phi(k) * b(k);
    if (value != 0) return phi;
  }
  return std::nullopt;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Integer det = determinant<Integer>(m);
  if (abs(det) != 1) throw Error(ErrorCode::NotSmooth, "matrix is not unimodular");
  const Eigen::Index n = m.rows();
  RatMatrix aug = RatMatrix::Zero(n, 2 * n);
  aug.leftCols(n) = to_rational(m);
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = 1;
  rref(aug, n);
  IntMatrix inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = numerator(aug(i, n + j));
  return inv;
}

}  // namespace toricdef
