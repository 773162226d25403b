#include "cebench/tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cebench {

ComplexVector mode_ket(int which) {
  if (which != 0 && which != 1) throw std::invalid_argument("mode_ket: index must be 0 or 1");
  ComplexVector v = ComplexVector::Zero(kModeDim);
  v(which) = 1.0;
  return v;
}

ComplexVector basis_vector(Path path1, Pol pol1, Path path2, Pol pol2) {
  ComplexVector v = ComplexVector::Zero(kBenchDim);
  v(basis_index(path1, pol1, path2, pol2)) = 1.0;
  return v;
}

ComplexVector source_basis_vector(Path path, Pol pol) {
  ComplexVector v = ComplexVector::Zero(kSourceDim);
  v(source_index(path, pol)) = 1.0;
  return v;
}

std::string basis_label(int index) {
  if (index < 0 || index >= kBenchDim) throw std::out_of_range("basis_label: index outside [0, 16)");
  std::string s;
  s += (index & 8) ? 'b' : 'a';
  s += (index & 4) ? 'H' : 'V';
  s += (index & 2) ? 'b' : 'a';
  s += (index & 1) ? 'H' : 'V';
  return s;
}

ComplexMatrix identity(int n) {
  if (n <= 0) throw std::invalid_argument("identity: dimension must be positive");
  return ComplexMatrix::Identity(n, n);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, Slot slot) {
  if (op.rows() != kModeDim || op.cols() != kModeDim)
    throw std::invalid_argument("embed: operator must be 2x2");
  const int k = static_cast<int>(slot);
  if (k < 0 || k > 3) throw std::invalid_argument("embed: slot must be in 0..3");

  const ComplexMatrix id = identity(kModeDim);
  ComplexMatrix out = (k == 0) ? op : id;
  for (int f = 1; f < 4; ++f) out = kron(out, f == k ? op : id);
  return out;
}

ComplexMatrix embed_source(const ComplexMatrix& op, Source source) {
  if (op.rows() != kSourceDim || op.cols() != kSourceDim)
    throw std::invalid_argument("embed_source: operator must be 4x4");
  const ComplexMatrix id = identity(kSourceDim);
  return source == Source::S1 ? kron(op, id) : kron(id, op);
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_unitary: matrix must be square");
  const ComplexMatrix gram = m.adjoint() * m;
  return max_abs_diff(gram, identity(static_cast<int>(m.rows()))) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_hermitian: matrix must be square");
  return max_abs_diff(m, m.adjoint()) <= tol;
}

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

ComplexVector make_pol_state(const PolState& p) {
  const ComplexScalar global = std::polar(1.0, p.phi_global);
  ComplexVector v(kModeDim);
  v(0) = global * std::cos(p.theta);
  v(1) = global * std::polar(1.0, p.chi) * std::sin(p.theta);
  return v;
}

JonesVector::JonesVector(const PolState& p, double intensity) {
  if (intensity < 0.0) throw std::invalid_argument("JonesVector: intensity must be non-negative");
  const ComplexVector u = make_pol_state(p) * std::sqrt(intensity);
  ex_ = u(0);
  ey_ = u(1);
}

JonesVector JonesVector::normalized() const {
  const double i0 = intensity();
  if (i0 <= 0.0) throw std::domain_error("JonesVector: cannot normalize a zero field");
  const double s = 1.0 / std::sqrt(i0);
  return {ex_ * s, ey_ * s};
}

ComplexVector JonesVector::as_vector() const {
  ComplexVector v(kModeDim);
  v << ex_, ey_;
  return v;
}

}  // namespace cebench
