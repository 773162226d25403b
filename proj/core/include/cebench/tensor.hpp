#pragma once

// Dense complex arithmetic on the 16-dimensional two-source bench space.
//
// The bench space is {a,b} x {V,H} x {a,b} x {V,H}: source-1 path, source-1
// polarization, source-2 path, source-2 polarization. The flat index of a
// basis ket is 8*path1 + 4*pol1 + 2*path2 + pol2 with a = V = 0, b = H = 1.
// Every module and every stored golden value uses this ordering.

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace cebench {

using ComplexScalar = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Absolute tolerance for all comparisons unless an operation says otherwise.
inline constexpr double kTolerance = 1e-12;

inline constexpr int kModeDim = 2;
inline constexpr int kSourceDim = 4;
inline constexpr int kBenchDim = 16;

enum class Path : int { a = 0, b = 1 };
enum class Pol : int { V = 0, H = 1 };
enum class Source : int { S1 = 1, S2 = 2 };

/// One of the four tensor factors, in canonical order.
enum class Slot : int { Path1 = 0, Pol1 = 1, Path2 = 2, Pol2 = 3 };

constexpr Slot path_slot(Source s) { return s == Source::S1 ? Slot::Path1 : Slot::Path2; }
constexpr Slot pol_slot(Source s) { return s == Source::S1 ? Slot::Pol1 : Slot::Pol2; }

constexpr int basis_index(Path path1, Pol pol1, Path path2, Pol pol2) {
  return 8 * static_cast<int>(path1) + 4 * static_cast<int>(pol1) +
         2 * static_cast<int>(path2) + static_cast<int>(pol2);
}

/// Index of |path)|pol) inside a single source's 4-dimensional space.
constexpr int source_index(Path path, Pol pol) {
  return 2 * static_cast<int>(path) + static_cast<int>(pol);
}

ComplexVector basis_vector(Path path1, Pol pol1, Path path2, Pol pol2);
ComplexVector source_basis_vector(Path path, Pol pol);

/// Mode ket |a), |b), |V) or |H) as a 2-vector.
ComplexVector mode_ket(int which);
inline ComplexVector ket(Path p) { return mode_ket(static_cast<int>(p)); }
inline ComplexVector ket(Pol p) { return mode_ket(static_cast<int>(p)); }

/// Label such as "aVbH" for a flat bench index in [0, 16).
std::string basis_label(int index);

ComplexMatrix identity(int n);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Lift a 2x2 operator to the bench space, acting on `slot` only.
/// Throws std::invalid_argument for a non-2x2 operator.
ComplexMatrix embed(const ComplexMatrix& op, Slot slot);

/// Lift a 4x4 operator on one source's (path, pol) pair to the bench space.
ComplexMatrix embed_source(const ComplexMatrix& op, Source source);

/// Largest entrywise modulus of a - b. Shapes must agree.
template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// True iff max |m^dagger m - I| <= tol. Throws for a non-square matrix.
bool is_unitary(const ComplexMatrix& m, double tol = kTolerance);
bool is_hermitian(const ComplexMatrix& m, double tol = kTolerance);
bool all_finite(const ComplexMatrix& m);

/// Polarization ket e^{i phi_global} (cos theta, e^{i chi} sin theta).
struct PolState {
  double theta = 0.0;
  double chi = 0.0;
  double phi_global = 0.0;
};

ComplexVector make_pol_state(const PolState& p);

/// Transverse field amplitudes (Ex, Ey) in arbitrary field units.
class JonesVector {
 public:
  JonesVector() = default;
  JonesVector(ComplexScalar ex, ComplexScalar ey) : ex_(ex), ey_(ey) {}
  explicit JonesVector(const PolState& p, double intensity = 1.0);

  ComplexScalar ex() const { return ex_; }
  ComplexScalar ey() const { return ey_; }

  double intensity() const { return std::norm(ex_) + std::norm(ey_); }

  /// Unit-intensity copy. Throws std::domain_error for a zero field.
  JonesVector normalized() const;

  ComplexVector as_vector() const;

 private:
  ComplexScalar ex_{0.0, 0.0};
  ComplexScalar ey_{0.0, 0.0};
};

}  // namespace cebench
