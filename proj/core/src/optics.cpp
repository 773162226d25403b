#include "cebench/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cebench {

ComplexMatrix beam_splitter() {
  ComplexMatrix m(2, 2);
  m << 1.0, 1.0, 1.0, -1.0;
  return m / std::numbers::sqrt2;
}

ComplexMatrix pol_swap() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

namespace {

ComplexMatrix diagonal_phase(double phase, PhaseSign sign) {
  if (!std::isfinite(phase)) throw std::invalid_argument("phase element: phase must be finite");
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = std::polar(1.0, sign_value(sign) * phase);
  return m;
}

}  // namespace

ComplexMatrix pol_phase(double theta, PhaseSign sign) { return diagonal_phase(theta, sign); }

ComplexMatrix path_phase(double phi, PhaseSign sign) { return diagonal_phase(phi, sign); }

ComplexMatrix prism(double /*omega*/) { return identity(kModeDim); }

ComplexMatrix inverse_prism(double omega) { return prism(omega).adjoint(); }

ComplexMatrix polarizer_45() {
  ComplexMatrix m(2, 2);
  m << 1.0, 1.0, 1.0, 1.0;
  return 0.5 * m;
}

ComplexMatrix polarizer_45(Source source) { return embed(polarizer_45(), pol_slot(source)); }

std::string PathLabel::str() const {
  std::string s(1, path == Path::a ? 'a' : 'b');
  if (dispersion) s += "+eps(w" + std::to_string(static_cast<int>(dispersion->source)) + ")";
  return s;
}

PathLabel apply_prism(const PathLabel& label, const FrequencyTag& tag) {
  if (label.dispersion) throw std::logic_error("apply_prism: path is already dispersed");
  return {label.path, tag};
}

PathLabel apply_inverse_prism(const PathLabel& label, const FrequencyTag& tag) {
  if (!label.dispersion || label.dispersion->source != tag.source)
    throw std::logic_error("apply_inverse_prism: path is not dispersed by this frequency");
  return {label.path, std::nullopt};
}

ComplexMatrix element_matrix(const ElementSpec& spec) {
  switch (spec.kind) {
    case ElementKind::BeamSplitter: return beam_splitter();
    case ElementKind::PolSwap: return pol_swap();
    case ElementKind::PolPhase: return pol_phase(spec.phase, spec.sign);
    case ElementKind::PathPhase: return path_phase(spec.phase, spec.sign);
    case ElementKind::Prism: return prism(spec.phase);
    case ElementKind::InversePrism: return inverse_prism(spec.phase);
    case ElementKind::Polarizer45: return polarizer_45();
  }
  throw std::invalid_argument("element_matrix: unknown element kind");
}

const char* to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::BeamSplitter: return "beam-splitter";
    case ElementKind::PolSwap: return "pol-swap";
    case ElementKind::PolPhase: return "pol-phase";
    case ElementKind::PathPhase: return "path-phase";
    case ElementKind::Prism: return "prism";
    case ElementKind::InversePrism: return "inverse-prism";
    case ElementKind::Polarizer45: return "polarizer-45";
  }
  return "unknown";
}

}  // namespace cebench
