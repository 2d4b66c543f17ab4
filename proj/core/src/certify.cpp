#include "resonance/certify.hpp"

#include <cmath>
#include <string>

#include "resonance/error.hpp"
#include "resonance/zeta.hpp"

namespace resonance {

Certificate certify_lower_bound(const ResonatorSet& set, double sigma, double T, Mollifier mollifier,
                                const CertifyOptions& options) {
  Certificate out;
  out.moments = mollifier == Mollifier::Bump ? bump_moments(set, sigma, T, options.moments)
                                             : gaussian_moments(set, sigma, T, MomentTarget::zeta(), options.moments);
  out.certificate = out.moments.certificate;

  ScanOptions scan;
  scan.budget = options.scan_budget;
  scan.seed = options.seed;
  scan.guide = options.guide;
  scan.extra_candidates = {out.moments.peak_t};
  out.witness = scan_max(ScanEvaluator::zeta(sigma, T), out.moments.t_lo, out.moments.t_hi, scan);
  out.witness_ratio = out.witness.value / out.certificate;
  if (sigma >= 0.4) out.oracle_value = std::abs(zeta_oracle(sigma, out.witness.t_star));

  if (!(out.witness.value >= out.certificate * (1.0 - 1e-6))) {
    fail(ErrorKind::ImplementationFault,
         "no witness for certificate " + std::to_string(out.certificate) + ": best |zeta| = " +
             std::to_string(out.witness.value) + " at t = " + std::to_string(out.witness.t_star) +
             " after " + std::to_string(out.witness.evaluations) + " evaluations; quadrature peak " +
             std::to_string(out.moments.peak_abs) + " at t = " + std::to_string(out.moments.peak_t));
  }
  return out;
}

}  // namespace resonance
