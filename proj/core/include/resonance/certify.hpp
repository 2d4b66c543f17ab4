#pragma once

#include <optional>

#include "resonance/moments.hpp"
#include "resonance/scan.hpp"

namespace resonance {

struct CertifyOptions {
  MomentOptions moments;
  std::uint64_t scan_budget = 4096;
  std::uint64_t seed = 0;
  const ResonatorSet* guide = nullptr;
};

struct Certificate {
  MomentReport moments;
  ScanResult witness;
  double certificate = 0.0;
  double witness_ratio = 0.0;             // witness.value / certificate
  std::optional<double> oracle_value;     // |zeta_oracle| at t*, when sigma >= 0.4
};

/// certificate = |M2| / M1 for the chosen mollifier, then a scan of [T/2, T]
/// (bump) or [sqrt T, T] (Gaussian) for t* with |zeta(sigma + it*)| at least
/// certificate (1 - 1e-6). A missing witness throws ImplementationFault.
Certificate certify_lower_bound(const ResonatorSet& set, double sigma, double T, Mollifier mollifier,
                                const CertifyOptions& options = {});

}  // namespace resonance
