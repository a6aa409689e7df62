#pragma once

#include <stdexcept>
#include <string>

namespace ptt {

/// Base class for physics-level failures (CLI maps these to exit code 1).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Jordan chain extension is inconsistent: the requested block size
/// overestimates the true one.
struct ChainBreakError : Error {
  using Error::Error;
};

/// Eq.-level EP2 expression has no real critical gain for these couplings.
struct NegativeRadicandError : Error {
  double radicand;
  explicit NegativeRadicandError(double r)
      : Error("no real EP2 critical gain: radicand = " + std::to_string(r)),
        radicand(r) {}
};

/// Operation requires parameters at an exceptional point.
struct NotAtEpError : Error {
  using Error::Error;
};

/// Wave vector at (or outside) the band edge; leads carry no flux there.
struct BandEdgeError : Error {
  using Error::Error;
};

/// Integrator step too large for the spectral radius of H.
struct StepTooLargeError : Error {
  using Error::Error;
};

/// Polynomial fit refused: a distinct real eigenvalue carries weight.
struct OscillationPresentError : Error {
  using Error::Error;
};

/// Gaussian packet tail does not fit inside the lattice.
struct PacketClippedError : Error {
  using Error::Error;
};

/// Boundary sites picked up probability during a lattice run.
struct BoundaryContaminationError : Error {
  using Error::Error;
};

/// Platform measurement region is empty or out of range.
struct EmptyRegionError : Error {
  using Error::Error;
};

/// Scattering linear system is singular (at or near a spectral singularity).
struct SingularSystemError : Error {
  using Error::Error;
};

/// Emission contrast requested away from a spectral singularity.
struct NotSingularError : Error {
  using Error::Error;
};

}  // namespace ptt
