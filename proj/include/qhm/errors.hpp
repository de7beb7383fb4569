#pragma once

#include <stdexcept>
#include <string>

namespace qhm {

// Base class for every error the engine raises on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The requested point sits on (or numerically indistinguishable from) a
// wavefunction node, where the momentum/velocity fields have a pole.
struct NodeSingularity : Error {
  using Error::Error;
};

// The polynomial root solver did not converge. Signals a numerical defect,
// not a physical configuration.
struct RootFindingFailure : Error {
  using Error::Error;
};

// A trajectory came close enough to a velocity-field pole that the adaptive
// step size collapsed below its floor.
struct NodeApproach : Error {
  using Error::Error;
};

// Trajectory integration was asked to start on an equilibrium point.
struct EquilibriumStart : Error {
  using Error::Error;
};

// The active branch denominator of the transition field vanished.
struct TransitionPole : Error {
  using Error::Error;
};

// A contour operation was handed a trajectory that is not a detected
// closed orbit.
struct NotClosed : Error {
  using Error::Error;
};

// The residue oracle could not validate the field as rational (residues do
// not stabilize under circle-radius halving).
struct UnsupportedField : Error {
  using Error::Error;
};

// Winding-number extraction hit a tie or half-integer turning count.
struct ClassificationError : Error {
  using Error::Error;
};

}  // namespace qhm
