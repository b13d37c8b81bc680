#pragma once

#include <optional>

#include "fluxlim/core.hpp"

namespace fluxlim {

enum class SampleKind {
    Constant,         // constant state outside all waves
    Fan,              // inside a centred rarefaction
    Vacuum,           // inside a vacuum fan: (0, xi)
    ConstantDensity,  // inside a constant-density fan: (2 eps1, xi)
    Boundary,         // exactly on a shock or contact; state is the right limit
    Delta,            // on a delta-shock support line; state is the right limit
};

const char* to_string(SampleKind kind);

struct ProfileSample {
    State state;
    SampleKind kind = SampleKind::Constant;
    std::optional<DeltaShock> delta;
};

/// State inside a rarefaction fan at xi, found by bracketed root finding along the wave
/// curve in tau = sqrt(rho - 2 eps1). xi is clamped to the fan edges.
State rarefaction_state(const Rarefaction& fan, const FluxParams& params, double xi);

/// Self-similar solution value at xi = x / t.
ProfileSample sample_profile(const RiemannSolution& sol, double xi);

}  // namespace fluxlim
