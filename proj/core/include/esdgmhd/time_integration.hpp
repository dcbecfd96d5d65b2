#ifndef ESDGMHD_TIME_INTEGRATION_HPP
#define ESDGMHD_TIME_INTEGRATION_HPP

#include <array>
#include <functional>
#include <limits>

#include "esdgmhd/semidiscrete.hpp"

namespace esdg {

struct TimeControls {
  double cfl = 0.5;   // advective factor, (0, 1]
  double dfl = 0.5;   // viscous factor, (0, 1]
  double t_final = 0.0;
  long max_steps = std::numeric_limits<long>::max();
  double fixed_dt = 0.0;  // > 0 bypasses the CFL/DFL selection
};

// Carpenter-Kennedy low-storage RK(5,4) coefficients
extern const std::array<double, 5> kLsrk4A;
extern const std::array<double, 5> kLsrk4B;
extern const std::array<double, 5> kLsrk4C;

struct DtInfo {
  double dt = 0.0;
  double c_h = 0.0;
};

/// Advective step dt_a = cfl / lambda_a * dx/(2N+1) and viscous step
/// dt_v = dfl / lambda_v * (dx/(2N+1))^2 with the per-node diffusion rate
/// lambda_v = max(4 mu / (3 rho), eta, kappa (gamma-1) / (rho R)); the step is
/// their minimum, clipped to land exactly on t_final. c_h is the largest
/// direction-free material wave speed bound over all nodes (zero with GLM
/// off); the advective speed then includes it. Throws on non-finite speeds.
DtInfo compute_dt(const NodalField& u, const CartesianMesh& mesh, const GasConfig& gas,
                  const TimeControls& controls, bool glm, double t);

using RhsFn = std::function<void(const NodalField&, double, NodalField&)>;

/// One 5-stage 2N-storage step; `du` and `k` are the two storage registers.
void lsrk4_step(NodalField& u, double t, double dt, const RhsFn& rhs_fn, NodalField& du,
                NodalField& k);

struct BlowupReport {
  long step = 0;
  double time = 0.0;
  int element = -1;
  double min_density = 0.0;
  double min_pressure = 0.0;
};

struct RunResult {
  long steps = 0;
  double time = 0.0;
  bool blew_up = false;
  BlowupReport report{};
};

/// Called after every committed step; also once for the initial state with
/// step 0 and dt 0.
using StepCallback = std::function<void(long, double, double, const NodalField&)>;

/// Main loop: dt selection, per-step frozen c_h, the RK step, and the
/// callback; stops at t_final, max_steps, or blow-up (non-finite data or
/// non-positive density/pressure).
RunResult run(SolutionField& field, const CartesianMesh& mesh, const SbpOperators& ops,
              const GasConfig& gas, const SchemeMode& mode, const TimeControls& controls,
              const StepCallback& on_step, const ThreadPool& pool);

}  // namespace esdg

#endif
