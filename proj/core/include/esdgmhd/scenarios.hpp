#ifndef ESDGMHD_SCENARIOS_HPP
#define ESDGMHD_SCENARIOS_HPP

#include <functional>
#include <string>
#include <vector>

#include "esdgmhd/field.hpp"
#include "esdgmhd/mesh.hpp"
#include "esdgmhd/state.hpp"

namespace esdg {

/// One experiment definition: domain, gas parameters, initial data, plus an
/// optional exact reference and analytic volume source.
struct Scenario {
  std::string name;
  DomainBounds bounds;
  GasConfig gas;
  double default_t_final = 0.5;
  std::function<State(double, double)> initializer;
  std::function<State(double, double, double)> reference;  // may be empty
  std::function<Vec9(double, double, double)> source;      // may be empty
};

/// Manufactured smooth solution for the viscous system; the source makes the
/// analytic fields an exact solution.
Scenario mms_scenario();

/// Oblique weak shock tube on the periodic unit square, ideal coefficients.
Scenario shock_tube_scenario();

/// Non-divergence-free Gaussian pulse in B1 on [-1,1]^2.
Scenario gaussian_pulse_scenario();

/// Viscous Orszag-Tang vortex.
Scenario orszag_tang_scenario();

const std::vector<std::string>& scenario_names();
Scenario find_scenario(const std::string& name);  // throws std::invalid_argument

/// Samples the initializer at the mesh nodes.
SolutionField sample_initial_condition(const Scenario& scenario, const CartesianMesh& mesh);

}  // namespace esdg

#endif
