#pragma once

#include "core/model.hpp"

namespace vesselmc::test {

// The reference case-study model: P_o ~ N(13, 1) MPa,
// s_y ~ N(235, 10) MPa, s_u ~ N(375, 12) MPa,
// D_o ~ N(1000, 0.5) mm, D_i ~ N(960, 0.5) mm. SI units.
inline VesselModel table2_model() {
  VesselModel m;
  m.operating_pressure = {13e6, 1e6};
  m.yield_strength = {235e6, 10e6};
  m.ultimate_strength = {375e6, 12e6};
  m.outer_diameter = {1.0, 0.5e-3};
  m.inner_diameter = {0.96, 0.5e-3};
  return m;
}

// Same means, every variable deterministic.
inline VesselModel table2_means_only() {
  VesselModel m = table2_model();
  m.operating_pressure.std_dev = 0.0;
  m.yield_strength.std_dev = 0.0;
  m.ultimate_strength.std_dev = 0.0;
  m.outer_diameter.std_dev = 0.0;
  m.inner_diameter.std_dev = 0.0;
  return m;
}

}  // namespace vesselmc::test
