#pragma once

#include <cstdint>

#include "fano10/report.hpp"

namespace fano10::driver {

ScenarioReport scenario_schubert_table();
ScenarioReport scenario_rank_certificates();
ScenarioReport scenario_conic_of_centers();
ScenarioReport scenario_dual_conic();
ScenarioReport scenario_sigma_planes(std::uint64_t seed, int samples);
ScenarioReport scenario_aut_w_preserves_p7(std::uint64_t seed, int samples);
ScenarioReport scenario_aut_w_closure(std::uint64_t seed, int samples);
ScenarioReport scenario_orbit_stratification(std::uint64_t seed, int samples);

}  // namespace fano10::driver
