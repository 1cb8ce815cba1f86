#ifndef BECS_CPN_SCENARIO_IO_HPP
#define BECS_CPN_SCENARIO_IO_HPP

#include <string>

#include "becs/cpn/types.hpp"

namespace becs::cpn {

/// Parameters for the seeded scenario generator: device populations per
/// layer, capacity/price/power ranges, Rayleigh-faded channel gains scaled
/// by a fixed antenna gain, and task streams sourced at random user devices.
struct GeneratorSpec {
    std::uint64_t seed = 1;
    std::size_t user_devices = 300;
    std::size_t edge_devices = 200;
    std::size_t cloud_devices = 100;
    double user_capacity_ghz[2] = {0.6, 10.0};
    double edge_capacity_ghz[2] = {10.0, 1000.0};
    double cloud_capacity_ghz[2] = {1000.0, 2000.0};
    double price[3] = {0.1, 1.0, 2.0};
    double kappa = 1e-29;
    double tx_power_dbm[2] = {20.0, 30.0};
    double antenna_gain_dbi = 2.15;
    double energy_margin = 2.0;  // max_energy = margin * worst-case task energy
    std::size_t task_count = 12;
    double data_kb[2] = {500.0, 3000.0};
    double cycles_per_byte = 1000.0;
    double deadline_s[2] = {1.0, 5.0};
    double arrival_rate = 100.0;
};

Scenario generate_scenario(const GeneratorSpec& spec, const ChannelParams& channel,
                           const Economics& economics);

/// Loads a scenario from JSON. The file either lists devices[] and tasks[]
/// explicitly or carries a "generator" section that is expanded with its
/// embedded seed. "service.alpha" may be "auto" (1 / mean task cycles) or
/// per-layer numbers.
Scenario load_scenario(const std::string& path);
Scenario scenario_from_json_text(const std::string& text);

std::string scenario_to_json(const Scenario& scenario);

}  // namespace becs::cpn

#endif  // BECS_CPN_SCENARIO_IO_HPP
