#ifndef BECS_CPN_MODEL_HPP
#define BECS_CPN_MODEL_HPP

#include <span>
#include <vector>

#include "becs/cpn/queueing.hpp"
#include "becs/cpn/types.hpp"

namespace becs::cpn {

/// Uplink rates for NOMA users decoded by successive interference
/// cancellation. Users must be ordered by strictly ascending channel gain;
/// user u sees the aggregate power of users u+1..N as interference.
std::vector<double> noma_rates(std::span<const double> tx_powers_w,
                               std::span<const double> gains, double bandwidth_hz,
                               double noise_power_w);

/// data_kb converted at 8192 bits/KB and divided by the rate.
double transmission_latency(double data_kb, double rate_bps);

double transmission_energy(double tx_power_w, double latency_s);

/// Per-layer task arrival rates (user, edge, cloud) from the superposition
/// of the per-task Poisson streams. Throws InvalidDecisionError if any
/// probability mass flows outward (toward a lower-capacity layer).
std::array<double, 3> layer_arrival_rates(const Scenario& scenario,
                                          const AllocationDecision& decision);

double compute_energy(double kappa, double task_cycles, double capacity_hz);

int occupancy_total(std::span<const std::uint8_t> bits);
double occupancy_average(std::span<const std::uint8_t> bits);

/// Shannon entropy (bits) of one layer's per-task offload probabilities,
/// with 0·log2(0) := 0. Entries must lie in [0, 1].
double privacy_entropy(std::span<const double> probs);

/// Root-mean-square gap between per-device demanded cycles/s and capacity.
double load_balancing(std::span<const double> demands_hz, std::span<const double> capacities_hz);

/// Logarithmic sharing utility ln(1 + b1·price·(cycles/capacity) + b2·capacity_ghz).
/// The capacity term enters in GHz to keep the argument O(1).
double sharing_revenue(double beta1, double beta2, double price, double task_cycles,
                       double capacity_hz);

struct EvaluationOptions {
    ErlangConvention erlang = ErlangConvention::AsPrinted;
};

/// Aggregated view of one layer under a given decision: the occupied devices
/// form a homogeneous service pool with mean capacity, and the per-task
/// demand statistics are arrival-weighted.
struct LayerAggregate {
    int occupied = 0;            // pool size N_d
    double mean_capacity = 0.0;  // cycles/s over occupied devices
    double mean_kappa = 0.0;
    double mean_price = 0.0;
    double mean_max_energy = 0.0;
    double arrival = 0.0;             // lambda_d, tasks/s
    double mean_task_cycles = 0.0;    // arrival-weighted cycles per task
};

std::array<LayerAggregate, 3> layer_aggregates(const Scenario& scenario,
                                               const AllocationDecision& decision);

/// Full six-objective evaluation. Throws InvalidDecisionError for malformed
/// decisions and UnstableQueueError when a layer's queue cannot reach steady
/// state under the decision.
ObjectiveVector evaluate_objectives(const Scenario& scenario, const AllocationDecision& decision,
                                    const EvaluationOptions& options = {});

/// Violation magnitudes for the six constraints. Never throws for unstable
/// queues; instability surfaces as a service-rate violation and a capped
/// waiting time inside the deadline check.
ConstraintReport check_constraints(const Scenario& scenario, const AllocationDecision& decision,
                                   const EvaluationOptions& options = {});

}  // namespace becs::cpn

#endif  // BECS_CPN_MODEL_HPP
