#include "becs/cpn/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

namespace becs::cpn {

namespace {

constexpr double kProbTolerance = 1e-9;

// Finite stand-in for the waiting time of an unstable queue; keeps
// constraint magnitudes finite while the service-rate violation drives
// selection away from such decisions.
constexpr double kUnstableWait = 1e6;

void validate_decision_shape(const Scenario& scenario, const AllocationDecision& decision) {
    if (decision.layer_probs.size() != scenario.tasks.size()) {
        throw InvalidDecisionError("one probability triple per task required");
    }
    if (decision.occupancy.size() != scenario.devices.size()) {
        throw InvalidDecisionError("one occupancy bit per device required");
    }
    for (auto bit : decision.occupancy) {
        if (bit > 1) throw InvalidDecisionError("occupancy bits must be 0 or 1");
    }
    for (const auto& triple : decision.layer_probs) {
        double sum = 0.0;
        for (double p : triple) {
            if (p < -kProbTolerance || p > 1.0 + kProbTolerance) {
                throw InvalidDecisionError("offload probability outside [0,1]");
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > kProbTolerance) {
            throw InvalidDecisionError("offload probabilities must sum to 1");
        }
    }
}

std::vector<std::size_t> task_source_indices(const Scenario& scenario) {
    std::unordered_map<std::string_view, std::size_t> by_id;
    by_id.reserve(scenario.devices.size());
    for (std::size_t d = 0; d < scenario.devices.size(); ++d) {
        by_id.emplace(scenario.devices[d].id, d);
    }
    std::vector<std::size_t> sources;
    sources.reserve(scenario.tasks.size());
    for (const Task& t : scenario.tasks) {
        auto it = by_id.find(t.source_device);
        if (it == by_id.end()) throw InvalidInputError("unknown device id: " + t.source_device);
        sources.push_back(it->second);
    }
    return sources;
}

double inadmissible_mass(const Scenario& scenario, const AllocationDecision& decision,
                         const std::vector<std::size_t>& sources) {
    double mass = 0.0;
    for (std::size_t t = 0; t < scenario.tasks.size(); ++t) {
        const int source = layer_rank(scenario.devices[sources[t]].layer);
        for (int l = 0; l < source; ++l) {
            mass += std::max(0.0, decision.layer_probs[t][static_cast<std::size_t>(l)]);
        }
    }
    return mass;
}

bool capacity_ordering_ok(const Scenario& scenario) {
    double max_cap[3] = {0.0, 0.0, 0.0};
    double min_cap[3] = {0.0, 0.0, 0.0};
    bool seen[3] = {false, false, false};
    for (const Device& d : scenario.devices) {
        const int r = layer_rank(d.layer);
        if (!seen[r]) {
            max_cap[r] = min_cap[r] = d.capacity_hz;
            seen[r] = true;
        } else {
            max_cap[r] = std::max(max_cap[r], d.capacity_hz);
            min_cap[r] = std::min(min_cap[r], d.capacity_hz);
        }
    }
    if (seen[0] && seen[1] && max_cap[0] >= min_cap[1]) return false;
    if (seen[1] && seen[2] && max_cap[1] >= min_cap[2]) return false;
    return true;
}

struct TransmissionTerms {
    // Indexed by task; zero for tasks not sourced at the user layer.
    std::vector<double> latency_s;
    std::vector<double> energy_j;
};

/// User-layer devices that source at least one task transmit on the shared
/// NOMA channel, ordered by ascending gain; every stream leaving a
/// user-sourced device pays its source's uplink latency.
TransmissionTerms transmission_terms(const Scenario& scenario,
                                     const std::vector<std::size_t>& sources) {
    TransmissionTerms terms;
    terms.latency_s.assign(scenario.tasks.size(), 0.0);
    terms.energy_j.assign(scenario.tasks.size(), 0.0);

    std::vector<std::size_t> senders;
    for (std::size_t t = 0; t < scenario.tasks.size(); ++t) {
        const std::size_t d = sources[t];
        if (scenario.devices[d].layer != Layer::User) continue;
        if (std::find(senders.begin(), senders.end(), d) == senders.end()) senders.push_back(d);
    }
    if (senders.empty()) return terms;

    std::sort(senders.begin(), senders.end(), [&](std::size_t a, std::size_t b) {
        return scenario.devices[a].channel_gain < scenario.devices[b].channel_gain;
    });

    std::vector<double> powers, gains;
    powers.reserve(senders.size());
    gains.reserve(senders.size());
    for (std::size_t d : senders) {
        powers.push_back(scenario.devices[d].tx_power_w);
        gains.push_back(scenario.devices[d].channel_gain);
    }
    const std::vector<double> rates =
        noma_rates(powers, gains, scenario.channel.bandwidth_hz, scenario.channel.noise_power_w);

    for (std::size_t t = 0; t < scenario.tasks.size(); ++t) {
        const std::size_t d = sources[t];
        if (scenario.devices[d].layer != Layer::User) continue;
        const auto pos = std::find(senders.begin(), senders.end(), d) - senders.begin();
        const double latency =
            transmission_latency(scenario.tasks[t].data_kb, rates[static_cast<std::size_t>(pos)]);
        terms.latency_s[t] = latency;
        terms.energy_j[t] = transmission_energy(scenario.devices[d].tx_power_w, latency);
    }
    return terms;
}

}  // namespace

std::vector<double> noma_rates(std::span<const double> tx_powers_w, std::span<const double> gains,
                               double bandwidth_hz, double noise_power_w) {
    if (tx_powers_w.size() != gains.size()) {
        throw InvalidInputError("powers and gains must pair up");
    }
    if (bandwidth_hz <= 0 || noise_power_w <= 0) {
        throw InvalidInputError("bandwidth and noise must be positive");
    }
    for (std::size_t i = 0; i < gains.size(); ++i) {
        if (gains[i] <= 0 || tx_powers_w[i] <= 0) {
            throw InvalidInputError("gains and powers must be positive");
        }
        if (i > 0 && gains[i] <= gains[i - 1]) {
            throw InvalidInputError("users must be ordered by ascending gain");
        }
    }

    const std::size_t n = gains.size();
    std::vector<double> rates(n);
    double interference = 0.0;
    // Walk from the strongest user down so the interference suffix is a
    // running sum.
    for (std::size_t i = n; i-- > 0;) {
        const double sinr = tx_powers_w[i] * gains[i] / (noise_power_w + interference);
        rates[i] = bandwidth_hz * std::log2(1.0 + sinr);
        interference += tx_powers_w[i] * gains[i];
    }
    return rates;
}

double transmission_latency(double data_kb, double rate_bps) {
    if (rate_bps <= 0) throw InvalidInputError("transmission needs a positive rate");
    if (data_kb < 0) throw InvalidInputError("data size must be nonnegative");
    return data_kb * kBitsPerKb / rate_bps;
}

double transmission_energy(double tx_power_w, double latency_s) {
    if (tx_power_w < 0 || latency_s < 0) {
        throw InvalidInputError("power and latency must be nonnegative");
    }
    return tx_power_w * latency_s;
}

std::array<double, 3> layer_arrival_rates(const Scenario& scenario,
                                          const AllocationDecision& decision) {
    validate_decision_shape(scenario, decision);
    if (inadmissible_mass(scenario, decision, task_source_indices(scenario)) > kProbTolerance) {
        throw InvalidDecisionError("offload mass flows outward across layers");
    }
    std::array<double, 3> rates = {0.0, 0.0, 0.0};
    for (std::size_t t = 0; t < scenario.tasks.size(); ++t) {
        for (std::size_t l = 0; l < 3; ++l) {
            rates[l] += scenario.tasks[t].arrival_rate * decision.layer_probs[t][l];
        }
    }
    return rates;
}

double compute_energy(double kappa, double task_cycles, double capacity_hz) {
    if (kappa < 0 || task_cycles < 0 || capacity_hz < 0) {
        throw InvalidInputError("energy inputs must be nonnegative");
    }
    return kappa * task_cycles * capacity_hz * capacity_hz;
}

int occupancy_total(std::span<const std::uint8_t> bits) {
    int total = 0;
    for (auto b : bits) {
        if (b > 1) throw InvalidInputError("occupancy bits must be 0 or 1");
        total += b;
    }
    return total;
}

double occupancy_average(std::span<const std::uint8_t> bits) {
    if (bits.empty()) throw InvalidInputError("occupancy average over no devices");
    return static_cast<double>(occupancy_total(bits)) / static_cast<double>(bits.size());
}

double privacy_entropy(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p < -1e-12 || p > 1.0 + 1e-12) throw InvalidInputError("probability outside [0,1]");
        if (p > 0.0) h -= p * std::log2(p);
    }
    return std::max(0.0, h);
}

double load_balancing(std::span<const double> demands_hz, std::span<const double> capacities_hz) {
    if (demands_hz.empty() || demands_hz.size() != capacities_hz.size()) {
        throw InvalidInputError("load balance needs matching non-empty demand/capacity lists");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < demands_hz.size(); ++i) {
        const double diff = demands_hz[i] - capacities_hz[i];
        acc += diff * diff;
    }
    return std::sqrt(acc / static_cast<double>(demands_hz.size()));
}

double sharing_revenue(double beta1, double beta2, double price, double task_cycles,
                       double capacity_hz) {
    if (capacity_hz <= 0) throw InvalidInputError("revenue needs positive capacity");
    if (beta1 < 0 || beta2 < 0 || price < 0 || task_cycles < 0) {
        throw InvalidInputError("revenue inputs must be nonnegative");
    }
    return std::log(1.0 + beta1 * price * (task_cycles / capacity_hz) +
                    beta2 * (capacity_hz / 1e9));
}

std::array<LayerAggregate, 3> layer_aggregates(const Scenario& scenario,
                                               const AllocationDecision& decision) {
    validate_decision_shape(scenario, decision);
    std::array<LayerAggregate, 3> agg;

    for (std::size_t d = 0; d < scenario.devices.size(); ++d) {
        if (!decision.occupancy[d]) continue;
        LayerAggregate& a = agg[static_cast<std::size_t>(layer_rank(scenario.devices[d].layer))];
        ++a.occupied;
        a.mean_capacity += scenario.devices[d].capacity_hz;
        a.mean_kappa += scenario.devices[d].kappa;
        a.mean_price += scenario.devices[d].price;
        a.mean_max_energy += scenario.devices[d].max_energy_j;
    }
    for (LayerAggregate& a : agg) {
        if (a.occupied > 0) {
            a.mean_capacity /= a.occupied;
            a.mean_kappa /= a.occupied;
            a.mean_price /= a.occupied;
            a.mean_max_energy /= a.occupied;
        }
    }

    for (std::size_t t = 0; t < scenario.tasks.size(); ++t) {
        for (std::size_t l = 0; l < 3; ++l) {
            const double mass = scenario.tasks[t].arrival_rate * decision.layer_probs[t][l];
            agg[l].arrival += mass;
            agg[l].mean_task_cycles += mass * scenario.tasks[t].cycles;
        }
    }
    for (LayerAggregate& a : agg) {
        a.mean_task_cycles = a.arrival > 0 ? a.mean_task_cycles / a.arrival : 0.0;
    }
    return agg;
}

ObjectiveVector evaluate_objectives(const Scenario& scenario, const AllocationDecision& decision,
                                    const EvaluationOptions& options) {
    validate_decision_shape(scenario, decision);
    const std::vector<std::size_t> sources = task_source_indices(scenario);
    if (inadmissible_mass(scenario, decision, sources) > kProbTolerance) {
        throw InvalidDecisionError("offload mass flows outward across layers");
    }

    const auto agg = layer_aggregates(scenario, decision);

    // Per-layer queueing wait; throws when a loaded layer has no pool or an
    // oversubscribed one.
    std::array<double, 3> wait = {0.0, 0.0, 0.0};
    for (std::size_t l = 0; l < 3; ++l) {
        if (agg[l].arrival <= 0) continue;
        if (agg[l].occupied < 1) {
            throw UnstableQueueError(std::string(layer_name(static_cast<Layer>(l))) +
                                     " layer receives tasks but has no occupied device");
        }
        const double rho =
            agg[l].arrival / (agg[l].occupied * scenario.alpha[l] * agg[l].mean_capacity);
        wait[l] = queue_wait(agg[l].occupied, rho, agg[l].arrival, options.erlang);
    }

    const TransmissionTerms tra = transmission_terms(scenario, sources);

    ObjectiveVector out;
    for (std::size_t t = 0; t < scenario.tasks.size(); ++t) {
        const Task& task = scenario.tasks[t];
        for (std::size_t l = 0; l < 3; ++l) {
            const double p = decision.layer_probs[t][l];
            if (p <= 0) continue;
            out.l_tot += p * (wait[l] + task.cycles / agg[l].mean_capacity);
            out.e_tot += p * compute_energy(agg[l].mean_kappa, task.cycles, agg[l].mean_capacity);
        }
        out.l_tot += tra.latency_s[t];
        out.e_tot += tra.energy_j[t];
    }

    out.o_ave = occupancy_average(decision.occupancy);

    const std::size_t device_count = scenario.devices.size();
    double entropy_sum = 0.0;
    std::vector<double> layer_probs(scenario.tasks.size());
    for (std::size_t l = 0; l < 3; ++l) {
        for (std::size_t t = 0; t < scenario.tasks.size(); ++t) {
            layer_probs[t] = std::clamp(decision.layer_probs[t][l], 0.0, 1.0);
        }
        entropy_sum += privacy_entropy(layer_probs);
    }
    out.h_ave = entropy_sum / static_cast<double>(device_count);

    for (std::size_t l = 0; l < 3; ++l) {
        std::vector<double> demands;
        std::vector<double> capacities;
        const double per_device_demand =
            agg[l].occupied > 0 ? agg[l].arrival / agg[l].occupied * agg[l].mean_task_cycles : 0.0;
        for (std::size_t idx = 0; idx < scenario.devices.size(); ++idx) {
            const Device& d = scenario.devices[idx];
            if (layer_rank(d.layer) != static_cast<int>(l)) continue;
            demands.push_back(decision.occupancy[idx] ? per_device_demand : 0.0);
            capacities.push_back(d.capacity_hz);
        }
        if (!demands.empty()) out.b_tot += load_balancing(demands, capacities);
        if (agg[l].occupied > 0) {
            out.r_tot += sharing_revenue(scenario.economics.beta1, scenario.economics.beta2,
                                         agg[l].mean_price, agg[l].mean_task_cycles,
                                         agg[l].mean_capacity);
        }
    }

    return out;
}

ConstraintReport check_constraints(const Scenario& scenario, const AllocationDecision& decision,
                                   const EvaluationOptions& options) {
    validate_decision_shape(scenario, decision);
    ConstraintReport report;

    const auto agg = layer_aggregates(scenario, decision);

    // (21) arrival rate against layer service rate, per layer.
    std::array<double, 3> wait = {0.0, 0.0, 0.0};
    for (std::size_t l = 0; l < 3; ++l) {
        const double service = agg[l].occupied * scenario.alpha[l] * agg[l].mean_capacity;
        report.service_rate += std::max(0.0, agg[l].arrival - service);
        if (agg[l].arrival > 0) {
            if (agg[l].occupied < 1) {
                wait[l] = kUnstableWait;
            } else {
                const double rho = agg[l].arrival / service;
                wait[l] = rho < 1.0 ? queue_wait(agg[l].occupied, rho, agg[l].arrival,
                                                 options.erlang)
                                    : kUnstableWait;
            }
        }
    }

    // (22) transmit power cap per user device.
    for (const Device& d : scenario.devices) {
        if (d.layer == Layer::User) {
            report.tx_power += std::max(0.0, d.tx_power_w - scenario.channel.max_tx_power_w);
        }
    }

    // (23) expected execution latency against the deadline, per task.
    // (24) execution energy against the layer's device budget, mass-weighted.
    // (26) task demand against capacity within the deadline, mass-weighted.
    for (std::size_t t = 0; t < scenario.tasks.size(); ++t) {
        const Task& task = scenario.tasks[t];
        double latency = 0.0;
        for (std::size_t l = 0; l < 3; ++l) {
            const double p = decision.layer_probs[t][l];
            if (p <= 0) continue;
            if (agg[l].occupied > 0) {
                latency += p * (wait[l] + task.cycles / agg[l].mean_capacity);
                const double energy =
                    compute_energy(agg[l].mean_kappa, task.cycles, agg[l].mean_capacity);
                report.energy += p * std::max(0.0, energy - agg[l].mean_max_energy);
                report.capacity +=
                    p * std::max(0.0, task.cycles - agg[l].mean_capacity * task.deadline_s);
            } else {
                latency += p * kUnstableWait;
                report.capacity += p * task.cycles;
            }
        }
        report.deadline += std::max(0.0, latency - task.deadline_s);
    }

    // (25) structural check: capacity ordering across layers and inward-only
    // offload direction.
    if (!capacity_ordering_ok(scenario) ||
        inadmissible_mass(scenario, decision, task_source_indices(scenario)) > kProbTolerance) {
        report.structure = 1.0;
    }

    return report;
}

}  // namespace becs::cpn
