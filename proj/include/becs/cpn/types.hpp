#ifndef BECS_CPN_TYPES_HPP
#define BECS_CPN_TYPES_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace becs::cpn {

enum class Layer : int { User = 0, Edge = 1, Cloud = 2 };

inline constexpr std::array<Layer, 3> kLayers = {Layer::User, Layer::Edge, Layer::Cloud};

inline int layer_rank(Layer l) { return static_cast<int>(l); }

const char* layer_name(Layer l);
Layer layer_from_name(const std::string& name);

/// Unit conventions used throughout: capacities in cycles/s, data sizes in
/// KB with 1 KB = 8192 bits, rates in bits/s, powers in watts, energies in
/// joules, prices in price units per second.
inline constexpr double kBitsPerKb = 8192.0;

struct Device {
    std::string id;
    Layer layer = Layer::User;
    double capacity_hz = 0.0;   // cycles per second
    double price = 0.0;         // per second of compute
    double kappa = 0.0;         // effective capacitance coefficient
    double max_energy_j = 0.0;
    double tx_power_w = 0.0;    // user layer only
    double channel_gain = 0.0;  // user layer only, linear
};

struct Task {
    std::string id;
    std::string source_device;
    double data_kb = 0.0;
    double cycles = 0.0;
    double deadline_s = 0.0;
    double arrival_rate = 0.0;  // tasks per second
};

struct ChannelParams {
    double bandwidth_hz = 0.0;
    double noise_power_w = 0.0;
    double max_tx_power_w = 1.0;
};

struct Economics {
    double beta1 = 0.0;
    double beta2 = 0.0;
};

struct Scenario {
    std::vector<Device> devices;
    std::vector<Task> tasks;
    ChannelParams channel;
    Economics economics;
    std::array<double, 3> alpha = {0.0, 0.0, 0.0};  // tasks per cycle, per layer

    std::size_t device_index(const std::string& id) const;
    Layer task_source_layer(const Task& t) const;

    /// Checks structural invariants (positive parameters, capacity ordering
    /// across layers, task references). Throws std::invalid_argument.
    void validate() const;
};

/// Decision variables: per-task offload probability triple over destination
/// layers (ordered user, edge, cloud) and per-device occupancy bits.
struct AllocationDecision {
    std::vector<std::array<double, 3>> layer_probs;
    std::vector<std::uint8_t> occupancy;
};

/// Raw objective values of the service model, plus the canonical
/// minimization view used by the optimizer (maximized entries negated).
struct ObjectiveVector {
    double l_tot = 0.0;  // seconds
    double e_tot = 0.0;  // joules
    double o_ave = 0.0;  // fraction of occupied devices
    double h_ave = 0.0;  // bits
    double b_tot = 0.0;  // cycles/s
    double r_tot = 0.0;  // utility units

    std::array<double, 6> canonical() const {
        return {l_tot, e_tot, -o_ave, -h_ave, b_tot, -r_tot};
    }
    std::array<double, 6> raw() const { return {l_tot, e_tot, o_ave, h_ave, b_tot, r_tot}; }
};

/// Objective direction flags in field order (l, e, o, h, b, r):
/// true = maximized in the original formulation.
inline constexpr std::array<bool, 6> kObjectiveMaximized = {false, false, true,
                                                            true,  false, true};

inline constexpr std::array<const char*, 6> kObjectiveNames = {"l_tot", "e_tot", "o_ave",
                                                               "h_ave", "b_tot", "r_tot"};

/// Per-constraint violation magnitudes; all entries nonnegative, zero means
/// satisfied. Violations are data, not errors.
struct ConstraintReport {
    double service_rate = 0.0;  // actual arrival vs. layer service rate
    double tx_power = 0.0;      // transmit power cap
    double deadline = 0.0;      // task latency vs. deadline
    double energy = 0.0;        // execution energy vs. device budget
    double structure = 0.0;     // capacity ordering / offload direction
    double capacity = 0.0;      // task demand vs. capacity within deadline

    double total() const {
        return service_rate + tx_power + deadline + energy + structure + capacity;
    }
};

class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidDecisionError : public std::runtime_error {
public:
    explicit InvalidDecisionError(const std::string& what) : std::runtime_error(what) {}
};

class UnstableQueueError : public std::runtime_error {
public:
    explicit UnstableQueueError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace becs::cpn

#endif  // BECS_CPN_TYPES_HPP
