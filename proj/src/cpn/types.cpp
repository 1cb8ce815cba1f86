#include "becs/cpn/types.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace becs::cpn {

const char* layer_name(Layer l) {
    switch (l) {
        case Layer::User:
            return "user";
        case Layer::Edge:
            return "edge";
        case Layer::Cloud:
            return "cloud";
    }
    return "?";
}

Layer layer_from_name(const std::string& name) {
    if (name == "user") return Layer::User;
    if (name == "edge") return Layer::Edge;
    if (name == "cloud") return Layer::Cloud;
    throw std::invalid_argument("unknown layer name: " + name);
}

std::size_t Scenario::device_index(const std::string& id) const {
    for (std::size_t i = 0; i < devices.size(); ++i) {
        if (devices[i].id == id) return i;
    }
    throw std::invalid_argument("unknown device id: " + id);
}

Layer Scenario::task_source_layer(const Task& t) const {
    return devices[device_index(t.source_device)].layer;
}

void Scenario::validate() const {
    if (channel.bandwidth_hz <= 0) throw std::invalid_argument("bandwidth must be positive");
    if (channel.noise_power_w <= 0) throw std::invalid_argument("noise power must be positive");
    if (economics.beta1 < 0 || economics.beta2 < 0) {
        throw std::invalid_argument("revenue weights must be nonnegative");
    }
    for (double a : alpha) {
        if (a <= 0) throw std::invalid_argument("alpha must be positive for every layer");
    }

    double max_cap[3];
    double min_cap[3];
    bool seen[3] = {false, false, false};
    std::fill(std::begin(max_cap), std::end(max_cap), -std::numeric_limits<double>::infinity());
    std::fill(std::begin(min_cap), std::end(min_cap), std::numeric_limits<double>::infinity());

    std::unordered_map<std::string, int> ids;
    for (const Device& d : devices) {
        if (d.capacity_hz <= 0) throw std::invalid_argument("device capacity must be positive");
        if (d.price < 0) throw std::invalid_argument("device price must be nonnegative");
        if (d.kappa <= 0) throw std::invalid_argument("kappa must be positive");
        if (++ids[d.id] > 1) throw std::invalid_argument("duplicate device id: " + d.id);
        const int r = layer_rank(d.layer);
        seen[r] = true;
        max_cap[r] = std::max(max_cap[r], d.capacity_hz);
        min_cap[r] = std::min(min_cap[r], d.capacity_hz);
        if (d.layer == Layer::User && d.tx_power_w <= 0) {
            throw std::invalid_argument("user device needs positive transmit power");
        }
        if (d.layer == Layer::User && d.channel_gain <= 0) {
            throw std::invalid_argument("user device needs positive channel gain");
        }
    }

    // Capacity ordering: every cloud capacity above every edge capacity,
    // every edge above every user.
    if (seen[0] && seen[1] && max_cap[0] >= min_cap[1]) {
        throw std::invalid_argument("edge capacities must exceed all user capacities");
    }
    if (seen[1] && seen[2] && max_cap[1] >= min_cap[2]) {
        throw std::invalid_argument("cloud capacities must exceed all edge capacities");
    }

    for (const Task& t : tasks) {
        if (t.data_kb <= 0 || t.cycles <= 0 || t.deadline_s <= 0 || t.arrival_rate <= 0) {
            throw std::invalid_argument("task fields must be positive: " + t.id);
        }
        device_index(t.source_device);  // throws for unknown references
    }
}

}  // namespace becs::cpn
