#include "becs/cpn/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "becs/common/rng.hpp"

namespace becs::cpn {

namespace {

using nlohmann::json;

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) / 1000.0; }
double dbi_to_linear(double dbi) { return std::pow(10.0, dbi / 10.0); }

void resolve_alpha(Scenario& s, const json& service) {
    double mean_cycles = 0.0;
    for (const Task& t : s.tasks) mean_cycles += t.cycles;
    mean_cycles = s.tasks.empty() ? 1.0 : mean_cycles / static_cast<double>(s.tasks.size());
    const double auto_alpha = 1.0 / mean_cycles;  // one nominal task per service slot

    if (!service.contains("alpha") || service["alpha"] == "auto") {
        s.alpha = {auto_alpha, auto_alpha, auto_alpha};
        return;
    }
    const json& a = service["alpha"];
    s.alpha = {a.at("user").get<double>(), a.at("edge").get<double>(),
               a.at("cloud").get<double>()};
}

}  // namespace

Scenario generate_scenario(const GeneratorSpec& spec, const ChannelParams& channel,
                           const Economics& economics) {
    Rng rng(spec.seed);
    Scenario s;
    s.channel = channel;
    s.economics = economics;

    const double gain_scale = dbi_to_linear(spec.antenna_gain_dbi);
    const double max_data_bytes = spec.data_kb[1] * 1024.0;
    const double max_task_cycles = max_data_bytes * spec.cycles_per_byte;

    auto add_devices = [&](Layer layer, std::size_t count, const double cap_ghz[2],
                           double price) {
        for (std::size_t i = 0; i < count; ++i) {
            Device d;
            d.layer = layer;
            d.id = std::string(layer_name(layer)) + "-" + std::to_string(i);
            d.capacity_hz = rng.uniform(cap_ghz[0], cap_ghz[1]) * 1e9;
            d.price = price;
            d.kappa = spec.kappa;
            d.max_energy_j =
                spec.energy_margin * spec.kappa * max_task_cycles * d.capacity_hz * d.capacity_hz;
            if (layer == Layer::User) {
                d.tx_power_w = dbm_to_watts(rng.uniform(spec.tx_power_dbm[0], spec.tx_power_dbm[1]));
                d.channel_gain = gain_scale * rng.exponential(1.0);  // Rayleigh power fading
            }
            s.devices.push_back(std::move(d));
        }
    };
    add_devices(Layer::User, spec.user_devices, spec.user_capacity_ghz, spec.price[0]);
    add_devices(Layer::Edge, spec.edge_devices, spec.edge_capacity_ghz, spec.price[1]);
    add_devices(Layer::Cloud, spec.cloud_devices, spec.cloud_capacity_ghz, spec.price[2]);

    for (std::size_t t = 0; t < spec.task_count; ++t) {
        Task task;
        task.id = "task-" + std::to_string(t);
        task.source_device = "user-" + std::to_string(rng.index(spec.user_devices));
        task.data_kb = rng.uniform(spec.data_kb[0], spec.data_kb[1]);
        task.cycles = task.data_kb * 1024.0 * spec.cycles_per_byte;
        task.deadline_s = rng.uniform(spec.deadline_s[0], spec.deadline_s[1]);
        task.arrival_rate = spec.arrival_rate;
        s.tasks.push_back(std::move(task));
    }

    double mean_cycles = 0.0;
    for (const Task& t : s.tasks) mean_cycles += t.cycles;
    mean_cycles = s.tasks.empty() ? 1.0 : mean_cycles / static_cast<double>(s.tasks.size());
    const double a = 1.0 / mean_cycles;
    s.alpha = {a, a, a};

    s.validate();
    return s;
}

Scenario scenario_from_json_text(const std::string& text) {
    const json doc = json::parse(text);
    Scenario s;

    const json& channel = doc.at("channel");
    s.channel.bandwidth_hz = channel.at("bandwidth_hz").get<double>();
    s.channel.noise_power_w = channel.at("noise_power_w").get<double>();
    s.channel.max_tx_power_w = channel.value("max_tx_power_w", 1.0);

    const json& econ = doc.at("economics");
    s.economics.beta1 = econ.at("beta1").get<double>();
    s.economics.beta2 = econ.at("beta2").get<double>();

    if (doc.contains("generator")) {
        const json& g = doc["generator"];
        GeneratorSpec spec;
        spec.seed = g.value("seed", spec.seed);
        if (g.contains("devices")) {
            spec.user_devices = g["devices"].value("user", spec.user_devices);
            spec.edge_devices = g["devices"].value("edge", spec.edge_devices);
            spec.cloud_devices = g["devices"].value("cloud", spec.cloud_devices);
        }
        auto range = [&](const char* key, double out[2]) {
            if (g.contains(key)) {
                out[0] = g[key].at(0).get<double>();
                out[1] = g[key].at(1).get<double>();
            }
        };
        range("user_capacity_ghz", spec.user_capacity_ghz);
        range("edge_capacity_ghz", spec.edge_capacity_ghz);
        range("cloud_capacity_ghz", spec.cloud_capacity_ghz);
        range("tx_power_dbm", spec.tx_power_dbm);
        range("data_kb", spec.data_kb);
        range("deadline_s", spec.deadline_s);
        if (g.contains("price")) {
            spec.price[0] = g["price"].value("user", spec.price[0]);
            spec.price[1] = g["price"].value("edge", spec.price[1]);
            spec.price[2] = g["price"].value("cloud", spec.price[2]);
        }
        spec.kappa = g.value("kappa", spec.kappa);
        spec.antenna_gain_dbi = g.value("antenna_gain_dbi", spec.antenna_gain_dbi);
        spec.energy_margin = g.value("energy_margin", spec.energy_margin);
        spec.task_count = g.value("task_count", spec.task_count);
        spec.cycles_per_byte = g.value("cycles_per_byte", spec.cycles_per_byte);
        spec.arrival_rate = g.value("arrival_rate", spec.arrival_rate);

        Scenario generated = generate_scenario(spec, s.channel, s.economics);
        if (doc.contains("service")) {
            resolve_alpha(generated, doc["service"]);
            generated.validate();
        }
        return generated;
    }

    for (const json& jd : doc.at("devices")) {
        Device d;
        d.id = jd.at("id").get<std::string>();
        d.layer = layer_from_name(jd.at("layer").get<std::string>());
        d.capacity_hz = jd.at("capacity_hz").get<double>();
        d.price = jd.at("price").get<double>();
        d.kappa = jd.at("kappa").get<double>();
        d.max_energy_j = jd.at("max_energy_j").get<double>();
        d.tx_power_w = jd.value("tx_power_w", 0.0);
        d.channel_gain = jd.value("channel_gain", 0.0);
        s.devices.push_back(std::move(d));
    }
    for (const json& jt : doc.at("tasks")) {
        Task t;
        t.id = jt.at("id").get<std::string>();
        t.source_device = jt.at("source_device").get<std::string>();
        t.data_kb = jt.at("data_kb").get<double>();
        t.cycles = jt.at("cycles").get<double>();
        t.deadline_s = jt.at("deadline_s").get<double>();
        t.arrival_rate = jt.at("arrival_rate").get<double>();
        s.tasks.push_back(std::move(t));
    }

    resolve_alpha(s, doc.contains("service") ? doc["service"] : json::object());
    s.validate();
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return scenario_from_json_text(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
    json doc;
    doc["channel"] = {{"bandwidth_hz", s.channel.bandwidth_hz},
                      {"noise_power_w", s.channel.noise_power_w},
                      {"max_tx_power_w", s.channel.max_tx_power_w}};
    doc["economics"] = {{"beta1", s.economics.beta1}, {"beta2", s.economics.beta2}};
    doc["service"] = {{"alpha",
                       {{"user", s.alpha[0]}, {"edge", s.alpha[1]}, {"cloud", s.alpha[2]}}}};
    doc["devices"] = json::array();
    for (const Device& d : s.devices) {
        json jd = {{"id", d.id},
                   {"layer", layer_name(d.layer)},
                   {"capacity_hz", d.capacity_hz},
                   {"price", d.price},
                   {"kappa", d.kappa},
                   {"max_energy_j", d.max_energy_j}};
        if (d.layer == Layer::User) {
            jd["tx_power_w"] = d.tx_power_w;
            jd["channel_gain"] = d.channel_gain;
        }
        doc["devices"].push_back(std::move(jd));
    }
    doc["tasks"] = json::array();
    for (const Task& t : s.tasks) {
        doc["tasks"].push_back({{"id", t.id},
                                {"source_device", t.source_device},
                                {"data_kb", t.data_kb},
                                {"cycles", t.cycles},
                                {"deadline_s", t.deadline_s},
                                {"arrival_rate", t.arrival_rate}});
    }
    return doc.dump(2);
}

}  // namespace becs::cpn
