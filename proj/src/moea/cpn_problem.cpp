#include "becs/moea/cpn_problem.hpp"

#include <algorithm>

namespace becs::moea {

std::vector<double> cpn_penalty_objectives() {
    // Canonical order (l, e, -o, -h, b, -r): worst plausible corner.
    return {1e9, 1e9, 0.0, 0.0, 1e9, 0.0};
}

CpnProblem::CpnProblem(const cpn::Scenario& scenario, cpn::EvaluationOptions options)
    : scenario_(scenario), options_(options) {
    task_source_rank_.reserve(scenario.tasks.size());
    task_block_offset_.reserve(scenario.tasks.size());

    std::size_t offset = 0;
    for (const cpn::Task& t : scenario.tasks) {
        const int rank = cpn::layer_rank(scenario.task_source_layer(t));
        task_source_rank_.push_back(rank);
        task_block_offset_.push_back(offset);
        const std::size_t genes = static_cast<std::size_t>(3 - rank);
        if (genes > 1) {
            spec_.simplex_blocks.push_back({offset, genes});
            offset += genes;
        } else {
            // Cloud-sourced task: the only admissible destination is fixed.
            offset += 0;
        }
    }
    spec_.lower.assign(offset, 0.0);
    spec_.upper.assign(offset, 1.0);
    spec_.bit_count = scenario.devices.size();
    spec_.initial_bit_prob = 0.5;
}

cpn::AllocationDecision CpnProblem::decode(const Genotype& g) const {
    cpn::AllocationDecision decision;
    decision.layer_probs.resize(scenario_.tasks.size());
    for (std::size_t t = 0; t < scenario_.tasks.size(); ++t) {
        auto& triple = decision.layer_probs[t];
        triple = {0.0, 0.0, 0.0};
        const int rank = task_source_rank_[t];
        const std::size_t genes = static_cast<std::size_t>(3 - rank);
        if (genes <= 1) {
            triple[2] = 1.0;  // cloud-sourced
            continue;
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < genes; ++i) {
            const double v = std::max(0.0, g.reals[task_block_offset_[t] + i]);
            triple[static_cast<std::size_t>(rank) + i] = v;
            sum += v;
        }
        if (sum <= 1e-300) {
            for (std::size_t i = 0; i < genes; ++i) {
                triple[static_cast<std::size_t>(rank) + i] = 1.0 / static_cast<double>(genes);
            }
        } else {
            for (std::size_t i = 0; i < genes; ++i) {
                triple[static_cast<std::size_t>(rank) + i] /= sum;
            }
        }
    }
    decision.occupancy = g.bits;
    return decision;
}

Evaluation CpnProblem::evaluate(const Genotype& g) const {
    const cpn::AllocationDecision decision = decode(g);
    const cpn::ConstraintReport report = cpn::check_constraints(scenario_, decision, options_);

    Evaluation eval;
    eval.violation = report.total();
    try {
        const cpn::ObjectiveVector obj = cpn::evaluate_objectives(scenario_, decision, options_);
        const auto canonical = obj.canonical();
        eval.objectives.assign(canonical.begin(), canonical.end());
    } catch (const cpn::UnstableQueueError&) {
        eval.objectives = cpn_penalty_objectives();
        // Instability right at the boundary can carry a zero service-rate
        // violation; keep such decisions out of the feasible set.
        eval.violation = std::max(eval.violation, 1e-9);
    }
    return eval;
}

cpn::ObjectiveVector CpnProblem::raw_objectives(const Genotype& g) const {
    return cpn::evaluate_objectives(scenario_, decode(g), options_);
}

}  // namespace becs::moea
