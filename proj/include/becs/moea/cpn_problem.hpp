#ifndef BECS_MOEA_CPN_PROBLEM_HPP
#define BECS_MOEA_CPN_PROBLEM_HPP

#include <vector>

#include "becs/cpn/model.hpp"
#include "becs/moea/problem.hpp"

namespace becs::moea {

/// Maps the allocation decision onto a mixed genotype: one simplex block per
/// task over its admissible destination layers (a user-sourced task owns a
/// 3-gene block, an edge-sourced one 2 genes, a cloud-sourced one is pinned
/// to the cloud) plus one occupancy bit per device. Constraint violations
/// come from the model's report; decisions whose queues cannot stabilize get
/// penalty objectives and stay infeasible.
class CpnProblem final : public Problem {
public:
    explicit CpnProblem(const cpn::Scenario& scenario, cpn::EvaluationOptions options = {});

    std::size_t num_objectives() const override { return 6; }
    const GenotypeSpec& genotype() const override { return spec_; }
    Evaluation evaluate(const Genotype& g) const override;

    cpn::AllocationDecision decode(const Genotype& g) const;
    const cpn::Scenario& scenario() const { return scenario_; }

    /// Raw (non-canonical) objective vector for reporting.
    cpn::ObjectiveVector raw_objectives(const Genotype& g) const;

private:
    const cpn::Scenario& scenario_;
    cpn::EvaluationOptions options_;
    GenotypeSpec spec_;
    std::vector<int> task_source_rank_;
    std::vector<std::size_t> task_block_offset_;
};

/// Canonical objectives assigned to decisions whose evaluation is undefined
/// (unstable queues); large but finite so normalization stays meaningful.
std::vector<double> cpn_penalty_objectives();

}  // namespace becs::moea

#endif  // BECS_MOEA_CPN_PROBLEM_HPP
