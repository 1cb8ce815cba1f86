#include "becs/moea/nsga3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace becs::moea {

void EvolutionConfig::validate() const {
    if (pop_size < 4 || pop_size % 2 != 0) {
        throw std::invalid_argument("population size must be even and at least 4");
    }
    if (crossover_prob < 0.0 || crossover_prob > 1.0) {
        throw std::invalid_argument("crossover probability outside [0,1]");
    }
    if (mutation_prob > 1.0 || mutation_prob == 0.0) {
        throw std::invalid_argument("mutation probability must be in (0,1] or negative for 1/D");
    }
    if (distribution_index <= 0.0) {
        throw std::invalid_argument("distribution index must be positive");
    }
}

Relation relation_from_name(const std::string& name) {
    if (name == "pareto" || name == "nsga3") return Relation::Pareto;
    if (name == "sdr" || name == "nsga3-sdr") return Relation::SDR;
    if (name == "kdr" || name == "nsga3-kdr") return Relation::KDR;
    throw std::invalid_argument("unknown dominance relation: " + name);
}

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Pareto:
            return "nsga3";
        case Relation::SDR:
            return "nsga3-sdr";
        case Relation::KDR:
            return "nsga3-kdr";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Variation operators
// ---------------------------------------------------------------------------

namespace {

double sbx_child(double p1, double p2, double u, double eta) {
    double beta;
    if (u <= 0.5) {
        beta = std::pow(2.0 * u, 1.0 / (eta + 1.0));
    } else {
        beta = std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
    }
    return 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2);
}

void sbx_pair(std::vector<double>& a, std::vector<double>& b, double eta, Rng& rng) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (rng.uniform() > 0.5) continue;  // per-variable exchange probability
        if (std::abs(a[i] - b[i]) < 1e-14) continue;
        const double u = rng.uniform();
        const double c1 = sbx_child(a[i], b[i], u, eta);
        const double c2 = sbx_child(b[i], a[i], u, eta);
        a[i] = c1;
        b[i] = c2;
    }
}

void polynomial_mutation(std::vector<double>& x, const GenotypeSpec& spec, double prob,
                         double eta, Rng& rng) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (rng.uniform() >= prob) continue;
        const double span = spec.upper[i] - spec.lower[i];
        if (span <= 0) continue;
        const double u = rng.uniform();
        double delta;
        if (u < 0.5) {
            delta = std::pow(2.0 * u, 1.0 / (eta + 1.0)) - 1.0;
        } else {
            delta = 1.0 - std::pow(2.0 * (1.0 - u), 1.0 / (eta + 1.0));
        }
        x[i] += delta * span;
    }
}

void uniform_bit_crossover(std::vector<std::uint8_t>& a, std::vector<std::uint8_t>& b, Rng& rng) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (rng.uniform() < 0.5) std::swap(a[i], b[i]);
    }
}

void bit_flip_mutation(std::vector<std::uint8_t>& bits, double prob, Rng& rng) {
    for (auto& bit : bits) {
        if (rng.uniform() < prob) bit ^= 1;
    }
}

}  // namespace

std::vector<Genotype> variation(const std::vector<Individual>& parents, const GenotypeSpec& spec,
                                const EvolutionConfig& evo, Rng& rng) {
    const std::size_t n = parents.size();
    if (n != evo.pop_size) throw std::invalid_argument("parent count must equal pop_size");
    const double mutation_prob =
        evo.mutation_prob > 0.0 ? evo.mutation_prob
                                : 1.0 / static_cast<double>(std::max<std::size_t>(
                                            1, spec.decision_length()));

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<Genotype> offspring;
    offspring.reserve(n);
    for (std::size_t p = 0; p + 1 < n; p += 2) {
        Genotype a = parents[order[p]].genotype;
        Genotype b = parents[order[p + 1]].genotype;
        if (rng.uniform() < evo.crossover_prob) {
            sbx_pair(a.reals, b.reals, evo.distribution_index, rng);
            uniform_bit_crossover(a.bits, b.bits, rng);
        }
        polynomial_mutation(a.reals, spec, mutation_prob, evo.distribution_index, rng);
        polynomial_mutation(b.reals, spec, mutation_prob, evo.distribution_index, rng);
        bit_flip_mutation(a.bits, mutation_prob, rng);
        bit_flip_mutation(b.bits, mutation_prob, rng);
        repair_genotype(spec, a);
        repair_genotype(spec, b);
        offspring.push_back(std::move(a));
        offspring.push_back(std::move(b));
    }
    return offspring;
}

// ---------------------------------------------------------------------------
// Dominance context
// ---------------------------------------------------------------------------

bool RelationContext::dominates(std::size_t i, std::size_t j) const {
    switch (config.relation) {
        case Relation::Pareto:
            return pareto_dominates(normalized[i], normalized[j]);
        case Relation::SDR:
            return sdr_dominates(normalized[i], normalized[j], theta_bar, ideal);
        case Relation::KDR:
            return kdr_dominates(normalized[i], normalized[j], theta_bar, config.sigma, ideal);
    }
    return false;
}

RelationContext make_relation_context(const std::vector<std::vector<double>>& objectives,
                                      const DominanceConfig& config) {
    RelationContext ctx;
    ctx.config = config;
    if (objectives.empty()) return ctx;
    const std::size_t m = objectives.front().size();

    std::vector<double> lo(m, std::numeric_limits<double>::infinity());
    std::vector<double> hi(m, -std::numeric_limits<double>::infinity());
    for (const auto& f : objectives) {
        for (std::size_t k = 0; k < m; ++k) {
            lo[k] = std::min(lo[k], f[k]);
            hi[k] = std::max(hi[k], f[k]);
        }
    }
    ctx.normalized.resize(objectives.size(), std::vector<double>(m));
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            const double range = hi[k] - lo[k];
            ctx.normalized[i][k] = range > 1e-300 ? (objectives[i][k] - lo[k]) / range : 0.0;
        }
    }
    ctx.ideal.assign(m, 0.0);
    ctx.theta_bar =
        objectives.size() >= 2 ? niche_threshold(ctx.normalized, ctx.ideal) : kNicheFloor;
    return ctx;
}

// ---------------------------------------------------------------------------
// NSGA-III association and niching
// ---------------------------------------------------------------------------

namespace {

double perpendicular_distance(const std::vector<double>& direction,
                              const std::vector<double>& point) {
    double dot = 0.0, norm_sq = 0.0;
    for (std::size_t i = 0; i < direction.size(); ++i) {
        dot += direction[i] * point[i];
        norm_sq += direction[i] * direction[i];
    }
    if (norm_sq <= 0) return std::numeric_limits<double>::max();
    const double k = dot / norm_sq;
    double dist_sq = 0.0;
    for (std::size_t i = 0; i < direction.size(); ++i) {
        const double diff = k * direction[i] - point[i];
        dist_sq += diff * diff;
    }
    return std::sqrt(dist_sq);
}

}  // namespace

std::vector<std::size_t> associate_and_niche(
    const std::vector<std::vector<double>>& normalized_objectives,
    const std::vector<std::vector<std::size_t>>& fronts, std::size_t last_front,
    const std::vector<std::vector<double>>& reference_points, std::size_t slots, Rng& rng) {
    if (slots == 0) return {};
    const auto& candidates = fronts[last_front];
    if (slots > candidates.size()) {
        throw std::invalid_argument("more slots than last-front members");
    }
    if (slots == candidates.size()) return candidates;

    // Nearest reference line for every member of the accepted fronts plus the
    // split front.
    std::vector<std::size_t> nearest(normalized_objectives.size(), 0);
    std::vector<double> distance(normalized_objectives.size(), 0.0);
    auto associate = [&](std::size_t member) {
        double best = std::numeric_limits<double>::max();
        std::size_t best_rp = 0;
        for (std::size_t r = 0; r < reference_points.size(); ++r) {
            const double d =
                perpendicular_distance(reference_points[r], normalized_objectives[member]);
            if (d < best) {
                best = d;
                best_rp = r;
            }
        }
        nearest[member] = best_rp;
        distance[member] = best;
    };

    std::vector<std::size_t> niche_count(reference_points.size(), 0);
    for (std::size_t f = 0; f <= last_front; ++f) {
        for (std::size_t member : fronts[f]) {
            associate(member);
            if (f < last_front) ++niche_count[nearest[member]];
        }
    }

    std::vector<std::vector<std::size_t>> pending(reference_points.size());
    for (std::size_t member : candidates) pending[nearest[member]].push_back(member);

    std::vector<bool> niche_active(reference_points.size(), true);
    std::vector<std::size_t> selected;
    selected.reserve(slots);

    while (selected.size() < slots) {
        // Least-crowded active niche; ties broken by a seeded draw.
        std::size_t best_count = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> tied;
        for (std::size_t r = 0; r < reference_points.size(); ++r) {
            if (!niche_active[r] || pending[r].empty()) continue;
            if (niche_count[r] < best_count) {
                best_count = niche_count[r];
                tied.assign(1, r);
            } else if (niche_count[r] == best_count) {
                tied.push_back(r);
            }
        }
        if (tied.empty()) {
            // All niches with candidates exhausted: this cannot happen while
            // slots < candidates, but guard against it.
            throw std::logic_error("niche preservation ran out of candidates");
        }
        const std::size_t r = tied[rng.index(tied.size())];

        auto& bucket = pending[r];
        std::size_t pick_pos = 0;
        if (niche_count[r] == 0) {
            for (std::size_t i = 1; i < bucket.size(); ++i) {
                if (distance[bucket[i]] < distance[bucket[pick_pos]]) pick_pos = i;
            }
        } else {
            pick_pos = rng.index(bucket.size());
        }
        selected.push_back(bucket[pick_pos]);
        bucket.erase(bucket.begin() + static_cast<std::ptrdiff_t>(pick_pos));
        ++niche_count[r];
        if (bucket.empty()) niche_active[r] = false;
    }
    return selected;
}

// ---------------------------------------------------------------------------
// Evolution loop
// ---------------------------------------------------------------------------

namespace {

struct NormalizationResult {
    std::vector<std::vector<double>> normalized;  // indexed like the input
};

/// Standard hyperplane normalization over the members being selected from:
/// ideal point, extreme points by achievement scalarizing function, intercepts
/// by Gaussian elimination with a nadir fallback.
NormalizationResult normalize_for_association(const std::vector<std::vector<double>>& objectives,
                                              const std::vector<std::size_t>& members) {
    NormalizationResult out;
    if (members.empty()) return out;
    const std::size_t m = objectives.front().size();

    std::vector<double> ideal(m, std::numeric_limits<double>::infinity());
    std::vector<double> nadir(m, -std::numeric_limits<double>::infinity());
    for (std::size_t member : members) {
        for (std::size_t k = 0; k < m; ++k) {
            ideal[k] = std::min(ideal[k], objectives[member][k]);
            nadir[k] = std::max(nadir[k], objectives[member][k]);
        }
    }

    // Extreme point per axis: minimal ASF with axis-weighted scalarization.
    std::vector<std::size_t> extremes(m);
    for (std::size_t axis = 0; axis < m; ++axis) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_member = members.front();
        for (std::size_t member : members) {
            double asf = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double w = k == axis ? 1.0 : 1e-6;
                asf = std::max(asf, (objectives[member][k] - ideal[k]) / w);
            }
            if (asf < best) {
                best = asf;
                best_member = member;
            }
        }
        extremes[axis] = best_member;
    }

    // Intercepts of the hyperplane through the extremes; fall back to the
    // nadir on duplicates or degenerate geometry.
    std::vector<double> intercepts(m, 0.0);
    bool degenerate = false;
    for (std::size_t i = 0; i < m && !degenerate; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (extremes[i] == extremes[j]) {
                degenerate = true;
                break;
            }
        }
    }
    if (!degenerate) {
        std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 1.0));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t k = 0; k < m; ++k) {
                a[r][k] = objectives[extremes[r]][k] - ideal[k];
            }
        }
        for (std::size_t base = 0; base + 1 < m && !degenerate; ++base) {
            std::size_t pivot = base;
            for (std::size_t r = base + 1; r < m; ++r) {
                if (std::abs(a[r][base]) > std::abs(a[pivot][base])) pivot = r;
            }
            std::swap(a[base], a[pivot]);
            if (std::abs(a[base][base]) < 1e-12) {
                degenerate = true;
                break;
            }
            for (std::size_t r = base + 1; r < m; ++r) {
                const double ratio = a[r][base] / a[base][base];
                for (std::size_t k = base; k <= m; ++k) a[r][k] -= a[base][k] * ratio;
            }
        }
        if (!degenerate) {
            std::vector<double> x(m, 0.0);
            for (std::size_t ri = m; ri-- > 0;) {
                double acc = a[ri][m];
                for (std::size_t k = ri + 1; k < m; ++k) acc -= a[ri][k] * x[k];
                if (std::abs(a[ri][ri]) < 1e-12) {
                    degenerate = true;
                    break;
                }
                x[ri] = acc / a[ri][ri];
            }
            if (!degenerate) {
                for (std::size_t k = 0; k < m; ++k) {
                    if (x[k] <= 1e-12) {
                        degenerate = true;
                        break;
                    }
                    intercepts[k] = 1.0 / x[k];
                }
            }
        }
    }
    if (degenerate) {
        for (std::size_t k = 0; k < m; ++k) intercepts[k] = nadir[k] - ideal[k];
    }

    out.normalized.assign(objectives.size(), std::vector<double>(m, 0.0));
    for (std::size_t member : members) {
        for (std::size_t k = 0; k < m; ++k) {
            const double denom = intercepts[k] > 1e-12 ? intercepts[k] : 1e-12;
            out.normalized[member][k] = (objectives[member][k] - ideal[k]) / denom;
        }
    }
    return out;
}

Individual make_individual(const Problem& problem, Genotype&& g) {
    Individual ind;
    ind.genotype = std::move(g);
    Evaluation eval = problem.evaluate(ind.genotype);
    ind.objectives = std::move(eval.objectives);
    ind.violation = eval.violation;
    return ind;
}

}  // namespace

Population evolve(const Problem& problem, const EvolutionConfig& evo, const DominanceConfig& dom,
                  const StatsCallback& stats) {
    evo.validate();
    if (dom.sigma <= 0) throw std::invalid_argument("kernel bandwidth must be positive");
    const GenotypeSpec& spec = problem.genotype();
    Rng rng(evo.seed);

    const auto reference_points =
        default_reference_points(problem.num_objectives(), evo.pop_size);

    Population pop;
    pop.members.reserve(evo.pop_size);
    for (std::size_t i = 0; i < evo.pop_size; ++i) {
        pop.members.push_back(make_individual(problem, random_genotype(spec, rng)));
    }

    for (std::size_t gen = 0; gen < evo.generations; ++gen) {
        std::vector<Genotype> offspring = variation(pop.members, spec, evo, rng);
        std::vector<Individual> merged = pop.members;
        merged.reserve(2 * evo.pop_size);
        for (Genotype& g : offspring) {
            merged.push_back(make_individual(problem, std::move(g)));
        }

        // Normalize over feasible members when any exist; infeasible members
        // otherwise distort the min-max ranges the relations assume.
        std::vector<std::vector<double>> objectives(merged.size());
        for (std::size_t i = 0; i < merged.size(); ++i) objectives[i] = merged[i].objectives;

        std::vector<std::size_t> feasible_members;
        for (std::size_t i = 0; i < merged.size(); ++i) {
            if (merged[i].feasible()) feasible_members.push_back(i);
        }

        RelationContext ctx;
        if (dom.constrained && feasible_members.size() >= 2 &&
            feasible_members.size() < merged.size()) {
            // Build bounds and niche threshold on the feasible subset, then
            // scatter back to merged indexing; infeasible members are only
            // ever compared by violation, so their rows stay unused.
            std::vector<std::vector<double>> basis;
            basis.reserve(feasible_members.size());
            for (std::size_t i : feasible_members) basis.push_back(objectives[i]);
            RelationContext base_ctx = make_relation_context(basis, dom);
            ctx.config = dom;
            ctx.theta_bar = base_ctx.theta_bar;
            ctx.ideal = base_ctx.ideal;
            ctx.normalized.assign(merged.size(),
                                  std::vector<double>(problem.num_objectives(), 0.0));
            for (std::size_t k = 0; k < feasible_members.size(); ++k) {
                ctx.normalized[feasible_members[k]] = std::move(base_ctx.normalized[k]);
            }
        } else {
            ctx = make_relation_context(objectives, dom);
        }

        std::uint64_t comparisons = 0;
        auto dominates = [&](std::size_t i, std::size_t j) {
            ++comparisons;
            if (dom.constrained) {
                const bool fi = merged[i].feasible();
                const bool fj = merged[j].feasible();
                if (fi && !fj) return true;
                if (!fi && fj) return false;
                if (!fi && !fj) return merged[i].violation < merged[j].violation;
            }
            return ctx.dominates(i, j);
        };

        const auto fronts = non_dominated_sort(merged.size(), dominates);

        // Accept whole fronts while they fit, split the last one by niching.
        std::vector<std::size_t> chosen;
        chosen.reserve(evo.pop_size);
        std::size_t last = 0;
        std::size_t accepted = 0;
        while (last < fronts.size() && accepted + fronts[last].size() <= evo.pop_size) {
            for (std::size_t member : fronts[last]) chosen.push_back(member);
            accepted += fronts[last].size();
            ++last;
        }
        if (accepted < evo.pop_size && last < fronts.size()) {
            std::vector<std::size_t> in_play;
            for (std::size_t f = 0; f <= last; ++f) {
                for (std::size_t member : fronts[f]) in_play.push_back(member);
            }
            const auto norm = normalize_for_association(objectives, in_play);
            const auto filled = associate_and_niche(norm.normalized, fronts, last,
                                                    reference_points, evo.pop_size - accepted,
                                                    rng);
            for (std::size_t member : filled) chosen.push_back(member);
        }

        Population next;
        next.generation = gen + 1;
        next.members.reserve(evo.pop_size);
        for (std::size_t member : chosen) next.members.push_back(std::move(merged[member]));
        pop = std::move(next);

        if (stats) {
            GenerationStats gs;
            gs.generation = pop.generation;
            gs.dominance_comparisons = comparisons;
            gs.ideal.assign(problem.num_objectives(), std::numeric_limits<double>::infinity());
            gs.best_violation = std::numeric_limits<double>::infinity();
            for (const Individual& ind : pop.members) {
                for (std::size_t k = 0; k < gs.ideal.size(); ++k) {
                    gs.ideal[k] = std::min(gs.ideal[k], ind.objectives[k]);
                }
                gs.best_violation = std::min(gs.best_violation, ind.violation);
                if (ind.feasible()) ++gs.feasible;
            }
            stats(gs);
        }
    }
    return pop;
}

}  // namespace becs::moea
