#include "becs/cpn/queueing.hpp"

#include <string>

#include "becs/cpn/types.hpp"

namespace becs::cpn {

double erlang_c(int n_servers, double rho, ErlangConvention convention) {
    if (n_servers < 1) throw InvalidInputError("erlang_c needs at least one server");
    if (rho <= 0) throw InvalidInputError("erlang_c needs rho in (0,1)");
    if (rho >= 1) {
        throw UnstableQueueError("utilization " + std::to_string(rho) + " >= 1");
    }

    // Erlang-B recurrence on offered load a = N*rho, then the standard
    // conversion; the as-printed variant differs by a (1-rho) factor.
    const double offered = n_servers * rho;
    double blocking = 1.0;
    for (int k = 1; k <= n_servers; ++k) {
        blocking = offered * blocking / (k + offered * blocking);
    }
    const double textbook = blocking / (1.0 - rho * (1.0 - blocking));
    return convention == ErlangConvention::Textbook ? textbook : textbook * (1.0 - rho);
}

double queue_wait(int n_servers, double rho, double arrival_rate, ErlangConvention convention) {
    if (arrival_rate <= 0) throw InvalidInputError("queue_wait needs a positive arrival rate");
    const double c = erlang_c(n_servers, rho, convention);
    return c * rho / (arrival_rate * (1.0 - rho));
}

double compute_latency(int n_servers, double capacity_hz, double arrival_rate, double alpha,
                       double task_cycles, ErlangConvention convention) {
    if (capacity_hz <= 0) throw InvalidInputError("compute_latency needs positive capacity");
    const double execution = task_cycles / capacity_hz;
    if (arrival_rate <= 0) return execution;
    if (n_servers < 1) throw UnstableQueueError("arrivals but no occupied server");
    const double rho = arrival_rate / (n_servers * alpha * capacity_hz);
    return queue_wait(n_servers, rho, arrival_rate, convention) + execution;
}

}  // namespace becs::cpn
