#ifndef BECS_CPN_QUEUEING_HPP
#define BECS_CPN_QUEUEING_HPP

namespace becs::cpn {

/// The service model's waiting-probability formula differs from the textbook
/// Erlang C by a (1-rho) factor in the numerator. AsPrinted evaluates the
/// formula exactly as the model states it; Textbook selects the classical
/// Erlang C for cross-checks against M/M/c theory.
enum class ErlangConvention { AsPrinted, Textbook };

/// Erlang waiting probability for n servers at utilization rho in (0,1).
/// Computed through the Erlang-B recurrence, never raw factorials.
/// Throws InvalidInputError for n < 1 and UnstableQueueError for rho >= 1.
double erlang_c(int n_servers, double rho, ErlangConvention convention = ErlangConvention::AsPrinted);

/// Mean queueing delay term C(N,rho)·rho / (lambda·(1-rho)).
double queue_wait(int n_servers, double rho, double arrival_rate,
                  ErlangConvention convention = ErlangConvention::AsPrinted);

/// Average per-task latency at a layer: queueing wait plus execution time
/// task_cycles / capacity_hz, with rho = arrival_rate / (n·alpha·capacity).
/// arrival_rate == 0 reduces to pure execution time.
double compute_latency(int n_servers, double capacity_hz, double arrival_rate, double alpha,
                       double task_cycles,
                       ErlangConvention convention = ErlangConvention::AsPrinted);

}  // namespace becs::cpn

#endif  // BECS_CPN_QUEUEING_HPP
