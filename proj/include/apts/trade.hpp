#pragma once

#include <span>
#include <vector>

#include "apts/series.hpp"

namespace apts {

/// Four-component wealth state z(t) = (shares, cash, position, wealth).
/// position -1 holds only cash (shares == 0, wealth == cash);
/// position +1 holds only stock (cash == 0, wealth == shares * price).
struct TradeState {
    double shares = 0.0;
    double cash = 0.0;
    std::int8_t position = -1;
    double wealth = 0.0;
};

struct StepSuccessors {
    TradeState cash_successor;  ///< transition with control u = -1
    TradeState stock_successor; ///< transition with control u = +1
};

/// One step of the wealth dynamics: both successors of `state` when the price
/// moves from price_t to price_next under linear transaction cost eps.
/// Buying converts cash at price_t with cost factor (1-eps); the stock
/// successor's wealth already uses price_next (one-step hindsight).
StepSuccessors step_transitions(const TradeState& state, double price_t, double price_next,
                                double eps);

struct TradeOutcome {
    SwitchSignal signal;
    double terminal_wealth = 0.0;
};

/// Wealth-maximizing binary trading trajectory on a positive price series.
///
/// Starts from cash sufficient to buy one share net of cost,
/// z(0) = (0, p0/(1-eps), -1, p0/(1-eps)). The forward recursion keeps the
/// wealth-maximizing candidate per position per time (four branches pruned to
/// two) and records parent positions; at the horizon the cash state wins only
/// on a strict comparison; parents are then backtracked into b*(t).
///
/// Pruning ties prefer the parent with the same position, so co-optimal paths
/// resolve to the fewest transactions. Comparisons are exact (no tolerance):
/// the terminal wealth equals the maximum over all 2^T control sequences.
TradeOutcome trade_full(std::span<const double> prices, double eps);

SwitchSignal trade(std::span<const double> prices, double eps);

/// Transaction cost schedule: j=0 -> 0, j=1 -> eps_min, j>=2 -> gamma_mult * eps_prev.
double epsilon_schedule(double eps_prev, double eps_min, double eps_max, double gamma_mult,
                        int j);

/// True iff 0 < L <= k_max, i.e. the epsilon iteration may stop.
bool terminate(const SwitchSignal& signal, int k_max);

struct ChannelSearchResult {
    SwitchSignal signal;
    bool degenerate = false; ///< constant channel, or L == 0 already at eps = 0
    int iterations = 0;      ///< number of trade() evaluations performed
};

/// Per-channel epsilon iteration: runs `trade` along the epsilon schedule until
/// terminate() fires, the next epsilon would leave [0, eps_max) (or reach 1),
/// or L drops to zero. When L hits zero after a positive-L round, the most
/// recent signal with L > 0 is returned (its L exceeds k_max; merge pruning
/// restores the output bound). A constant channel short-circuits to the
/// all-cash signal flagged degenerate.
ChannelSearchResult channel_search(std::span<const double> prices, const AptsConfig& cfg);

} // namespace apts
