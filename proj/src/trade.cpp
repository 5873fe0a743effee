#include "apts/trade.hpp"

#include <algorithm>
#include <cmath>

namespace apts {

namespace {

void check_price(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw NonPositivePrice("prices must be positive and finite");
    }
}

void check_eps(double eps) {
    if (!(eps >= 0.0 && eps < 1.0)) {
        throw ConfigError("eps must lie in [0, 1)");
    }
}

} // namespace

StepSuccessors step_transitions(const TradeState& state, double price_t, double price_next,
                                double eps) {
    check_price(price_t);
    check_price(price_next);
    check_eps(eps);

    StepSuccessors out;
    if (state.position == -1) {
        out.cash_successor = {0.0, state.cash, -1, state.cash};
        const double shares = state.cash * (1.0 - eps) / price_t;
        out.stock_successor = {shares, 0.0, +1, shares * price_next};
    } else {
        const double cash = state.shares * price_t * (1.0 - eps);
        out.cash_successor = {0.0, cash, -1, cash};
        out.stock_successor = {state.shares, 0.0, +1, state.shares * price_next};
    }
    return out;
}

TradeOutcome trade_full(std::span<const double> prices, double eps) {
    check_eps(eps);
    if (prices.size() < 2) {
        throw EmptyInput("trade needs at least 2 prices");
    }
    for (double p : prices) check_price(p);

    const std::size_t T = prices.size() - 1;

    // Candidate per position per time: cash carries (c, w=c), stock carries (n, w=n*price).
    // Parent position markers drive the backtracking pass; one block, cash
    // markers in the lower half.
    std::vector<std::int8_t> parents(2 * (T + 1), -1);
    std::int8_t* parent_cash = parents.data();
    std::int8_t* parent_stock = parents.data() + (T + 1);

    double cash_c = prices[0] / (1.0 - eps); // enough cash to buy one share net of cost
    double stock_n = 0.0;
    double stock_w = 0.0;

    // t = 0 -> 1: only the cash state exists, both successors descend from it.
    {
        stock_n = cash_c * (1.0 - eps) / prices[0];
        stock_w = stock_n * prices[1];
        parent_cash[1] = -1;
        parent_stock[1] = -1;
    }

    for (std::size_t t = 1; t < T; ++t) {
        const double sell_w = stock_n * prices[t] * (1.0 - eps);
        const double stay_w = cash_c;

        const double buy_n = cash_c * (1.0 - eps) / prices[t];
        const double buy_w = buy_n * prices[t + 1];
        const double hold_w = stock_n * prices[t + 1];

        // Ties prefer the same-position parent (no transaction).
        if (sell_w > stay_w) {
            cash_c = sell_w;
            parent_cash[t + 1] = +1;
        } else {
            parent_cash[t + 1] = -1;
        }
        if (buy_w > hold_w) {
            stock_n = buy_n;
            stock_w = buy_w;
            parent_stock[t + 1] = -1;
        } else {
            stock_w = hold_w;
            parent_stock[t + 1] = +1;
        }
    }

    SwitchSignal signal;
    signal.values.assign(T + 1, -1);
    signal.epsilon_used = eps;

    // b*(T) = -1 only on a strict win of the cash state; ties go to +1.
    std::int8_t pos = (cash_c > stock_w) ? std::int8_t{-1} : std::int8_t{+1};
    double terminal = (pos == -1) ? cash_c : stock_w;
    signal.values[T] = pos;
    for (std::size_t t = T; t >= 1; --t) {
        pos = (pos == -1) ? parent_cash[t] : parent_stock[t];
        signal.values[t - 1] = pos;
    }
    signal.switch_count = count_switches(signal.values);
    return {std::move(signal), terminal};
}

SwitchSignal trade(std::span<const double> prices, double eps) {
    return trade_full(prices, eps).signal;
}

double epsilon_schedule(double eps_prev, double eps_min, double /*eps_max*/, double gamma_mult,
                        int j) {
    if (j <= 0) return 0.0;
    if (j == 1) return eps_min;
    return gamma_mult * eps_prev;
}

bool terminate(const SwitchSignal& signal, int k_max) {
    return signal.switch_count > 0 && signal.switch_count <= k_max;
}

ChannelSearchResult channel_search(std::span<const double> prices, const AptsConfig& cfg) {
    cfg.validate();
    if (prices.size() < 2) {
        throw EmptyInput("channel_search needs at least 2 prices");
    }

    const auto [lo, hi] = std::minmax_element(prices.begin(), prices.end());
    if (*lo == *hi) {
        // Constant channel: no profitable trade exists at any cost level.
        ChannelSearchResult res;
        res.signal.values.assign(prices.size(), -1);
        res.signal.epsilon_used = 0.0;
        res.signal.switch_count = 0;
        res.degenerate = true;
        return res;
    }

    // Epsilon values stay strictly below eps_max (and below 1 so that the
    // dynamics remain well posed even for eps_max > 1).
    const double eps_cap = std::min(cfg.eps_max, 1.0);

    ChannelSearchResult res;
    SwitchSignal last_positive;
    bool have_positive = false;

    double eps = 0.0;
    int j = 0;
    for (;;) {
        SwitchSignal signal = trade(prices, eps);
        ++res.iterations;

        if (terminate(signal, cfg.k_max)) {
            res.signal = std::move(signal);
            return res;
        }
        if (signal.switch_count == 0) {
            if (have_positive) {
                res.signal = std::move(last_positive);
                return res;
            }
            // L == 0 already in the first iteration (monotone non-increasing data).
            res.signal = std::move(signal);
            res.degenerate = true;
            return res;
        }
        last_positive = std::move(signal);
        have_positive = true;

        const double next_eps = epsilon_schedule(eps, cfg.eps_min, cfg.eps_max, cfg.gamma_mult, j + 1);
        if (next_eps >= eps_cap) {
            res.signal = std::move(last_positive);
            return res;
        }
        eps = next_eps;
        ++j;
    }
}

} // namespace apts
