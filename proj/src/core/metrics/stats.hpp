#pragma once

#include <vector>

namespace gambitlab {

// One continuation outcome: probability mass `p` and win probability `w`.
// The functions below evaluate their formulas verbatim on the rows they are
// given; `p` is not required to sum to 1 (raw corpus weights may not).
struct Outcome {
    double p = 0.0;
    double w = 0.0;
};

// The three distribution statistics bundled, as computed by the functions
// below on one set of rows.
struct Moments {
    double q_star = 0.0;
    double sigma = 0.0;
    double kappa = 0.0;
};

// Probability-weighted value:  sum_i p_i * w_i.
double q_star(const std::vector<Outcome>& rows);

// Weighted standard deviation around q_star: sqrt(sum_i p_i * (w_i - q*)^2).
double volatility(const std::vector<Outcome>& rows);

// Weighted third standardised moment: sum_i p_i * ((w_i - q*)/sigma)^3.
// Defined as 0 when sigma == 0 (degenerate distribution).
double skewness(const std::vector<Outcome>& rows);

// Alias surface for the report tables: identical summation to q_star, kept
// separate so raw-weight tables read naturally.
double weighted_win_prob(const std::vector<Outcome>& rows);

// Sacrifice size: value of the position before the move minus the value after
// it, both from the mover's perspective and in the same units.
double test_statistic(double value_before, double value_after);

struct BellmanCheck {
    bool violated = false;
    double gap = 0.0;  // value_before - value_after when violated, else 0
};

// Consistency probe along a forced line: with best play the mover's value may
// not drop when the move is optimal, so value_after < value_before flags a
// deliberate concession and reports the size of the drop.
BellmanCheck bellman_check(double value_before, double value_after);

struct Classification {
    bool relaxed = false;
    bool strict = false;
};

// Decides whether a position reached by a sacrifice qualifies as a trap line.
//
// `current_q` is the mover's objective value after the sacrifice, in pawns.
// `reply_values` holds the mover's value after each catalogued opponent reply
// (pawns; mate for the mover maps to +infinity, mate against to -infinity).
//
// The best replies are those attaining the minimum of `reply_values`; every
// other reply is punishable. Relaxed: the sacrifice does not stand better than
// equal and at least one punishable reply turns the value positive. Strict:
// punishable replies exist and every one of them turns the value positive.
Classification classify_gambit(double current_q, const std::vector<double>& reply_values);

}  // namespace gambitlab
