#pragma once

#include <utility>
#include <vector>

#include "core/metrics/stats.hpp"

namespace gambitlab::mdp {

// One action: immediate utility plus a sparse successor distribution.
struct Action {
    double utility = 0.0;
    std::vector<std::pair<int, double>> successors;  // (state, probability)
};

// Finite tabular decision process. Terminal states have value 0 and need no
// actions; every non-terminal state must offer at least one action.
struct TabularMdp {
    int n_states = 0;
    std::vector<std::vector<Action>> actions;  // per state
    std::vector<bool> terminal;                // per state
    double gamma = 1.0;
    int horizon = -1;  // -1: infinite horizon (value iteration)

    // Throws Error(kInternalError) on malformed structure: out-of-range
    // successors, probabilities outside [0,1] or not summing to 1 per action,
    // or a non-terminal state with no actions.
    void validate() const;
};

struct Solution {
    std::vector<std::vector<double>> q;  // q[s][a]
    std::vector<double> v;               // v[s] = max_a q[s][a]; 0 at terminals
    std::vector<int> best;               // argmax action per state (-1 at terminals);
                                         // ties resolved to the lowest index
};

// Infinite horizon: value iteration to sup-norm residual < 1e-10 (throws after
// 1e5 sweeps without convergence). Finite horizon: backward induction over
// exactly `horizon` stages.
Solution solve(const TabularMdp& m);

// Largest one-step lookahead error of `sol.v` over non-terminal states.
double bellman_residual(const TabularMdp& m, const Solution& sol);

// Sacrifice-shaped actions: Q(s,a) < 0 while every successor is reachable
// (p > 0 for all listed successors) and strictly winning (V > 0). Returned as
// (state, action) pairs in ascending order.
std::vector<std::pair<int, int>> find_gambit_actions(const TabularMdp& m,
                                                     const Solution& sol);

// Successor-value distribution statistics of one action: feeds the rows
// {p, V(successor)} through the shared moment definitions.
Moments continuation_skew(const TabularMdp& m, const Solution& sol, int s, int a);

// Ground truth by exhaustive stationary-policy enumeration (requires
// gamma < 1 so every policy has a unique value, solved by direct linear
// elimination). Intended for small instances; cost is |A|^|S| solves.
Solution brute_force_solve(const TabularMdp& m);

}  // namespace gambitlab::mdp
