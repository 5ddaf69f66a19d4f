#include "core/mdp/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/common/error.hpp"

namespace gambitlab::mdp {

namespace {

constexpr double kConvergenceTol = 1e-10;
constexpr int kMaxSweeps = 100000;

double action_backup(const Action& act, const std::vector<double>& v, double gamma) {
    double exp_v = 0.0;
    for (const auto& [t, p] : act.successors) exp_v += p * v[t];
    return act.utility + gamma * exp_v;
}

// Solves ax = b in place by Gaussian elimination with partial pivoting.
std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
        }
        if (std::fabs(a[pivot][col]) < 1e-12) {
            throw Error(ExitCode::kInternalError, "singular policy evaluation system");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int row = col + 1; row < n; ++row) {
            const double f = a[row][col] / a[col][col];
            if (f == 0.0) continue;
            for (int k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (int row = n - 1; row >= 0; --row) {
        double sum = b[row];
        for (int k = row + 1; k < n; ++k) sum -= a[row][k] * x[k];
        x[row] = sum / a[row][row];
    }
    return x;
}

Solution solution_from_values(const TabularMdp& m, const std::vector<double>& v) {
    Solution sol;
    sol.v = v;
    sol.q.resize(m.n_states);
    sol.best.assign(m.n_states, -1);
    for (int s = 0; s < m.n_states; ++s) {
        if (m.terminal[s]) {
            sol.v[s] = 0.0;
            continue;
        }
        const auto& acts = m.actions[s];
        sol.q[s].resize(acts.size());
        for (size_t a = 0; a < acts.size(); ++a) {
            sol.q[s][a] = action_backup(acts[a], v, m.gamma);
        }
        sol.best[s] = static_cast<int>(
            std::max_element(sol.q[s].begin(), sol.q[s].end()) - sol.q[s].begin());
        sol.v[s] = sol.q[s][sol.best[s]];
    }
    return sol;
}

}  // namespace

void TabularMdp::validate() const {
    if (n_states <= 0 || static_cast<int>(actions.size()) != n_states ||
        static_cast<int>(terminal.size()) != n_states) {
        throw Error(ExitCode::kInternalError, "mdp: inconsistent state tables");
    }
    for (int s = 0; s < n_states; ++s) {
        if (terminal[s]) {
            if (!actions[s].empty()) {
                throw Error(ExitCode::kInternalError,
                            "mdp: terminal state " + std::to_string(s) + " has actions");
            }
            continue;
        }
        if (actions[s].empty()) {
            throw Error(ExitCode::kInternalError,
                        "mdp: non-terminal state " + std::to_string(s) + " has no actions");
        }
        for (const Action& act : actions[s]) {
            double sum = 0.0;
            for (const auto& [t, p] : act.successors) {
                if (t < 0 || t >= n_states) {
                    throw Error(ExitCode::kInternalError,
                                "mdp: successor state out of range: " + std::to_string(t));
                }
                if (p < 0.0 || p > 1.0 + 1e-9) {
                    throw Error(ExitCode::kInternalError, "mdp: bad transition probability");
                }
                sum += p;
            }
            if (std::fabs(sum - 1.0) > 1e-9) {
                throw Error(ExitCode::kInternalError,
                            "mdp: transition probabilities do not sum to 1 in state " +
                                std::to_string(s));
            }
        }
    }
    if (gamma < 0.0 || gamma > 1.0) {
        throw Error(ExitCode::kInternalError, "mdp: discount outside [0, 1]");
    }
}

Solution solve(const TabularMdp& m) {
    m.validate();
    std::vector<double> v(m.n_states, 0.0);

    if (m.horizon >= 0) {
        if (m.horizon == 0) {
            // Zero stages: nothing is collected, every action value is zero.
            Solution sol;
            sol.v.assign(m.n_states, 0.0);
            sol.q.resize(m.n_states);
            sol.best.assign(m.n_states, -1);
            for (int s = 0; s < m.n_states; ++s) {
                if (m.terminal[s]) continue;
                sol.q[s].assign(m.actions[s].size(), 0.0);
                sol.best[s] = 0;
            }
            return sol;
        }
        // Run horizon-1 backups here; solution_from_values applies the last
        // one while deriving the action values, for exactly `horizon` stages.
        for (int stage = 0; stage + 1 < m.horizon; ++stage) {
            std::vector<double> next(m.n_states, 0.0);
            for (int s = 0; s < m.n_states; ++s) {
                if (m.terminal[s]) continue;
                double best = -std::numeric_limits<double>::infinity();
                for (const Action& act : m.actions[s]) {
                    best = std::max(best, action_backup(act, v, m.gamma));
                }
                next[s] = best;
            }
            v = std::move(next);
        }
        return solution_from_values(m, v);
    }

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double residual = 0.0;
        std::vector<double> next(m.n_states, 0.0);
        for (int s = 0; s < m.n_states; ++s) {
            if (m.terminal[s]) continue;
            double best = -std::numeric_limits<double>::infinity();
            for (const Action& act : m.actions[s]) {
                best = std::max(best, action_backup(act, v, m.gamma));
            }
            next[s] = best;
            residual = std::max(residual, std::fabs(next[s] - v[s]));
        }
        v = std::move(next);
        if (residual < kConvergenceTol) {
            return solution_from_values(m, v);
        }
    }
    throw Error(ExitCode::kInternalError, "mdp: value iteration did not converge");
}

double bellman_residual(const TabularMdp& m, const Solution& sol) {
    double residual = 0.0;
    for (int s = 0; s < m.n_states; ++s) {
        if (m.terminal[s]) continue;
        double best = -std::numeric_limits<double>::infinity();
        for (const Action& act : m.actions[s]) {
            best = std::max(best, action_backup(act, sol.v, m.gamma));
        }
        residual = std::max(residual, std::fabs(sol.v[s] - best));
    }
    return residual;
}

std::vector<std::pair<int, int>> find_gambit_actions(const TabularMdp& m,
                                                     const Solution& sol) {
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s < m.n_states; ++s) {
        if (m.terminal[s]) continue;
        for (size_t a = 0; a < m.actions[s].size(); ++a) {
            if (sol.q[s][a] >= 0.0) continue;
            bool all_winning = !m.actions[s][a].successors.empty();
            for (const auto& [t, p] : m.actions[s][a].successors) {
                if (p > 0.0 && sol.v[t] <= 0.0) {
                    all_winning = false;
                    break;
                }
            }
            if (all_winning) out.emplace_back(s, static_cast<int>(a));
        }
    }
    return out;
}

Moments continuation_skew(const TabularMdp& m, const Solution& sol, int s, int a) {
    std::vector<Outcome> rows;
    for (const auto& [t, p] : m.actions.at(s).at(a).successors) {
        rows.push_back({p, sol.v[t]});
    }
    return {q_star(rows), volatility(rows), skewness(rows)};
}

Solution brute_force_solve(const TabularMdp& m) {
    m.validate();
    if (m.gamma >= 1.0) {
        throw Error(ExitCode::kInternalError,
                    "mdp: exhaustive policy evaluation requires discount < 1");
    }

    // Map non-terminal states to dense indices for the linear systems.
    std::vector<int> dense(m.n_states, -1);
    std::vector<int> states;
    for (int s = 0; s < m.n_states; ++s) {
        if (!m.terminal[s]) {
            dense[s] = static_cast<int>(states.size());
            states.push_back(s);
        }
    }
    const int n = static_cast<int>(states.size());

    std::vector<double> best_v(m.n_states, 0.0);
    std::vector<int> choice(n, 0);
    bool first = true;
    while (true) {
        // Evaluate the stationary policy `choice`: (I - gamma P) V = u.
        std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
        std::vector<double> b(n, 0.0);
        for (int i = 0; i < n; ++i) {
            const Action& act = m.actions[states[i]][choice[i]];
            a[i][i] = 1.0;
            b[i] = act.utility;
            for (const auto& [t, p] : act.successors) {
                if (dense[t] >= 0) a[i][dense[t]] -= m.gamma * p;
            }
        }
        const std::vector<double> v = solve_linear(std::move(a), std::move(b));
        for (int i = 0; i < n; ++i) {
            if (first || v[i] > best_v[states[i]]) best_v[states[i]] = v[i];
        }
        first = false;

        int pos = 0;
        while (pos < n) {
            if (++choice[pos] < static_cast<int>(m.actions[states[pos]].size())) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }

    return solution_from_values(m, best_v);
}

}  // namespace gambitlab::mdp
