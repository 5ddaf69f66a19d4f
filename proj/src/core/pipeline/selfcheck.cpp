// The `selfcheck` command: recomputes a battery of internal identities with
// independent arithmetic and compares. A deliberately planted fault (see the
// GAMBITLAB_SELFCHECK_FAULT environment hook in the conversion module) must
// surface here as a FAIL line, which is how the harness itself is tested.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <random>
#include <vector>

#include "core/chess/board.hpp"
#include "core/common/error.hpp"
#include "core/common/util.hpp"
#include "core/eval/winprob.hpp"
#include "core/mdp/fixture.hpp"
#include "core/metrics/stats.hpp"
#include "core/notation/fen.hpp"
#include "core/pipeline/commands.hpp"

namespace gambitlab {

namespace {

// Mirror of fixtures/selfcheck.mdp so the command works with no files at all.
constexpr const char* kBuiltinMdpFixture = R"(# Built-in tabular MDP fixture.
states 5
terminals 3 4
action 0 0 0.1 -> 3:1
action 0 1 -1.0 -> 1:0.5 2:0.5
action 1 0 0.6 -> 3:1
action 2 0 0.8 -> 4:1
discount 1
expect_v 0 0.1
expect_v 1 0.6
expect_v 2 0.8
expect_gambit 0 1
expect_skew 0 1 0.7 0.1 0
)";

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

class Checker {
public:
    explicit Checker(std::ostream& out) : out_(out) {}

    void pass(const std::string& name) { out_ << "ok " << name << "\n"; }

    void fail(const std::string& name, const std::string& detail) {
        out_ << "FAIL " << name << ": " << detail << "\n";
        failed_ = true;
    }

    void result(const std::string& name, bool ok, const std::string& detail) {
        if (ok) {
            pass(name);
        } else {
            fail(name, detail);
        }
    }

    bool any_failed() const { return failed_; }

private:
    std::ostream& out_;
    bool failed_ = false;
};

// Independent logistic: same map written with exp/ln instead of pow/log10.
double reference_winprob(double pawns) {
    return 1.0 / (1.0 + std::exp(-std::log(10.0) * pawns / 4.0));
}

void check_conversion(Checker& ck) {
    double worst = 0.0;
    double worst_at = 0.0;
    for (int i = -100; i <= 100; ++i) {
        const double pawns = i / 10.0;
        const double diff = std::fabs(cp_to_winprob(pawns) - reference_winprob(pawns));
        if (diff > worst) {
            worst = diff;
            worst_at = pawns;
        }
    }
    // Exact anchors: 0 -> 1/2 and +-4 pawns -> 10/11 and 1/11.
    worst = std::max(worst, std::fabs(cp_to_winprob(0.0) - 0.5));
    worst = std::max(worst, std::fabs(cp_to_winprob(4.0) - 10.0 / 11.0));
    worst = std::max(worst, std::fabs(cp_to_winprob(-4.0) - 1.0 / 11.0));
    ck.result("cp_to_winprob", worst < 1e-12,
              "deviates from the reference logistic by " + num(worst) + " at " +
                  num(worst_at) + " pawns");

    double worst_rt = 0.0;
    bool monotone = true;
    double prev = 0.0;
    for (int i = 1; i <= 99; ++i) {
        const double w = i / 100.0;
        worst_rt = std::max(worst_rt, std::fabs(cp_to_winprob(winprob_to_cp(w)) - w));
        const double cur = cp_to_winprob((i - 50) / 10.0);
        if (i > 1 && cur <= prev) monotone = false;
        prev = cur;
    }
    ck.result("winprob_roundtrip", worst_rt < 1e-12 && monotone,
              "max roundtrip error " + num(worst_rt) +
                  (monotone ? "" : "; conversion is not monotone"));
}

void check_moments(Checker& ck) {
    std::mt19937 rng(20240101u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> size_dist(1, 8);

    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = size_dist(rng);
        std::vector<Outcome> rows(n);
        double mass = 0.0;
        for (Outcome& r : rows) {
            r.p = unit(rng);
            r.w = unit(rng);
            mass += r.p;
        }
        if (trial % 2 == 0) {  // half the trials use normalised weights
            for (Outcome& r : rows) r.p /= mass;
        }

        // Straight re-derivation in extended precision.
        long double q = 0.0L, var = 0.0L, third = 0.0L;
        for (const Outcome& r : rows) q += (long double)r.p * r.w;
        for (const Outcome& r : rows) {
            const long double d = (long double)r.w - q;
            var += (long double)r.p * d * d;
        }
        const long double sigma = sqrtl(var);
        if (sigma > 0.0L) {
            for (const Outcome& r : rows) {
                const long double z = ((long double)r.w - q) / sigma;
                third += (long double)r.p * z * z * z;
            }
        }

        worst = std::max(worst, std::fabs(q_star(rows) - (double)q));
        worst = std::max(worst, std::fabs(volatility(rows) - (double)sigma));
        worst = std::max(worst, std::fabs(skewness(rows) - (double)third));
    }
    ck.result("moment_definitions", worst < 1e-12,
              "summation mismatch up to " + num(worst));

    // Worked examples with closed-form answers.
    const std::vector<Outcome> even = {{0.5, 0.4}, {0.5, 0.6}};
    const std::vector<Outcome> single = {{1.0, 0.7}};
    const bool examples_ok = std::fabs(q_star(even) - 0.5) < 1e-15 &&
                             std::fabs(volatility(even) - 0.1) < 1e-15 &&
                             std::fabs(skewness(even)) < 1e-12 &&
                             volatility(single) == 0.0 && skewness(single) == 0.0;
    ck.result("moment_examples", examples_ok,
              "two-point/one-point distributions give unexpected statistics");
}

void check_movegen(Checker& ck) {
    const Position start = Position::start();
    const std::uint64_t n4 = perft(start, 4);
    const Position busy = parse_fen(
        "r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq -");
    const std::uint64_t b2 = perft(busy, 2);
    ck.result("movegen_spot", n4 == 197281 && b2 == 2039,
              "perft(start,4) = " + std::to_string(n4) + " (want 197281), " +
                  "perft(busy,2) = " + std::to_string(b2) + " (want 2039)");
}

void check_mdp_fixture_file(Checker& ck, const RunConfig& cfg) {
    std::string text = kBuiltinMdpFixture;
    if (!cfg.mdp_path.empty()) {
        try {
            text = read_file(cfg.mdp_path);
        } catch (const Error&) {
            throw ConfigError("cannot read mdp fixture: " + cfg.mdp_path);
        }
    }
    const mdp::MdpFixture fx = mdp::parse_mdp_fixture(text);
    const std::vector<std::string> failures = mdp::check_mdp_fixture(fx);
    if (failures.empty()) {
        ck.pass("mdp_fixture");
    } else {
        for (const std::string& f : failures) ck.fail("mdp_fixture", f);
    }
}

mdp::TabularMdp random_mdp(std::mt19937& rng) {
    std::uniform_int_distribution<int> state_count(2, 4);
    std::uniform_int_distribution<int> action_count(1, 3);
    std::uniform_real_distribution<double> utility(-1.0, 1.0);
    std::uniform_real_distribution<double> unit(0.05, 1.0);

    mdp::TabularMdp m;
    m.n_states = state_count(rng);
    m.gamma = 0.9;
    m.terminal.assign(m.n_states, false);
    m.terminal[m.n_states - 1] = true;  // one absorbing terminal
    m.actions.resize(m.n_states);
    for (int s = 0; s + 1 < m.n_states; ++s) {
        const int n_actions = action_count(rng);
        for (int a = 0; a < n_actions; ++a) {
            mdp::Action act;
            act.utility = utility(rng);
            double mass = 0.0;
            std::vector<double> weights(m.n_states);
            for (int t = 0; t < m.n_states; ++t) {
                weights[t] = unit(rng);
                mass += weights[t];
            }
            for (int t = 0; t < m.n_states; ++t) {
                act.successors.emplace_back(t, weights[t] / mass);
            }
            m.actions[s].push_back(act);
        }
    }
    return m;
}

void check_mdp_bruteforce(Checker& ck) {
    std::mt19937 rng(987654321u);
    double worst_gap = 0.0;
    double worst_residual = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const mdp::TabularMdp m = random_mdp(rng);
        const mdp::Solution fast = mdp::solve(m);
        const mdp::Solution exact = mdp::brute_force_solve(m);
        for (int s = 0; s < m.n_states; ++s) {
            worst_gap = std::max(worst_gap, std::fabs(fast.v[s] - exact.v[s]));
        }
        worst_residual = std::max(worst_residual, mdp::bellman_residual(m, fast));
    }
    ck.result("mdp_bruteforce", worst_gap < 1e-8 && worst_residual < 1e-9,
              "iterative vs exhaustive value gap " + num(worst_gap) +
                  ", fixed-point residual " + num(worst_residual));
}

}  // namespace

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Checker ck(out);
        check_conversion(ck);
        check_moments(ck);
        check_movegen(ck);
        check_mdp_fixture_file(ck, cfg);
        check_mdp_bruteforce(ck);
        if (ck.any_failed()) {
            err << "selfcheck failed\n";
            return kInternalError;
        }
        out << "all checks passed\n";
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace gambitlab
