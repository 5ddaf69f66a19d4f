#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "core/common/error.hpp"
#include "core/mdp/fixture.hpp"
#include "core/mdp/mdp.hpp"
#include "doctest.h"

using namespace gambitlab;
using namespace gambitlab::mdp;

namespace {

// Absorbing terminal 1; state 0 chooses between a safe and a sacrificial move.
TabularMdp two_state() {
    TabularMdp m;
    m.n_states = 2;
    m.terminal = {false, true};
    m.actions.resize(2);
    m.actions[0].push_back({1.0, {{1, 1.0}}});
    m.gamma = 1.0;
    return m;
}

TabularMdp random_mdp(std::mt19937& rng) {
    std::uniform_real_distribution<double> uu(-1.0, 1.0);
    TabularMdp m;
    m.n_states = 2 + static_cast<int>(rng() % 3);  // 2..4
    m.gamma = 0.9;
    m.terminal.assign(m.n_states, false);
    m.terminal[m.n_states - 1] = true;  // one absorbing terminal
    m.actions.resize(m.n_states);
    for (int s = 0; s < m.n_states - 1; ++s) {
        const int n_actions = 1 + static_cast<int>(rng() % 3);
        for (int a = 0; a < n_actions; ++a) {
            Action act;
            act.utility = uu(rng);
            const int n_succ = 1 + static_cast<int>(rng() % 2);
            double total = 0;
            std::vector<double> mass(n_succ);
            for (double& x : mass) {
                x = 0.05 + (rng() % 100) / 100.0;
                total += x;
            }
            for (int k = 0; k < n_succ; ++k) {
                const int t = static_cast<int>(rng() % m.n_states);
                act.successors.emplace_back(t, mass[k] / total);
            }
            // Merge duplicate successor states so probabilities stay clean.
            std::sort(act.successors.begin(), act.successors.end());
            std::vector<std::pair<int, double>> merged;
            for (const auto& [t, p] : act.successors) {
                if (!merged.empty() && merged.back().first == t)
                    merged.back().second += p;
                else
                    merged.emplace_back(t, p);
            }
            act.successors = merged;
            m.actions[s].push_back(act);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("two state chain solves by hand") {
    const TabularMdp m = two_state();
    const Solution sol = solve(m);
    CHECK(sol.v[0] == doctest::Approx(1.0));
    CHECK(sol.v[1] == 0.0);
    CHECK(sol.best[0] == 0);
    CHECK(sol.best[1] == -1);
    CHECK(bellman_residual(m, sol) < 1e-10);
}

TEST_CASE("three state chain accumulates undiscounted utility") {
    TabularMdp m;
    m.n_states = 3;
    m.terminal = {false, false, true};
    m.actions.resize(3);
    m.actions[0].push_back({1.0, {{1, 1.0}}});
    m.actions[1].push_back({2.0, {{2, 1.0}}});
    const Solution sol = solve(m);
    CHECK(sol.v[0] == doctest::Approx(3.0));
    CHECK(sol.v[1] == doctest::Approx(2.0));
}

TEST_CASE("argmax ties resolve to the lowest action index") {
    TabularMdp m;
    m.n_states = 2;
    m.terminal = {false, true};
    m.actions.resize(2);
    m.actions[0].push_back({0.5, {{1, 1.0}}});
    m.actions[0].push_back({0.5, {{1, 1.0}}});
    const Solution sol = solve(m);
    CHECK(sol.best[0] == 0);
}

TEST_CASE("finite horizon truncates the lookahead") {
    // A loop state that pays 1 per step: V under horizon h is exactly h.
    TabularMdp m;
    m.n_states = 2;
    m.terminal = {false, true};
    m.actions.resize(2);
    m.actions[0].push_back({1.0, {{0, 1.0}}});
    m.horizon = 3;
    const Solution sol = solve(m);
    CHECK(sol.v[0] == doctest::Approx(3.0));
    m.horizon = 0;
    CHECK(solve(m).v[0] == 0.0);
}

TEST_CASE("discounting geometric series") {
    TabularMdp m;
    m.n_states = 2;
    m.terminal = {false, true};
    m.actions.resize(2);
    m.actions[0].push_back({1.0, {{0, 1.0}}});
    m.gamma = 0.5;
    const Solution sol = solve(m);
    CHECK(sol.v[0] == doctest::Approx(2.0).epsilon(1e-9));  // 1/(1-gamma)
}

TEST_CASE("validation rejects malformed processes") {
    SUBCASE("non-terminal without actions") {
        TabularMdp m;
        m.n_states = 2;
        m.terminal = {false, true};
        m.actions.resize(2);
        CHECK_THROWS_AS(m.validate(), Error);
    }
    SUBCASE("terminal with actions") {
        TabularMdp m = two_state();
        m.actions[1].push_back({0.0, {{1, 1.0}}});
        CHECK_THROWS_AS(m.validate(), Error);
    }
    SUBCASE("probabilities must sum to one") {
        TabularMdp m = two_state();
        m.actions[0][0].successors = {{1, 0.7}};
        CHECK_THROWS_AS(m.validate(), Error);
    }
    SUBCASE("successor out of range") {
        TabularMdp m = two_state();
        m.actions[0][0].successors = {{7, 1.0}};
        CHECK_THROWS_AS(m.validate(), Error);
    }
}

TEST_CASE("value iteration agrees with brute force policy enumeration") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        const TabularMdp m = random_mdp(rng);
        CAPTURE(trial);
        REQUIRE_NOTHROW(m.validate());
        const Solution vi = solve(m);
        const Solution bf = brute_force_solve(m);
        for (int s = 0; s < m.n_states; ++s) {
            CHECK(vi.v[s] == doctest::Approx(bf.v[s]).epsilon(1e-8));
            for (size_t a = 0; a < vi.q[s].size(); ++a)
                CHECK(vi.q[s][a] == doctest::Approx(bf.q[s][a]).epsilon(1e-8));
        }
        CHECK(bellman_residual(m, vi) < 1e-9);
    }
}

TEST_CASE("brute force requires a discount below one") {
    TabularMdp m = two_state();
    m.gamma = 1.0;
    CHECK_THROWS_AS(brute_force_solve(m), Error);
}

TEST_CASE("sacrifice detection") {
    // State 0, action 1: pay 0.3 now for a state worth more later.
    TabularMdp m;
    m.n_states = 4;
    m.terminal = {false, false, false, true};
    m.actions.resize(4);
    m.actions[0].push_back({0.1, {{3, 1.0}}});                 // safe: Q = 0.1
    m.actions[0].push_back({-0.3, {{1, 0.5}, {2, 0.5}}});      // sacrifice
    m.actions[1].push_back({0.4, {{3, 1.0}}});                 // V(1) = 0.4
    m.actions[2].push_back({0.2, {{3, 1.0}}});                 // V(2) = 0.2
    const Solution sol = solve(m);
    CHECK(sol.q[0][1] == doctest::Approx(0.0));  // -0.3 + 0.3
    // Q exactly zero is not negative, so tighten the utility to qualify.
    m.actions[0][1].utility = -0.35;
    const Solution sol2 = solve(m);
    const auto found = find_gambit_actions(m, sol2);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == std::pair<int, int>{0, 1});

    SUBCASE("a zero-value successor disqualifies") {
        m.actions[2][0].utility = 0.0;  // V(2) becomes 0, not strictly winning
        const Solution s3 = solve(m);
        CHECK(find_gambit_actions(m, s3).empty());
    }
    SUBCASE("non-negative Q disqualifies") {
        m.actions[0][1].utility = 0.0;
        const Solution s3 = solve(m);
        CHECK(find_gambit_actions(m, s3).empty());
    }
    SUBCASE("terminal successor has value zero and disqualifies") {
        m.actions[0][1].successors = {{1, 0.5}, {3, 0.5}};
        const Solution s3 = solve(m);
        CHECK(find_gambit_actions(m, s3).empty());
    }
}

TEST_CASE("continuation statistics of an action") {
    TabularMdp m;
    m.n_states = 4;
    m.terminal = {false, false, false, true};
    m.actions.resize(4);
    m.actions[0].push_back({-0.3, {{1, 0.5}, {2, 0.5}}});
    m.actions[1].push_back({0.4, {{3, 1.0}}});
    m.actions[2].push_back({0.6, {{3, 1.0}}});
    const Solution sol = solve(m);
    const Moments mo = continuation_skew(m, sol, 0, 0);
    // Successor values 0.4 and 0.6 at even odds.
    CHECK(mo.q_star == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mo.sigma == doctest::Approx(0.1).epsilon(1e-10));
    CHECK(mo.kappa == doctest::Approx(0.0));

    SUBCASE("single successor is degenerate") {
        const Moments one = continuation_skew(m, sol, 1, 0);
        CHECK(one.q_star == doctest::Approx(0.0));  // terminal successor
        CHECK(one.sigma == doctest::Approx(0.0));
        CHECK(one.kappa == 0.0);
    }
}

TEST_CASE("utility scaling scales values linearly") {
    std::mt19937 rng(99);
    const TabularMdp base = random_mdp(rng);
    TabularMdp scaled = base;
    for (auto& acts : scaled.actions)
        for (auto& a : acts) a.utility *= 3.0;
    const Solution sb = solve(base);
    const Solution ss = solve(scaled);
    for (int s = 0; s < base.n_states; ++s)
        CHECK(ss.v[s] == doctest::Approx(3.0 * sb.v[s]).epsilon(1e-7));
}

TEST_CASE("state relabeling permutes values") {
    TabularMdp m;
    m.n_states = 3;
    m.terminal = {false, false, true};
    m.actions.resize(3);
    m.actions[0].push_back({1.0, {{1, 1.0}}});
    m.actions[1].push_back({2.0, {{2, 1.0}}});

    TabularMdp p;  // states swapped: 0<->1
    p.n_states = 3;
    p.terminal = {false, false, true};
    p.actions.resize(3);
    p.actions[1].push_back({1.0, {{0, 1.0}}});
    p.actions[0].push_back({2.0, {{2, 1.0}}});

    const Solution sm = solve(m);
    const Solution sp = solve(p);
    CHECK(sm.v[0] == doctest::Approx(sp.v[1]));
    CHECK(sm.v[1] == doctest::Approx(sp.v[0]));
}

TEST_CASE("fixture grammar round trip") {
    const char* text = R"(# tiny process
states 3
terminals 2
action 0 0 1.0 -> 1:1.0
action 1 0 2.0 -> 2:1.0
expect_v 0 3.0
expect_v 1 2.0
)";
    const MdpFixture fx = parse_mdp_fixture(text);
    CHECK(fx.mdp.n_states == 3);
    CHECK(fx.expect_v.size() == 2);
    CHECK(check_mdp_fixture(fx).empty());
}

TEST_CASE("fixture catches wrong expectations") {
    const char* text = R"(states 2
terminals 1
action 0 0 1.0 -> 1:1.0
expect_v 0 99.0
)";
    const MdpFixture fx = parse_mdp_fixture(text);
    CHECK(!check_mdp_fixture(fx).empty());
}

TEST_CASE("fixture parser rejects malformed input") {
    CHECK_THROWS_AS(parse_mdp_fixture("states nope\n"), ConfigError);
    CHECK_THROWS_AS(parse_mdp_fixture("action 0 0 1.0 -> 1:1.0\n"), ConfigError);  // no states
    CHECK_THROWS_AS(parse_mdp_fixture("states 2\nterminals 1\naction 0 1 1.0 -> 1:1.0\n"),
                    ConfigError);  // sparse action index
    CHECK_THROWS_AS(parse_mdp_fixture("states 2\nterminals 1\nbogus_line 1\n"), ConfigError);
}

TEST_CASE("fixture gambit and skew expectations are checked") {
    const char* text = R"(states 4
terminals 3
discount 1.0
action 0 0 0.1 -> 3:1.0
action 0 1 -0.5 -> 1:0.5 2:0.5
action 1 0 0.5 -> 3:1.0
action 2 0 0.3 -> 3:1.0
expect_v 0 0.1
expect_gambit 0 1
expect_skew 0 1 0.4 0.1 0.0
)";
    CHECK(check_mdp_fixture(parse_mdp_fixture(text)).empty());

    // Declaring a gambit pair that the solver does not find must fail.
    const char* wrong = R"(states 2
terminals 1
action 0 0 1.0 -> 1:1.0
expect_gambit 0 0
)";
    CHECK(!check_mdp_fixture(parse_mdp_fixture(wrong)).empty());
}
