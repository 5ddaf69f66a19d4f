#include "core/mdp/fixture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "core/common/error.hpp"
#include "core/common/util.hpp"

namespace gambitlab::mdp {

namespace {

[[noreturn]] void bad(int line_no, const std::string& why) {
    throw ConfigError("mdp fixture line " + std::to_string(line_no) + ": " + why);
}

int to_int(const std::string& tok, int line_no) {
    try {
        size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) bad(line_no, "not an integer: " + tok);
        return v;
    } catch (const std::logic_error&) {
        bad(line_no, "not an integer: " + tok);
    }
}

double to_double(const std::string& tok, int line_no) {
    try {
        size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) bad(line_no, "not a number: " + tok);
        return v;
    } catch (const std::logic_error&) {
        bad(line_no, "not a number: " + tok);
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

MdpFixture parse_mdp_fixture(const std::string& text) {
    MdpFixture fx;
    bool have_states = false;

    std::istringstream in(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        const size_t hash = raw_line.find('#');
        if (hash != std::string::npos) raw_line.erase(hash);
        const std::vector<std::string> tok = split_ws(raw_line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];

        if (kw == "states") {
            if (tok.size() != 2) bad(line_no, "expected: states N");
            fx.mdp.n_states = to_int(tok[1], line_no);
            if (fx.mdp.n_states <= 0) bad(line_no, "state count must be positive");
            fx.mdp.actions.assign(fx.mdp.n_states, {});
            fx.mdp.terminal.assign(fx.mdp.n_states, false);
            have_states = true;
            continue;
        }
        if (!have_states) bad(line_no, "'states' must come first");
        const auto check_state = [&](int s) {
            if (s < 0 || s >= fx.mdp.n_states) bad(line_no, "state out of range");
            return s;
        };

        if (kw == "terminals") {
            for (size_t i = 1; i < tok.size(); ++i) {
                fx.mdp.terminal[check_state(to_int(tok[i], line_no))] = true;
            }
        } else if (kw == "action") {
            if (tok.size() < 6 || tok[4] != "->") {
                bad(line_no, "expected: action S A U -> T:P ...");
            }
            const int s = check_state(to_int(tok[1], line_no));
            const int a = to_int(tok[2], line_no);
            if (a < 0) bad(line_no, "action index must be non-negative");
            Action act;
            act.utility = to_double(tok[3], line_no);
            for (size_t i = 5; i < tok.size(); ++i) {
                const size_t colon = tok[i].find(':');
                if (colon == std::string::npos) bad(line_no, "expected T:P, got " + tok[i]);
                act.successors.emplace_back(
                    check_state(to_int(tok[i].substr(0, colon), line_no)),
                    to_double(tok[i].substr(colon + 1), line_no));
            }
            auto& acts = fx.mdp.actions[s];
            if (static_cast<int>(acts.size()) <= a) acts.resize(a + 1);
            acts[a] = std::move(act);
        } else if (kw == "discount") {
            if (tok.size() != 2) bad(line_no, "expected: discount G");
            fx.mdp.gamma = to_double(tok[1], line_no);
        } else if (kw == "horizon") {
            if (tok.size() != 2) bad(line_no, "expected: horizon H");
            fx.mdp.horizon = to_int(tok[1], line_no);
        } else if (kw == "expect_v") {
            if (tok.size() != 3) bad(line_no, "expected: expect_v S V");
            fx.expect_v.emplace_back(check_state(to_int(tok[1], line_no)),
                                     to_double(tok[2], line_no));
        } else if (kw == "expect_gambit") {
            if (tok.size() != 3) bad(line_no, "expected: expect_gambit S A");
            fx.expect_gambit.emplace_back(check_state(to_int(tok[1], line_no)),
                                          to_int(tok[2], line_no));
        } else if (kw == "expect_skew") {
            if (tok.size() != 6) bad(line_no, "expected: expect_skew S A QSTAR SIGMA KAPPA");
            MdpFixture::SkewExpect e;
            e.s = check_state(to_int(tok[1], line_no));
            e.a = to_int(tok[2], line_no);
            e.moments.q_star = to_double(tok[3], line_no);
            e.moments.sigma = to_double(tok[4], line_no);
            e.moments.kappa = to_double(tok[5], line_no);
            fx.expect_skew.push_back(e);
        } else {
            bad(line_no, "unknown keyword: " + kw);
        }
    }
    if (!have_states) throw ConfigError("mdp fixture: missing 'states' line");

    // Sparse action indices would leave silent zero-probability placeholder
    // actions behind; reject them here with a clear message.
    for (int s = 0; s < fx.mdp.n_states; ++s) {
        for (size_t a = 0; a < fx.mdp.actions[s].size(); ++a) {
            if (fx.mdp.actions[s][a].successors.empty()) {
                throw ConfigError("mdp fixture: state " + std::to_string(s) + " action " +
                                  std::to_string(a) + " never defined");
            }
        }
    }
    fx.mdp.validate();
    return fx;
}

std::vector<std::string> check_mdp_fixture(const MdpFixture& fx) {
    constexpr double kTol = 1e-8;
    std::vector<std::string> failures;

    const Solution sol = solve(fx.mdp);

    for (const auto& [s, expected] : fx.expect_v) {
        if (std::fabs(sol.v[s] - expected) > kTol) {
            failures.push_back("V(" + std::to_string(s) + ") = " + fmt(sol.v[s]) +
                               ", expected " + fmt(expected));
        }
    }

    if (!fx.expect_gambit.empty()) {
        std::vector<std::pair<int, int>> expected = fx.expect_gambit;
        std::sort(expected.begin(), expected.end());
        const std::vector<std::pair<int, int>> got = find_gambit_actions(fx.mdp, sol);
        if (got != expected) {
            std::string msg = "gambit actions {";
            for (const auto& [s, a] : got) {
                msg += " (" + std::to_string(s) + "," + std::to_string(a) + ")";
            }
            msg += " } do not match the expected set";
            failures.push_back(msg);
        }
    }

    for (const auto& e : fx.expect_skew) {
        const Moments got = continuation_skew(fx.mdp, sol, e.s, e.a);
        if (std::fabs(got.q_star - e.moments.q_star) > kTol ||
            std::fabs(got.sigma - e.moments.sigma) > kTol ||
            std::fabs(got.kappa - e.moments.kappa) > kTol) {
            failures.push_back("continuation stats of (" + std::to_string(e.s) + "," +
                               std::to_string(e.a) + ") = {" + fmt(got.q_star) + ", " +
                               fmt(got.sigma) + ", " + fmt(got.kappa) + "}, expected {" +
                               fmt(e.moments.q_star) + ", " + fmt(e.moments.sigma) + ", " +
                               fmt(e.moments.kappa) + "}");
        }
    }

    return failures;
}

}  // namespace gambitlab::mdp
