#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/mdp/mdp.hpp"

namespace gambitlab::mdp {

// Text fixture: a small decision process bundled with its expected solution,
// used by the selfcheck command. Line grammar ('#' starts a comment):
//   states N
//   terminals S...
//   action S A U -> T:P [T:P ...]
//   discount G          (optional, default 1)
//   horizon H           (optional, default infinite)
//   expect_v S V
//   expect_gambit S A
//   expect_skew S A QSTAR SIGMA KAPPA
struct MdpFixture {
    TabularMdp mdp;
    std::vector<std::pair<int, double>> expect_v;
    std::vector<std::pair<int, int>> expect_gambit;  // complete expected set
    struct SkewExpect {
        int s = 0;
        int a = 0;
        Moments moments;
    };
    std::vector<SkewExpect> expect_skew;
};

// Throws ConfigError on malformed input.
MdpFixture parse_mdp_fixture(const std::string& text);

// Solves the fixture and compares against its expectations (tolerance 1e-8).
// Returns human-readable failure descriptions; empty means all green.
std::vector<std::string> check_mdp_fixture(const MdpFixture& fixture);

}  // namespace gambitlab::mdp
