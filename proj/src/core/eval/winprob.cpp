#include "core/eval/winprob.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace gambitlab {

namespace {

// The divisor of the logistic exponent. The self-check harness can inject a
// deliberate fault here (see `selfcheck` command docs): when the environment
// variable GAMBITLAB_SELFCHECK_FAULT equals "cp_to_winprob" the constant is
// skewed so the conversion identity checks must report a failure. The
// environment is consulted exactly once.
double exponent_divisor() {
    static const double divisor = [] {
        const char* fault = std::getenv("GAMBITLAB_SELFCHECK_FAULT");
        if (fault != nullptr && std::strcmp(fault, "cp_to_winprob") == 0) {
            return 4.2;
        }
        return 4.0;
    }();
    return divisor;
}

}  // namespace

double cp_to_winprob(double pawns) {
    return 1.0 / (1.0 + std::pow(10.0, -pawns / exponent_divisor()));
}

double winprob_to_cp(double w) {
    return exponent_divisor() * std::log10(w / (1.0 - w));
}

double score_win_prob(const Score& s) {
    if (s.is_mate) {
        return s.value > 0 ? 1.0 : 0.0;
    }
    return cp_to_winprob(s.value / 100.0);
}

std::string score_to_string(const Score& s) {
    char buf[32];
    if (s.is_mate) {
        std::snprintf(buf, sizeof(buf), "mate %d", s.value);
    } else {
        std::snprintf(buf, sizeof(buf), "cp %d", s.value);
    }
    return buf;
}

}  // namespace gambitlab
