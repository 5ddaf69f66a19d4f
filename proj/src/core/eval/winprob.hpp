#pragma once

#include <string>

namespace gambitlab {

// Logistic map between pawn advantage and win probability:
//   w = 1 / (1 + 10^(-pawns/4)),   pawns = 4 * log10(w / (1 - w))
// The argument is in pawn units (1.00 = one pawn), not raw centipawns.
double cp_to_winprob(double pawns);
double winprob_to_cp(double w);

// Engine score from the side to move's perspective.
struct Score {
    bool is_mate = false;
    int value = 0;  // centipawns, or signed mate distance in moves

    Score negated() const { return {is_mate, -value}; }
    double pawns() const { return value / 100.0; }

    bool operator==(const Score&) const = default;
};

// Win probability of the side the score is expressed for; mates saturate.
double score_win_prob(const Score& s);

std::string score_to_string(const Score& s);  // "cp -57" / "mate 5"

}  // namespace gambitlab
