#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/chess/types.hpp"
#include "core/eval/winprob.hpp"
#include "core/metrics/stats.hpp"

namespace gambitlab {

// A named opening line whose last configured "gambit ply" is the sacrifice.
struct GambitSpecDef {
    std::string name;
    std::string movetext;  // SAN mainline, e.g. "e4 e5 Nf3 Nf6 Nxe5 Nc6"
    int gambit_ply = 0;    // 1-based ply index of the sacrifice move
    Color gambiteer = Color::White;
    int top_k = 5;         // continuations kept per position
    std::optional<double> ref_skew;
    std::optional<double> ref_volatility;
    std::optional<double> ref_current_q;
    std::optional<double> ref_pre_q;
};

// One catalogued opponent reply in the post-sacrifice position.
struct ContinuationRow {
    std::string san;
    int games = 0;
    double p_raw = 0.0;     // games / games reaching the position
    double p_renorm = 0.0;  // games / games within the kept top-k rows
    Score score;            // engine score after the reply, mover's perspective
    double win_prob = 0.0;  // mover's win probability after the reply
};

// One point of the mainline evaluation trace, mover's perspective throughout.
struct QPoint {
    int ply = 0;            // 0 = starting position
    std::string san;        // move that produced this position ("-" at ply 0)
    Score score;
    double win_prob = 0.0;
};

struct GambitReport {
    GambitSpecDef spec;
    std::string final_fen;      // position after the full configured line
    std::string final_key_hex;  // transposition key of that position
    int total_games = 0;        // corpus games reaching the final position
    double current_q = 0.0;     // pawns, gambiteer perspective, final position
    double pre_q = 0.0;         // pawns, gambiteer perspective, before the sacrifice
    double t_stat = 0.0;        // pre_q - current_q (sacrifice size)
    std::vector<ContinuationRow> rows;
    Moments renorm;             // win-probability scale, renormalised weights
    Moments raw;                // win-probability scale, raw weights
    Moments pawn_renorm;        // pawn scale, mate rows dropped, re-renormalised
    double wwp_renorm = 0.0;    // weighted_win_prob under renormalised weights
    double wwp_raw = 0.0;       // weighted_win_prob under raw weights
    Classification cls;
    std::vector<QPoint> qseries;
    std::string engine_identity;
    int depth = 0;
    std::string corpus_id;
    std::string mode;           // "raw" or "renorm" (active weighting)

    const Moments& mode_moments() const { return mode == "raw" ? raw : renorm; }
    double mode_wwp() const { return mode == "raw" ? wwp_raw : wwp_renorm; }
};

enum class RankKey {
    kInitialQ,    // computed current_q, ascending
    kSkew,        // reference-annotated reports first (by reference), then computed
    kVolatility,  // same two-tier scheme on volatility
};

// Stable, total ordering: primary key per RankKey, all ties broken by name.
// Returns non-owning pointers into `reports`; input order never matters.
std::vector<const GambitReport*> rank_gambits(const std::vector<GambitReport>& reports,
                                              RankKey key);

// Plain unweighted means over whatever reports the caller passes in (the
// pipeline passes the trap-qualified ones). `mode` selects which weighting's
// moments and probabilities feed the averages.
struct AggregateSummary {
    int n = 0;
    double mean_current_q = 0.0;
    double mean_pre_q = 0.0;
    double mean_cont_q = 0.0;      // pawn scale: per-report plain mean over non-mate rows
    double mean_kappa = 0.0;       // win-probability scale, mode weighting
    double mean_sigma = 0.0;
    double mean_player_prob = 0.0; // per-report plain mean of row probability
    double mean_win_prob = 0.0;    // per-report plain mean of row win probability
    double mean_wwp = 0.0;
    double prod_player_win = 0.0;  // mean_player_prob * mean_win_prob
};

AggregateSummary aggregate_summary(const std::vector<const GambitReport*>& reports,
                                   const std::string& mode);

}  // namespace gambitlab
