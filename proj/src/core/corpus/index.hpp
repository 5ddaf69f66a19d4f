#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/chess/zobrist.hpp"
#include "core/notation/pgn.hpp"

namespace gambitlab {

// How often each move was chosen from each position across a game collection.
struct TransitionRow {
    std::string san;
    int count = 0;
};

struct IndexBuildStats {
    int games_indexed = 0;
    int games_skipped = 0;  // replayable-but-illegal games (on top of parse skips)
    std::vector<std::string> errors;
};

// Position-keyed move-frequency table. Positions are identified by their
// transposition key, so lines that reach the same position through different
// move orders share one entry.
class CorpusIndex {
public:
    // Replays every game and counts each (position, move) occurrence within
    // the first `max_ply` plies (0 or negative: no cap). Games that fail to
    // replay are counted in `stats` and skipped; SAN is re-rendered in
    // canonical form before counting.
    static CorpusIndex build(const std::vector<PgnGame>& games, int max_ply,
                             IndexBuildStats* stats);

    // Number of games that reached `key` and played a move from it.
    int games_at(PositionKey key) const;

    // All observed continuations, most frequent first (ties by SAN).
    // Throws CorpusError when fewer than `min_games` games reached the
    // position: too thin to estimate move probabilities.
    std::vector<TransitionRow> query_transitions(PositionKey key, int min_games) const;

    int games_indexed() const { return games_indexed_; }
    int positions() const { return static_cast<int>(table_.size()); }
    long long transitions() const;

    // Stable identity of the indexed data (checksum of the serialised table);
    // reports record it so results can be traced to their corpus.
    std::string id() const;

    void save(const std::string& path) const;
    static CorpusIndex load(const std::string& path);  // throws CorpusError
    std::string serialize() const;

private:
    std::map<PositionKey, std::map<std::string, int>> table_;
    int games_indexed_ = 0;
};

// Keeps the `k` most frequent rows of an already-sorted query result.
// Non-positive `k` means no restriction (callers validate their own limits).
std::vector<TransitionRow> restrict_top_k(const std::vector<TransitionRow>& rows, int k);

}  // namespace gambitlab
