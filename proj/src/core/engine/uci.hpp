#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/chess/types.hpp"
#include "core/eval/winprob.hpp"

namespace gambitlab {

class ChildProcess;

struct SearchLimits {
    int depth = 12;
};

// One principal variation reported by the engine, scored for the side to move.
struct PvLine {
    int multipv = 1;
    Score score;
    std::vector<std::string> pv;  // long-algebraic moves
};

struct SearchResult {
    Score best;                  // side-to-move perspective
    std::vector<PvLine> lines;   // ordered by multipv rank
    std::string bestmove;
};

// Per-move outcome of evaluate_moves: either a score from the mover's
// perspective or the reason this move could not be evaluated.
struct MoveEval {
    std::string uci;
    bool ok = false;
    Score score;        // mover's perspective (valid when ok)
    std::string error;  // diagnostic when !ok
};

// Synchronous driver for one engine process. The protocol handshake runs in
// the constructor; searches are explicit start/wait pairs so callers can
// overlap their own work, with `evaluate` as the common blocking shorthand.
class UciSession {
public:
    // Spawns and handshakes. `handshake_timeout_ms` bounds the wait for the
    // engine to identify itself; unresponsive binaries raise EngineError.
    UciSession(const std::vector<std::string>& argv, int handshake_timeout_ms = 10000);
    ~UciSession();

    UciSession(const UciSession&) = delete;
    UciSession& operator=(const UciSession&) = delete;

    // Engine self-identification from the handshake ("id name ...").
    const std::string& identity() const { return identity_; }

    void set_option(const std::string& name, const std::string& value);
    void new_game();

    // Kicks off a search from `fen`. Throws EngineError if one is running.
    void start_search(const std::string& fen, const SearchLimits& limits);
    bool search_running() const { return busy_; }

    // Blocks until bestmove arrives (or `timeout_ms` passes: EngineError).
    SearchResult wait_result(int timeout_ms = 60000);

    SearchResult evaluate(const std::string& fen, const SearchLimits& limits,
                          int timeout_ms = 60000);

    // Scores every given move of `pos` by searching the position after the
    // move and flipping the score to the mover's perspective. Failures are
    // reported per move, never thrown.
    std::vector<MoveEval> evaluate_moves(const Position& pos,
                                         const std::vector<Move>& moves,
                                         const SearchLimits& limits,
                                         int timeout_ms = 60000);

    void quit();

private:
    std::unique_ptr<ChildProcess> child_;
    std::string identity_;
    bool busy_ = false;
};

}  // namespace gambitlab
