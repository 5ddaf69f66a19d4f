#pragma once

#include <memory>
#include <string>

#include "core/chess/types.hpp"
#include "core/engine/cache.hpp"
#include "core/engine/uci.hpp"
#include "core/pipeline/config.hpp"

namespace gambitlab {

// Cache-first scorer. The engine process is launched lazily on the first
// cache miss, so a run whose positions are fully cached never spawns one.
class Evaluator {
public:
    explicit Evaluator(const RunConfig& cfg);

    // Engine score of `pos` at the configured depth, side-to-move perspective.
    Score eval(const Position& pos);

    // Identity of whatever produced the scores: the cache's recorded engine
    // when present, otherwise the live engine (launching it if needed).
    std::string identity();

    int depth() const { return cfg_.depth; }
    bool engine_launched() const { return session_ != nullptr; }
    int cache_hits() const { return cache_hits_; }
    int cache_misses() const { return cache_misses_; }

    // Persists new scores; called once per command after all analysis.
    void flush();

private:
    void ensure_engine();

    RunConfig cfg_;
    EvalCache cache_;
    std::unique_ptr<UciSession> session_;
    int cache_hits_ = 0;
    int cache_misses_ = 0;
};

}  // namespace gambitlab
