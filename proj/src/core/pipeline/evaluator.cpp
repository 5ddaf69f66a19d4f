#include "core/pipeline/evaluator.hpp"

#include "core/chess/zobrist.hpp"
#include "core/common/error.hpp"
#include "core/notation/fen.hpp"

namespace gambitlab {

Evaluator::Evaluator(const RunConfig& cfg) : cfg_(cfg) {
    if (!cfg_.cache_path.empty()) {
        cache_ = EvalCache::load(cfg_.cache_path);
    }
}

void Evaluator::ensure_engine() {
    if (session_ != nullptr) return;
    if (cfg_.engine_argv.empty()) {
        throw EngineError("no engine configured and the score is not cached");
    }
    session_ = std::make_unique<UciSession>(cfg_.engine_argv, cfg_.handshake_timeout_ms);
    session_->set_option("MultiPV", std::to_string(cfg_.multipv));
    session_->new_game();
    cache_.bind_identity(session_->identity());
}

Score Evaluator::eval(const Position& pos) {
    const PositionKey key = position_key(pos);
    if (const auto cached = cache_.get(key, cfg_.depth)) {
        ++cache_hits_;
        return *cached;
    }
    ++cache_misses_;
    ensure_engine();
    const SearchResult r = session_->evaluate(to_fen(pos), SearchLimits{cfg_.depth});
    cache_.put(key, cfg_.depth, r.best);
    return r.best;
}

std::string Evaluator::identity() {
    if (!cache_.identity().empty()) return cache_.identity();
    if (session_ != nullptr) return session_->identity();
    return "unknown";  // hand-made cache without an engine line; never launch
                       // an engine only to label the report
}

void Evaluator::flush() {
    if (!cfg_.cache_path.empty() && cache_.dirty()) {
        cache_.save(cfg_.cache_path);
    }
}

}  // namespace gambitlab
