#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "core/chess/zobrist.hpp"
#include "core/eval/winprob.hpp"

namespace gambitlab {

// Persistent (position, depth) -> score store. A cache remembers which engine
// produced it; mixing scores from different engines is refused so cached runs
// stay reproducible.
class EvalCache {
public:
    // Missing file: empty cache. Unreadable or corrupt file: ConfigError.
    static EvalCache load(const std::string& path);

    const std::string& identity() const { return identity_; }

    // Records the engine identity; throws EngineError if the cache already
    // belongs to a different engine.
    void bind_identity(const std::string& identity);

    std::optional<Score> get(PositionKey key, int depth) const;
    void put(PositionKey key, int depth, const Score& score);

    bool dirty() const { return dirty_; }
    int size() const { return static_cast<int>(entries_.size()); }

    // Writes sorted rows atomically; no-op when nothing changed.
    void save(const std::string& path);

private:
    std::map<std::pair<PositionKey, int>, Score> entries_;
    std::string identity_;
    bool dirty_ = false;
};

}  // namespace gambitlab
