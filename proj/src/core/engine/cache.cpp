#include "core/engine/cache.hpp"

#include <filesystem>
#include <sstream>

#include "core/common/error.hpp"
#include "core/common/util.hpp"

namespace gambitlab {

namespace {
constexpr const char* kMagic = "gambitlab-cache v1";
}

EvalCache EvalCache::load(const std::string& path) {
    EvalCache cache;
    if (!std::filesystem::exists(path)) return cache;

    const std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    const auto fail = [&](const std::string& why) -> void {
        throw ConfigError(path + " line " + std::to_string(line_no) + ": " + why);
    };

    if (!std::getline(in, line) || line != kMagic) {
        throw ConfigError(path + ": not an evaluation cache file");
    }
    line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        try {
            if (tok[0] == "engine") {
                cache.identity_ = trim(line.substr(6));
            } else if (tok.size() == 4 && (tok[2] == "cp" || tok[2] == "mate")) {
                const PositionKey key =
                    static_cast<PositionKey>(std::stoull(tok[0], nullptr, 16));
                const int depth = std::stoi(tok[1]);
                cache.entries_[{key, depth}] = Score{tok[2] == "mate", std::stoi(tok[3])};
            } else {
                fail("unrecognised row");
            }
        } catch (const std::logic_error&) {
            fail("malformed number");
        }
    }
    return cache;
}

void EvalCache::bind_identity(const std::string& identity) {
    if (identity_.empty()) {
        identity_ = identity;
        dirty_ = true;
        return;
    }
    if (identity_ != identity) {
        throw EngineError("evaluation cache belongs to engine '" + identity_ +
                          "' but the running engine is '" + identity + "'");
    }
}

std::optional<Score> EvalCache::get(PositionKey key, int depth) const {
    const auto it = entries_.find({key, depth});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void EvalCache::put(PositionKey key, int depth, const Score& score) {
    auto [it, inserted] = entries_.insert_or_assign({key, depth}, score);
    (void)it;
    dirty_ = true;
    (void)inserted;
}

void EvalCache::save(const std::string& path) {
    if (!dirty_) return;
    std::ostringstream out;
    out << kMagic << '\n';
    if (!identity_.empty()) out << "engine " << identity_ << '\n';
    for (const auto& [key, score] : entries_) {
        out << to_hex16(key.first) << ' ' << key.second << ' '
            << (score.is_mate ? "mate" : "cp") << ' ' << score.value << '\n';
    }
    atomic_write_file(path, out.str());
    dirty_ = false;
}

}  // namespace gambitlab
