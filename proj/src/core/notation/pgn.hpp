#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gambitlab {

struct PgnGame {
    std::vector<std::pair<std::string, std::string>> tags;
    std::vector<std::string> sans;  // mainline only; variations are skipped
    std::string result;             // from the Result tag or the movetext terminator
    std::string start_fen;          // nonempty when a FEN tag overrides the start position
    std::size_t byte_offset = 0;    // offset of the first tag line, for diagnostics
    int line_no = 0;

    const std::string* tag(const std::string& key) const {
        for (const auto& [k, v] : tags)
            if (k == key) return &v;
        return nullptr;
    }
};

struct PgnReadStats {
    int games_read = 0;
    int games_skipped = 0;
    std::vector<std::string> errors;  // one message per skipped game
};

// Reads the export subset of PGN: tag pairs, movetext with {comments},
// (variations) and $NAGs stripped, results recognized. A structurally broken
// game is skipped (recorded in stats) and reading continues with the next one.
std::vector<PgnGame> read_pgn(const std::string& text, PgnReadStats* stats);

}  // namespace gambitlab
