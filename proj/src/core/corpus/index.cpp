#include "core/corpus/index.hpp"

#include <algorithm>
#include <sstream>

#include "core/chess/board.hpp"
#include "core/common/error.hpp"
#include "core/common/util.hpp"
#include "core/notation/fen.hpp"
#include "core/notation/san.hpp"

namespace gambitlab {

namespace {

constexpr const char* kMagic = "gambitlab-corpus v1";

std::string table_body(const std::map<PositionKey, std::map<std::string, int>>& table) {
    std::ostringstream body;
    for (const auto& [key, moves] : table) {
        int total = 0;
        for (const auto& [san, count] : moves) total += count;
        body << "entry " << to_hex16(key) << ' ' << total << ' ' << moves.size() << '\n';
        for (const auto& [san, count] : moves) {
            body << "m " << san << ' ' << count << '\n';
        }
    }
    return body.str();
}

}  // namespace

CorpusIndex CorpusIndex::build(const std::vector<PgnGame>& games, int max_ply,
                               IndexBuildStats* stats) {
    CorpusIndex index;
    IndexBuildStats local;
    IndexBuildStats& st = stats != nullptr ? *stats : local;

    for (const PgnGame& game : games) {
        Position pos = Position::start();
        std::vector<std::pair<PositionKey, std::string>> seen;
        bool ok = true;
        try {
            if (!game.start_fen.empty()) pos = parse_fen(game.start_fen);
            for (size_t ply = 0; ply < game.sans.size(); ++ply) {
                if (max_ply > 0 && static_cast<int>(ply) >= max_ply) break;
                const Move mv = parse_san(pos, game.sans[ply]);
                seen.emplace_back(position_key(pos), to_san(pos, mv));
                pos = apply_move(pos, mv);
            }
        } catch (const Error& e) {
            ok = false;
            ++st.games_skipped;
            st.errors.push_back("game at line " + std::to_string(game.line_no) + ": " +
                                e.what());
        }
        if (!ok) continue;
        for (const auto& [key, san] : seen) ++index.table_[key][san];
        ++index.games_indexed_;
        ++st.games_indexed;
    }
    return index;
}

int CorpusIndex::games_at(PositionKey key) const {
    const auto it = table_.find(key);
    if (it == table_.end()) return 0;
    int total = 0;
    for (const auto& [san, count] : it->second) total += count;
    return total;
}

std::vector<TransitionRow> CorpusIndex::query_transitions(PositionKey key,
                                                          int min_games) const {
    const int total = games_at(key);
    if (total < min_games) {
        throw CorpusError("position has " + std::to_string(total) +
                          " games in the corpus, need at least " +
                          std::to_string(min_games));
    }
    std::vector<TransitionRow> rows;
    for (const auto& [san, count] : table_.at(key)) rows.push_back({san, count});
    std::sort(rows.begin(), rows.end(), [](const TransitionRow& a, const TransitionRow& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.san < b.san;
    });
    return rows;
}

long long CorpusIndex::transitions() const {
    long long n = 0;
    for (const auto& [key, moves] : table_) n += static_cast<long long>(moves.size());
    return n;
}

std::string CorpusIndex::serialize() const {
    const std::string body = table_body(table_);
    std::ostringstream out;
    out << kMagic << '\n'
        << "games " << games_indexed_ << '\n'
        << "checksum " << to_hex16(fnv1a64(body)) << '\n'
        << body;
    return out.str();
}

std::string CorpusIndex::id() const {
    return to_hex16(fnv1a64(table_body(table_)));
}

void CorpusIndex::save(const std::string& path) const {
    atomic_write_file(path, serialize());
}

CorpusIndex CorpusIndex::load(const std::string& path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const Error& e) {
        throw CorpusError(e.what());
    }

    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kMagic) {
        throw CorpusError(path + ": not a corpus index file");
    }

    CorpusIndex index;
    std::string declared_checksum;
    std::ostringstream body;
    PositionKey current_key = 0;
    bool have_entry = false;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        const auto fail = [&](const std::string& why) -> void {
            throw CorpusError(path + " line " + std::to_string(line_no) + ": " + why);
        };
        try {
            if (tok[0] == "games" && tok.size() == 2) {
                index.games_indexed_ = std::stoi(tok[1]);
            } else if (tok[0] == "checksum" && tok.size() == 2) {
                declared_checksum = tok[1];
            } else if (tok[0] == "entry" && tok.size() == 4) {
                body << line << '\n';
                current_key = static_cast<PositionKey>(std::stoull(tok[1], nullptr, 16));
                have_entry = true;
                index.table_[current_key];
            } else if (tok[0] == "m" && tok.size() == 3) {
                if (!have_entry) fail("move row before any entry");
                body << line << '\n';
                index.table_[current_key][tok[1]] = std::stoi(tok[2]);
            } else {
                fail("unrecognised row");
            }
        } catch (const std::logic_error&) {
            fail("malformed number");
        }
    }

    if (declared_checksum.empty()) {
        throw CorpusError(path + ": missing checksum");
    }
    if (to_hex16(fnv1a64(body.str())) != declared_checksum) {
        throw CorpusError(path + ": checksum mismatch, file is corrupt");
    }
    return index;
}

std::vector<TransitionRow> restrict_top_k(const std::vector<TransitionRow>& rows, int k) {
    if (k <= 0 || static_cast<int>(rows.size()) <= k) return rows;
    return {rows.begin(), rows.begin() + k};
}

}  // namespace gambitlab
