#include "core/engine/uci.hpp"

#include <algorithm>

#include "core/chess/board.hpp"
#include "core/common/error.hpp"
#include "core/common/util.hpp"
#include "core/engine/process.hpp"
#include "core/notation/fen.hpp"

namespace gambitlab {

namespace {

// Parses "info ... multipv K score cp N ... pv e2e4 ...". Returns false for
// info lines that carry no score (currmove chatter and the like).
bool parse_info_line(const std::vector<std::string>& tok, PvLine& out) {
    bool have_score = false;
    out = PvLine{};
    for (size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "multipv" && i + 1 < tok.size()) {
            out.multipv = std::stoi(tok[i + 1]);
            ++i;
        } else if (tok[i] == "score" && i + 2 < tok.size()) {
            if (tok[i + 1] == "cp") {
                out.score = {false, std::stoi(tok[i + 2])};
                have_score = true;
            } else if (tok[i + 1] == "mate") {
                out.score = {true, std::stoi(tok[i + 2])};
                have_score = true;
            }
            i += 2;
        } else if (tok[i] == "pv") {
            out.pv.assign(tok.begin() + static_cast<long>(i) + 1, tok.end());
            break;
        }
    }
    return have_score;
}

}  // namespace

UciSession::UciSession(const std::vector<std::string>& argv, int handshake_timeout_ms) {
    child_ = std::make_unique<ChildProcess>(argv);
    child_->write_line("uci");

    std::string line;
    bool got_uciok = false;
    while (child_->read_line(line, handshake_timeout_ms)) {
        const std::vector<std::string> tok = split_ws(line);
        if (tok.size() >= 3 && tok[0] == "id" && tok[1] == "name") {
            identity_ = line.substr(line.find("name") + 5);
        } else if (!tok.empty() && tok[0] == "uciok") {
            got_uciok = true;
            break;
        }
    }
    if (!got_uciok) {
        child_->shutdown();
        throw EngineError("engine did not complete the protocol handshake");
    }

    child_->write_line("isready");
    bool ready = false;
    while (child_->read_line(line, handshake_timeout_ms)) {
        if (trim(line) == "readyok") {
            ready = true;
            break;
        }
    }
    if (!ready) {
        child_->shutdown();
        throw EngineError("engine did not answer isready");
    }
}

UciSession::~UciSession() {
    try {
        quit();
    } catch (...) {
        // Best effort; the process teardown handles the rest.
    }
}

void UciSession::set_option(const std::string& name, const std::string& value) {
    child_->write_line("setoption name " + name + " value " + value);
}

void UciSession::new_game() {
    child_->write_line("ucinewgame");
}

void UciSession::start_search(const std::string& fen, const SearchLimits& limits) {
    if (busy_) throw EngineError("a search is already running");
    child_->write_line("position fen " + fen);
    child_->write_line("go depth " + std::to_string(limits.depth));
    busy_ = true;
}

SearchResult UciSession::wait_result(int timeout_ms) {
    if (!busy_) throw EngineError("no search in progress");

    SearchResult result;
    std::vector<PvLine> latest;  // last line seen per multipv rank
    std::string line;
    while (child_->read_line(line, timeout_ms)) {
        const std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "info") {
            PvLine pv;
            bool scored = false;
            try {
                scored = parse_info_line(tok, pv);
            } catch (const std::logic_error&) {
                scored = false;  // malformed numeric field; skip the line
            }
            if (scored) {
                const auto it = std::find_if(
                    latest.begin(), latest.end(),
                    [&](const PvLine& l) { return l.multipv == pv.multipv; });
                if (it == latest.end()) {
                    latest.push_back(pv);
                } else {
                    *it = pv;
                }
            }
        } else if (tok[0] == "bestmove") {
            busy_ = false;
            result.bestmove = tok.size() > 1 ? tok[1] : "";
            std::sort(latest.begin(), latest.end(),
                      [](const PvLine& a, const PvLine& b) { return a.multipv < b.multipv; });
            result.lines = std::move(latest);
            if (result.lines.empty()) {
                throw EngineError("engine sent bestmove without any scored line");
            }
            result.best = result.lines.front().score;
            return result;
        }
    }
    busy_ = false;
    throw EngineError("engine stopped responding during search");
}

SearchResult UciSession::evaluate(const std::string& fen, const SearchLimits& limits,
                                  int timeout_ms) {
    start_search(fen, limits);
    return wait_result(timeout_ms);
}

std::vector<MoveEval> UciSession::evaluate_moves(const Position& pos,
                                                 const std::vector<Move>& moves,
                                                 const SearchLimits& limits,
                                                 int timeout_ms) {
    std::vector<MoveEval> out;
    out.reserve(moves.size());
    for (const Move& mv : moves) {
        MoveEval ev;
        ev.uci = uci_of(mv);
        try {
            const Position child = apply_move(pos, mv);
            const SearchResult r = evaluate(to_fen(child), limits, timeout_ms);
            // The engine scores the position for the opponent (they are to
            // move after `mv`); negate to get the mover's perspective.
            ev.score = r.best.negated();
            ev.ok = true;
        } catch (const Error& e) {
            ev.error = e.what();
        }
        out.push_back(ev);
    }
    return out;
}

void UciSession::quit() {
    if (child_ == nullptr) return;
    if (child_->running()) {
        try {
            child_->write_line("quit");
        } catch (const Error&) {
            // Already gone; shutdown below reaps it.
        }
    }
    child_->shutdown();
}

}  // namespace gambitlab
