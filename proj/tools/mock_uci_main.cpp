// Deterministic UCI engine stand-in. Scores come from a JSON script keyed by
// the first four FEN fields; unknown positions get a stable hash-derived
// centipawn value so runs never depend on a real engine being installed.
//
// Script schema:
//   {
//     "identity": "mock-oracle 1.0",
//     "positions": {
//       "<fen4>": {"cp": 31},
//       "<fen4>": {"mate": 2},
//       "<fen4>": {"lines": [{"cp": 20, "pv": "e2e4"}, ...]},
//       "<fen4>": {"die": true}        // simulate an engine crash on "go"
//     }
//   }
//
// Usage: mock-uci --script FILE [--latency-ms N]

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

namespace {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// First four whitespace-separated FEN fields (clocks dropped).
std::string fen4(const std::vector<std::string>& fen_fields) {
    std::string out;
    for (size_t i = 0; i < fen_fields.size() && i < 4; ++i) {
        if (!out.empty()) out += ' ';
        out += fen_fields[i];
    }
    return out;
}

constexpr const char* kStartFen4 = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq -";

void emit_line(int depth, int rank, const json& line) {
    std::cout << "info depth " << depth << " multipv " << rank << " score ";
    if (line.contains("mate")) {
        std::cout << "mate " << line["mate"].get<int>();
    } else {
        std::cout << "cp " << line["cp"].get<int>();
    }
    std::cout << " nodes 1000 time 1";
    if (line.contains("pv")) {
        std::cout << " pv " << line["pv"].get<std::string>();
    }
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string script_path;
    int latency_ms = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--script" && i + 1 < argc) {
            script_path = argv[++i];
        } else if (arg == "--latency-ms" && i + 1 < argc) {
            latency_ms = std::stoi(argv[++i]);
        } else {
            std::cerr << "mock-uci: unknown argument " << arg << "\n";
            return 2;
        }
    }

    json script = json::object();
    std::string identity = "mock-oracle (unscripted)";
    if (!script_path.empty()) {
        std::ifstream in(script_path);
        if (!in) {
            std::cerr << "mock-uci: cannot open " << script_path << "\n";
            return 2;
        }
        try {
            in >> script;
        } catch (const json::exception& e) {
            std::cerr << "mock-uci: bad script: " << e.what() << "\n";
            return 2;
        }
        if (script.contains("identity")) identity = script["identity"].get<std::string>();
    }
    const json positions =
        script.contains("positions") ? script["positions"] : json::object();

    std::string current_fen4 = kStartFen4;
    std::string line;
    while (std::getline(std::cin, line)) {
        const std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        const std::string& cmd = tok[0];

        if (cmd == "uci") {
            std::cout << "id name " << identity << "\n"
                      << "id author gambitlab fixtures\n"
                      << "option name MultiPV type spin default 1 min 1 max 64\n"
                      << "option name Hash type spin default 16 min 1 max 4096\n"
                      << "uciok\n"
                      << std::flush;
        } else if (cmd == "isready") {
            std::cout << "readyok\n" << std::flush;
        } else if (cmd == "setoption" || cmd == "ucinewgame" || cmd == "stop") {
            // Accepted and ignored; scoring is fully scripted.
        } else if (cmd == "position") {
            if (tok.size() >= 2 && tok[1] == "startpos") {
                current_fen4 = kStartFen4;
            } else if (tok.size() >= 2 && tok[1] == "fen") {
                current_fen4 = fen4({tok.begin() + 2, tok.end()});
            }
        } else if (cmd == "go") {
            int depth = 1;
            for (size_t i = 1; i + 1 < tok.size(); ++i) {
                if (tok[i] == "depth") depth = std::stoi(tok[i + 1]);
            }
            if (latency_ms > 0) {
                std::this_thread::sleep_for(std::chrono::milliseconds(latency_ms));
            }

            const json entry = positions.contains(current_fen4)
                                   ? positions[current_fen4]
                                   : json::object();
            if (entry.contains("die") && entry["die"].get<bool>()) {
                return 1;  // simulated crash mid-search
            }

            std::string best = "0000";
            if (entry.contains("lines")) {
                int rank = 1;
                for (const json& l : entry["lines"]) {
                    emit_line(depth, rank, l);
                    if (rank == 1 && l.contains("pv")) {
                        best = split_ws(l["pv"].get<std::string>()).front();
                    }
                    ++rank;
                }
            } else if (entry.contains("cp") || entry.contains("mate")) {
                emit_line(depth, 1, entry);
            } else {
                const int cp =
                    static_cast<int>(fnv1a64(current_fen4) % 201) - 100;
                json synth;
                synth["cp"] = cp;
                emit_line(depth, 1, synth);
            }
            std::cout << "bestmove " << best << "\n" << std::flush;
        } else if (cmd == "quit") {
            return 0;
        }
        // Anything else is silently ignored, as real engines do.
    }
    return 0;
}
