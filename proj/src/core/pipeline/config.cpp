#include "core/pipeline/config.hpp"

#include <cctype>
#include <filesystem>
#include <sstream>

#include "core/chess/board.hpp"
#include "core/common/error.hpp"
#include "core/common/util.hpp"
#include "core/notation/san.hpp"

namespace gambitlab {

namespace fs = std::filesystem;

namespace {

// Strips a '#' comment, honouring double quotes.
std::string strip_comment(const std::string& line) {
    bool in_quotes = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_quotes = !in_quotes;
        if (line[i] == '#' && !in_quotes) return line.substr(0, i);
    }
    return line;
}

// Splits `key = value`; returns false if there is no '='.
bool split_kv(const std::string& line, std::string& key, std::string& value) {
    const size_t eq = line.find('=');
    if (eq == std::string::npos) return false;
    key = trim(line.substr(0, eq));
    value = trim(line.substr(eq + 1));
    return true;
}

int parse_int(const std::string& value, const std::string& key) {
    try {
        size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::logic_error&) {
        throw ConfigError("key '" + key + "' needs an integer, got '" + value + "'");
    }
}

double parse_double(const std::string& value, const std::string& key) {
    try {
        size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::logic_error&) {
        throw ConfigError("key '" + key + "' needs a number, got '" + value + "'");
    }
}

// Resolves a path value against the config file's directory.
std::string resolve_path(const std::string& value, const fs::path& base_dir) {
    if (value.empty()) return value;
    const fs::path p(value);
    if (p.is_absolute()) return value;
    return (base_dir / p).lexically_normal().string();
}

// Engine command lines are whitespace-split; arguments that name files next
// to the config (for example a script) are resolved so the run does not
// depend on the caller's working directory.
std::vector<std::string> parse_engine_value(const std::string& value,
                                            const fs::path& base_dir) {
    std::vector<std::string> argv = split_ws(value);
    for (std::string& arg : argv) {
        if (arg.empty() || arg[0] == '-' || fs::path(arg).is_absolute()) continue;
        const fs::path candidate = base_dir / arg;
        if (fs::exists(candidate)) arg = candidate.lexically_normal().string();
    }
    return argv;
}

void set_top_level(RunConfig& cfg, const std::string& key, const std::string& value,
                   const fs::path& base_dir, bool from_file) {
    const auto path_of = [&](const std::string& v) {
        return from_file ? resolve_path(v, base_dir) : v;
    };
    if (key == "engine") {
        cfg.engine_argv =
            from_file ? parse_engine_value(value, base_dir) : split_ws(value);
    } else if (key == "depth") {
        cfg.depth = parse_int(value, key);
    } else if (key == "multipv") {
        cfg.multipv = parse_int(value, key);
    } else if (key == "mode") {
        cfg.mode = value;
    } else if (key == "corpus") {
        cfg.corpus_path = path_of(value);
    } else if (key == "min_games") {
        cfg.min_games = parse_int(value, key);
    } else if (key == "max_ply") {
        cfg.max_ply = parse_int(value, key);
    } else if (key == "out") {
        cfg.out_dir = path_of(value);
    } else if (key == "cache") {
        cfg.cache_path = path_of(value);
    } else if (key == "mdp") {
        cfg.mdp_path = path_of(value);
    } else if (key == "handshake_timeout_ms") {
        cfg.handshake_timeout_ms = parse_int(value, key);
    } else {
        throw ConfigError("unknown configuration key '" + key + "'");
    }
}

void set_gambit_key(GambitSpecDef& g, const std::string& key, const std::string& value) {
    if (key == "line") {
        g.movetext = value;
    } else if (key == "gambit_ply") {
        g.gambit_ply = parse_int(value, key);
    } else if (key == "gambiteer") {
        if (value == "white") {
            g.gambiteer = Color::White;
        } else if (value == "black") {
            g.gambiteer = Color::Black;
        } else {
            throw ConfigError("gambiteer must be 'white' or 'black', got '" + value + "'");
        }
    } else if (key == "top_k") {
        g.top_k = parse_int(value, key);
    } else if (key == "ref_skew") {
        g.ref_skew = parse_double(value, key);
    } else if (key == "ref_volatility") {
        g.ref_volatility = parse_double(value, key);
    } else if (key == "ref_current_q") {
        g.ref_current_q = parse_double(value, key);
    } else if (key == "ref_pre_q") {
        g.ref_pre_q = parse_double(value, key);
    } else {
        throw ConfigError("unknown gambit key '" + key + "'");
    }
}

// Replays the configured movetext to confirm it is legal and the sacrifice
// ply is in range and played by the configured side.
void check_gambit(const GambitSpecDef& g) {
    const auto fail = [&](const std::string& why) {
        throw ConfigError("gambit \"" + g.name + "\": " + why);
    };
    if (g.movetext.empty()) fail("missing 'line'");
    std::vector<std::string> sans;
    try {
        sans = movetext_tokens(g.movetext);
    } catch (const Error& e) {
        fail(e.what());
    }
    if (sans.empty()) fail("line has no moves");

    Position pos = Position::start();
    for (const std::string& san : sans) {
        try {
            pos = apply_move(pos, parse_san(pos, san));
        } catch (const Error& e) {
            fail("illegal line: " + std::string(e.what()));
        }
    }
    if (g.gambit_ply < 1 || g.gambit_ply > static_cast<int>(sans.size())) {
        fail("gambit_ply " + std::to_string(g.gambit_ply) + " outside the line (1.." +
             std::to_string(sans.size()) + ")");
    }
    const Color mover = g.gambit_ply % 2 == 1 ? Color::White : Color::Black;
    if (mover != g.gambiteer) {
        fail("gambit_ply " + std::to_string(g.gambit_ply) + " is not a " +
             (g.gambiteer == Color::White ? "white" : "black") + " move");
    }
    if (g.top_k < 1) fail("top_k must be at least 1");
}

}  // namespace

const GambitSpecDef* RunConfig::find_gambit(const std::string& name) const {
    for (const GambitSpecDef& g : gambits) {
        if (g.name == name) return &g;
    }
    return nullptr;
}

RunConfig load_config(const std::string& path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const Error&) {
        throw ConfigError("cannot read config file: " + path);
    }
    const fs::path base_dir = fs::path(path).has_parent_path()
                                  ? fs::path(path).parent_path()
                                  : fs::path(".");

    RunConfig cfg;
    GambitSpecDef current;
    bool in_block = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const auto fail = [&](const std::string& why) {
            throw ConfigError(path + " line " + std::to_string(line_no) + ": " + why);
        };

        if (!in_block && starts_with(line, "gambit")) {
            const size_t open_quote = line.find('"');
            const size_t close_quote =
                open_quote == std::string::npos ? std::string::npos
                                                : line.find('"', open_quote + 1);
            if (close_quote == std::string::npos || line.back() != '{') {
                fail("expected: gambit \"Name\" {");
            }
            current = GambitSpecDef{};
            current.name = line.substr(open_quote + 1, close_quote - open_quote - 1);
            if (current.name.empty()) fail("gambit name is empty");
            in_block = true;
            continue;
        }
        if (in_block && line == "}") {
            try {
                check_gambit(current);
            } catch (const ConfigError& e) {
                throw ConfigError(path + ": " + e.what());
            }
            for (const GambitSpecDef& g : cfg.gambits) {
                if (g.name == current.name) fail("duplicate gambit \"" + g.name + "\"");
            }
            cfg.gambits.push_back(current);
            in_block = false;
            continue;
        }

        std::string key, value;
        if (!split_kv(line, key, value)) fail("expected 'key = value'");
        try {
            if (in_block) {
                set_gambit_key(current, key, value);
            } else {
                set_top_level(cfg, key, value, base_dir, /*from_file=*/true);
            }
        } catch (const ConfigError& e) {
            fail(e.what());
        }
    }
    if (in_block) {
        throw ConfigError(path + ": unterminated gambit block \"" + current.name + "\"");
    }

    validate_config(cfg);
    return cfg;
}

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value) {
    set_top_level(cfg, key, value, fs::path("."), /*from_file=*/false);
}

void validate_config(const RunConfig& cfg) {
    if (cfg.mode != "raw" && cfg.mode != "renorm") {
        throw ConfigError("mode must be 'raw' or 'renorm', got '" + cfg.mode + "'");
    }
    if (cfg.depth < 1) throw ConfigError("depth must be at least 1");
    if (cfg.multipv < 1) throw ConfigError("multipv must be at least 1");
    if (cfg.min_games < 0) throw ConfigError("min_games must not be negative");
    if (cfg.max_ply < 0) throw ConfigError("max_ply must not be negative");
    if (cfg.handshake_timeout_ms < 1) {
        throw ConfigError("handshake_timeout_ms must be positive");
    }
}

std::string gambit_slug(const std::string& name) {
    std::string out;
    bool pending_sep = false;
    for (const char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)) != 0) {
            if (pending_sep && !out.empty()) out += '_';
            pending_sep = false;
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (c == '\'') {
            // dropped entirely
        } else {
            pending_sep = true;
        }
    }
    return out.empty() ? "gambit" : out;
}

}  // namespace gambitlab
