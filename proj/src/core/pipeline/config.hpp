#pragma once

#include <string>
#include <vector>

#include "core/metrics/report.hpp"

namespace gambitlab {

// One analysis run: engine + corpus + weighting settings plus the catalogue
// of configured opening lines. Loaded from a structured key/value text file
// with nested `gambit "Name" { ... }` blocks; command-line flags override
// individual keys afterwards.
struct RunConfig {
    std::vector<std::string> engine_argv;
    int depth = 12;
    int multipv = 5;
    std::string mode = "renorm";  // "raw" | "renorm"
    std::string corpus_path;      // .pgn or prebuilt index
    int min_games = 25;
    int max_ply = 40;
    std::string out_dir = "out";
    std::string cache_path;       // empty: no persistent cache
    std::string mdp_path;         // empty: built-in selfcheck fixture
    int handshake_timeout_ms = 10000;
    std::vector<GambitSpecDef> gambits;

    const GambitSpecDef* find_gambit(const std::string& name) const;
};

// Parses and validates `path`. Keys inside the file that name other files
// resolve relative to the file's own directory. Malformed syntax, unknown
// keys, illegal movetext or out-of-range plies all raise ConfigError.
RunConfig load_config(const std::string& path);

// Applies one `key=value` override (used by CLI flags; paths stay relative to
// the caller's working directory). Throws ConfigError on unknown keys.
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value);

// Re-checks cross-field constraints after overrides.
void validate_config(const RunConfig& cfg);

// File-name-safe identifier for a gambit: lowercase alphanumerics with
// runs of everything else collapsed to '_' ("Queen's Gambit" -> "queens_gambit").
std::string gambit_slug(const std::string& name);

}  // namespace gambitlab
