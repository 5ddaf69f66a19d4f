#include "gambitlab.h"

#include <cstring>
#include <iostream>
#include <string>

#include "core/chess/board.hpp"
#include "core/chess/zobrist.hpp"
#include "core/common/error.hpp"
#include "core/common/util.hpp"
#include "core/eval/winprob.hpp"
#include "core/notation/fen.hpp"
#include "core/notation/san.hpp"
#include "core/pipeline/commands.hpp"
#include "core/pipeline/config.hpp"

using namespace gambitlab;

namespace {

thread_local std::string g_last_error;

void clear_error() {
    g_last_error.clear();
}

int record_error(const std::exception& e, int code) {
    g_last_error = e.what();
    return code;
}

// Copies `text` into the caller's buffer; -1 when it does not fit.
int copy_out(const std::string& text, char* buf, size_t buflen, int rc) {
    if (buf == nullptr || buflen < text.size() + 1) {
        g_last_error = "buffer too small (" + std::to_string(text.size() + 1) +
                       " bytes needed)";
        return -1;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return rc;
}

}  // namespace

struct gbl_position {
    Position pos;
};

struct gbl_config {
    RunConfig cfg;
};

namespace {

// Shared prologue of the run entry points: overrides may have put the
// configuration into an inconsistent state, so re-validate before running.
int validated(gbl_config* cfg) {
    try {
        validate_config(cfg->cfg);
        return GBL_OK;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return record_error(e, e.code());
    }
}

}  // namespace

extern "C" {

const char* gbl_version(void) {
    return "1.0.0";
}

const char* gbl_last_error(void) {
    return g_last_error.c_str();
}

gbl_position* gbl_position_create_start(void) {
    clear_error();
    return new gbl_position{Position::start()};
}

gbl_position* gbl_position_from_fen(const char* fen) {
    clear_error();
    if (fen == nullptr) {
        g_last_error = "fen is null";
        return nullptr;
    }
    try {
        return new gbl_position{parse_fen(fen)};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

void gbl_position_destroy(gbl_position* pos) {
    delete pos;
}

int gbl_position_fen(const gbl_position* pos, char* buf, size_t buflen) {
    clear_error();
    if (pos == nullptr) {
        g_last_error = "position is null";
        return -1;
    }
    const std::string fen = to_fen(pos->pos);
    return copy_out(fen, buf, buflen, static_cast<int>(fen.size()));
}

int gbl_position_key_hex(const gbl_position* pos, char* buf, size_t buflen) {
    clear_error();
    if (pos == nullptr) {
        g_last_error = "position is null";
        return -1;
    }
    const std::string hex = to_hex16(position_key(pos->pos));
    return copy_out(hex, buf, buflen, static_cast<int>(hex.size()));
}

int gbl_position_apply_san(gbl_position* pos, const char* san) {
    clear_error();
    if (pos == nullptr || san == nullptr) {
        g_last_error = "null argument";
        return GBL_ERR_INTERNAL;
    }
    try {
        pos->pos = apply_move(pos->pos, parse_san(pos->pos, san));
        return GBL_OK;
    } catch (const Error& e) {
        return record_error(e, e.code());
    } catch (const std::exception& e) {
        return record_error(e, GBL_ERR_INTERNAL);
    }
}

int gbl_position_legal_moves(const gbl_position* pos, char* buf, size_t buflen) {
    clear_error();
    if (pos == nullptr) {
        g_last_error = "position is null";
        return -1;
    }
    try {
        const std::vector<Move> moves = legal_moves(pos->pos);
        std::string joined;
        for (const Move& m : moves) {
            if (!joined.empty()) joined += ' ';
            joined += to_san(pos->pos, m);
        }
        return copy_out(joined, buf, buflen, static_cast<int>(moves.size()));
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return -1;
    }
}

int gbl_perft(const gbl_position* pos, int depth, uint64_t* nodes) {
    clear_error();
    if (pos == nullptr || nodes == nullptr || depth < 0) {
        g_last_error = "bad perft arguments";
        return GBL_ERR_INTERNAL;
    }
    try {
        *nodes = perft(pos->pos, depth);
        return GBL_OK;
    } catch (const std::exception& e) {
        return record_error(e, GBL_ERR_INTERNAL);
    }
}

double gbl_cp_to_winprob(double pawns) {
    return cp_to_winprob(pawns);
}

double gbl_winprob_to_cp(double w) {
    return winprob_to_cp(w);
}

gbl_config* gbl_config_load(const char* path) {
    clear_error();
    if (path == nullptr) {
        g_last_error = "path is null";
        return nullptr;
    }
    try {
        return new gbl_config{load_config(path)};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

gbl_config* gbl_config_create(void) {
    clear_error();
    return new gbl_config{RunConfig{}};
}

int gbl_config_set(gbl_config* cfg, const char* key, const char* value) {
    clear_error();
    if (cfg == nullptr || key == nullptr || value == nullptr) {
        g_last_error = "null argument";
        return GBL_ERR_CONFIG;
    }
    try {
        apply_override(cfg->cfg, key, value);
        return GBL_OK;
    } catch (const Error& e) {
        return record_error(e, e.code());
    } catch (const std::exception& e) {
        return record_error(e, GBL_ERR_CONFIG);
    }
}

void gbl_config_destroy(gbl_config* cfg) {
    delete cfg;
}

int gbl_run_analyze(gbl_config* cfg, const char* gambit_name) {
    clear_error();
    if (cfg == nullptr || gambit_name == nullptr) {
        g_last_error = "null argument";
        return GBL_ERR_CONFIG;
    }
    if (const int rc = validated(cfg); rc != GBL_OK) return rc;
    return cmd_analyze(cfg->cfg, gambit_name, std::cout, std::cerr);
}

int gbl_run_rank(gbl_config* cfg) {
    clear_error();
    if (cfg == nullptr) {
        g_last_error = "null argument";
        return GBL_ERR_CONFIG;
    }
    if (const int rc = validated(cfg); rc != GBL_OK) return rc;
    return cmd_rank(cfg->cfg, std::cout, std::cerr);
}

int gbl_run_corpus_build(gbl_config* cfg) {
    clear_error();
    if (cfg == nullptr) {
        g_last_error = "null argument";
        return GBL_ERR_CONFIG;
    }
    if (const int rc = validated(cfg); rc != GBL_OK) return rc;
    return cmd_corpus_build(cfg->cfg, std::cout, std::cerr);
}

int gbl_run_selfcheck(gbl_config* cfg) {
    clear_error();
    const RunConfig defaults;
    const RunConfig& use = cfg != nullptr ? cfg->cfg : defaults;
    return cmd_selfcheck(use, std::cout, std::cerr);
}

}  // extern "C"
