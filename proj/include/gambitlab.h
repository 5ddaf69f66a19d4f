/* gambitlab: chess opening-sacrifice analysis toolkit.
 *
 * Stable C surface over the analysis core. All functions are synchronous.
 * Functions returning int use the shared status codes below (also the CLI
 * exit codes); on failure gbl_last_error() describes the problem for the
 * calling thread. Pointer-returning functions yield NULL on failure.
 *
 * The run entry points (gbl_run_*) write their artefacts to the configured
 * output directory and report progress on stdout/stderr.
 */

#ifndef GAMBITLAB_H
#define GAMBITLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    GBL_OK = 0,
    GBL_ERR_INTERNAL = 1, /* also: selfcheck found a failing check */
    GBL_ERR_CONFIG = 2,
    GBL_ERR_ENGINE = 3,
    GBL_ERR_CORPUS = 4,
    GBL_ERR_PARTIAL = 5   /* rank finished but some gambits failed */
};

const char* gbl_version(void);

/* Description of this thread's most recent failure ("" when none). The
 * returned pointer stays valid until the next failing call on the thread. */
const char* gbl_last_error(void);

/* ---- chess positions -------------------------------------------------- */

typedef struct gbl_position gbl_position;

gbl_position* gbl_position_create_start(void);
gbl_position* gbl_position_from_fen(const char* fen);
void gbl_position_destroy(gbl_position* pos);

/* Text getters write a NUL-terminated string into buf and return the text
 * length (excluding the NUL), or -1 when buf is too small or pos invalid. */
int gbl_position_fen(const gbl_position* pos, char* buf, size_t buflen);
int gbl_position_key_hex(const gbl_position* pos, char* buf, size_t buflen);

/* Plays one move given in standard algebraic notation. */
int gbl_position_apply_san(gbl_position* pos, const char* san);

/* Writes all legal moves as space-separated SAN; returns the move count,
 * or -1 when buf is too small. */
int gbl_position_legal_moves(const gbl_position* pos, char* buf, size_t buflen);

/* Movement-path enumeration count at `depth` plies (legal moves only). */
int gbl_perft(const gbl_position* pos, int depth, uint64_t* nodes);

/* ---- evaluation scale ------------------------------------------------- */

/* Logistic map between pawn advantage and win probability (argument is in
 * pawn units: 1.00 = one pawn). The two functions are exact inverses. */
double gbl_cp_to_winprob(double pawns);
double gbl_winprob_to_cp(double w);

/* ---- analysis runs ---------------------------------------------------- */

typedef struct gbl_config gbl_config;

/* Parses a run configuration file. NULL on failure (see gbl_last_error). */
gbl_config* gbl_config_load(const char* path);

/* A configuration holding only built-in defaults (no gambits). */
gbl_config* gbl_config_create(void);

/* Overrides one top-level key ("engine", "depth", "multipv", "mode",
 * "corpus", "min_games", "max_ply", "out", "cache", "mdp",
 * "handshake_timeout_ms"). */
int gbl_config_set(gbl_config* cfg, const char* key, const char* value);

void gbl_config_destroy(gbl_config* cfg);

int gbl_run_analyze(gbl_config* cfg, const char* gambit_name);
int gbl_run_rank(gbl_config* cfg);
int gbl_run_corpus_build(gbl_config* cfg);

/* cfg may be NULL: runs with built-in defaults and the built-in fixture. */
int gbl_run_selfcheck(gbl_config* cfg);

#ifdef __cplusplus
}
#endif

#endif /* GAMBITLAB_H */
