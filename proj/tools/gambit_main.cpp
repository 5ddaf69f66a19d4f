// Command-line front end. Talks to the analysis core exclusively through the
// public C API so the CLI doubles as a living example of embedding it.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gambitlab.h"

namespace {

struct CommonFlags {
    std::string config;
    std::string engine;
    std::string corpus;
    std::string mode;
    std::string out;
    std::string cache;
    int depth = 0;
    int multipv = 0;
    bool has_depth = false;
    bool has_multipv = false;
};

void add_common_flags(CLI::App* sub, CommonFlags* f) {
    sub->add_option("--config", f->config, "Run configuration file");
    sub->add_option("--engine", f->engine,
                    "Engine command line (overrides the config)");
    sub->add_option("--depth", f->depth, "Search depth")->each([f](const std::string&) {
        f->has_depth = true;
    });
    sub->add_option("--multipv", f->multipv, "Principal variations requested")
        ->each([f](const std::string&) { f->has_multipv = true; });
    sub->add_option("--corpus", f->corpus, "Game collection (.pgn) or prebuilt index");
    sub->add_option("--mode", f->mode, "Continuation weighting: raw or renorm");
    sub->add_option("--out", f->out, "Output directory");
    sub->add_option("--cache", f->cache, "Evaluation cache file");
}

// Builds the configuration handle for one invocation; returns nullptr after
// printing the reason (missing config, bad file, bad override).
gbl_config* make_config(const CommonFlags& f, bool config_required, int* exit_code) {
    gbl_config* cfg = nullptr;
    if (!f.config.empty()) {
        cfg = gbl_config_load(f.config.c_str());
        if (cfg == nullptr) {
            std::fprintf(stderr, "error: %s\n", gbl_last_error());
            *exit_code = GBL_ERR_CONFIG;
            return nullptr;
        }
    } else if (config_required) {
        std::fprintf(stderr, "error: this command needs --config\n");
        *exit_code = GBL_ERR_CONFIG;
        return nullptr;
    } else {
        cfg = gbl_config_create();
    }

    const auto apply = [&](const char* key, const std::string& value) {
        if (cfg == nullptr || value.empty()) return;
        const int rc = gbl_config_set(cfg, key, value.c_str());
        if (rc != GBL_OK) {
            std::fprintf(stderr, "error: %s\n", gbl_last_error());
            gbl_config_destroy(cfg);
            cfg = nullptr;
            *exit_code = rc;
        }
    };
    apply("engine", f.engine);
    apply("corpus", f.corpus);
    apply("mode", f.mode);
    apply("out", f.out);
    apply("cache", f.cache);
    if (f.has_depth) apply("depth", std::to_string(f.depth));
    if (f.has_multipv) apply("multipv", std::to_string(f.multipv));
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chess opening-sacrifice analysis toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string gambit_name;
    std::string mdp_path;

    CLI::App* analyze =
        app.add_subcommand("analyze", "Analyze one configured gambit line");
    analyze->add_option("name", gambit_name, "Gambit name from the config")->required();
    add_common_flags(analyze, &flags);

    CLI::App* rank =
        app.add_subcommand("rank", "Analyze and rank every configured gambit");
    add_common_flags(rank, &flags);

    CLI::App* corpus = app.add_subcommand("corpus", "Corpus maintenance");
    corpus->require_subcommand(1);
    CLI::App* corpus_build =
        corpus->add_subcommand("build", "Index a PGN collection for fast lookups");
    add_common_flags(corpus_build, &flags);

    CLI::App* selfcheck =
        app.add_subcommand("selfcheck", "Verify internal identities and oracles");
    selfcheck->add_option("--mdp", mdp_path, "Decision-process fixture file");
    add_common_flags(selfcheck, &flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return GBL_ERR_CONFIG;
    }

    int exit_code = GBL_OK;

    if (analyze->parsed()) {
        gbl_config* cfg = make_config(flags, /*config_required=*/true, &exit_code);
        if (cfg == nullptr) return exit_code;
        exit_code = gbl_run_analyze(cfg, gambit_name.c_str());
        gbl_config_destroy(cfg);
        return exit_code;
    }

    if (rank->parsed()) {
        gbl_config* cfg = make_config(flags, /*config_required=*/true, &exit_code);
        if (cfg == nullptr) return exit_code;
        exit_code = gbl_run_rank(cfg);
        gbl_config_destroy(cfg);
        return exit_code;
    }

    if (corpus->parsed() && corpus_build->parsed()) {
        gbl_config* cfg = make_config(flags, /*config_required=*/false, &exit_code);
        if (cfg == nullptr) return exit_code;
        exit_code = gbl_run_corpus_build(cfg);
        gbl_config_destroy(cfg);
        return exit_code;
    }

    if (selfcheck->parsed()) {
        gbl_config* cfg = make_config(flags, /*config_required=*/false, &exit_code);
        if (cfg == nullptr) return exit_code;
        if (!mdp_path.empty()) {
            const int rc = gbl_config_set(cfg, "mdp", mdp_path.c_str());
            if (rc != GBL_OK) {
                std::fprintf(stderr, "error: %s\n", gbl_last_error());
                gbl_config_destroy(cfg);
                return rc;
            }
        }
        exit_code = gbl_run_selfcheck(cfg);
        gbl_config_destroy(cfg);
        return exit_code;
    }

    return GBL_ERR_CONFIG;  // unreachable with require_subcommand(1)
}
