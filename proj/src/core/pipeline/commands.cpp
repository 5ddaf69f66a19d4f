#include "core/pipeline/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <ostream>

#include "core/chess/board.hpp"
#include "core/chess/zobrist.hpp"
#include "core/common/error.hpp"
#include "core/common/util.hpp"
#include "core/notation/fen.hpp"
#include "core/notation/san.hpp"
#include "core/pipeline/reports.hpp"

namespace gambitlab {

namespace {

// Score seen from the configured gambiteer rather than the side to move.
Score for_gambiteer(const Score& stm_score, const Position& pos, Color gambiteer) {
    return pos.stm == gambiteer ? stm_score : stm_score.negated();
}

double effective_value(const Score& gambiteer_score) {
    if (gambiteer_score.is_mate) {
        return gambiteer_score.value > 0 ? std::numeric_limits<double>::infinity()
                                         : -std::numeric_limits<double>::infinity();
    }
    return gambiteer_score.pawns();
}

}  // namespace

GambitReport analyze_gambit(const GambitSpecDef& spec, const RunConfig& cfg,
                            Evaluator& evaluator, const CorpusIndex& corpus) {
    GambitReport report;
    report.spec = spec;
    report.depth = cfg.depth;
    report.mode = cfg.mode;
    report.corpus_id = corpus.id();

    // Replay the configured line, scoring every position along the way.
    const std::vector<std::string> sans = movetext_tokens(spec.movetext);
    std::vector<Position> line;
    line.reserve(sans.size() + 1);
    line.push_back(Position::start());
    for (const std::string& san : sans) {
        line.push_back(apply_move(line.back(), parse_san(line.back(), san)));
    }

    for (size_t ply = 0; ply < line.size(); ++ply) {
        const Score s =
            for_gambiteer(evaluator.eval(line[ply]), line[ply], spec.gambiteer);
        report.qseries.push_back(
            {static_cast<int>(ply), ply == 0 ? "-" : sans[ply - 1], s, score_win_prob(s)});
    }

    const Position& final_pos = line.back();
    report.final_fen = to_fen(final_pos);
    report.final_key_hex = to_hex16(position_key(final_pos));

    const Score current = report.qseries.back().score;
    const Score pre = report.qseries[spec.gambit_ply - 1].score;
    if (current.is_mate || pre.is_mate) {
        throw Error(kInternalError,
                    "gambit \"" + spec.name + "\": forced mate on the mainline; "
                    "the pawn-scale summary statistics are undefined");
    }
    report.current_q = current.pawns();
    report.pre_q = pre.pawns();
    report.t_stat = test_statistic(report.pre_q, report.current_q);

    // Human continuation statistics at the post-sacrifice position.
    const PositionKey final_key = position_key(final_pos);
    const std::vector<TransitionRow> all_rows =
        corpus.query_transitions(final_key, cfg.min_games);
    report.total_games = corpus.games_at(final_key);
    const std::vector<TransitionRow> kept = restrict_top_k(all_rows, spec.top_k);

    int kept_games = 0;
    for (const TransitionRow& row : kept) kept_games += row.count;

    std::vector<Outcome> renorm_rows, raw_rows;
    std::vector<Outcome> pawn_rows;
    std::vector<double> reply_values;
    int nonmate_games = 0;
    for (const TransitionRow& row : kept) {
        ContinuationRow out;
        out.san = row.san;
        out.games = row.count;
        out.p_raw = static_cast<double>(row.count) / report.total_games;
        out.p_renorm = static_cast<double>(row.count) / kept_games;

        const Position child = apply_move(final_pos, parse_san(final_pos, row.san));
        out.score = for_gambiteer(evaluator.eval(child), child, spec.gambiteer);
        out.win_prob = score_win_prob(out.score);

        renorm_rows.push_back({out.p_renorm, out.win_prob});
        raw_rows.push_back({out.p_raw, out.win_prob});
        reply_values.push_back(effective_value(out.score));
        if (!out.score.is_mate) nonmate_games += out.games;

        report.rows.push_back(out);
    }

    for (const ContinuationRow& row : report.rows) {
        if (!row.score.is_mate && nonmate_games > 0) {
            pawn_rows.push_back(
                {static_cast<double>(row.games) / nonmate_games, row.score.pawns()});
        }
    }

    report.renorm = {q_star(renorm_rows), volatility(renorm_rows), skewness(renorm_rows)};
    report.raw = {q_star(raw_rows), volatility(raw_rows), skewness(raw_rows)};
    report.pawn_renorm = {q_star(pawn_rows), volatility(pawn_rows), skewness(pawn_rows)};
    report.wwp_renorm = weighted_win_prob(renorm_rows);
    report.wwp_raw = weighted_win_prob(raw_rows);
    report.cls = classify_gambit(report.current_q, reply_values);

    report.engine_identity = evaluator.identity();
    return report;
}

CorpusIndex load_corpus(const RunConfig& cfg) {
    if (cfg.corpus_path.empty()) {
        throw CorpusError("no corpus configured (set 'corpus' or pass --corpus)");
    }
    std::string text;
    try {
        text = read_file(cfg.corpus_path);
    } catch (const Error&) {
        throw CorpusError("cannot read corpus: " + cfg.corpus_path);
    }
    if (starts_with(text, "gambitlab-corpus")) {
        return CorpusIndex::load(cfg.corpus_path);
    }
    std::vector<PgnGame> games = read_pgn(text, nullptr);
    return CorpusIndex::build(games, cfg.max_ply, nullptr);
}

int cmd_analyze(const RunConfig& cfg, const std::string& gambit_name, std::ostream& out,
                std::ostream& err) {
    try {
        const GambitSpecDef* spec = cfg.find_gambit(gambit_name);
        if (spec == nullptr) {
            std::string known;
            for (const GambitSpecDef& g : cfg.gambits) {
                if (!known.empty()) known += ", ";
                known += '"' + g.name + '"';
            }
            throw ConfigError("unknown gambit \"" + gambit_name +
                              "\"; configured: " + known);
        }
        const CorpusIndex corpus = load_corpus(cfg);
        Evaluator evaluator(cfg);
        const GambitReport report = analyze_gambit(*spec, cfg, evaluator, corpus);
        evaluator.flush();
        write_gambit_files(cfg, report);
        out << report_text(report);
        out << "\nwrote " << gambit_slug(report.spec.name) << "_{report.txt,"
            << "continuations.csv,qseries.csv} to " << cfg.out_dir << "\n";
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

int cmd_rank(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.gambits.empty()) {
            throw ConfigError("no gambits configured; nothing to rank");
        }
        const CorpusIndex corpus = load_corpus(cfg);
        Evaluator evaluator(cfg);

        std::vector<GambitReport> reports;
        std::vector<std::string> failures;
        for (const GambitSpecDef& spec : cfg.gambits) {
            try {
                reports.push_back(analyze_gambit(spec, cfg, evaluator, corpus));
            } catch (const Error& e) {
                failures.push_back("\"" + spec.name + "\": " + e.what());
            }
        }
        evaluator.flush();

        const std::vector<const GambitReport*> by_q =
            rank_gambits(reports, RankKey::kInitialQ);
        const std::vector<const GambitReport*> by_skew =
            rank_gambits(reports, RankKey::kSkew);

        std::vector<const GambitReport*> qualified;
        for (const GambitReport* r : by_q) {
            if (r->cls.relaxed) qualified.push_back(r);
        }
        const AggregateSummary agg = aggregate_summary(qualified, cfg.mode);

        // All three artefacts are rendered before the first byte is written.
        const std::string q_csv = ranking_initial_q_csv(by_q);
        const std::string skew_csv = ranking_skew_volatility_csv(by_skew);
        const std::string agg_csv = aggregate_csv(agg);

        const std::filesystem::path dir(cfg.out_dir);
        std::filesystem::create_directories(dir);
        atomic_write_file((dir / "ranking_initial_q.csv").string(), q_csv);
        atomic_write_file((dir / "ranking_skew_volatility.csv").string(), skew_csv);
        atomic_write_file((dir / "aggregate_summary.csv").string(), agg_csv);

        out << "ranked " << reports.size() << " of " << cfg.gambits.size()
            << " configured gambits (" << qualified.size()
            << " qualify as trap lines)\n";
        int rank = 1;
        for (const GambitReport* r : by_q) {
            char q[32];
            std::snprintf(q, sizeof(q), "%+.2f", r->current_q);
            out << "  " << rank++ << ". " << r->spec.name << "  (" << q << ")\n";
        }
        out << "wrote ranking_initial_q.csv, ranking_skew_volatility.csv, "
            << "aggregate_summary.csv to " << cfg.out_dir << "\n";

        if (!failures.empty()) {
            err << failures.size() << " gambit(s) failed:\n";
            for (const std::string& f : failures) err << "  " << f << "\n";
            return kPartialFailure;
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

int cmd_corpus_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.corpus_path.empty()) {
            throw CorpusError("no corpus configured (set 'corpus' or pass --corpus)");
        }
        std::string text;
        try {
            text = read_file(cfg.corpus_path);
        } catch (const Error&) {
            throw CorpusError("cannot read corpus: " + cfg.corpus_path);
        }
        if (starts_with(text, "gambitlab-corpus")) {
            throw CorpusError(cfg.corpus_path + " is already a corpus index");
        }

        PgnReadStats parse_stats;
        const std::vector<PgnGame> games = read_pgn(text, &parse_stats);
        IndexBuildStats build_stats;
        const CorpusIndex index = CorpusIndex::build(games, cfg.max_ply, &build_stats);

        const std::filesystem::path dir(cfg.out_dir);
        std::filesystem::create_directories(dir);
        const std::string index_path = (dir / "corpus.index").string();
        index.save(index_path);

        const int skipped = parse_stats.games_skipped + build_stats.games_skipped;
        out << "games read: " << parse_stats.games_read << "\n"
            << "games skipped: " << skipped << "\n"
            << "games indexed: " << index.games_indexed() << "\n"
            << "positions: " << index.positions() << "\n"
            << "transitions: " << index.transitions() << "\n"
            << "corpus id: " << index.id() << "\n"
            << "written: " << index_path << "\n";
        if (index.games_indexed() == 0) {
            err << "warning: no games were indexed\n";
        }
        for (const std::string& e : parse_stats.errors) err << "skipped: " << e << "\n";
        for (const std::string& e : build_stats.errors) err << "skipped: " << e << "\n";
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace gambitlab
