#include "core/pipeline/reports.hpp"

#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "core/common/util.hpp"

namespace gambitlab {

namespace {

std::string fmt(const char* spec, ...) {
    char buf[256];
    va_list args;
    va_start(args, spec);
    std::vsnprintf(buf, sizeof(buf), spec, args);
    va_end(args);
    return buf;
}

// Minimal CSV quoting; fixture names never need it but stay safe anyway.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string mate_cell(const Score& s) {
    return s.is_mate ? std::to_string(s.value) : std::string();
}

std::string pawn_cell(const Score& s) {
    return s.is_mate ? std::string() : fmt("%.2f", s.pawns());
}

const char* color_name(Color c) {
    return c == Color::White ? "white" : "black";
}

}  // namespace

std::string continuations_csv(const GambitReport& r) {
    std::ostringstream out;
    out << "rank,move,games,p_raw,p_renorm,q_pawns,win_prob,mate\n";
    int rank = 1;
    for (const ContinuationRow& row : r.rows) {
        out << rank++ << ',' << csv_field(row.san) << ',' << row.games << ','
            << fmt("%.6f", row.p_raw) << ',' << fmt("%.6f", row.p_renorm) << ','
            << pawn_cell(row.score) << ',' << fmt("%.6f", row.win_prob) << ','
            << mate_cell(row.score) << '\n';
    }
    return out.str();
}

std::string qseries_csv(const GambitReport& r) {
    std::ostringstream out;
    out << "ply,san,q_pawns,win_prob\n";
    for (const QPoint& p : r.qseries) {
        out << p.ply << ',' << csv_field(p.san) << ',' << pawn_cell(p.score) << ','
            << fmt("%.6f", p.win_prob) << '\n';
    }
    return out.str();
}

std::string report_text(const GambitReport& r) {
    std::ostringstream out;
    out << "=== " << r.spec.name << " ===\n"
        << "line            : " << r.spec.movetext << "\n"
        << "sacrifice       : ply " << r.spec.gambit_ply << " by "
        << color_name(r.spec.gambiteer) << "\n"
        << "position        : " << r.final_fen << "\n"
        << "position key    : " << r.final_key_hex << "\n"
        << "engine          : " << r.engine_identity << " (depth " << r.depth << ")\n"
        << "corpus          : id " << r.corpus_id << ", " << r.total_games
        << " games reach the position\n"
        << "weighting       : " << r.mode << "\n"
        << "\n"
        << "value after sacrifice : " << fmt("%+.2f", r.current_q) << " pawns\n"
        << "value before          : " << fmt("%+.2f", r.pre_q) << " pawns\n"
        << "sacrifice size        : " << fmt("%.2f", r.t_stat) << " pawns\n"
        << "trap line (relaxed)   : " << (r.cls.relaxed ? "yes" : "no") << "\n"
        << "trap line (strict)    : " << (r.cls.strict ? "yes" : "no") << "\n"
        << "\n"
        << "opponent replies (" << color_name(opposite(r.spec.gambiteer)) << " to move, "
        << "values for " << color_name(r.spec.gambiteer) << "):\n"
        << "  move      games   p_raw  p_renorm     eval  win%\n";
    for (const ContinuationRow& row : r.rows) {
        out << fmt("  %-8s %6d  %6.3f    %6.3f  ", row.san.c_str(), row.games,
                   row.p_raw, row.p_renorm);
        if (row.score.is_mate) {
            out << fmt("%7s", fmt("#%d", row.score.value).c_str());
        } else {
            out << fmt("%+7.2f", row.score.pawns());
        }
        out << fmt("  %5.1f\n", row.win_prob * 100.0);
    }
    out << "\n"
        << "win-probability statistics:\n"
        << fmt("  renormalised : value %.4f  volatility %.4f  skewness %+.4f\n",
               r.renorm.q_star, r.renorm.sigma, r.renorm.kappa)
        << fmt("  raw          : value %.4f  volatility %.4f  skewness %+.4f\n",
               r.raw.q_star, r.raw.sigma, r.raw.kappa)
        << fmt("  weighted win probability: renorm %.4f, raw %.4f\n", r.wwp_renorm,
               r.wwp_raw)
        << "pawn-scale statistics (mate lines excluded, weights renormalised):\n"
        << fmt("  value %+.4f  volatility %.4f  skewness %+.4f\n", r.pawn_renorm.q_star,
               r.pawn_renorm.sigma, r.pawn_renorm.kappa);
    if (r.spec.ref_skew || r.spec.ref_volatility || r.spec.ref_current_q ||
        r.spec.ref_pre_q) {
        out << "reference annotations:";
        if (r.spec.ref_current_q) out << fmt(" value %+.2f", *r.spec.ref_current_q);
        if (r.spec.ref_pre_q) out << fmt(" pre %+.2f", *r.spec.ref_pre_q);
        if (r.spec.ref_volatility) out << fmt(" volatility %.3f", *r.spec.ref_volatility);
        if (r.spec.ref_skew) out << fmt(" skewness %+.2f", *r.spec.ref_skew);
        out << "\n";
    }
    out << "\n"
        << "mainline trace (" << color_name(r.spec.gambiteer) << "'s view):\n"
        << "  ply  move       eval  win%\n";
    for (const QPoint& p : r.qseries) {
        out << fmt("  %3d  %-8s ", p.ply, p.san.c_str());
        if (p.score.is_mate) {
            out << fmt("%6s", fmt("#%d", p.score.value).c_str());
        } else {
            out << fmt("%+6.2f", p.score.pawns());
        }
        out << fmt("  %5.1f\n", p.win_prob * 100.0);
    }
    return out.str();
}

std::string ranking_initial_q_csv(const std::vector<const GambitReport*>& ranked) {
    std::ostringstream out;
    out << "rank,name,current_q,pre_q,t_stat\n";
    int rank = 1;
    for (const GambitReport* r : ranked) {
        out << rank++ << ',' << csv_field(r->spec.name) << ','
            << fmt("%.2f", r->current_q) << ',' << fmt("%.2f", r->pre_q) << ','
            << fmt("%.2f", r->t_stat) << '\n';
    }
    return out.str();
}

std::string ranking_skew_volatility_csv(const std::vector<const GambitReport*>& ranked) {
    std::ostringstream out;
    out << "rank,name,ref_skew,skew,ref_volatility,volatility\n";
    int rank = 1;
    for (const GambitReport* r : ranked) {
        out << rank++ << ',' << csv_field(r->spec.name) << ',';
        if (r->spec.ref_skew) out << fmt("%.4f", *r->spec.ref_skew);
        out << ',' << fmt("%.4f", r->mode_moments().kappa) << ',';
        if (r->spec.ref_volatility) out << fmt("%.4f", *r->spec.ref_volatility);
        out << ',' << fmt("%.4f", r->mode_moments().sigma) << '\n';
    }
    return out.str();
}

std::string aggregate_csv(const AggregateSummary& a) {
    std::ostringstream out;
    out << "n,mean_current_q,mean_pre_q,mean_cont_q,mean_kappa,mean_sigma,"
           "mean_player_prob,mean_win_prob,mean_wwp,prod_player_win\n";
    out << a.n << ',' << fmt("%.6f", a.mean_current_q) << ','
        << fmt("%.6f", a.mean_pre_q) << ',' << fmt("%.6f", a.mean_cont_q) << ','
        << fmt("%.6f", a.mean_kappa) << ',' << fmt("%.6f", a.mean_sigma) << ','
        << fmt("%.6f", a.mean_player_prob) << ',' << fmt("%.6f", a.mean_win_prob) << ','
        << fmt("%.6f", a.mean_wwp) << ',' << fmt("%.6f", a.prod_player_win) << '\n';
    return out.str();
}

void write_gambit_files(const RunConfig& cfg, const GambitReport& report) {
    const std::string slug = gambit_slug(report.spec.name);
    const std::filesystem::path dir(cfg.out_dir);
    std::filesystem::create_directories(dir);

    // Render first, write second: a failure inside rendering leaves no file.
    const std::string txt = report_text(report);
    const std::string cont = continuations_csv(report);
    const std::string qs = qseries_csv(report);

    atomic_write_file((dir / (slug + "_report.txt")).string(), txt);
    atomic_write_file((dir / (slug + "_continuations.csv")).string(), cont);
    atomic_write_file((dir / (slug + "_qseries.csv")).string(), qs);
}

}  // namespace gambitlab
