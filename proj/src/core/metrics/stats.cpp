#include "core/metrics/stats.hpp"

#include <algorithm>
#include <cmath>

#include "core/metrics/report.hpp"

namespace gambitlab {

double q_star(const std::vector<Outcome>& rows) {
    double sum = 0.0;
    for (const Outcome& r : rows) sum += r.p * r.w;
    return sum;
}

double volatility(const std::vector<Outcome>& rows) {
    const double q = q_star(rows);
    double var = 0.0;
    for (const Outcome& r : rows) var += r.p * (r.w - q) * (r.w - q);
    return std::sqrt(var);
}

double skewness(const std::vector<Outcome>& rows) {
    const double q = q_star(rows);
    const double sigma = volatility(rows);
    if (sigma == 0.0) return 0.0;
    double sum = 0.0;
    for (const Outcome& r : rows) {
        const double z = (r.w - q) / sigma;
        sum += r.p * z * z * z;
    }
    return sum;
}

double weighted_win_prob(const std::vector<Outcome>& rows) {
    return q_star(rows);
}

double test_statistic(double value_before, double value_after) {
    return value_before - value_after;
}

BellmanCheck bellman_check(double value_before, double value_after) {
    BellmanCheck out;
    if (value_after < value_before) {
        out.violated = true;
        out.gap = value_before - value_after;
    }
    return out;
}

Classification classify_gambit(double current_q, const std::vector<double>& reply_values) {
    constexpr double kEqualityEps = 1e-9;

    Classification out;
    if (current_q > kEqualityEps || reply_values.empty()) {
        return out;  // the sacrifice stands better than equal: no trap needed
    }

    const double best = *std::min_element(reply_values.begin(), reply_values.end());
    bool any_punishable = false;
    bool any_positive = false;
    bool all_positive = true;
    for (double v : reply_values) {
        if (v <= best) continue;  // a best reply, not punishable
        any_punishable = true;
        if (v > 0.0) {
            any_positive = true;
        } else {
            all_positive = false;
        }
    }

    out.relaxed = any_positive;
    out.strict = any_punishable && all_positive;
    return out;
}

namespace {

// Tie-free comparison key used by every ranking: (tier, value, name).
struct SortKey {
    int tier;
    double value;
    const std::string* name;
};

bool key_less(const SortKey& a, const SortKey& b) {
    if (a.tier != b.tier) return a.tier < b.tier;
    if (a.value != b.value) return a.value < b.value;
    return *a.name < *b.name;
}

SortKey make_key(const GambitReport& r, RankKey key) {
    switch (key) {
        case RankKey::kInitialQ:
            return {0, r.current_q, &r.spec.name};
        case RankKey::kSkew:
            if (r.spec.ref_skew.has_value()) return {0, *r.spec.ref_skew, &r.spec.name};
            return {1, r.mode_moments().kappa, &r.spec.name};
        case RankKey::kVolatility:
            if (r.spec.ref_volatility.has_value())
                return {0, *r.spec.ref_volatility, &r.spec.name};
            return {1, r.mode_moments().sigma, &r.spec.name};
    }
    return {0, 0.0, &r.spec.name};
}

double plain_mean(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

}  // namespace

std::vector<const GambitReport*> rank_gambits(const std::vector<GambitReport>& reports,
                                              RankKey key) {
    std::vector<const GambitReport*> out;
    out.reserve(reports.size());
    for (const GambitReport& r : reports) out.push_back(&r);
    std::sort(out.begin(), out.end(), [key](const GambitReport* a, const GambitReport* b) {
        return key_less(make_key(*a, key), make_key(*b, key));
    });
    return out;
}

AggregateSummary aggregate_summary(const std::vector<const GambitReport*>& reports,
                                   const std::string& mode) {
    const bool raw = (mode == "raw");

    AggregateSummary agg;
    agg.n = static_cast<int>(reports.size());
    if (reports.empty()) return agg;

    std::vector<double> cur, pre, cont, kap, sig, pprob, wprob, wwp;
    for (const GambitReport* r : reports) {
        cur.push_back(r->current_q);
        pre.push_back(r->pre_q);

        std::vector<double> row_q, row_p, row_w;
        for (const ContinuationRow& row : r->rows) {
            if (!row.score.is_mate) row_q.push_back(row.score.pawns());
            row_p.push_back(raw ? row.p_raw : row.p_renorm);
            row_w.push_back(row.win_prob);
        }
        cont.push_back(plain_mean(row_q));
        pprob.push_back(plain_mean(row_p));
        wprob.push_back(plain_mean(row_w));

        const Moments& m = raw ? r->raw : r->renorm;
        kap.push_back(m.kappa);
        sig.push_back(m.sigma);
        wwp.push_back(raw ? r->wwp_raw : r->wwp_renorm);
    }

    agg.mean_current_q = plain_mean(cur);
    agg.mean_pre_q = plain_mean(pre);
    agg.mean_cont_q = plain_mean(cont);
    agg.mean_kappa = plain_mean(kap);
    agg.mean_sigma = plain_mean(sig);
    agg.mean_player_prob = plain_mean(pprob);
    agg.mean_win_prob = plain_mean(wprob);
    agg.mean_wwp = plain_mean(wwp);
    agg.prod_player_win = agg.mean_player_prob * agg.mean_win_prob;
    return agg;
}

}  // namespace gambitlab
