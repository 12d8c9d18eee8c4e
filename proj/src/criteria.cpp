#include "zd/criteria.hpp"

#include "zd/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zd {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

// Running sup of excess by increasing R, trend over the last decade,
// verdict. Windows need not arrive sorted.
void assess(CriterionReport& rep) {
    rep.sup_excess = 0.0;
    if (rep.excess.empty()) {
        rep.verdict = Verdict::inconclusive;
        rep.warnings.push_back("empty grid");
        return;
    }
    rep.sup_excess = *std::max_element(rep.excess.begin(), rep.excess.end());
    rep.fitted_c = std::max(0.0, rep.sup_excess);

    std::vector<std::size_t> order(rep.windows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rep.windows[a].R < rep.windows[b].R;
    });

    // One running-sup point per distinct R.
    std::vector<double> lnR, S;
    double run = -std::numeric_limits<double>::infinity();
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        const std::size_t i = order[idx];
        run = std::max(run, rep.excess[i]);
        const bool last_of_R = idx + 1 == order.size() ||
                               rep.windows[order[idx + 1]].R != rep.windows[i].R;
        if (last_of_R) {
            lnR.push_back(std::log(rep.windows[i].R));
            S.push_back(run);
        }
    }

    if (S.size() < 2) {
        rep.trend = 0.0;
        rep.verdict = Verdict::inconclusive;
        rep.warnings.push_back("fewer than two distinct R values; no trend");
        return;
    }

    // Least squares of S against ln R over the last decade of R values.
    const double ln_cut = lnR.back() - std::log(10.0) - 1e-12;
    std::size_t first = 0;
    while (first + 2 < lnR.size() && lnR[first] < ln_cut) ++first;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::size_t m = lnR.size() - first;
    for (std::size_t i = first; i < lnR.size(); ++i) {
        sx += lnR[i];
        sy += S[i];
        sxx += lnR[i] * lnR[i];
        sxy += lnR[i] * S[i];
    }
    const double denom = m * sxx - sx * sx;
    rep.trend = denom > 0.0 ? (m * sxy - sx * sy) / denom : 0.0;

    const bool increased = S.back() > S[first] + 1e-9;
    if (rep.trend < rep.thresholds.bounded_trend)
        rep.verdict = Verdict::bounded;
    else if (rep.trend > rep.thresholds.divergent_trend && increased)
        rep.verdict = Verdict::divergent;
    else
        rep.verdict = Verdict::inconclusive;
}

void warn_if_not_separated(CriterionReport& rep, const ZeroSequence& z,
                           const char* name) {
    if (z.empty()) return;
    const auto sep = separation_margin(z);
    if (!sep.separated) {
        std::ostringstream os;
        os << name << " is not separated from the imaginary axis (margin " << sep.margin
           << "); the hypothesis of the criterion is violated";
        rep.warnings.push_back(os.str());
    }
    const std::size_t axis = imaginary_axis_count(z);
    if (axis > 0) {
        std::ostringstream os;
        os << axis << " point(s) of " << name
           << " lie on the imaginary axis and contribute to neither half-plane sum";
        rep.warnings.push_back(os.str());
    }
}

double d_at(const GrowthFunction* d, double R) { return d ? (*d)(R) : 0.0; }

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::bounded: return "bounded";
        case Verdict::divergent: return "divergent";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

CriterionReport excess_table(std::string criterion_id, const WindowFn& lhs,
                             const WindowFn& rhs, const WindowGrid& grid,
                             const Thresholds& th) {
    if (grid.empty()) throw std::invalid_argument("excess_table: empty grid");
    CriterionReport rep;
    rep.criterion_id = std::move(criterion_id);
    rep.windows = grid.windows();
    rep.thresholds = th;
    const std::size_t n = grid.size();
    rep.lhs.resize(n);
    rep.rhs.resize(n);
    rep.excess.resize(n);
    parallel_for(n, [&](std::size_t i) {
        const Window& w = grid.windows()[i];
        rep.lhs[i] = lhs(i, w);
        rep.rhs[i] = rhs(i, w);
        rep.excess[i] = rep.lhs[i] - rep.rhs[i];
    });
    assess(rep);
    return rep;
}

CriterionReport mr_check(const ZeroSequence& z, double b, const GrowthFunction* d,
                         const WindowGrid& grid, const Thresholds& th) {
    if (!(b >= 0.0)) throw std::invalid_argument("mr_check: b must be >= 0");
    auto rep = excess_table(
        "mr",
        [&](std::size_t, const Window& w) { return log_sum(z, w.r, w.R); },
        [&](std::size_t, const Window& w) {
            return (b + d_at(d, w.R)) * std::log(w.R / w.r);
        },
        grid, th);
    rep.parameters = {{"b", fmt(b)}, {"d", d ? "growth-function" : "zero"}};
    warn_if_not_separated(rep, z, "Z");
    return rep;
}

CriterionReport dominance_check(const ZeroSequence& z, const ZeroSequence& w,
                                const GrowthFunction* d, const WindowGrid& grid,
                                const Thresholds& th) {
    for (const auto& p : w.points())
        if (!(p.real() > 0.0))
            throw std::invalid_argument(
                "dominance_check: W must lie in the open right half-plane");
    auto rep = excess_table(
        "dominance",
        [&](std::size_t, const Window& win) { return log_sum(z, win.r, win.R); },
        [&](std::size_t, const Window& win) {
            return log_sum(w, win.r, win.R) + d_at(d, win.R) * std::log(win.R / win.r);
        },
        grid, th);
    rep.parameters = {{"d", d ? "growth-function" : "zero"}};
    warn_if_not_separated(rep, z, "Z");
    warn_if_not_separated(rep, w, "W");
    return rep;
}

CriterionReport logmod_dominance_check(const ZeroSequence& z, const LogModulus& g_axis,
                                       const GrowthFunction* d, const WindowGrid& grid,
                                       double tol, const Thresholds& th) {
    const std::vector<double> j = axis_integral_grid(g_axis, grid, tol);
    auto rep = excess_table(
        "logmod",
        [&](std::size_t, const Window& w) { return log_sum(z, w.r, w.R); },
        [&](std::size_t i, const Window& w) {
            return j[i] + d_at(d, w.R) * std::log(w.R / w.r);
        },
        grid, th);
    rep.tol = tol;
    rep.parameters = {{"d", d ? "growth-function" : "zero"}, {"tol", fmt(tol)}};
    warn_if_not_separated(rep, z, "Z");
    return rep;
}

CriterionReport multiplier_check(const LogModulus& p_axis, const LogModulus& g_axis,
                                 const GrowthFunction* d, const WindowGrid& grid,
                                 double tol, const Thresholds& th) {
    const std::vector<double> jp = axis_integral_grid(p_axis, grid, tol);
    const std::vector<double> jg = axis_integral_grid(g_axis, grid, tol);
    auto rep = excess_table(
        "multiplier",
        [&](std::size_t i, const Window&) { return jp[i]; },
        [&](std::size_t i, const Window& w) {
            return jg[i] + d_at(d, w.R) * std::log(w.R / w.r);
        },
        grid, th);
    rep.tol = 2.0 * tol;
    rep.parameters = {{"d", d ? "growth-function" : "zero"}, {"tol", fmt(tol)}};
    return rep;
}

CriterionReport width_check(const LogModulus& mu_hat_axis, double b,
                            const GrowthFunction* d, const WindowGrid& grid,
                            double tol, const Thresholds& th) {
    if (!(b >= 0.0)) throw std::invalid_argument("width_check: b must be >= 0");
    const std::vector<double> j = axis_integral_grid(mu_hat_axis, grid, tol);
    auto rep = excess_table(
        "width",
        [&](std::size_t i, const Window&) { return j[i]; },
        [&](std::size_t, const Window& w) {
            return (b + d_at(d, w.R)) * std::log(w.R / w.r);
        },
        grid, th);
    rep.tol = tol;
    rep.parameters = {{"b", fmt(b)}, {"d", d ? "growth-function" : "zero"}, {"tol", fmt(tol)}};
    // The source statement says "separated from zero" where every parallel
    // statement says separated from the imaginary axis; axis separation is
    // what this check needs, and the discrepancy is surfaced here.
    rep.warnings.push_back(
        "width_check requires the zero sequence of mu_hat to be separated from the "
        "imaginary axis (stated elsewhere as 'separated from zero'); axis separation "
        "is assumed");
    return rep;
}

CriterionReport completeness_diagnostic(const ZeroSequence& z, double b,
                                        const WindowGrid& grid, const Thresholds& th) {
    if (!(b >= 0.0))
        throw std::invalid_argument("completeness_diagnostic: b must be >= 0");
    auto rep = excess_table(
        "completeness",
        [&](std::size_t, const Window& w) { return log_sum(z, w.r, w.R); },
        [&](std::size_t, const Window& w) { return b * std::log(w.R / w.r); },
        grid, th);
    rep.parameters = {{"b", fmt(b)}, {"d", "zero (inf over admissible d collapsed)"}};
    warn_if_not_separated(rep, z, "Z");
    return rep;
}

CriterionReport lemma_gap(const LogModulus& f_axis, const ZeroSequence& zf,
                          const WindowGrid& grid, double tol, const Thresholds& th) {
    const std::vector<double> j = axis_integral_grid(f_axis, grid, tol);
    auto rep = excess_table(
        "gap",
        [&](std::size_t i, const Window& w) {
            const double rh = half_plane_log_sum(zf, w.r, w.R, HalfPlane::right);
            const double lh = half_plane_log_sum(zf, w.r, w.R, HalfPlane::left);
            return std::max(std::abs(j[i] - rh), std::abs(j[i] - lh));
        },
        [&](std::size_t, const Window&) { return 0.0; },
        grid, th);
    rep.tol = tol;
    rep.parameters = {{"tol", fmt(tol)}};
    return rep;
}

PipelineResult majorant_pipeline(const ZeroSequence& z, const ZeroSequence& w,
                                 const GrowthFunction& d, const WindowGrid& grid,
                                 double tol, const Thresholds& th) {
    PipelineResult out;
    double r0 = std::numeric_limits<double>::infinity();
    double r_max = 0.0;
    for (const auto& win : grid.windows()) {
        r0 = std::min(r0, win.r);
        r_max = std::max(r_max, win.R);
    }

    CriterionReport pre = dominance_check(z, w, &d, grid, th);
    {
        std::ostringstream os;
        os << "dominance precheck: verdict " << to_string(pre.verdict) << ", sup excess "
           << pre.sup_excess << ", trend " << pre.trend;
        out.stages.push_back(os.str());
    }
    if (pre.verdict == Verdict::divergent) {
        out.report = pre;
        out.report.warnings.push_back(
            "majorant pipeline aborted: dominance precheck diverges");
        out.completed = false;
        return out;
    }

    // d -> Q -> padding sequence with counting function floor(Q).
    std::vector<double> x_grid;
    for (double x = r0;; x *= std::pow(10.0, 1.0 / 40.0)) {
        x_grid.push_back(x);
        if (x >= r_max) break;
    }
    TransformResult dq = d_to_q(d, r0, x_grid);
    const ZeroSequence padding = synthesize_sequence(dq.fn, r_max);
    {
        std::ostringstream os;
        os << "synthesized padding sequence Q with " << padding.size()
           << " points up to r = " << r_max;
        out.stages.push_back(os.str());
    }

    const CanonicalProduct gq(ZeroSequence::concat(w, padding));
    const LogModulus v = product_axis_logmod(gq);
    const std::vector<double> j = axis_integral_grid(v, grid, tol);

    out.report = excess_table(
        "pipeline",
        [&](std::size_t, const Window& win) { return log_sum(z, win.r, win.R); },
        [&](std::size_t i, const Window&) { return j[i]; },
        grid, th);
    out.report.tol = tol;
    out.report.parameters = {{"tol", fmt(tol)},
                             {"padding_points", fmt(static_cast<double>(padding.size()))}};
    for (const auto& warn : dq.warnings) out.report.warnings.push_back(warn);
    if (pre.verdict == Verdict::inconclusive)
        out.report.warnings.push_back("dominance precheck was inconclusive");
    out.majorant = gq;
    out.completed = true;
    return out;
}

} // namespace zd
