#pragma once

#include "zd/axis_integral.hpp"
#include "zd/entire.hpp"
#include "zd/growth.hpp"
#include "zd/log_sums.hpp"
#include "zd/window.hpp"
#include "zd/zero_sequence.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zd {

enum class Verdict { bounded, divergent, inconclusive };

const char* to_string(Verdict v);

/// Trend thresholds for the finite-window verdicts. The trend is the
/// least-squares slope of the running excess supremum against ln R over
/// the last sampled decade.
struct Thresholds {
    double bounded_trend = 0.01;
    double divergent_trend = 0.1;
};

/// Outcome of one inequality evaluated over a window grid. The verdict is
/// a finite-window proxy: "bounded" means consistent with the inequality
/// holding with some constant C, never a proof.
struct CriterionReport {
    std::string criterion_id;
    std::vector<Window> windows;
    std::vector<double> lhs, rhs, excess; // excess = lhs - rhs per window
    double sup_excess = 0.0;
    double fitted_c = 0.0;                // max(0, sup_excess); C is fitted, never input
    double trend = 0.0;
    Verdict verdict = Verdict::inconclusive;
    double tol = 0.0;                     // quadrature tolerance folded into excess, 0 if exact
    Thresholds thresholds{};
    std::vector<std::pair<std::string, std::string>> parameters; // echoed inputs
    std::vector<std::string> warnings;
};

using WindowFn = std::function<double(std::size_t, const Window&)>;

/// Shared evaluator: excess per window, running sup, trend, verdict.
CriterionReport excess_table(std::string criterion_id, const WindowFn& lhs,
                             const WindowFn& rhs, const WindowGrid& grid,
                             const Thresholds& th = {});

/// l_Z(r,R) <= (b + d(R)) ln(R/r) + C.  d == nullptr means d identically 0.
CriterionReport mr_check(const ZeroSequence& z, double b, const GrowthFunction* d,
                         const WindowGrid& grid, const Thresholds& th = {});

/// l_Z(r,R) <= l_W(r,R) + d(R) ln(R/r) + C, W in the open right half-plane.
CriterionReport dominance_check(const ZeroSequence& z, const ZeroSequence& w,
                                const GrowthFunction* d, const WindowGrid& grid,
                                const Thresholds& th = {});

/// l_Z(r,R) <= J(r,R; ln|g|) + d(R) ln(R/r) + C.
CriterionReport logmod_dominance_check(const ZeroSequence& z, const LogModulus& g_axis,
                                       const GrowthFunction* d, const WindowGrid& grid,
                                       double tol = 1e-8, const Thresholds& th = {});

/// J(r,R; ln|p|) <= J(r,R; ln|g|) + d(R) ln(R/r) + C.
CriterionReport multiplier_check(const LogModulus& p_axis, const LogModulus& g_axis,
                                 const GrowthFunction* d, const WindowGrid& grid,
                                 double tol = 1e-8, const Thresholds& th = {});

/// J(r,R; ln|mu_hat|) <= (b + d(R)) ln(R/r) + C.
CriterionReport width_check(const LogModulus& mu_hat_axis, double b,
                            const GrowthFunction* d, const WindowGrid& grid,
                            double tol = 1e-8, const Thresholds& th = {});

/// Divergence test for the completeness criterion: running sup of
/// l_Z(r,R) - b ln(R/r). The inf over admissible d collapses to d == 0:
/// every admissible d is o(1) and cannot change a slope-positive trend.
/// Verdict "divergent" is the finite-scale signature of completeness.
CriterionReport completeness_diagnostic(const ZeroSequence& z, double b,
                                        const WindowGrid& grid, const Thresholds& th = {});

/// Gap functional max{|J - l^rh|, |J - l^lh|} for a function together with
/// its zero set; expected bounded for conformant inputs. The caller is
/// responsible for Zf actually being the zero set of f.
CriterionReport lemma_gap(const LogModulus& f_axis, const ZeroSequence& zf,
                          const WindowGrid& grid, double tol = 1e-8,
                          const Thresholds& th = {});

struct PipelineResult {
    CriterionReport report;
    CanonicalProduct majorant;       // g*q, the even product over W and Q
    std::vector<std::string> stages; // human-readable stage log
    bool completed = false;          // false when the dominance precheck aborted
};

/// Majorant-product chain: precheck l_Z <= l_W + d ln + C, synthesize the
/// zero-density padding sequence Q from d, and verify the waypoint
/// l_Z(r,R) <= J(r,R; ln|g q|) + C on the grid. The precheck aborts the
/// pipeline only on a divergent verdict; an inconclusive precheck proceeds
/// with a warning.
PipelineResult majorant_pipeline(const ZeroSequence& z, const ZeroSequence& w,
                                 const GrowthFunction& d, const WindowGrid& grid,
                                 double tol = 1e-8, const Thresholds& th = {});

} // namespace zd
