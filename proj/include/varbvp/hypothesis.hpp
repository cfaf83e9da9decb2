#pragma once

#include <optional>
#include <string>
#include <vector>

#include "varbvp/energy.hpp"

namespace varbvp {

/// Growth conditions on F(k, u) that decide coercivity or anticoercivity
/// of the energy. A/B are the direct bounds, C/D/E/F the limit forms that
/// reduce to them.
enum class ConditionId {
    A1, A2_1, A2_2, A3_1, A3_2,
    B1, B2_1, B2_2, B3_1, B3_2,
    C1, C2, C3, C4,
    D1, D2, D3, D4,
    E1, E2, E3, E4,
    F1, F2, F3, F4,
};

std::string to_string(ConditionId id);
std::optional<ConditionId> condition_from_string(const std::string& name);

/// Which side of the coercivity dichotomy a consistent screen supports.
enum class EvidenceClass { coercive, anticoercive };
EvidenceClass evidence_class(ConditionId id);

struct ConditionParams {
    double alpha = 0.0;
    std::optional<double> q;      // power-growth conditions only
    double M = 0.0;               // inequality is screened for |u| > M
    double sample_max = 1e3;      // upper end of the screening range
    int samples = 512;            // log-spaced magnitudes per sign
};

/// The two spectral cutoffs the A/B thresholds compare against.
struct Thresholds {
    double lambda = 0.0;      // smallest eigenvalue of D^T D
    double lambda_max = 0.0;
    double bound = 0.0;       // 4^n
    double t_low = 0.0;       // lambda * min(p) / 2
    double t_high = 0.0;      // 4^n * max(p) / 2
};

Thresholds thresholds(const ProblemSpec& prob);

enum class Verdict { consistent, violated, inapplicable };
std::string to_string(Verdict v);

struct Witness {
    int k = 0;
    double u = 0.0;
    double F_value = 0.0;
};

struct ConditionReport {
    ConditionId condition = ConditionId::A1;
    ConditionParams params;
    Verdict verdict = Verdict::inapplicable;
    std::optional<Witness> witness;  // present whenever verdict == violated
    std::string note;
};

/// Samples the condition's inequality over all k and a symmetric
/// log-spaced grid of |u| in (max(M, 1e-3), sample_max]. A consistent
/// verdict is screening evidence only; asymptotics cannot be proved by
/// sampling. Limit conditions are screened through their reduction to the
/// corresponding A/B inequality.
ConditionReport screen_condition(const ProblemSpec& prob, ConditionId cond,
                                 const ConditionParams& params);

struct ZeroSlopeReport {
    bool applicable = false;  // requires f(k, 0) = 0 for every k
    std::vector<double> slope;
    std::vector<bool> converged;
    std::string note;
};

/// Estimates lim_{u->0} f(k, u)/u per k by sampling the ratio at
/// u = +-10^-j, j = 3..8, accepting the first scale at which successive
/// estimates and the two one-sided ratios agree.
ZeroSlopeReport zero_limit_slope(const ProblemSpec& prob);

enum class TheoremTag {
    existence_coercive,
    existence_anticoercive,
    two_solutions_infmax,  // anticoercive + small slope at zero
    two_solutions_supmin,  // coercive + large slope at zero
};
std::string to_string(TheoremTag t);

struct TheoremReport {
    Thresholds spectral;
    std::vector<ConditionReport> coercive_evidence;
    std::vector<ConditionReport> anticoercive_evidence;
    ZeroSlopeReport zero_slope;
    std::optional<double> c;
    std::vector<TheoremTag> applicable;
    std::vector<std::string> notes;

    bool has(TheoremTag t) const;
};

/// Aggregates screened claims into the final applicability verdict. The
/// two-solution tags additionally need the user-supplied constant c to
/// clear the spectral gates strictly.
TheoremReport applicability(const ProblemSpec& prob,
                            const std::vector<std::pair<ConditionId, ConditionParams>>& claims,
                            std::optional<double> c);

}  // namespace varbvp
