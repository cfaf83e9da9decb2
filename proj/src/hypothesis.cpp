#include "varbvp/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <stdexcept>

namespace varbvp {

namespace {

struct ConditionMeta {
    const char* name;
    EvidenceClass evidence;
    // F_le:  F(k,u) <= alpha' * w(u)
    // F_ge:  F(k,u) >= alpha' * w(u)
    // sign_le: u*f(k,u) <= 0   sign_ge: u*f(k,u) >= 0
    enum class Form { sign_le, sign_ge, F_le, F_ge } form;
    bool quadratic_weight;  // w(u) = u^2 versus |u|^q
    // How the screened alpha' derives from the claimed alpha for the
    // limit conditions: same, half, or midpoint with the spectral cutoff.
    enum class AlphaRule { same, half, midpoint_high, midpoint_low } alpha_rule;
    // Gate on alpha relative to the problem's thresholds (0 none,
    // -1 alpha < t_low, +1 alpha > t_high).
    int threshold_gate;
    // Structural constraints.
    bool requires_q;
    double q_min;        // inclusive
    double q_max;        // exclusive; infinity when unbounded
    int alpha_sign;      // 0 free, +1 positive, -1 negative
};

using Form = ConditionMeta::Form;
using AlphaRule = ConditionMeta::AlphaRule;

constexpr double kInf = std::numeric_limits<double>::infinity();

const ConditionMeta kMeta[] = {
    // name     evidence                       form          quad   alpha_rule            gate  q?    q_min q_max alpha_sign
    {"A1",   EvidenceClass::coercive,     Form::sign_le, true,  AlphaRule::same,         0, false, 0, kInf, +1},
    {"A2.1", EvidenceClass::coercive,     Form::F_le,    true,  AlphaRule::same,        -1, false, 0, kInf,  0},
    {"A2.2", EvidenceClass::coercive,     Form::F_le,    false, AlphaRule::same,         0, true,  1, 2,     0},
    {"A3.1", EvidenceClass::anticoercive, Form::F_ge,    true,  AlphaRule::same,        +1, false, 0, kInf,  0},
    {"A3.2", EvidenceClass::anticoercive, Form::F_ge,    false, AlphaRule::same,         0, true,  2, kInf, +1},
    {"B1",   EvidenceClass::anticoercive, Form::sign_ge, true,  AlphaRule::same,         0, false, 0, kInf, +1},
    {"B2.1", EvidenceClass::anticoercive, Form::F_ge,    true,  AlphaRule::same,        +1, false, 0, kInf,  0},
    {"B2.2", EvidenceClass::anticoercive, Form::F_ge,    false, AlphaRule::same,         0, true,  1, 2,     0},
    {"B3.1", EvidenceClass::coercive,     Form::F_le,    true,  AlphaRule::same,        -1, false, 0, kInf,  0},
    {"B3.2", EvidenceClass::coercive,     Form::F_le,    false, AlphaRule::same,         0, true,  2, kInf, -1},
    {"C1",   EvidenceClass::anticoercive, Form::F_ge,    true,  AlphaRule::same,        +1, false, 0, kInf,  0},
    {"C2",   EvidenceClass::anticoercive, Form::F_ge,    true,  AlphaRule::midpoint_high,+1, false, 0, kInf, 0},
    {"C3",   EvidenceClass::anticoercive, Form::F_ge,    true,  AlphaRule::midpoint_high,+1, false, 0, kInf, 0},
    {"C4",   EvidenceClass::anticoercive, Form::F_ge,    true,  AlphaRule::same,        +1, false, 0, kInf,  0},
    {"D1",   EvidenceClass::anticoercive, Form::F_ge,    false, AlphaRule::same,         0, true,  2, kInf, +1},
    {"D2",   EvidenceClass::anticoercive, Form::F_ge,    false, AlphaRule::half,         0, true,  2, kInf, +1},
    {"D3",   EvidenceClass::anticoercive, Form::F_ge,    false, AlphaRule::half,         0, true,  2, kInf, +1},
    {"D4",   EvidenceClass::anticoercive, Form::F_ge,    false, AlphaRule::same,         0, true,  2, kInf, +1},
    {"E1",   EvidenceClass::coercive,     Form::F_le,    true,  AlphaRule::same,        -1, false, 0, kInf,  0},
    {"E2",   EvidenceClass::coercive,     Form::F_le,    true,  AlphaRule::midpoint_low,-1, false, 0, kInf,  0},
    {"E3",   EvidenceClass::coercive,     Form::F_le,    true,  AlphaRule::midpoint_low,-1, false, 0, kInf,  0},
    {"E4",   EvidenceClass::coercive,     Form::F_le,    true,  AlphaRule::same,        -1, false, 0, kInf,  0},
    {"F1",   EvidenceClass::coercive,     Form::F_le,    false, AlphaRule::same,         0, true,  2, kInf, -1},
    {"F2",   EvidenceClass::coercive,     Form::F_le,    false, AlphaRule::half,         0, true,  2, kInf, -1},
    {"F3",   EvidenceClass::coercive,     Form::F_le,    false, AlphaRule::half,         0, true,  2, kInf, -1},
    {"F4",   EvidenceClass::coercive,     Form::F_le,    false, AlphaRule::same,         0, true,  2, kInf, -1},
};

const ConditionMeta& meta(ConditionId id) { return kMeta[static_cast<int>(id)]; }

}  // namespace

std::string to_string(ConditionId id) { return meta(id).name; }

std::optional<ConditionId> condition_from_string(const std::string& name) {
    for (int i = 0; i < static_cast<int>(std::size(kMeta)); ++i)
        if (name == kMeta[i].name) return static_cast<ConditionId>(i);
    return std::nullopt;
}

EvidenceClass evidence_class(ConditionId id) { return meta(id).evidence; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::violated: return "violated";
        case Verdict::inapplicable: return "inapplicable";
    }
    return "?";
}

std::string to_string(TheoremTag t) {
    switch (t) {
        case TheoremTag::existence_coercive: return "existence-coercive";
        case TheoremTag::existence_anticoercive: return "existence-anticoercive";
        case TheoremTag::two_solutions_infmax: return "two-solutions-Theorem-1";
        case TheoremTag::two_solutions_supmin: return "two-solutions-Theorem-2";
    }
    return "?";
}

Thresholds thresholds(const ProblemSpec& prob) {
    const SpectralBounds sb = embedding_constants(prob.interior_size(), prob.n());
    Thresholds t;
    t.lambda = sb.lambda_min;
    t.lambda_max = sb.lambda_max;
    t.bound = sb.upper_bound;
    t.t_low = 0.5 * sb.lambda_min * prob.p_min();
    t.t_high = 0.5 * sb.upper_bound * prob.p_max();
    return t;
}

ConditionReport screen_condition(const ProblemSpec& prob, ConditionId cond,
                                 const ConditionParams& params) {
    const ConditionMeta& m = meta(cond);
    ConditionReport rep;
    rep.condition = cond;
    rep.params = params;

    // Structural parameter validation is condition/parameter mismatch.
    if (m.requires_q) {
        if (!params.q)
            throw std::invalid_argument(std::string(m.name) + ": exponent q is required");
        const double q = *params.q;
        const bool ok = (m.q_min == 1) ? (q >= 1.0 && q < 2.0) : (q > 2.0);
        if (!ok)
            throw std::invalid_argument(std::string(m.name) + ": q outside the admissible range");
    } else if (params.q) {
        throw std::invalid_argument(std::string(m.name) + ": condition takes no exponent q");
    }
    if (m.alpha_sign > 0 && !(params.alpha > 0.0))
        throw std::invalid_argument(std::string(m.name) + ": alpha > 0 required");
    if (m.alpha_sign < 0 && !(params.alpha < 0.0))
        throw std::invalid_argument(std::string(m.name) + ": alpha < 0 required");
    if (params.M < 0.0) throw std::invalid_argument("M >= 0 required");
    if (params.samples < 1) throw std::invalid_argument("samples >= 1 required");
    if (!(params.sample_max > params.M))
        throw std::invalid_argument("sample_max must exceed M");

    const Thresholds th = thresholds(prob);

    // Spectral gates depend on the instance, so a miss is reported rather
    // than thrown.
    if (m.threshold_gate < 0 && !(params.alpha < th.t_low)) {
        rep.verdict = Verdict::inapplicable;
        rep.note = "alpha must lie below lambda*min(p)/2 = " + std::to_string(th.t_low);
        return rep;
    }
    if (m.threshold_gate > 0 && !(params.alpha > th.t_high)) {
        rep.verdict = Verdict::inapplicable;
        rep.note = "alpha must lie above 4^n*max(p)/2 = " + std::to_string(th.t_high);
        return rep;
    }

    double screened_alpha = params.alpha;
    switch (m.alpha_rule) {
        case AlphaRule::same: break;
        case AlphaRule::half: screened_alpha = 0.5 * params.alpha; break;
        case AlphaRule::midpoint_high: screened_alpha = 0.5 * (params.alpha + th.t_high); break;
        case AlphaRule::midpoint_low: screened_alpha = 0.5 * (params.alpha + th.t_low); break;
    }

    const bool sign_form = (m.form == Form::sign_le || m.form == Form::sign_ge);
    double lo = std::max(params.M, 1e-3);
    if (sign_form) lo = std::max(lo, params.alpha);
    const double hi = params.sample_max;
    if (!(hi > lo)) {
        rep.verdict = Verdict::inapplicable;
        rep.note = "screening range is empty";
        return rep;
    }

    const int N = prob.interior_size();
    const double q = params.q.value_or(2.0);
    int overflowed = 0;

    for (int k = 1; k <= N && rep.verdict != Verdict::violated; ++k) {
        for (int s = 0; s < 2 && rep.verdict != Verdict::violated; ++s) {
            const double sgn = (s == 0) ? 1.0 : -1.0;
            for (int i = 0; i < params.samples; ++i) {
                const double mag =
                    lo * std::pow(hi / lo, static_cast<double>(i + 1) / params.samples);
                const double u = sgn * mag;
                double lhs, rhs;
                try {
                    if (sign_form) {
                        lhs = u * prob.f().eval(k, u);
                        rhs = 0.0;
                    } else {
                        lhs = prob.F()(k, u);
                        rhs = m.quadratic_weight ? screened_alpha * u * u
                                                 : screened_alpha * std::pow(mag, q);
                    }
                } catch (const EvalError&) {
                    ++overflowed;
                    continue;
                }
                const double slack = 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
                const bool wants_le = (m.form == Form::sign_le || m.form == Form::F_le);
                const bool broken = wants_le ? (lhs > rhs + slack) : (lhs < rhs - slack);
                if (broken) {
                    rep.verdict = Verdict::violated;
                    rep.witness = Witness{k, u, lhs};
                    break;
                }
            }
        }
    }
    if (rep.verdict != Verdict::violated) rep.verdict = Verdict::consistent;

    std::string ineq;
    if (sign_form) {
        ineq = (m.form == Form::sign_le) ? "u*f(k,u) <= 0" : "u*f(k,u) >= 0";
        ineq += " for |u| > " + std::to_string(lo);
    } else {
        ineq = (m.form == Form::F_le) ? "F(k,u) <= " : "F(k,u) >= ";
        ineq += std::to_string(screened_alpha);
        ineq += m.quadratic_weight ? "*u^2" : ("*|u|^" + std::to_string(q));
    }
    rep.note = "screened " + ineq + " on " + std::to_string(params.samples) +
               " magnitudes per sign in (" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    if (m.alpha_rule != AlphaRule::same)
        rep.note += "; limit condition reduced to the displayed bound";
    if (overflowed > 0)
        rep.note += "; " + std::to_string(overflowed) + " samples overflowed and were skipped";
    rep.note += "; consistency is sampling evidence, not proof";
    return rep;
}

ZeroSlopeReport zero_limit_slope(const ProblemSpec& prob) {
    ZeroSlopeReport rep;
    const int N = prob.interior_size();
    for (int k = 1; k <= N; ++k) {
        const double f0 = prob.f().eval(k, 0.0);
        if (std::abs(f0) > 1e-12) {
            rep.applicable = false;
            rep.note = "f(" + std::to_string(k) + ", 0) = " + std::to_string(f0) +
                       " != 0; the slope limit does not apply";
            return rep;
        }
    }
    rep.applicable = true;
    rep.slope.assign(static_cast<std::size_t>(N), 0.0);
    rep.converged.assign(static_cast<std::size_t>(N), false);
    for (int k = 1; k <= N; ++k) {
        double est[6], gap[6];
        for (int j = 3; j <= 8; ++j) {
            const double u = std::pow(10.0, -j);
            const double rp = prob.f().eval(k, u) / u;
            const double rm = prob.f().eval(k, -u) / (-u);
            est[j - 3] = 0.5 * (rp + rm);
            gap[j - 3] = std::abs(rp - rm);
        }
        bool ok = false;
        double value = est[5];
        for (int i = 0; i + 1 < 6; ++i) {
            const double scale = std::max(1.0, std::abs(est[i + 1]));
            if (std::abs(est[i + 1] - est[i]) <= 1e-6 * scale && gap[i + 1] <= 1e-5 * scale) {
                ok = true;
                value = est[i + 1];
                break;
            }
        }
        rep.slope[static_cast<std::size_t>(k - 1)] = value;
        rep.converged[static_cast<std::size_t>(k - 1)] = ok;
    }
    return rep;
}

bool TheoremReport::has(TheoremTag t) const {
    return std::find(applicable.begin(), applicable.end(), t) != applicable.end();
}

TheoremReport applicability(const ProblemSpec& prob,
                            const std::vector<std::pair<ConditionId, ConditionParams>>& claims,
                            std::optional<double> c) {
    TheoremReport rep;
    rep.spectral = thresholds(prob);
    rep.c = c;

    bool coercive_ok = false;
    bool anticoercive_ok = false;
    bool theorem1_condition = false;
    bool theorem2_condition = false;
    for (const auto& [cond, params] : claims) {
        ConditionReport cr = screen_condition(prob, cond, params);
        const bool consistent = cr.verdict == Verdict::consistent;
        if (evidence_class(cond) == EvidenceClass::coercive) {
            coercive_ok = coercive_ok || consistent;
            if (consistent && (cond == ConditionId::B3_1 || cond == ConditionId::B3_2 ||
                               cond == ConditionId::A2_1 || cond == ConditionId::A2_2))
                theorem2_condition = true;
            rep.coercive_evidence.push_back(std::move(cr));
        } else {
            anticoercive_ok = anticoercive_ok || consistent;
            if (consistent && (cond == ConditionId::A3_1 || cond == ConditionId::A3_2 ||
                               cond == ConditionId::B2_1 || cond == ConditionId::B2_2))
                theorem1_condition = true;
            rep.anticoercive_evidence.push_back(std::move(cr));
        }
    }

    rep.zero_slope = zero_limit_slope(prob);

    if (coercive_ok) rep.applicable.push_back(TheoremTag::existence_coercive);
    if (anticoercive_ok) rep.applicable.push_back(TheoremTag::existence_anticoercive);
    if (coercive_ok && anticoercive_ok)
        rep.notes.push_back("claims support both coercivity and anticoercivity; "
                            "screening evidence is contradictory");

    const bool slopes_known =
        rep.zero_slope.applicable &&
        std::all_of(rep.zero_slope.converged.begin(), rep.zero_slope.converged.end(),
                    [](bool b) { return b; });
    if (!c) {
        rep.notes.push_back("no constant c supplied; the two-solution gates were not evaluated");
        return rep;
    }
    if (!slopes_known) {
        rep.notes.push_back("slope of f at zero unavailable; the two-solution gates were not "
                            "evaluated");
        return rep;
    }
    const double slope_max = *std::max_element(rep.zero_slope.slope.begin(), rep.zero_slope.slope.end());
    const double slope_min = *std::min_element(rep.zero_slope.slope.begin(), rep.zero_slope.slope.end());

    const double gate1 = rep.spectral.lambda * prob.p_min();
    if (theorem1_condition && slope_max <= *c && *c < gate1)
        rep.applicable.push_back(TheoremTag::two_solutions_infmax);
    else if (theorem1_condition)
        rep.notes.push_back("two-solution gate (inf-max) not met: need max slope <= c < "
                            "lambda*min(p) = " + std::to_string(gate1));

    const double gate2 = rep.spectral.bound * prob.p_max();
    if (theorem2_condition && slope_min >= *c && *c > gate2)
        rep.applicable.push_back(TheoremTag::two_solutions_supmin);
    else if (theorem2_condition)
        rep.notes.push_back("two-solution gate (sup-min) not met: need min slope >= c > "
                            "4^n*max(p) = " + std::to_string(gate2));
    return rep;
}

}  // namespace varbvp
