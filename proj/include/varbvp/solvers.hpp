#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "varbvp/energy.hpp"

namespace varbvp {

struct SolverConfig {
    double tol_grad = 1e-10;   // max-norm target for gradients
    int max_iter = 10000;
    int starts = 200;          // random starts on top of the deterministic set
    double box_radius = 10.0;
    std::uint64_t seed = 42;
    int path_points = 41;      // nodes of the mountain-pass path
    double mp_step = 0.1;      // initial deformation step
    double dedup_tol = 1e-6;
};

void validate(const SolverConfig& cfg);

enum class Sense { minimize, maximize };
enum class PointKind { minimum, maximum, saddle, degenerate };
enum class Origin { descent, ascent, mountain_pass, newton, oracle };

std::string to_string(PointKind k);
std::string to_string(Origin o);
std::optional<PointKind> kind_from_string(const std::string& s);

struct CriticalPoint {
    InteriorVector x;
    double J = 0.0;
    double grad_norm_inf = 0.0;
    double residual_norm_inf = 0.0;
    PointKind kind = PointKind::degenerate;
    Origin origin = Origin::descent;
};

/// Deduplicated critical points sorted by energy (ties by lexicographic x).
struct SolutionSet {
    std::vector<CriticalPoint> points;
    std::vector<std::string> diagnostics;
};

struct LocalSearchResult {
    bool converged = false;
    InteriorVector x;            // best iterate either way
    double J = 0.0;
    double grad_norm_inf = 0.0;
    int iterations = 0;
    std::optional<CriticalPoint> point;  // set when converged
    std::string note;                    // failure reason otherwise
};

/// Minimum/maximum eigenvalue inertia of the Hessian at x with a 1e-8
/// zero band. Classification away from critical points is advisory.
PointKind classify(const ProblemSpec& prob, const InteriorVector& x);

/// Gradient descent (or ascent) with Armijo backtracking down to a 1e-4
/// gradient, then regularized Newton to tol_grad. Reports divergence when
/// the iterate norm exceeds 1e6 * box_radius.
LocalSearchResult local_descent(const ProblemSpec& prob, const InteriorVector& x0, Sense sense,
                                const SolverConfig& cfg);

/// Plain regularized Newton on the gradient from x0; finds critical
/// points of any kind. After reaching tol_grad the iteration keeps
/// polishing while the gradient still improves so that degenerate roots
/// land within dedup distance of each other.
LocalSearchResult newton_refine(const ProblemSpec& prob, const InteriorVector& x0,
                                const SolverConfig& cfg, Origin origin);

/// local_descent from the origin, the 2N signed unit vectors scaled by
/// box_radius/2 and `starts` seeded uniform draws in the box; failures go
/// to diagnostics. Doubles as the brute-force census for small N.
SolutionSet multistart(const ProblemSpec& prob, Sense sense, const SolverConfig& cfg);

/// Census of critical points of every kind: both multistart senses plus
/// raw Newton from the same start set and from a regular grid over the
/// box.
SolutionSet oracle_census(const ProblemSpec& prob, const SolverConfig& cfg);

SolutionSet dedup(std::vector<CriticalPoint> points, double tol);

enum class PathVariant { inf_max, sup_min };

struct MountainPassResult {
    bool converged = false;
    std::optional<CriticalPoint> point;
    std::string note;
    double initial_path_max = 0.0;
    // Path maximum after each sweep; non-increasing by construction.
    std::vector<double> sweep_max;
};

/// Path-deformation search for the pass between x_a and x_b: repeatedly
/// take a backtracked descent step at the node of maximal energy and
/// re-space the polygon by arclength, never letting the path maximum
/// increase; the final node is Newton-refined. The sup-min variant runs
/// the same algorithm on the negated problem and maps the result back.
MountainPassResult mountain_pass(const ProblemSpec& prob, const InteriorVector& x_a,
                                 const InteriorVector& x_b, PathVariant variant,
                                 const SolverConfig& cfg);

/// Marches along seeded random directions, doubling the radius, until the
/// energy drops below `target`. Terminates under anticoercivity.
std::optional<InteriorVector> find_point_below(const ProblemSpec& prob, double target,
                                               const SolverConfig& cfg);

}  // namespace varbvp
