#pragma once

#include "setlim/multifn.hpp"
#include "setlim/partition.hpp"
#include "setlim/sets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace setlim {

struct SumTraceEntry {
    std::string partition_id;
    double diameter = 0;
    CompactSet sum;
    std::optional<double> dist_prev;
    std::optional<double> dist_target;
};

struct SumTrace {
    std::vector<SumTraceEntry> entries;
    /// Sparse-model traces measure support gaps through separating
    /// functionals, which bound the Hausdorff distance from below.
    bool lower_bound_metric = false;
};

enum class Verdict { Converged, NotCauchy, BudgetExhausted };
std::string verdict_name(Verdict v);

struct LimitEstimate {
    CompactSet candidate;
    double cauchy_tail = 0;      // max pairwise distance over the last window
    double final_diameter = 0;
    Verdict verdict = Verdict::BudgetExhausted;
};

/// S(F, Gamma, T): Minkowski fold of |Delta_i| F(xi_i). Interval lengths are
/// applied as exact rationals where the representation supports it.
CompactSet riemann_sum(const Multifunction& f, const TaggedPartition& part);

/// sum_i |Delta_i| h_{F(xi_i)}(fn); equals the support of the Riemann sum by
/// Minkowski additivity, without materializing it.
double sum_support(const Multifunction& f, const TaggedPartition& part, const Functional& fn);

struct ConvergeResult {
    LimitEstimate estimate;
    SumTrace trace;
};

/// Trailing-window Cauchy detection along a schedule of shrinking partitions.
/// Converged: last `window` sums pairwise within tolerance. NotCauchy: the
/// tail gap never decayed below half its initial level. Otherwise the budget
/// ran out while still improving.
ConvergeResult converge(const Multifunction& f, const std::vector<TaggedPartition>& sched,
                        double tolerance, std::size_t window = 3,
                        const CompactSet* target = nullptr);

struct ConvCompareResult {
    double lhs_lb = 0;   // certified bracket of d_H(S(F), S(conv F))
    double lhs_ub = 0;
    double rhs = 0;      // C1 M(F) d(Gamma)^{(p-1)/p}
    double diameter = 0;
    double bound_m = 0;
};

/// Exact-structure gap between a cloud-valued sum and its convexified sum on a
/// uniform partition, bracketed by branch-and-bound over the sum's lattice
/// patch. rhs comes from the infratype bound with constant c and exponent p.
/// Refinement stops early once the certified upper bound drops under
/// `stop_below` (0 keeps refining to tol).
ConvCompareResult compare_conv(const Multifunction& f, const TaggedPartition& part,
                               double c = 1.0, double p = 2.0, double tol = 1e-7,
                               double stop_below = 0.0);

struct ProbeStep {
    std::string partition_id;
    double diameter = 0;
    double best_dist = 0;     // after greedy tag descent on this partition
    double best_so_far = 0;
};

struct ProbeReport {
    std::vector<ProbeStep> steps;
    bool reached = false;
    double final_dist = 0;
    double reach_factor = 2.0;  // reached iff final dist <= reach_factor * final diameter
};

/// Greedy coordinate descent over tags (per-interval pools: endpoints,
/// midpoint, one seeded tag, the rule's special tags), minimizing the distance
/// of the Riemann sum to the target along the schedule.
ProbeReport membership_probe(const Multifunction& f, const CompactSet& target,
                             const std::vector<TaggedPartition>& sched, std::size_t budget,
                             std::uint64_t seed, double reach_factor = 2.0);

ProbeReport convex_combination_probe(const Multifunction& f, const CompactSet& a,
                                     const CompactSet& b, double lambda,
                                     const std::vector<TaggedPartition>& sched, std::size_t budget,
                                     std::uint64_t seed, double reach_factor = 2.0);

struct StarProbeEntry {
    std::size_t candidate_index = 0;
    double lambda = 0;
    ProbeReport report;
};

struct StarReport {
    std::vector<StarProbeEntry> probes;
    bool all_reached = false;
};

StarReport star_probe(const Multifunction& f, const std::vector<CompactSet>& candidates,
                      const CompactSet& center, const std::vector<double>& lambdas,
                      const std::vector<TaggedPartition>& sched, std::size_t budget,
                      std::uint64_t seed, double reach_factor = 2.0);

struct EmptyCertificate {
    std::size_t n_index = 0, m_index = 0;
    Rational support_at_n;    // exactly 0 when the certificate holds
    Rational support_at_m;    // sum of |Delta_j| over the separated tags
    Rational gap;             // lower bound for d_H(S_n, S_m)
    Rational diameter_bound;  // 1 - |T_n| d(Gamma_m)
    std::size_t separating_bits = 0;
    bool ok = false;          // support_at_n == 0, gap >= bound, bound > 1/2
};

/// Runs the separating-functional estimate for the sparse biorthogonal
/// multifunction on a pair of schedule entries: picks the first m past
/// n_index with d(Gamma_m) < 1/(2 |T_n|).
EmptyCertificate empty_example_verifier(const Multifunction& f,
                                        const std::vector<TaggedPartition>& sched,
                                        std::size_t n_index);

}  // namespace setlim
