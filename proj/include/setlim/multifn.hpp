#pragma once

#include "setlim/partition.hpp"
#include "setlim/sets.hpp"
#include "setlim/space.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace setlim {

/// A bounded multifunction on [0,1]: a pure evaluation rule tag -> CompactSet
/// with a declared bound M. Optional hooks expose exact support values, the
/// rule's special tags inside an interval (for tag search), and a separating
/// functional builder (sparse biorthogonal model).
class Multifunction {
public:
    using EvalFn = std::function<CompactSet(const Tag&)>;
    using SupportFn = std::function<double(const Tag&, const Functional&)>;
    using SpecialTagsFn = std::function<std::vector<Tag>(const Rational&, const Rational&)>;
    using SeparatorFn =
        std::function<Functional(const std::vector<Tag>& avoid, const std::vector<Tag>& hit)>;

    Multifunction(std::string name, Space space, double bound, EvalFn eval, bool convex_valued,
                  bool compact_valued);

    const std::string& name() const { return name_; }
    const Space& space() const { return space_; }
    double bound() const { return bound_; }
    bool convex_valued() const { return convex_valued_; }
    bool compact_valued() const { return compact_valued_; }

    /// Evaluates the rule; every evaluation is checked against the declared
    /// bound (set_norm <= M + 1e-12).
    CompactSet eval(const Tag& t) const;

    bool has_support_rule() const { return static_cast<bool>(support_); }
    /// Exact support value when the rule provides one, else the support of the
    /// evaluated set.
    double support_at(const Tag& t, const Functional& f) const;

    std::vector<Tag> special_tags(const Rational& lo, const Rational& hi) const;

    bool has_separator() const { return static_cast<bool>(separator_); }
    Functional separator(const std::vector<Tag>& avoid, const std::vector<Tag>& hit) const;

    Multifunction& with_support_rule(SupportFn f);
    Multifunction& with_special_tags(SpecialTagsFn f);
    Multifunction& with_separator(SeparatorFn f);

private:
    std::string name_;
    Space space_;
    double bound_;
    EvalFn eval_;
    bool convex_valued_;
    bool compact_valued_;
    SupportFn support_;
    SpecialTagsFn special_;
    SeparatorFn separator_;
};

Multifunction constant_set(const Space& space, CompactSet value);
Multifunction singleton_of(const Space& space, std::string name,
                           std::function<Vector(const Tag&)> rule, double bound);

/// f(t) = t * e1.
Multifunction singleton_linear(const Space& space);
/// f(t) = (sum_k c_k t^k) * e1.
Multifunction singleton_poly(const Space& space, std::vector<double> coeffs);
/// {e1} on rational tags, {0} otherwise.
Multifunction rational_indicator(const Space& space);

/// Piecewise-constant values over a tiling of [0,1]; half-open pieces, the
/// last one closed.
Multifunction step_multifunction(const Space& space, std::vector<Rational> breakpoints,
                                 std::vector<CompactSet> values);

/// The L1[0,1] rule: a tag presented as (2n-1)/(2p) with p prime maps to
/// p * E[(2n-2)/(2p), (2n)/(2p)]; every other tag maps to {0}. Values live in
/// the discretized model, whose bin count must be divisible by 2p for every
/// prime actually hit.
Multifunction l1_example(const L1Model& model);

/// Sparse-Hilbert construction over a biorthogonal system x_n = 2 e_n,
/// f_n = e_n / 2 (norm product 1, C = 1): F(t) = conv{ x_n : t in pi(n) },
/// where pi enumerates finite unions of rational-endpoint open intervals by
/// the bit positions of n. Evaluation materializes at most `vertex_cap`
/// vertices; support queries are exact through the support rule.
Multifunction biorthogonal_example(std::size_t vertex_cap = 4);

/// Pointwise convex hull with the same bound.
Multifunction conv_lift(const Multifunction& f);

namespace biorth {

struct BaseInterval {
    Rational lo, hi;  // the open interval (lo, hi); empty when lo >= hi
};

BaseInterval decode_base(const BigInt& index);
bool base_contains(const BigInt& index, const Rational& t);
/// Membership of t in the union of the base intervals at the set bits of n.
bool pi_contains(const BigInt& n, const Rational& t);
/// Lowest-index base interval containing t whose closure avoids every point
/// of `avoid`.
BigInt lowest_separating_base(const Rational& t, const std::vector<Rational>& avoid);
/// Batched form: one enumeration pass serves all points.
std::vector<BigInt> separating_bases(const std::vector<Rational>& points,
                                     const std::vector<Rational>& avoid);
Vector x_vector(const BigInt& n);
Functional dual_functional(const BigInt& n);

}  // namespace biorth

}  // namespace setlim
