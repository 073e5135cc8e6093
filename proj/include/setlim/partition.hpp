#pragma once

#include "setlim/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace setlim {

/// A tag of [0,1]. Tags built from rational generators keep the fraction
/// exactly as constructed (numerator/denominator are not reduced), because
/// the number-theoretic multifunctions read the presented form. Float tags go
/// through bounded-denominator reconstruction; tags marked irrational never
/// take a rational branch.
struct Tag {
    double value = 0;
    std::optional<std::pair<BigInt, BigInt>> frac;  // as-constructed, den > 0
    bool irrational = false;

    static Tag exact(BigInt num, BigInt den);
    static Tag exact(const Rational& r);
    static Tag from_double(double v) { return Tag{v, std::nullopt, false}; }
    static Tag irrational_near(double v) { return Tag{v, std::nullopt, true}; }

    /// Exact value when carried, else a bounded-denominator reconstruction of
    /// the float; nullopt for generic floats and marked-irrational tags.
    std::optional<Rational> rational_value(std::int64_t max_den = 1'000'000) const;

    /// As-constructed fraction when exact, else the reduced reconstruction.
    std::optional<std::pair<BigInt, BigInt>> presented(std::int64_t max_den = 1'000'000) const;
};

struct TaggedPartition {
    std::vector<Rational> breakpoints;  // 0 = b_0 < ... < b_n = 1
    std::vector<Tag> tags;              // tags[i] in [b_i, b_{i+1}]
    std::string id;

    std::size_t size() const { return tags.size(); }
    Rational length_exact(std::size_t i) const { return breakpoints[i + 1] - breakpoints[i]; }
    double length(std::size_t i) const { return to_double(length_exact(i)); }
    Rational diameter_exact() const;
    double diameter() const { return to_double(diameter_exact()); }
    void validate() const;  // throws on any invariant violation
};

enum class TagRule { Left, Right, Mid };

TaggedPartition uniform_partition(std::size_t n, TagRule rule = TagRule::Mid);
TaggedPartition uniform_partition(std::size_t n, std::vector<Tag> custom_tags);

/// p intervals of length 1/p with midpoint tags at the odd multiples of
/// 1/(2p). Throws unless p is prime.
TaggedPartition prime_partition(std::uint64_t p);

TaggedPartition random_partition(double max_diameter, std::uint64_t seed);

enum class ScheduleKind { UniformDoubling, Primes, Random };

/// Partition sequences with strictly decreasing diameters.
std::vector<TaggedPartition> schedule(ScheduleKind kind, std::size_t length,
                                      TagRule rule = TagRule::Mid, std::uint64_t seed = 0);

}  // namespace setlim
