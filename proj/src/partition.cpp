#include "setlim/partition.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace setlim {

Tag Tag::exact(BigInt num, BigInt den) {
    if (den <= 0) throw std::invalid_argument("Tag: denominator must be positive");
    Rational r(num, den);
    return Tag{to_double(r), std::pair{std::move(num), std::move(den)}, false};
}

Tag Tag::exact(const Rational& r) { return exact(numerator(r), denominator(r)); }

std::optional<Rational> Tag::rational_value(std::int64_t max_den) const {
    if (irrational) return std::nullopt;
    if (frac) return Rational(frac->first, frac->second);
    return reconstruct_rational(value, max_den);
}

std::optional<std::pair<BigInt, BigInt>> Tag::presented(std::int64_t max_den) const {
    if (irrational) return std::nullopt;
    if (frac) return frac;
    auto r = reconstruct_rational(value, max_den);
    if (!r) return std::nullopt;
    return std::pair{numerator(*r), denominator(*r)};
}

Rational TaggedPartition::diameter_exact() const {
    Rational d(0);
    for (std::size_t i = 0; i < size(); ++i) d = std::max(d, length_exact(i));
    return d;
}

void TaggedPartition::validate() const {
    if (tags.size() < 1 || breakpoints.size() != tags.size() + 1)
        throw std::invalid_argument("partition: need n >= 1 intervals with n+1 breakpoints");
    if (breakpoints.front() != 0 || breakpoints.back() != 1)
        throw std::invalid_argument("partition: breakpoints must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("partition: breakpoints must be strictly increasing");
    }
    for (std::size_t i = 0; i < tags.size(); ++i) {
        const auto& t = tags[i];
        if (auto r = t.frac ? std::optional<Rational>(Rational(t.frac->first, t.frac->second))
                            : std::nullopt) {
            if (*r < breakpoints[i] || *r > breakpoints[i + 1])
                throw std::invalid_argument("partition: tag outside its interval");
        } else {
            if (t.value < to_double(breakpoints[i]) || t.value > to_double(breakpoints[i + 1]))
                throw std::invalid_argument("partition: tag outside its interval");
        }
    }
}

TaggedPartition uniform_partition(std::size_t n, TagRule rule) {
    if (n < 1) throw std::invalid_argument("uniform_partition: n >= 1");
    TaggedPartition p;
    for (std::size_t i = 0; i <= n; ++i) p.breakpoints.emplace_back(BigInt(i), BigInt(n));
    for (std::size_t i = 1; i <= n; ++i) {
        switch (rule) {
            case TagRule::Left: p.tags.push_back(Tag::exact(BigInt(i - 1), BigInt(n))); break;
            case TagRule::Right: p.tags.push_back(Tag::exact(BigInt(i), BigInt(n))); break;
            case TagRule::Mid: p.tags.push_back(Tag::exact(BigInt(2 * i - 1), BigInt(2 * n))); break;
        }
    }
    p.id = "uniform:" + std::to_string(n) + ":" +
           (rule == TagRule::Left ? "left" : rule == TagRule::Right ? "right" : "mid");
    p.validate();
    return p;
}

TaggedPartition uniform_partition(std::size_t n, std::vector<Tag> custom_tags) {
    if (custom_tags.size() != n)
        throw std::invalid_argument("uniform_partition: custom tag list length mismatch");
    TaggedPartition p;
    for (std::size_t i = 0; i <= n; ++i) p.breakpoints.emplace_back(BigInt(i), BigInt(n));
    p.tags = std::move(custom_tags);
    p.id = "uniform:" + std::to_string(n) + ":custom";
    p.validate();
    return p;
}

TaggedPartition prime_partition(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("prime_partition: p must be prime");
    TaggedPartition out;
    for (std::uint64_t i = 0; i <= p; ++i) out.breakpoints.emplace_back(BigInt(i), BigInt(p));
    // Tags keep the (2i-1)/(2p) presentation; the denominator 2p is what the
    // number-theoretic multifunctions dispatch on.
    for (std::uint64_t i = 1; i <= p; ++i)
        out.tags.push_back(Tag::exact(BigInt(2 * i - 1), BigInt(2 * p)));
    out.id = "prime:" + std::to_string(p);
    out.validate();
    return out;
}

TaggedPartition random_partition(double max_diameter, std::uint64_t seed) {
    if (!(max_diameter > 0) || max_diameter > 1)
        throw std::invalid_argument("random_partition: max_diameter in (0, 1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.4 * max_diameter, 0.95 * max_diameter);
    TaggedPartition p;
    p.breakpoints.emplace_back(0);
    double x = 0;
    while (true) {
        double step = unif(rng);
        if (x + step >= 1.0 - 0.05 * max_diameter) break;
        x += step;
        p.breakpoints.push_back(rational_of_double(x));
    }
    p.breakpoints.emplace_back(1);
    std::uniform_real_distribution<double> pos(0.05, 0.95);
    for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
        double lo = to_double(p.breakpoints[i]);
        double hi = to_double(p.breakpoints[i + 1]);
        // Float tags: generic, reconstructed (and almost always rejected) by
        // rational-branch multifunctions.
        p.tags.push_back(Tag::from_double(lo + pos(rng) * (hi - lo)));
    }
    p.id = "random:" + std::to_string(max_diameter) + ":" + std::to_string(seed);
    p.validate();
    return p;
}

std::vector<TaggedPartition> schedule(ScheduleKind kind, std::size_t length, TagRule rule,
                                      std::uint64_t seed) {
    if (length < 1) throw std::invalid_argument("schedule: length >= 1");
    std::vector<TaggedPartition> out;
    out.reserve(length);
    switch (kind) {
        case ScheduleKind::UniformDoubling: {
            std::size_t n = 2;
            for (std::size_t k = 0; k < length; ++k, n *= 2) out.push_back(uniform_partition(n, rule));
            break;
        }
        case ScheduleKind::Primes: {
            std::uint64_t p = 2;
            for (std::size_t k = 0; k < length; ++k) {
                while (!is_prime(p)) ++p;
                out.push_back(prime_partition(p));
                ++p;
            }
            break;
        }
        case ScheduleKind::Random: {
            Rational prev_diam(2);
            double cap = 0.5;
            for (std::size_t k = 0; k < length; ++k) {
                double bound = std::min(cap, 0.9 * to_double(prev_diam));
                auto part = random_partition(bound, seed + k);
                prev_diam = part.diameter_exact();
                out.push_back(std::move(part));
                cap /= 2;
            }
            break;
        }
    }
    for (std::size_t k = 0; k + 1 < out.size(); ++k) {
        if (!(out[k + 1].diameter_exact() < out[k].diameter_exact()))
            throw std::logic_error("schedule: diameters must strictly decrease");
    }
    return out;
}

}  // namespace setlim
