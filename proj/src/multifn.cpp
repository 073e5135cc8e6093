#include "setlim/multifn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace setlim {

Multifunction::Multifunction(std::string name, Space space, double bound, EvalFn eval,
                             bool convex_valued, bool compact_valued)
    : name_(std::move(name)),
      space_(space),
      bound_(bound),
      eval_(std::move(eval)),
      convex_valued_(convex_valued),
      compact_valued_(compact_valued) {
    if (bound_ < 0) throw std::invalid_argument("Multifunction: bound must be >= 0");
}

CompactSet Multifunction::eval(const Tag& t) const {
    CompactSet value = eval_(t);
    if (set_norm(space_, value) > bound_ + 1e-12)
        throw std::logic_error("Multifunction '" + name_ + "': evaluation exceeds declared bound");
    return value;
}

double Multifunction::support_at(const Tag& t, const Functional& f) const {
    if (support_) return support_(t, f);
    return support_function(eval(t), f);
}

std::vector<Tag> Multifunction::special_tags(const Rational& lo, const Rational& hi) const {
    if (!special_) return {};
    return special_(lo, hi);
}

Functional Multifunction::separator(const std::vector<Tag>& avoid,
                                    const std::vector<Tag>& hit) const {
    if (!separator_) throw std::logic_error("Multifunction has no separator rule");
    return separator_(avoid, hit);
}

Multifunction& Multifunction::with_support_rule(SupportFn f) {
    support_ = std::move(f);
    return *this;
}
Multifunction& Multifunction::with_special_tags(SpecialTagsFn f) {
    special_ = std::move(f);
    return *this;
}
Multifunction& Multifunction::with_separator(SeparatorFn f) {
    separator_ = std::move(f);
    return *this;
}

Multifunction constant_set(const Space& space, CompactSet value) {
    double m = set_norm(space, value);
    bool convex = value.convex_by_representation();
    return Multifunction("constant", space, m, [value](const Tag&) { return value; }, convex, true);
}

Multifunction singleton_of(const Space& space, std::string name,
                           std::function<Vector(const Tag&)> rule, double bound) {
    auto eval = [rule](const Tag& t) { return CompactSet::singleton(rule(t)); };
    return Multifunction(std::move(name), space, bound, eval, true, true);
}

Multifunction singleton_linear(const Space& space) {
    if (!space.is_dense()) throw std::invalid_argument("singleton_linear: dense space required");
    std::size_t d = space.dim;
    return singleton_of(space, "singleton:linear",
                        [d](const Tag& t) { return Vector::unit(d, 0, t.value); }, 1.0);
}

Multifunction singleton_poly(const Space& space, std::vector<double> coeffs) {
    if (!space.is_dense()) throw std::invalid_argument("singleton_poly: dense space required");
    if (coeffs.empty()) coeffs = {0.0};
    double bound = 0;
    for (double c : coeffs) bound += std::fabs(c);
    std::size_t d = space.dim;
    auto rule = [d, coeffs](const Tag& t) {
        double acc = 0, tp = 1;
        for (double c : coeffs) { acc += c * tp; tp *= t.value; }
        return Vector::unit(d, 0, acc);
    };
    return singleton_of(space, "singleton:poly", rule, bound);
}

Multifunction rational_indicator(const Space& space) {
    if (!space.is_dense()) throw std::invalid_argument("rational_indicator: dense space required");
    std::size_t d = space.dim;
    auto rule = [d](const Tag& t) {
        return t.rational_value() ? Vector::unit(d, 0, 1.0) : Vector::zeros(d);
    };
    auto mf = singleton_of(space, "singleton:ratind", rule, 1.0);
    mf.with_special_tags([](const Rational& lo, const Rational& hi) {
        return std::vector<Tag>{Tag::exact(simplest_rational_in(lo, hi))};
    });
    return mf;
}

Multifunction step_multifunction(const Space& space, std::vector<Rational> breakpoints,
                                 std::vector<CompactSet> values) {
    if (breakpoints.size() != values.size() + 1 || values.empty())
        throw std::invalid_argument("step_multifunction: need k+1 breakpoints for k pieces");
    if (breakpoints.front() != 0 || breakpoints.back() != 1)
        throw std::invalid_argument("step_multifunction: pieces must tile [0,1]");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("step_multifunction: pieces must tile [0,1] without gaps or overlaps");

    double m = 0;
    bool convex = true;
    for (const auto& v : values) {
        m = std::max(m, set_norm(space, v));
        convex = convex && v.convex_by_representation();
    }
    auto eval = [breakpoints, values](const Tag& t) {
        // half-open pieces [b_i, b_{i+1}), last piece closed
        auto r = t.rational_value();
        for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
            bool inside;
            if (r) {
                inside = *r >= breakpoints[i] &&
                         (*r < breakpoints[i + 1] || i + 2 == breakpoints.size());
            } else {
                inside = t.value >= to_double(breakpoints[i]) &&
                         (t.value < to_double(breakpoints[i + 1]) || i + 2 == breakpoints.size());
            }
            if (inside) return values[i];
        }
        throw std::invalid_argument("step_multifunction: tag outside [0,1]");
    };
    return Multifunction("step", space, m, eval, convex, true);
}

Multifunction l1_example(const L1Model& model) {
    const int bins = model.bins;
    auto eval = [bins](const Tag& t) -> CompactSet {
        auto pres = t.presented();
        if (!pres) return CompactSet::esum({});
        const BigInt& num = pres->first;
        const BigInt& den = pres->second;
        if (den % 2 != 0 || num % 2 == 0 || num <= 0 || num >= den) return CompactSet::esum({});
        BigInt p = den / 2;
        if (p > 1'000'000'000) return CompactSet::esum({});
        auto pu = p.convert_to<std::uint64_t>();
        if (!is_prime(pu)) return CompactSet::esum({});
        // The value's interval endpoints are (num -+ 1)/(2p) = integer/p, so the
        // grid must refine 1/p.
        if (BigInt(bins) % p != 0)
            throw std::invalid_argument("l1_example: the interval at prime " + p.str() +
                                        " is not aligned with " + std::to_string(bins) + " bins");
        return CompactSet::esum_interval(Rational(p), Rational(num - 1, den), Rational(num + 1, den));
    };
    auto mf = Multifunction("l1", Space::dense(1), 1.0, eval, false, true);
    mf.with_special_tags([](const Rational& lo, const Rational& hi) {
        std::vector<Tag> out;
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
            for (std::uint64_t n = 1; n <= p; ++n) {
                Rational r(2 * n - 1, 2 * p);
                if (r >= lo && r <= hi) out.push_back(Tag::exact(BigInt(2 * n - 1), BigInt(2 * p)));
            }
        }
        return out;
    });
    return mf;
}

namespace biorth {

namespace {

Rational decode_rational(const BigInt& key) {
    auto [zn, dm1] = cantor_unpair(key);
    return Rational(unzigzag(zn), dm1 + 1);
}

Rational tag_rational_or_throw(const Tag& t) {
    auto r = t.rational_value();
    if (!r)
        throw std::invalid_argument("biorthogonal model: tags must be exact rationals");
    return *r;
}

}  // namespace

BaseInterval decode_base(const BigInt& index) {
    auto [kl, kr] = cantor_unpair(index);
    return BaseInterval{decode_rational(kl), decode_rational(kr)};
}

bool base_contains(const BigInt& index, const Rational& t) {
    if (t < 0 || t > 1) return false;
    auto iv = decode_base(index);
    return iv.lo < t && t < iv.hi;
}

bool pi_contains(const BigInt& n, const Rational& t) {
    if (n <= 0) return false;
    BigInt rest = n;
    while (rest > 0) {
        unsigned b = boost::multiprecision::lsb(rest);
        if (base_contains(BigInt(b), t)) return true;
        boost::multiprecision::bit_unset(rest, b);
    }
    return false;
}

std::vector<BigInt> separating_bases(const std::vector<Rational>& points,
                                     const std::vector<Rational>& avoid) {
    constexpr long kSearchCap = 20'000'000;
    std::vector<BigInt> out(points.size(), BigInt(-1));
    std::size_t found = 0;
    for (long b = 0; b < kSearchCap && found < points.size(); ++b) {
        auto iv = decode_base(BigInt(b));
        if (!(iv.lo < iv.hi)) continue;
        bool clean = true;
        for (const auto& a : avoid) {
            if (iv.lo < a && a < iv.hi) { clean = false; break; }
        }
        if (!clean) continue;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (out[i] < 0 && iv.lo < points[i] && points[i] < iv.hi) {
                out[i] = b;
                ++found;
            }
        }
    }
    if (found < points.size())
        throw std::runtime_error("separating_bases: search cap exhausted");
    return out;
}

BigInt lowest_separating_base(const Rational& t, const std::vector<Rational>& avoid) {
    return separating_bases({t}, avoid).at(0);
}

Vector x_vector(const BigInt& n) { return Vector::sparse_unit(n, 2.0); }

Functional dual_functional(const BigInt& n) { return Functional{Vector::sparse_unit(n, 0.5)}; }

}  // namespace biorth

Multifunction biorthogonal_example(std::size_t vertex_cap) {
    if (vertex_cap < 1) throw std::invalid_argument("biorthogonal_example: vertex cap >= 1");
    auto eval = [vertex_cap](const Tag& t) -> CompactSet {
        Rational r = biorth::tag_rational_or_throw(t);
        // Materialize the single-interval unions pi(2^b) of lowest index; the
        // true value has infinitely many more vertices.
        std::vector<Vector> verts;
        for (long b = 0; b < 100000 && verts.size() < vertex_cap; ++b) {
            if (biorth::base_contains(BigInt(b), r))
                verts.push_back(biorth::x_vector(BigInt(1) << b));
        }
        if (verts.empty()) verts.push_back(Vector::sparse(SparseEntries{}));
        return CompactSet::polytope(std::move(verts));
    };
    auto mf = Multifunction("biorth", Space::sparse_l2(), 2.0, eval, true, false);
    mf.with_support_rule([](const Tag& t, const Functional& f) {
        Rational r = biorth::tag_rational_or_throw(t);
        if (!f.v.is_sparse())
            throw std::invalid_argument("biorthogonal model: sparse functionals only");
        // sup over conv{x_n : t in pi(n)} of f: every coefficient scores
        // 2*c_n when t lies in pi(n); infinitely many untouched vertices pin
        // the supremum at >= 0.
        double best = 0.0;
        for (const auto& [n, c] : f.v.entries()) {
            if (2.0 * c > best && biorth::pi_contains(n, r)) best = 2.0 * c;
        }
        return best;
    });
    mf.with_separator([](const std::vector<Tag>& avoid, const std::vector<Tag>& hit) {
        std::vector<Rational> avoid_r, hit_r;
        avoid_r.reserve(avoid.size());
        hit_r.reserve(hit.size());
        for (const auto& t : avoid) avoid_r.push_back(biorth::tag_rational_or_throw(t));
        for (const auto& t : hit) hit_r.push_back(biorth::tag_rational_or_throw(t));
        if (hit_r.empty()) throw std::invalid_argument("separator: empty hit set");
        BigInt index(0);
        for (const auto& b : biorth::separating_bases(hit_r, avoid_r))
            boost::multiprecision::bit_set(index, static_cast<unsigned>(b.convert_to<unsigned long>()));
        return biorth::dual_functional(index);
    });
    return mf;
}

Multifunction conv_lift(const Multifunction& f) {
    if (f.name() == "l1")
        throw std::invalid_argument("conv_lift: e-sum valued multifunctions are out of scope");
    auto inner = f;  // capture a copy; evaluation stays pure
    auto eval = [inner](const Tag& t) { return convex_hull(inner.eval(t)); };
    Multifunction out("conv(" + f.name() + ")", f.space(), f.bound(), eval, true,
                      f.compact_valued());
    if (f.has_support_rule()) {
        out.with_support_rule([inner](const Tag& t, const Functional& fn) {
            return inner.support_at(t, fn);  // hulls do not change support values
        });
    }
    auto special = [inner](const Rational& lo, const Rational& hi) {
        return inner.special_tags(lo, hi);
    };
    out.with_special_tags(special);
    return out;
}

}  // namespace setlim
