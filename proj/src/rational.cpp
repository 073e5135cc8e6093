#include "setlim/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace setlim {

Rational rational_of_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_of_double: non-finite value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [1/2, 1)
    // 53 doublings make the mantissa integral.
    BigInt num = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(num);
    if (exp > 0) {
        r *= Rational(BigInt(1) << exp);
    } else if (exp < 0) {
        r /= Rational(BigInt(1) << (-exp));
    }
    return r;
}

std::optional<Rational> reconstruct_rational(double x, std::int64_t max_den) {
    if (!std::isfinite(x) || max_den < 1) return std::nullopt;
    // A few ulp: a double that genuinely rounds from p/q lands this close, a
    // generic double almost never does.
    const double tol = 1e-15 * std::max(1.0, std::fabs(x));
    // Continued-fraction convergents of x. A rational with denominator q <= max_den
    // within tol of x satisfies |x - p/q| < 1/(2 q^2), so it must be a convergent.
    double v = x;
    double h1 = 1, h0 = 0;  // numerators h_{n-1}, h_{n-2}
    double k1 = 0, k0 = 1;  // denominators
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (std::fabs(fl) > 9.0e15) break;
        double h = fl * h1 + h0;
        double k = fl * k1 + k0;
        if (k > static_cast<double>(max_den) || std::fabs(h) > 9.0e15) break;
        h0 = h1; h1 = h; k0 = k1; k1 = k;
        Rational r(BigInt(static_cast<std::int64_t>(h1)), BigInt(static_cast<std::int64_t>(k1)));
        if (std::fabs(to_double(r) - x) <= tol) return r;
        double frac = v - fl;
        if (frac < 1e-18) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
    // Negative stretches reduce to the positive case by symmetry.
    if (hi < 0) return -simplest_rational_in(-hi, -lo);
    if (lo <= 0) return Rational(0);
    // 0 < lo <= hi: Stern-Brocot descent.
    BigInt ln = numerator(lo), ld = denominator(lo);
    BigInt hn = numerator(hi), hd = denominator(hi);
    // Iterative form of: if ceil(lo) <= floor(hi) pick that integer, else recurse
    // on the fractional parts with the interval inverted.
    BigInt int_acc_num(0), int_acc_den(1);
    std::vector<BigInt> whole;  // continued-fraction prefix
    bool inverted = false;
    (void)int_acc_num; (void)int_acc_den;
    while (true) {
        BigInt fl = ln / ld;                       // floor(lo)
        BigInt ceil_lo = (ln % ld == 0) ? fl : fl + 1;
        BigInt fl_hi = hn / hd;
        if (ceil_lo <= fl_hi) {
            whole.push_back(ceil_lo);
            break;
        }
        whole.push_back(fl);
        // lo' = 1/(hi - fl), hi' = 1/(lo - fl)
        BigInt a_n = hn - fl * hd, a_d = hd;  // hi - fl
        BigInt b_n = ln - fl * ld, b_d = ld;  // lo - fl
        ln = a_d; ld = a_n;
        hn = b_d; hd = b_n;
        inverted = !inverted;
        (void)inverted;
    }
    // Fold the continued fraction back up.
    Rational r(whole.back());
    for (auto it = whole.rbegin() + 1; it != whole.rend(); ++it) {
        r = Rational(*it) + Rational(1) / r;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

// cpp_int's string constructor treats a leading 0 as an octal prefix.
BigInt parse_decimal_int(std::string s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    std::size_t nz = s.find_first_not_of('0');
    s = nz == std::string::npos ? "0" : s.substr(nz);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a decimal integer");
    BigInt v(s);
    return neg ? -v : v;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num = parse_decimal_int(s.substr(0, slash));
            BigInt den = parse_decimal_int(s.substr(slash + 1));
            if (den == 0) return std::nullopt;
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            BigInt num = parse_decimal_int(s.substr(0, dot) + s.substr(dot + 1));
            BigInt den = 1;
            for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            return Rational(num, den);
        }
        return Rational(parse_decimal_int(s));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

BigInt cantor_pair(const BigInt& x, const BigInt& y) {
    if (x < 0 || y < 0) throw std::invalid_argument("cantor_pair: negative input");
    BigInt s = x + y;
    return s * (s + 1) / 2 + y;
}

std::pair<BigInt, BigInt> cantor_unpair(const BigInt& z) {
    if (z < 0) throw std::invalid_argument("cantor_unpair: negative input");
    BigInt disc = 8 * z + 1;
    BigInt w = (boost::multiprecision::sqrt(disc) - 1) / 2;
    // sqrt is exact-floor for cpp_int; adjust for boundary rounding.
    while (w * (w + 1) / 2 > z) --w;
    while ((w + 1) * (w + 2) / 2 <= z) ++w;
    BigInt t = w * (w + 1) / 2;
    BigInt y = z - t;
    BigInt x = w - y;
    return {x, y};
}

BigInt zigzag(const BigInt& n) { return n >= 0 ? BigInt(2 * n) : BigInt(-2 * n - 1); }

BigInt unzigzag(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("unzigzag: negative input");
    return (n % 2 == 0) ? BigInt(n / 2) : BigInt(-(n + 1) / 2);
}

}  // namespace setlim
