#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace setlim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact rational value of a finite double (every finite double is dyadic).
Rational rational_of_double(double x);

/// Best rational with denominator <= max_den that agrees with x to within
/// 1e-14 * max(1, |x|). Returns nullopt when no bounded-denominator rational
/// sits that close, which is the typical outcome for a generic double.
std::optional<Rational> reconstruct_rational(double x, std::int64_t max_den = 1'000'000);

/// The unique rational with smallest denominator in [lo, hi] (ties broken by
/// smallest |numerator|). Requires lo <= hi.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

bool is_prime(std::uint64_t n);

/// "num/den" in lowest terms; integers render without the "/1".
std::string rational_to_string(const Rational& r);

/// Parses "num/den", "num", or a decimal literal such as "0.25".
std::optional<Rational> parse_rational(const std::string& s);

// Cantor pairing on non-negative integers and the zigzag encoding of signed
// integers; together they enumerate the rational-endpoint interval base used
// by the sparse biorthogonal construction.
BigInt cantor_pair(const BigInt& x, const BigInt& y);
std::pair<BigInt, BigInt> cantor_unpair(const BigInt& z);
BigInt zigzag(const BigInt& n);
BigInt unzigzag(const BigInt& n);

}  // namespace setlim
