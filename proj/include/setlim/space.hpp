#pragma once

#include "setlim/rational.hpp"

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace setlim {

/// Norm exponent p in [1, inf], kept exact so conjugate exponents are exact.
struct PExponent {
    bool infinite = false;
    Rational value = 2;

    static PExponent inf() { return PExponent{true, Rational(0)}; }
    static PExponent of(const Rational& p);

    PExponent conjugate() const;  // 1/p + 1/q = 1
    double as_double() const;
    bool is(int k) const { return !infinite && value == k; }
    bool operator==(const PExponent& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    std::string str() const;
};

/// Ambient space: dense R^d with an lp norm, or the sparse countably-infinite
/// Hilbert model (l2 only) whose coordinates are indexed by arbitrary naturals.
struct Space {
    enum class Mode { Dense, SparseL2 };
    Mode mode = Mode::Dense;
    std::size_t dim = 0;  // dense only
    PExponent p = PExponent::of(2);

    static Space dense(std::size_t dim, PExponent p = PExponent::of(2));
    static Space sparse_l2();

    bool is_dense() const { return mode == Mode::Dense; }
    bool operator==(const Space& o) const {
        return mode == o.mode && (mode == Mode::SparseL2 || (dim == o.dim && p == o.p));
    }
};

using SparseEntries = std::map<BigInt, double>;  // no explicit zeros

struct Vector {
    std::variant<std::vector<double>, SparseEntries> repr;

    Vector() : repr(std::vector<double>{}) {}
    static Vector dense(std::vector<double> coeffs);
    static Vector zeros(std::size_t dim);
    static Vector unit(std::size_t dim, std::size_t axis, double scale = 1.0);
    static Vector sparse(SparseEntries entries);  // drops zeros
    static Vector sparse_unit(const BigInt& key, double scale = 1.0);

    bool is_sparse() const { return repr.index() == 1; }
    const std::vector<double>& coeffs() const { return std::get<0>(repr); }
    const SparseEntries& entries() const { return std::get<1>(repr); }
    std::size_t dense_dim() const { return coeffs().size(); }

    bool compatible_with(const Space& s) const;
};

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(double lambda, const Vector& v);
bool vec_equal(const Vector& a, const Vector& b);
bool vec_close(const Vector& a, const Vector& b, double tol);  // max-coordinate gap
bool vec_less(const Vector& a, const Vector& b);               // total order for canonical sorting
double sup_coeff_gap(const Vector& a, const Vector& b);

double norm(const Space& space, const Vector& v);
double lp_norm(const PExponent& p, const std::vector<double>& values);

/// A dual functional, stored by its coefficient vector; <f, v> = sum f_j v_j.
struct Functional {
    Vector v;
};

double pair(const Functional& f, const Vector& v);
double dual_norm(const Space& space, const Functional& f);

/// Unit-dual-norm directions for dense spaces: the +-coordinate functionals
/// first (count must be >= 2 dim), then seeded Gaussian samples normalized in
/// the conjugate norm. Same seed, same list.
std::vector<Functional> sample_directions(const Space& space, std::size_t count, std::uint64_t seed);

}  // namespace setlim
