#include "setlim/space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace setlim {

PExponent PExponent::of(const Rational& p) {
    if (p < 1) throw std::invalid_argument("norm exponent must satisfy p >= 1");
    return PExponent{false, p};
}

PExponent PExponent::conjugate() const {
    if (infinite) return of(1);
    if (value == 1) return inf();
    return of(value / (value - 1));
}

double PExponent::as_double() const {
    return infinite ? std::numeric_limits<double>::infinity() : to_double(value);
}

std::string PExponent::str() const { return infinite ? "inf" : rational_to_string(value); }

Space Space::dense(std::size_t dim, PExponent p) {
    if (dim < 1) throw std::invalid_argument("dense space needs dimension >= 1");
    return Space{Mode::Dense, dim, p};
}

Space Space::sparse_l2() { return Space{Mode::SparseL2, 0, PExponent::of(2)}; }

Vector Vector::dense(std::vector<double> coeffs) {
    Vector v;
    v.repr = std::move(coeffs);
    return v;
}

Vector Vector::zeros(std::size_t dim) { return dense(std::vector<double>(dim, 0.0)); }

Vector Vector::unit(std::size_t dim, std::size_t axis, double scale) {
    if (axis >= dim) throw std::invalid_argument("unit vector axis out of range");
    auto v = std::vector<double>(dim, 0.0);
    v[axis] = scale;
    return dense(std::move(v));
}

Vector Vector::sparse(SparseEntries entries) {
    for (auto it = entries.begin(); it != entries.end();) {
        if (it->second == 0.0) it = entries.erase(it);
        else ++it;
    }
    Vector v;
    v.repr = std::move(entries);
    return v;
}

Vector Vector::sparse_unit(const BigInt& key, double scale) {
    SparseEntries e;
    if (scale != 0.0) e[key] = scale;
    return sparse(std::move(e));
}

bool Vector::compatible_with(const Space& s) const {
    if (s.is_dense()) return !is_sparse() && dense_dim() == s.dim;
    return is_sparse();
}

namespace {

void check_same_kind(const Vector& a, const Vector& b, const char* op) {
    if (a.is_sparse() != b.is_sparse())
        throw std::invalid_argument(std::string(op) + ": mixed dense/sparse vectors");
    if (!a.is_sparse() && a.dense_dim() != b.dense_dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

Vector add(const Vector& a, const Vector& b) {
    check_same_kind(a, b, "add");
    if (!a.is_sparse()) {
        auto out = a.coeffs();
        const auto& bc = b.coeffs();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += bc[i];
        return Vector::dense(std::move(out));
    }
    SparseEntries out = a.entries();
    for (const auto& [k, val] : b.entries()) out[k] += val;
    return Vector::sparse(std::move(out));
}

Vector sub(const Vector& a, const Vector& b) { return add(a, scaled(-1.0, b)); }

Vector scaled(double lambda, const Vector& v) {
    if (!v.is_sparse()) {
        auto out = v.coeffs();
        for (auto& x : out) x *= lambda;
        return Vector::dense(std::move(out));
    }
    SparseEntries out = v.entries();
    for (auto& [k, val] : out) val *= lambda;
    return Vector::sparse(std::move(out));
}

bool vec_equal(const Vector& a, const Vector& b) {
    if (a.is_sparse() != b.is_sparse()) return false;
    if (!a.is_sparse()) return a.coeffs() == b.coeffs();
    return a.entries() == b.entries();
}

double sup_coeff_gap(const Vector& a, const Vector& b) {
    check_same_kind(a, b, "sup_coeff_gap");
    double m = 0.0;
    if (!a.is_sparse()) {
        for (std::size_t i = 0; i < a.dense_dim(); ++i)
            m = std::max(m, std::fabs(a.coeffs()[i] - b.coeffs()[i]));
        return m;
    }
    for (const auto& [k, val] : a.entries()) {
        auto it = b.entries().find(k);
        m = std::max(m, std::fabs(val - (it == b.entries().end() ? 0.0 : it->second)));
    }
    for (const auto& [k, val] : b.entries()) {
        if (!a.entries().count(k)) m = std::max(m, std::fabs(val));
    }
    return m;
}

bool vec_close(const Vector& a, const Vector& b, double tol) {
    return sup_coeff_gap(a, b) <= tol;
}

bool vec_less(const Vector& a, const Vector& b) {
    if (a.is_sparse() != b.is_sparse()) return b.is_sparse();
    if (!a.is_sparse()) {
        return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                            b.coeffs().begin(), b.coeffs().end());
    }
    return a.entries() < b.entries();
}

double lp_norm(const PExponent& p, const std::vector<double>& values) {
    if (p.infinite) {
        double m = 0.0;
        for (double x : values) m = std::max(m, std::fabs(x));
        return m;
    }
    if (p.value == 1) {
        double s = 0.0;
        for (double x : values) s += std::fabs(x);
        return s;
    }
    if (p.value == 2) {
        double s = 0.0;
        for (double x : values) s += x * x;
        return std::sqrt(s);
    }
    const double pd = to_double(p.value);
    double s = 0.0;
    for (double x : values) s += std::pow(std::fabs(x), pd);
    return std::pow(s, 1.0 / pd);
}

namespace {

std::vector<double> sparse_values(const SparseEntries& e) {
    std::vector<double> out;
    out.reserve(e.size());
    for (const auto& [k, v] : e) out.push_back(v);
    return out;
}

}  // namespace

double norm(const Space& space, const Vector& v) {
    if (!v.compatible_with(space)) throw std::invalid_argument("norm: vector incompatible with space");
    if (space.is_dense()) return lp_norm(space.p, v.coeffs());
    return lp_norm(space.p, sparse_values(v.entries()));
}

double pair(const Functional& f, const Vector& v) {
    check_same_kind(f.v, v, "pair");
    if (!v.is_sparse()) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.dense_dim(); ++i) s += f.v.coeffs()[i] * v.coeffs()[i];
        return s;
    }
    // Iterate over the smaller support.
    const auto& fa = f.v.entries();
    const auto& va = v.entries();
    const auto& small = fa.size() <= va.size() ? fa : va;
    const auto& big = fa.size() <= va.size() ? va : fa;
    double s = 0.0;
    for (const auto& [k, val] : small) {
        auto it = big.find(k);
        if (it != big.end()) s += val * it->second;
    }
    return s;
}

double dual_norm(const Space& space, const Functional& f) {
    Space dual = space;
    dual.p = space.p.conjugate();
    return norm(dual, f.v);
}

std::vector<Functional> sample_directions(const Space& space, std::size_t count, std::uint64_t seed) {
    if (!space.is_dense())
        throw std::invalid_argument("sample_directions: sparse mode directions are supplied explicitly");
    const std::size_t d = space.dim;
    if (count < 2 * d)
        throw std::invalid_argument("sample_directions: count must be >= 2*dim to include +-coordinate functionals");
    std::vector<Functional> dirs;
    dirs.reserve(count);
    for (std::size_t i = 0; i < d; ++i) {
        dirs.push_back({Vector::unit(d, i, 1.0)});
        dirs.push_back({Vector::unit(d, i, -1.0)});
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const PExponent q = space.p.conjugate();
    Space dual = space;
    dual.p = q;
    while (dirs.size() < count) {
        std::vector<double> c(d);
        for (auto& x : c) x = gauss(rng);
        Vector v = Vector::dense(std::move(c));
        double n = norm(dual, v);
        if (n < 1e-12) continue;
        dirs.push_back({scaled(1.0 / n, v)});
    }
    return dirs;
}

}  // namespace setlim
