#pragma once

// Cayley-Dickson algebras A_r of dimension 2^r: recursive and table-driven
// products, conjugation, trace/norm, operator invertibility, the identity
// battery and the zero-divisor search.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperalg/error.hpp"
#include "hyperalg/linalg.hpp"
#include "hyperalg/scalar.hpp"
#include "hyperalg/structure.hpp"

namespace hyperalg::cd {

inline constexpr int kDefaultMaxLevel = 8;

/// Element of A_r as a coefficient vector over basis e_0 .. e_{2^r - 1}.
/// Indices split as (first half, second half) at every doubling step.
template <class T>
class Element {
    using Tr = ScalarTraits<T>;

public:
    Element() : level_(0), coeffs_(1, Tr::zero()) {}
    explicit Element(int level) : level_(check_level(level)), coeffs_(std::size_t{1} << level, Tr::zero()) {}
    Element(int level, std::vector<T> coeffs) : level_(check_level(level)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != (std::size_t{1} << level))
            throw Error(Errc::InvalidInput, "coefficient count must equal 2^level");
    }

    static Element basis(int level, std::size_t index, T coeff = Tr::one()) {
        Element e(level);
        if (index >= e.dim()) throw Error(Errc::InvalidInput, "basis index out of range");
        e.coeffs_[index] = std::move(coeff);
        return e;
    }
    static Element unit(int level) { return basis(level, 0); }

    int level() const { return level_; }
    std::size_t dim() const { return coeffs_.size(); }
    const std::vector<T>& coeffs() const { return coeffs_; }
    std::vector<T>& coeffs() { return coeffs_; }
    const T& operator[](std::size_t i) const { return coeffs_[i]; }
    T& operator[](std::size_t i) { return coeffs_[i]; }

    bool is_zero(double tol = 0.0) const {
        for (const auto& c : coeffs_)
            if (!Tr::is_zero(c, tol)) return false;
        return true;
    }

    Element& operator+=(const Element& o) {
        require_same_level(o);
        for (std::size_t i = 0; i < dim(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Element& operator-=(const Element& o) {
        require_same_level(o);
        for (std::size_t i = 0; i < dim(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    Element& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const T& s) { return a *= s; }
    friend Element operator*(const T& s, Element a) { return a *= s; }
    Element operator-() const {
        Element out(*this);
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }
    bool operator==(const Element& o) const { return level_ == o.level_ && coeffs_ == o.coeffs_; }

    void require_same_level(const Element& o) const {
        if (level_ != o.level_)
            throw Error(Errc::LevelMismatch, "operands live in A_" + std::to_string(level_) + " and A_" +
                                                 std::to_string(o.level_));
    }

private:
    static int check_level(int level) {
        if (level < 0 || level > 30) throw Error(Errc::InvalidInput, "level must be in [0, 30]");
        return level;
    }

    int level_;
    std::vector<T> coeffs_;
};

namespace detail {

template <class T>
void conjugate_into(std::span<const T> a, std::span<T> out) {
    out[0] = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) out[i] = -a[i];
}

// (a1,a2)(b1,b2) = (a1 b1 - conj(b2) a2, b2 a1 + a2 conj(b1))
template <class T>
void recursive_product(std::span<const T> a, std::span<const T> b, std::span<T> out) {
    const std::size_t n = a.size();
    if (n == 1) {
        out[0] = a[0] * b[0];
        return;
    }
    const std::size_t h = n / 2;
    auto a1 = a.subspan(0, h), a2 = a.subspan(h);
    auto b1 = b.subspan(0, h), b2 = b.subspan(h);
    std::vector<T> conj_b1(h), conj_b2(h), tmp(h);
    conjugate_into<T>(b1, conj_b1);
    conjugate_into<T>(b2, conj_b2);

    auto lo = out.subspan(0, h), hi = out.subspan(h);
    recursive_product<T>(a1, b1, lo);
    recursive_product<T>(conj_b2, a2, tmp);
    for (std::size_t i = 0; i < h; ++i) lo[i] -= tmp[i];
    recursive_product<T>(b2, a1, hi);
    recursive_product<T>(a2, conj_b1, tmp);
    for (std::size_t i = 0; i < h; ++i) hi[i] += tmp[i];
}

}  // namespace detail

/// Cayley-Dickson product through the doubling recursion.
template <class T>
Element<T> multiply(const Element<T>& a, const Element<T>& b) {
    a.require_same_level(b);
    Element<T> out(a.level());
    detail::recursive_product<T>(a.coeffs(), b.coeffs(), out.coeffs());
    return out;
}

template <class T>
Element<T> conjugate(const Element<T>& a) {
    Element<T> out(a);
    for (std::size_t i = 1; i < out.dim(); ++i) out[i] = -out[i];
    return out;
}

/// T(a) = a + conj(a) = 2 a^0.
template <class T>
T trace(const Element<T>& a) {
    return a[0] + a[0];
}

/// N(a) = a conj(a) = sum of squared coefficients.
template <class T>
T norm_sq(const Element<T>& a) {
    T s = ScalarTraits<T>::zero();
    for (const auto& c : a.coeffs()) s += c * c;
    return s;
}

/// conj(a) / N(a). Does not imply a is cancellable for r >= 4.
template <class T>
Element<T> inverse_quadratic(const Element<T>& a, double tol = 0.0) {
    T n = norm_sq(a);
    if (ScalarTraits<T>::is_zero(n, tol)) throw Error(Errc::NormZero, "element has zero norm");
    Element<T> out = conjugate(a);
    T inv = ScalarTraits<T>::one() / n;
    out *= inv;
    return out;
}

template <class T>
Element<T> associator(const Element<T>& a, const Element<T>& b, const Element<T>& c) {
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c));
}

template <class T>
Element<T> commutator(const Element<T>& a, const Element<T>& b) {
    return multiply(a, b) - multiply(b, a);
}

/// Compact structure constants of A_r: every basis product is +/- one basis
/// element, e_p e_q = sign(p,q) e_{index(p,q)}.
class MultiplicationTable {
public:
    struct Entry {
        std::uint32_t index;
        std::int8_t sign;
        bool operator==(const Entry&) const = default;
    };

    MultiplicationTable(int level, std::vector<Entry> entries);

    int level() const { return level_; }
    std::size_t dim() const { return dim_; }
    Entry product(std::size_t p, std::size_t q) const { return entries_[p * dim_ + q]; }
    /// gamma^k_{pq} in {-1, 0, 1}.
    int gamma(std::size_t k, std::size_t p, std::size_t q) const {
        auto e = product(p, q);
        return e.index == k ? e.sign : 0;
    }

    template <class T>
    StructureConstants<T> to_structure_constants() const {
        StructureConstants<T> out(dim_);
        for (std::size_t p = 0; p < dim_; ++p)
            for (std::size_t q = 0; q < dim_; ++q) {
                auto e = product(p, q);
                out.add(p, q, e.index, ScalarTraits<T>::from_int(e.sign));
            }
        return out;
    }

    bool operator==(const MultiplicationTable& o) const = default;

private:
    int level_;
    std::size_t dim_;
    std::vector<Entry> entries_;
};

/// Structure constants of A_r generated by the recursion; built once per
/// level and shared (thread-safe). Throws LevelTooLarge when r > max_level.
const MultiplicationTable& structure_constants(int level, int max_level = kDefaultMaxLevel);

/// Table-driven product; must agree with multiply().
template <class T>
Element<T> table_multiply(const MultiplicationTable& table, const Element<T>& a, const Element<T>& b) {
    using Tr = ScalarTraits<T>;
    a.require_same_level(b);
    if (a.level() != table.level()) throw Error(Errc::LevelMismatch, "table level differs from operands");
    Element<T> out(a.level());
    const std::size_t n = a.dim();
    for (std::size_t p = 0; p < n; ++p) {
        if (Tr::is_zero(a[p])) continue;
        for (std::size_t q = 0; q < n; ++q) {
            if (Tr::is_zero(b[q])) continue;
            auto e = table.product(p, q);
            if (e.sign > 0)
                out[e.index] += a[p] * b[q];
            else
                out[e.index] -= a[p] * b[q];
        }
    }
    return out;
}

template <class T>
Element<T> table_multiply(const Element<T>& a, const Element<T>& b) {
    return table_multiply(structure_constants(a.level()), a, b);
}

struct OperatorInvertibility {
    bool left = false;
    bool right = false;
    bool operator==(const OperatorInvertibility&) const = default;
};

/// Full-rank test of x -> a x and x -> x a over the scalar field. `tol` is the
/// pivot threshold for floating scalars.
template <class T>
OperatorInvertibility is_operator_invertible(const Element<T>& a, double tol = 1e-12) {
    const auto& table = structure_constants(a.level(), 30);
    const std::size_t n = a.dim();
    Matrix<T> left(n, n), right(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        if (ScalarTraits<T>::is_zero(a[p])) continue;
        for (std::size_t q = 0; q < n; ++q) {
            auto l = table.product(p, q);  // e_p e_q
            auto r = table.product(q, p);  // e_q e_p
            if (l.sign > 0) left(l.index, q) += a[p]; else left(l.index, q) -= a[p];
            if (r.sign > 0) right(r.index, q) += a[p]; else right(r.index, q) -= a[p];
        }
    }
    return {rank(std::move(left), tol) == n, rank(std::move(right), tol) == n};
}

}  // namespace hyperalg::cd
