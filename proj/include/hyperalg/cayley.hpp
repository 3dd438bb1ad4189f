#pragma once

// Cayley algebras (E, s): a unital algebra with unit e_0 and a conjugation s
// satisfying u + s(u) in R e and u s(u) in R e. Generic over the coefficient
// ring so the same code runs over rationals and over polynomials in the
// parameters (alpha, beta, gamma).

#include <cstddef>
#include <string>
#include <vector>

#include "hyperalg/cd_core.hpp"
#include "hyperalg/error.hpp"
#include "hyperalg/structure.hpp"

namespace hyperalg::cd {

template <class T>
struct CayleyAlgebra {
    StructureConstants<T> table;
    /// conjugation[j] = coefficient vector of s(e_j).
    std::vector<std::vector<T>> conjugation;

    std::size_t dim() const { return table.dim(); }

    std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b) const {
        return table.multiply(a, b);
    }

    std::vector<T> conjugate(const std::vector<T>& a) const {
        std::vector<T> out(dim(), ScalarTraits<T>::zero());
        for (std::size_t j = 0; j < dim(); ++j) {
            if (ScalarTraits<T>::is_zero(a[j])) continue;
            for (std::size_t k = 0; k < dim(); ++k) out[k] += a[j] * conjugation[j][k];
        }
        return out;
    }

    std::vector<T> basis(std::size_t i) const {
        std::vector<T> v(dim(), ScalarTraits<T>::zero());
        v[i] = ScalarTraits<T>::one();
        return v;
    }
};

namespace detail {

template <class T>
bool is_scalar_multiple_of_unit(const std::vector<T>& v) {
    for (std::size_t k = 1; k < v.size(); ++k)
        if (!ScalarTraits<T>::is_zero(v[k])) return false;
    return true;
}

}  // namespace detail

/// Throws InvalidConjugation unless e_0 is a two-sided unit, s is linear
/// with s(e_0) = e_0 and s(s(x)) = x, and trace/norm land in R e_0 (the norm
/// condition is checked on all basis pairs via its polarization).
template <class T>
void validate_cayley(const CayleyAlgebra<T>& alg) {
    const std::size_t n = alg.dim();
    if (n == 0 || alg.conjugation.size() != n) throw Error(Errc::InvalidConjugation, "conjugation has wrong size");
    const auto e = alg.basis(0);
    for (std::size_t i = 0; i < n; ++i) {
        auto ei = alg.basis(i);
        if (!(alg.multiply(e, ei) == ei) || !(alg.multiply(ei, e) == ei))
            throw Error(Errc::InvalidConjugation, "e_0 is not a two-sided unit");
        if (alg.conjugation[i].size() != n) throw Error(Errc::InvalidConjugation, "conjugation row has wrong size");
        if (!(alg.conjugate(alg.conjugate(ei)) == ei))
            throw Error(Errc::InvalidConjugation, "conjugation is not an involution at e_" + std::to_string(i));
        auto tr = ei;
        auto si = alg.conjugate(ei);
        for (std::size_t k = 0; k < n; ++k) tr[k] += si[k];
        if (!detail::is_scalar_multiple_of_unit(tr))
            throw Error(Errc::InvalidConjugation, "u + conj(u) is not a scalar at e_" + std::to_string(i));
    }
    if (!(alg.conjugate(e) == e)) throw Error(Errc::InvalidConjugation, "conjugation does not fix the unit");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            auto a = alg.multiply(alg.basis(i), alg.conjugate(alg.basis(j)));
            auto b = alg.multiply(alg.basis(j), alg.conjugate(alg.basis(i)));
            for (std::size_t k = 0; k < n; ++k) a[k] += b[k];
            if (!detail::is_scalar_multiple_of_unit(a))
                throw Error(Errc::InvalidConjugation, "u conj(u) is not a scalar on span{e_" + std::to_string(i) +
                                                          ", e_" + std::to_string(j) + "}");
        }
}

/// The ground ring itself, with identity conjugation.
template <class T>
CayleyAlgebra<T> ground_ring() {
    CayleyAlgebra<T> alg{StructureConstants<T>(1), {{ScalarTraits<T>::one()}}};
    alg.table.add(0, 0, 0, ScalarTraits<T>::one());
    return alg;
}

/// Quadratic algebra of type (alpha, beta): basis (e, i), i^2 = alpha e + beta i,
/// conj(i) = beta e - i.
template <class T>
CayleyAlgebra<T> quadratic_algebra(const T& alpha, const T& beta) {
    using Tr = ScalarTraits<T>;
    CayleyAlgebra<T> alg{StructureConstants<T>(2), {}};
    alg.table.add(0, 0, 0, Tr::one());
    alg.table.add(0, 1, 1, Tr::one());
    alg.table.add(1, 0, 1, Tr::one());
    alg.table.add(1, 1, 0, alpha);
    alg.table.add(1, 1, 1, beta);
    alg.conjugation = {{Tr::one(), Tr::zero()}, {beta, -Tr::one()}};
    return alg;
}

/// Cayley extension F = E x E with (x,y)(x',y') = (x x' + gamma conj(y') y, y conj(x') + y' x)
/// and conjugation (x, y) -> (conj(x), -y). Basis: (e_p, 0) -> p, (0, e_p) -> n + p.
template <class T>
CayleyAlgebra<T> cayley_extension(const CayleyAlgebra<T>& base, const T& gamma) {
    using Tr = ScalarTraits<T>;
    validate_cayley(base);
    const std::size_t n = base.dim();
    CayleyAlgebra<T> out{StructureConstants<T>(2 * n), {}};
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const auto ep = base.basis(p), eq = base.basis(q);
            // (e_p,0)(e_q,0) = (e_p e_q, 0)
            for (const auto& [k, g] : base.table.product(p, q)) out.table.add(p, q, k, g);
            // (e_p,0)(0,e_q) = (0, e_q e_p)
            for (const auto& [k, g] : base.table.product(q, p)) out.table.add(p, n + q, n + k, g);
            // (0,e_p)(e_q,0) = (0, e_p conj(e_q))
            auto v = base.multiply(ep, base.conjugate(eq));
            for (std::size_t k = 0; k < n; ++k) out.table.add(n + p, q, n + k, v[k]);
            // (0,e_p)(0,e_q) = (gamma conj(e_q) e_p, 0)
            auto w = base.multiply(base.conjugate(eq), ep);
            for (std::size_t k = 0; k < n; ++k) out.table.add(n + p, n + q, k, gamma * w[k]);
        }
    out.conjugation.assign(2 * n, std::vector<T>(2 * n, Tr::zero()));
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t k = 0; k < n; ++k) out.conjugation[p][k] = base.conjugation[p][k];
        out.conjugation[n + p][n + p] = -Tr::one();
    }
    return out;
}

/// Quaternionic algebra of type (alpha, beta, gamma) with basis (e, i, j, k), k = i j.
template <class T>
CayleyAlgebra<T> quaternionic_algebra(const T& alpha, const T& beta, const T& gamma) {
    return cayley_extension(quadratic_algebra(alpha, beta), gamma);
}

/// T(u): the e_0 coefficient of u + conj(u).
template <class T>
T cayley_trace(const CayleyAlgebra<T>& alg, const std::vector<T>& u) {
    auto c = alg.conjugate(u);
    for (std::size_t k = 1; k < u.size(); ++k)
        if (!ScalarTraits<T>::is_zero(u[k] + c[k])) throw Error(Errc::InvalidConjugation, "trace is not scalar");
    return u[0] + c[0];
}

/// N(u): the e_0 coefficient of u conj(u).
template <class T>
T cayley_norm(const CayleyAlgebra<T>& alg, const std::vector<T>& u) {
    auto v = alg.multiply(u, alg.conjugate(u));
    if (!detail::is_scalar_multiple_of_unit(v)) throw Error(Errc::InvalidConjugation, "norm is not scalar");
    return v[0];
}

/// Iterated gamma = -1 extension starting from the ground ring; equals the
/// Cayley-Dickson table at every level.
template <class T>
CayleyAlgebra<T> cayley_dickson_by_extension(int level) {
    auto alg = ground_ring<T>();
    for (int r = 0; r < level; ++r) alg = cayley_extension(alg, T(-ScalarTraits<T>::one()));
    return alg;
}

}  // namespace hyperalg::cd
