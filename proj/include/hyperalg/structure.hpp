#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperalg/error.hpp"
#include "hyperalg/linalg.hpp"
#include "hyperalg/scalar.hpp"

namespace hyperalg {

/// Structure constants gamma^k_{pq} of a finite-dimensional algebra, stored
/// sparsely: for each ordered basis pair (p, q) the nonzero (k, gamma) terms of
/// e_p e_q.
template <class T>
class StructureConstants {
public:
    using Term = std::pair<std::size_t, T>;

    StructureConstants() = default;
    explicit StructureConstants(std::size_t dim) : dim_(dim), products_(dim * dim) {}

    std::size_t dim() const { return dim_; }

    const std::vector<Term>& product(std::size_t p, std::size_t q) const {
        return products_[p * dim_ + q];
    }

    /// Adds `value` to gamma^k_{pq}; zero results are pruned.
    void add(std::size_t p, std::size_t q, std::size_t k, const T& value) {
        using Tr = ScalarTraits<T>;
        if (Tr::is_zero(value)) return;
        auto& terms = products_[p * dim_ + q];
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            if (it->first == k) {
                it->second += value;
                if (Tr::is_zero(it->second)) terms.erase(it);
                return;
            }
        }
        terms.emplace_back(k, value);
    }

    T gamma(std::size_t k, std::size_t p, std::size_t q) const {
        for (const auto& [idx, v] : product(p, q))
            if (idx == k) return v;
        return ScalarTraits<T>::zero();
    }

    /// Product of two coefficient vectors.
    std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b) const {
        using Tr = ScalarTraits<T>;
        if (a.size() != dim_ || b.size() != dim_)
            throw Error(Errc::AlgebraMismatch, "coefficient vector length does not match algebra dimension");
        std::vector<T> out(dim_, Tr::zero());
        for (std::size_t p = 0; p < dim_; ++p) {
            if (Tr::is_zero(a[p])) continue;
            for (std::size_t q = 0; q < dim_; ++q) {
                if (Tr::is_zero(b[q])) continue;
                const auto& terms = product(p, q);
                if (terms.empty()) continue;
                T ab = a[p] * b[q];
                for (const auto& [k, g] : terms) out[k] += g * ab;
            }
        }
        return out;
    }

    /// Matrix of x -> a x (left) or x -> x a (right) in the standard basis.
    Matrix<T> multiplication_operator(const std::vector<T>& a, bool left) const {
        using Tr = ScalarTraits<T>;
        Matrix<T> m(dim_, dim_);
        for (std::size_t p = 0; p < dim_; ++p) {
            if (Tr::is_zero(a[p])) continue;
            for (std::size_t q = 0; q < dim_; ++q) {
                const auto& terms = left ? product(p, q) : product(q, p);
                for (const auto& [k, g] : terms) m(k, q) += g * a[p];
            }
        }
        return m;
    }

    template <class U, class Convert>
    StructureConstants<U> convert(Convert&& fn) const {
        StructureConstants<U> out(dim_);
        for (std::size_t p = 0; p < dim_; ++p)
            for (std::size_t q = 0; q < dim_; ++q)
                for (const auto& [k, g] : product(p, q)) out.add(p, q, k, fn(g));
        return out;
    }

    bool operator==(const StructureConstants& o) const {
        if (dim_ != o.dim_) return false;
        for (std::size_t p = 0; p < dim_; ++p)
            for (std::size_t q = 0; q < dim_; ++q) {
                const auto& a = product(p, q);
                const auto& b = o.product(p, q);
                if (a.size() != b.size()) return false;
                for (const auto& [k, g] : a)
                    if (!(o.gamma(k, p, q) == g)) return false;
            }
        return true;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::vector<Term>> products_;
};

}  // namespace hyperalg
