#pragma once

// Finitely generated abelian groups in invariant-factor form, Smith normal
// form over arbitrary-precision integers, and Hom / Ext / tensor.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperalg/error.hpp"
#include "hyperalg/scalar.hpp"

namespace hyperalg::abelian {

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    bool operator==(const IntegerMatrix&) const = default;
    bool is_diagonal() const;
    /// Determinant by fraction-free elimination (square matrices only).
    Integer determinant() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithForm {
    /// d_1 | d_2 | ... of length min(rows, cols); zeros come last.
    std::vector<Integer> diagonal;
    IntegerMatrix U, V;  // U M V = D, both unimodular
};
SmithForm smith_normal_form(const IntegerMatrix& m);

class FGAbelianGroup {
public:
    FGAbelianGroup() = default;
    /// Canonical form from a free rank and arbitrary cyclic orders (orders 1
    /// are dropped, 0 counts as a free summand).
    FGAbelianGroup(std::size_t free_rank, const std::vector<Integer>& cyclic_orders);
    static FGAbelianGroup cyclic(const Integer& n);  // Z for n = 0
    static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup(rank, {}); }
    static FGAbelianGroup trivial() { return FGAbelianGroup(); }

    std::size_t free_rank() const { return rank_; }
    /// Invariant factors d_1 | d_2 | ..., each >= 2.
    const std::vector<Integer>& torsion() const { return torsion_; }
    bool is_finite() const { return rank_ == 0; }
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
    /// Throws InfiniteGroup when the free rank is positive.
    Integer order() const;
    std::string to_string() const;

    bool operator==(const FGAbelianGroup&) const = default;

private:
    std::size_t rank_ = 0;
    std::vector<Integer> torsion_;
};

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);
/// Cokernel Z^rows / (column span of M).
FGAbelianGroup decompose(const IntegerMatrix& presentation);
bool iso_check(const FGAbelianGroup& g, const FGAbelianGroup& h);

FGAbelianGroup hom(const FGAbelianGroup& g, const FGAbelianGroup& h);
/// Ext^1_Z(g, h).
FGAbelianGroup ext(const FGAbelianGroup& g, const FGAbelianGroup& h);
FGAbelianGroup tensor(const FGAbelianGroup& g, const FGAbelianGroup& h);
/// h / m h.
FGAbelianGroup quotient_by_multiple(const FGAbelianGroup& h, const Integer& m);

/// H_r(Z_i; Z): Z for r = 0, Z_i for r odd, 0 for r > 0 even.
FGAbelianGroup cyclic_homology(const Integer& order, std::size_t degree);
/// H_p(S^n; Z).
FGAbelianGroup sphere_homology(std::size_t n, std::size_t p);
long euler_characteristic(std::size_t n);

/// Hom(H_k, M) + Ext(H_{k-1}, M) with trivial action.
FGAbelianGroup cohomology_uct(const FGAbelianGroup& h_prev, const FGAbelianGroup& h_k, const FGAbelianGroup& m);

/// Aut(G) is trivial exactly for G = 0 and G = Z_2.
bool automorphism_group_trivial(const FGAbelianGroup& g);

struct ExtensionReport {
    Integer base_order;
    Integer fiber_order;
    Integer ext_order;
    FGAbelianGroup ext_group;
    bool fiber_aut_trivial = false;
    std::optional<Integer> direct_sum_order;
};
/// Throws InfiniteGroup when either group has positive free rank.
ExtensionReport extension_count(const FGAbelianGroup& base, const FGAbelianGroup& fiber);

}  // namespace hyperalg::abelian
