#pragma once

// Quantum hypercomplex algebras Q_r = B (x) A_r over a finite-dimensional
// structure-constant algebra B. Basis ordering is p-major: b_i (x) e_p has
// index p * dim(B) + i.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperalg/cd_core.hpp"
#include "hyperalg/structure.hpp"

namespace hyperalg::qt {

using Vec = std::vector<Rational>;

class StructureAlgebra {
public:
    /// Validates the unit (two-sided) and, when given, that the functional is
    /// 1 on the unit. The associativity flag is computed on basis triples.
    StructureAlgebra(std::string name, StructureConstants<Rational> table, Vec unit,
                     std::optional<Vec> classic_limit = std::nullopt);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return table_.dim(); }
    const StructureConstants<Rational>& table() const { return table_; }
    const Vec& unit() const { return unit_; }
    const std::optional<Vec>& classic_limit_functional() const { return functional_; }
    bool associative() const { return associative_; }

    Vec multiply(const Vec& a, const Vec& b) const { return table_.multiply(a, b); }
    Vec basis(std::size_t i) const;

private:
    std::string name_;
    StructureConstants<Rational> table_;
    Vec unit_;
    std::optional<Vec> functional_;
    bool associative_ = false;
};

/// True when (e_a e_b) e_c = e_a (e_b e_c) for every basis triple.
bool associative_on_basis(const StructureConstants<Rational>& table);

StructureAlgebra real_algebra();
/// C as the 2-dim algebra with basis (1, i); functional = real part.
StructureAlgebra complex_algebra();
/// M_2(R) with basis (E11, E12, E21, E22); functional = normalized trace.
StructureAlgebra matrix_algebra();
/// Upper-triangular 2x2 matrices with basis (E11, E12, E22); normalized trace.
StructureAlgebra upper_triangular_algebra();
/// Shipped algebras by name: "R", "C", "M2", "T2".
StructureAlgebra builtin_algebra(const std::string& name);
const std::vector<std::string>& builtin_algebra_names();

class QHAlgebra {
public:
    QHAlgebra(StructureAlgebra base, int level, int max_level = cd::kDefaultMaxLevel);

    const StructureAlgebra& base() const { return base_; }
    int level() const { return level_; }
    std::size_t dim() const { return combined_.dim(); }
    std::size_t index(std::size_t i, std::size_t p) const { return p * base_.dim() + i; }
    /// The combined algebra with unit e_B (x) e_0.
    const StructureAlgebra& combined() const { return combined_; }
    /// B associative and r <= 2.
    bool associative() const { return combined_.associative(); }

private:
    StructureAlgebra base_;
    int level_;
    StructureAlgebra combined_;
};

using QHAlgebraPtr = std::shared_ptr<const QHAlgebra>;

QHAlgebraPtr tensor_algebra(const StructureAlgebra& base, int level, int max_level = cd::kDefaultMaxLevel);

struct QHElement {
    QHAlgebraPtr algebra;
    Vec coeffs;
};

QHElement make_element(const QHAlgebraPtr& alg, Vec coeffs);
/// b (x) a for b in B and a in A_r.
QHElement pure_tensor(const QHAlgebraPtr& alg, const Vec& b, const cd::Element<Rational>& a);
/// c^k = sum a^p b^q gamma^k_{pq} in the combined table.
QHElement qh_multiply(const QHElement& x, const QHElement& y);

/// Basis of { a : a b = b a for every basis b }.
std::vector<Vec> centre(const StructureAlgebra& alg);
/// Basis of { a : [a,b,c] = [b,a,c] = [b,c,a] = 0 for basis b, c }.
std::vector<Vec> nucleus(const StructureAlgebra& alg, std::size_t max_dim = 64);

/// c = c_B (x) (1/2) T. Throws NoFunctional when B has none.
Rational classic_limit(const QHElement& x);

struct FactorEmbeddings {
    std::function<QHElement(const Vec&)> embed_B;
    std::function<QHElement(const cd::Element<Rational>&)> embed_A;
};
FactorEmbeddings embed_factors(const QHAlgebraPtr& alg);

/// Dimension of the span of a list of vectors.
std::size_t span_dimension(const std::vector<Vec>& vectors);

}  // namespace hyperalg::qt
