#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperalg/error.hpp"
#include "hyperalg/linalg.hpp"
#include "hyperalg/polynomial.hpp"
#include "hyperalg/scalar.hpp"
#include "hyperalg/structure.hpp"

namespace hyperalg {
namespace qt {
class QHAlgebra;
}

namespace pde {

enum class JetMode { Symmetric, Full };

struct JetVariable {
    std::string name;
    int order = 0;        // -1 for an independent (base) coordinate
    int dependent = -1;   // index of the dependent variable, -1 for base coordinates
    int independent = -1; // index of the base coordinate when order == -1
    std::vector<int> derivatives;  // independent indices, nondecreasing in symmetric mode

    bool operator==(const JetVariable&) const = default;
};

class JetCoordinateSystem {
public:
    JetCoordinateSystem() = default;
    JetCoordinateSystem(std::vector<std::string> independent, std::vector<std::string> dependent, int order,
                        JetMode mode = JetMode::Full);

    const std::vector<std::string>& independent() const { return independent_; }
    const std::vector<std::string>& dependent() const { return dependent_; }
    int order() const { return order_; }
    JetMode mode() const { return mode_; }
    const std::vector<JetVariable>& variables() const { return variables_; }
    std::size_t size() const { return variables_.size(); }

    /// Index of a jet variable by name; throws InvalidInput if absent.
    int id(const std::string& name) const;
    std::optional<int> find(const std::string& name) const;
    /// Jet variable for dependent `u` differentiated along `derivs` (order 0 = u itself).
    int id(int dependent, std::vector<int> derivs) const;
    const std::string& name(int id) const { return variables_.at(static_cast<std::size_t>(id)).name; }

    bool operator==(const JetCoordinateSystem& o) const;

private:
    std::vector<std::string> independent_;
    std::vector<std::string> dependent_;
    int order_ = 0;
    JetMode mode_ = JetMode::Full;
    std::vector<JetVariable> variables_;
};

/// Fiber dimensions per order: entry 0 is m + n, entry j >= 1 counts the
/// order-j jet coordinates (n m^j full, n C(m+j-1, j) symmetric).
std::vector<std::size_t> jet_dimensions(std::size_t m_independent, std::size_t n_dependent, int k,
                                        JetMode mode = JetMode::Full);

using JetPolynomial = Polynomial;

/// Finite-dimensional unital algebra used for coefficients and point values.
struct CoefficientAlgebra {
    std::string name;
    StructureConstants<Rational> exact;
    StructureConstants<double> real;
    std::vector<Rational> unit;

    std::size_t dim() const { return exact.dim(); }
    template <class T>
    const StructureConstants<T>& table() const;
    template <class T>
    std::vector<T> unit_as() const;
};

template <>
inline const StructureConstants<Rational>& CoefficientAlgebra::table<Rational>() const {
    return exact;
}
template <>
inline const StructureConstants<double>& CoefficientAlgebra::table<double>() const {
    return real;
}
template <>
inline std::vector<Rational> CoefficientAlgebra::unit_as<Rational>() const {
    return unit;
}
template <>
inline std::vector<double> CoefficientAlgebra::unit_as<double>() const {
    std::vector<double> out;
    for (const auto& c : unit) out.push_back(c.get_d());
    return out;
}

/// Cayley-Dickson algebra of the given level (dimension 2^level).
CoefficientAlgebra cd_coefficients(int level);
/// Combined table of a quantum hypercomplex algebra B (x) A_r.
CoefficientAlgebra qh_coefficients(const qt::QHAlgebra& algebra);

struct PDESystem {
    std::string name;
    JetCoordinateSystem coordinates;
    std::vector<JetPolynomial> equations;
    CoefficientAlgebra algebra;
};

/// Checks that every variable referenced by the equations exists.
PDESystem make_system(std::string name, JetCoordinateSystem coords, std::vector<JetPolynomial> equations,
                      CoefficientAlgebra algebra);

/// Parses "2*u1_x^3 - u2_y*u1_x + 1/2" over the coordinate names.
JetPolynomial parse_jet_polynomial(const std::string& text, const JetCoordinateSystem& coords);
std::string format_jet_polynomial(const JetPolynomial& p, const JetCoordinateSystem& coords);

/// R1, S1, T1 (over R), heat (over H), d'Alembert (over S).
std::vector<PDESystem> builtin_systems();
PDESystem builtin_system(const std::string& name);
std::vector<std::string> builtin_system_names();
PDESystem with_algebra(PDESystem system, CoefficientAlgebra algebra);

using PolyMatrix = std::vector<std::vector<JetPolynomial>>;

PolyMatrix formal_jacobian(const PDESystem& system);

struct Minor {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    JetPolynomial det;
};

/// All size x size minors in lexicographic (rows, cols) order, expanded by the
/// Leibniz formula.
std::vector<Minor> minor_determinants(const PolyMatrix& jac, std::size_t size);

/// Value of each jet variable, as a coefficient vector in the algebra.
template <class T>
using JetPoint = std::vector<std::vector<T>>;

/// Evaluates a polynomial at a point: coefficients are central scalars and each
/// monomial is multiplied left to right in ascending variable order.
template <class T>
std::vector<T> evaluate(const JetPolynomial& p, const CoefficientAlgebra& algebra, const JetPoint<T>& point);

struct MinorDiagnostic {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    std::vector<double> value;
    double norm_sq = 0.0;
    std::size_t operator_rank = 0;
    bool invertible = false;
};

struct PointClassification {
    bool regular = false;
    std::vector<double> residuals;  // max component magnitude per equation
    std::vector<MinorDiagnostic> minors;
};

/// Regular iff some evaluated minor has an invertible left-multiplication
/// operator. Throws OffVariety when an equation exceeds `tolerance` (exact
/// zero for Rational), AlgebraMismatch on dimension errors.
template <class T>
PointClassification classify_point(const PDESystem& system, const JetPoint<T>& point, std::size_t minor_size,
                                   double tolerance = 1e-9);

/// Samples of the dependent variables on a rectangular grid over the first two
/// independent coordinates: values[(i * ny + j) * n_dependent + d].
template <class T>
struct SampledGrid {
    std::size_t nx = 0, ny = 0;
    T hx{}, hy{};
    std::size_t dim = 0;
    std::vector<std::vector<T>> values;
};

template <class T>
struct ResidualField {
    std::size_t nx = 0, ny = 0;  // interior nodes
    std::vector<std::vector<std::vector<T>>> values;  // [node][equation] -> algebra vector
    double max_abs = 0.0;
};

/// Central differences (orders <= 2) at interior nodes, then evaluation of
/// each equation. Throws ResolutionTooSmall below 3 nodes per axis.
template <class T>
ResidualField<T> residual(const PDESystem& system, const SampledGrid<T>& grid);

/// Uniform periodic grid on [0, 1) with algebra-valued nodes.
template <class T>
struct GridField {
    T h{};
    T dt{};
    T time{};
    std::size_t dim = 0;
    std::vector<std::vector<T>> values;

    bool operator==(const GridField&) const = default;
};

template <class T>
GridField<T> make_grid_field(std::size_t nodes, std::size_t dim);

/// Explicit Euler for u_t = u_xx, applied componentwise. Throws UnstableStep
/// when dt > h^2 / 2.
template <class T>
GridField<T> heat_evolve(const GridField<T>& field, const T& dt, std::size_t steps);

/// Component `c` of every node as a one-dimensional field.
template <class T>
GridField<T> component_field(const GridField<T>& field, std::size_t c);

struct SeparableReport {
    double max_abs = 0.0;
    std::size_t witness_i = 0, witness_j = 0;
    std::vector<double> witness_value;
    std::size_t subalgebra_dim = 0;
    bool commutative_associative = false;
};

/// R = (f g)(f' g') - (f' g)(f g') over all node pairs, with derivatives given.
SeparableReport separable_dalembert_check(const std::vector<std::vector<double>>& f,
                                          const std::vector<std::vector<double>>& fprime,
                                          const std::vector<std::vector<double>>& g,
                                          const std::vector<std::vector<double>>& gprime,
                                          const CoefficientAlgebra& algebra, double tolerance = 1e-9);
/// Same, with derivatives from periodic central differences of spacing h.
SeparableReport separable_dalembert_check(const std::vector<std::vector<double>>& f,
                                          const std::vector<std::vector<double>>& g, double h,
                                          const CoefficientAlgebra& algebra, double tolerance = 1e-9);

}  // namespace pde
}  // namespace hyperalg
