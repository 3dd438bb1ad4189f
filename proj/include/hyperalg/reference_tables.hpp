#pragma once

// Reference multiplication tables kept as transcribed (including misprints)
// for comparison against the generated structure constants.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperalg/cayley.hpp"
#include "hyperalg/cd_core.hpp"
#include "hyperalg/polynomial.hpp"

namespace hyperalg::cd {

/// One cell of a CD reference table, e_row e_col = sign e_index.
struct SignedBasis {
    int sign = 1;
    std::size_t index = 0;
    bool operator==(const SignedBasis&) const = default;
};

/// Parses "e3", "-e12", "1", "-1".
SignedBasis parse_signed_basis(const std::string& cell);
std::string format_signed_basis(const SignedBasis& cell);

struct CellMismatch {
    std::size_t row = 0;
    std::size_t col = 0;
    std::string reference;
    std::string generated;
};

/// Full 8x8 octonion table (rows/cols e_0..e_7); row and column 0 are the
/// implicit unit products.
std::vector<std::vector<SignedBasis>> octonion_reference();
/// Full 16x16 sedenion table as printed (rows/cols e_0..e_15).
std::vector<std::vector<SignedBasis>> sedenion_reference();

/// Cells where a reference table disagrees with structure_constants(level).
std::vector<CellMismatch> compare_cd_reference(int level, const std::vector<std::vector<SignedBasis>>& reference);

/// Variable ids used by the symbolic quaternionic tables.
namespace qvar {
inline constexpr int alpha = 0, beta = 1, gamma = 2, rho = 3, xi = 4, eta = 5, zeta = 6;
std::string name(int id);
}  // namespace qvar

/// Symbolic quaternionic table of type (alpha, beta, gamma): cells (row, col)
/// for row, col in {i, j, k} (indices 1..3), each a coefficient vector over
/// (e, i, j, k). `beta_zero` selects the (alpha, gamma) table.
struct QuaternionReference {
    std::array<std::array<std::vector<Polynomial>, 3>, 3> cells;
    Polynomial trace;  // of u = rho e + xi i + eta j + zeta k
    Polynomial norm;
};
QuaternionReference quaternion_reference(bool beta_zero);

/// Symbolic quaternionic algebra built by the Cayley extension over Q[alpha, beta, gamma].
CayleyAlgebra<Polynomial> symbolic_quaternionic_algebra(bool beta_zero);

/// Compares the symbolic extension against the reference cells and the
/// trace/norm formulas; returns human-readable mismatches.
std::vector<CellMismatch> compare_quaternion_reference(bool beta_zero);

/// The beta = 0 norm exactly as printed alongside the (alpha, gamma) table.
Polynomial printed_beta_zero_norm();

}  // namespace hyperalg::cd
