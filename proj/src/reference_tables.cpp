#include "hyperalg/reference_tables.hpp"

#include <array>

namespace hyperalg::cd {

namespace {

const char* const kOctonion[7][7] = {
    {"-1", "e3", "-e2", "e5", "-e4", "-e7", "e6"},   // e1
    {"-e3", "-1", "e1", "e6", "e7", "-e4", "-e5"},   // e2
    {"e2", "-e1", "-1", "e7", "-e6", "e5", "-e4"},   // e3
    {"-e5", "-e6", "-e7", "-1", "e1", "e2", "e3"},   // e4
    {"e4", "-e7", "e6", "-e1", "-1", "-e3", "e2"},   // e5
    {"e7", "e4", "-e5", "-e2", "e3", "-1", "-e1"},   // e6
    {"-e6", "e5", "e4", "-e3", "-e2", "e1", "-1"},   // e7
};

const char* const kSedenion[16][16] = {
    {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9", "e10", "e11", "e12", "e13", "e14", "e15"},
    {"e1", "-1", "e3", "-e2", "e5", "-e4", "-e7", "e6", "e9", "-e8", "-e11", "e10", "-e13", "e12", "e15", "-e14"},
    {"e2", "-e3", "-1", "e1", "e6", "e7", "-e4", "-e5", "e10", "e11", "-e3", "-e9", "-e14", "-e15", "e12", "e13"},
    {"e3", "e2", "-e1", "-1", "e7", "-e6", "e5", "-e4", "e11", "-e10", "e9", "-e8", "-e15", "e14", "-e13", "e12"},
    {"e4", "-e5", "-e6", "-e7", "-1", "e1", "e2", "e3", "e12", "e13", "e14", "e15", "-e8", "-e9", "-e10", "-e11"},
    {"e5", "e4", "-e7", "e6", "-e1", "-1", "e3", "e2", "e13", "-e12", "e15", "-e14", "e9", "-e8", "e11", "-e10"},
    {"e6", "e7", "e4", "-e5", "-e2", "e3", "-1", "-e1", "e14", "-e15", "-e12", "e13", "e10", "-e11", "-e3", "e9"},
    {"e7", "-e6", "e5", "e4", "-e3", "-e2", "e1", "-1", "e15", "e14", "-e13", "-e12", "e11", "e10", "-e9", "-e8"},
    {"e8", "-e9", "-e10", "-e11", "-e12", "-e13", "-e14", "-e15", "-1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"},
    {"e9", "e8", "-e11", "e10", "-e13", "e12", "e15", "-e14", "-e1", "-1", "-e3", "e2", "-e5", "e4", "e7", "-e6"},
    {"e10", "e11", "e3", "-e9", "-e14", "-e15", "e12", "e13", "-e2", "e3", "-1", "-e1", "-e6", "-e7", "e4", "e5"},
    {"e11", "-e10", "e9", "e8", "-e15", "e14", "-e13", "e12", "-e3", "-e2", "e1", "-1", "-e7", "e6", "-e5", "e4"},
    {"e12", "e13", "e14", "e15", "e8", "-e9", "e10", "-e11", "-e4", "e5", "e6", "e7", "-1", "-e1", "-e2", "-e3"},
    {"e13", "-e12", "e15", "-e14", "e9", "e8", "e11", "-e10", "-e5", "-e4", "e7", "-e6", "e1", "-1", "-e3", "-e2"},
    {"e14", "-e15", "-e12", "e13", "e10", "-e11", "e8", "e9", "-e6", "-e7", "-e4", "e5", "e2", "-e3", "-1", "e1"},
    {"e15", "e14", "-e13", "-e12", "e11", "e10", "-e9", "e8", "-e7", "e6", "-e5", "-e4", "e3", "e2", "-e1", "-1"},
};

Polynomial v(int id) { return Polynomial::var(id); }

std::vector<Polynomial> vec(Polynomial e, Polynomial i, Polynomial j, Polynomial k) {
    return {std::move(e), std::move(i), std::move(j), std::move(k)};
}

std::string format_vector(const std::vector<Polynomial>& c) {
    static const char* const basis[] = {"e", "i", "j", "k"};
    std::string out;
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c[n].to_string(qvar::name) + ")" + basis[n];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

SignedBasis parse_signed_basis(const std::string& cell) {
    SignedBasis out;
    std::string s = cell;
    if (!s.empty() && s[0] == '-') {
        out.sign = -1;
        s = s.substr(1);
    }
    if (s == "1") return {out.sign, 0};
    if (s.size() < 2 || s[0] != 'e') throw Error(Errc::InvalidInput, "bad table cell '" + cell + "'");
    out.index = std::stoul(s.substr(1));
    return out;
}

std::string format_signed_basis(const SignedBasis& cell) {
    std::string body = cell.index == 0 ? "1" : "e" + std::to_string(cell.index);
    return cell.sign < 0 ? "-" + body : body;
}

std::vector<std::vector<SignedBasis>> octonion_reference() {
    std::vector<std::vector<SignedBasis>> t(8, std::vector<SignedBasis>(8));
    for (std::size_t i = 0; i < 8; ++i) {
        t[0][i] = {1, i};
        t[i][0] = {1, i};
    }
    for (std::size_t r = 1; r < 8; ++r)
        for (std::size_t c = 1; c < 8; ++c) t[r][c] = parse_signed_basis(kOctonion[r - 1][c - 1]);
    return t;
}

std::vector<std::vector<SignedBasis>> sedenion_reference() {
    std::vector<std::vector<SignedBasis>> t(16, std::vector<SignedBasis>(16));
    for (std::size_t r = 0; r < 16; ++r)
        for (std::size_t c = 0; c < 16; ++c) t[r][c] = parse_signed_basis(kSedenion[r][c]);
    return t;
}

std::vector<CellMismatch> compare_cd_reference(int level, const std::vector<std::vector<SignedBasis>>& reference) {
    const auto& table = structure_constants(level);
    if (reference.size() != table.dim()) throw Error(Errc::LevelMismatch, "reference table has wrong dimension");
    std::vector<CellMismatch> out;
    for (std::size_t r = 0; r < table.dim(); ++r)
        for (std::size_t c = 0; c < table.dim(); ++c) {
            auto e = table.product(r, c);
            SignedBasis generated{e.sign, e.index};
            if (!(reference[r][c] == generated))
                out.push_back({r, c, format_signed_basis(reference[r][c]), format_signed_basis(generated)});
        }
    return out;
}

std::string qvar::name(int id) {
    static const char* const names[] = {"alpha", "beta", "gamma", "rho", "xi", "eta", "zeta"};
    return id >= 0 && id < 7 ? names[id] : "x" + std::to_string(id);
}

QuaternionReference quaternion_reference(bool beta_zero) {
    using namespace qvar;
    const Polynomial a = v(alpha), g = v(gamma), b = beta_zero ? Polynomial() : v(beta);
    const Polynomial r = v(rho), x = v(xi), y = v(eta), z = v(zeta);
    QuaternionReference ref;
    // rows i, j, k; columns i, j, k
    ref.cells[0] = {vec(a, b, 0, 0), vec(0, 0, 0, 1), vec(0, 0, a, b)};
    ref.cells[1] = {vec(0, 0, b, -1), vec(g, 0, 0, 0), vec(b * g, -g, 0, 0)};
    ref.cells[2] = {vec(0, 0, -a, 0), vec(0, g, 0, 0), vec(-a * g, 0, 0, 0)};
    ref.trace = Polynomial(2) * r + b * x;
    ref.norm = r * r + b * r * x - a * x * x - g * (y * y + b * y * z - a * z * z);
    return ref;
}

Polynomial printed_beta_zero_norm() {
    using namespace qvar;
    const Polynomial a = v(alpha), g = v(gamma), r = v(rho), x = v(xi), y = v(eta), z = v(zeta);
    return r * r - a * x * x - g * y * y + a * z * z;
}

CayleyAlgebra<Polynomial> symbolic_quaternionic_algebra(bool beta_zero) {
    return quaternionic_algebra<Polynomial>(v(qvar::alpha), beta_zero ? Polynomial() : v(qvar::beta), v(qvar::gamma));
}

std::vector<CellMismatch> compare_quaternion_reference(bool beta_zero) {
    const auto alg = symbolic_quaternionic_algebra(beta_zero);
    const auto ref = quaternion_reference(beta_zero);
    std::vector<CellMismatch> out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            auto prod = alg.multiply(alg.basis(r + 1), alg.basis(c + 1));
            if (!(prod == ref.cells[r][c]))
                out.push_back({r + 1, c + 1, format_vector(ref.cells[r][c]), format_vector(prod)});
        }
    using namespace qvar;
    const std::vector<Polynomial> u = {v(rho), v(xi), v(eta), v(zeta)};
    auto tr = cayley_trace(alg, u);
    if (!(tr == ref.trace))
        out.push_back({0, 0, "T_F = " + ref.trace.to_string(name), "T_F = " + tr.to_string(name)});
    auto nm = cayley_norm(alg, u);
    if (!(nm == ref.norm))
        out.push_back({0, 1, "N_F = " + ref.norm.to_string(name), "N_F = " + nm.to_string(name)});
    return out;
}

}  // namespace hyperalg::cd
