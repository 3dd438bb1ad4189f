#include "hyperalg/pde_singular.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "hyperalg/cd_core.hpp"
#include "hyperalg/quantum_tensor.hpp"

namespace hyperalg::pde {

namespace {

void derivative_tuples(std::size_t m, int order, bool symmetric, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == order) {
        out.push_back(cur);
        return;
    }
    int start = (symmetric && !cur.empty()) ? cur.back() : 0;
    for (int a = start; a < static_cast<int>(m); ++a) {
        cur.push_back(a);
        derivative_tuples(m, order, symmetric, cur, out);
        cur.pop_back();
    }
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

JetCoordinateSystem::JetCoordinateSystem(std::vector<std::string> independent, std::vector<std::string> dependent,
                                         int order, JetMode mode)
    : independent_(std::move(independent)), dependent_(std::move(dependent)), order_(order), mode_(mode) {
    if (independent_.empty() || dependent_.empty() || order_ < 0)
        throw Error(Errc::InvalidInput, "jet coordinates need m, n >= 1 and order >= 0");
    for (std::size_t i = 0; i < independent_.size(); ++i) {
        JetVariable v;
        v.name = independent_[i];
        v.order = -1;
        v.independent = static_cast<int>(i);
        variables_.push_back(v);
    }
    for (int j = 0; j <= order_; ++j) {
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur;
        derivative_tuples(independent_.size(), j, mode_ == JetMode::Symmetric, cur, tuples);
        for (std::size_t d = 0; d < dependent_.size(); ++d)
            for (const auto& t : tuples) {
                JetVariable v;
                v.order = j;
                v.dependent = static_cast<int>(d);
                v.derivatives = t;
                v.name = dependent_[d];
                if (!t.empty()) {
                    v.name += "_";
                    for (int a : t) v.name += independent_[static_cast<std::size_t>(a)];
                }
                variables_.push_back(v);
            }
    }
    for (std::size_t i = 0; i < variables_.size(); ++i)
        for (std::size_t k = i + 1; k < variables_.size(); ++k)
            if (variables_[i].name == variables_[k].name)
                throw Error(Errc::InvalidInput, "duplicate jet variable name " + variables_[i].name);
}

std::optional<int> JetCoordinateSystem::find(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

int JetCoordinateSystem::id(const std::string& name) const {
    auto r = find(name);
    if (!r) throw Error(Errc::InvalidInput, "unknown jet variable " + name);
    return *r;
}

int JetCoordinateSystem::id(int dependent, std::vector<int> derivs) const {
    if (mode_ == JetMode::Symmetric) std::sort(derivs.begin(), derivs.end());
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        const auto& v = variables_[i];
        if (v.dependent == dependent && v.derivatives == derivs) return static_cast<int>(i);
    }
    throw Error(Errc::InvalidInput, "jet variable not present in coordinate system");
}

bool JetCoordinateSystem::operator==(const JetCoordinateSystem& o) const {
    return independent_ == o.independent_ && dependent_ == o.dependent_ && order_ == o.order_ &&
           mode_ == o.mode_ && variables_ == o.variables_;
}

std::vector<std::size_t> jet_dimensions(std::size_t m, std::size_t n, int k, JetMode mode) {
    if (m == 0 || n == 0 || k < 0) throw Error(Errc::InvalidInput, "jet_dimensions needs m, n >= 1, k >= 0");
    std::vector<std::size_t> out{m + n};
    for (int j = 1; j <= k; ++j) {
        auto uj = static_cast<std::size_t>(j);
        if (mode == JetMode::Full) {
            std::size_t p = 1;
            for (int i = 0; i < j; ++i) p *= m;
            out.push_back(n * p);
        } else {
            out.push_back(n * binomial(m + uj - 1, uj));
        }
    }
    return out;
}

CoefficientAlgebra cd_coefficients(int level) {
    static const char* names[] = {"R", "C", "H", "O", "S"};
    CoefficientAlgebra a;
    a.name = level >= 0 && level < 5 ? names[level] : "A" + std::to_string(level);
    a.exact = cd::structure_constants(level).to_structure_constants<Rational>();
    a.real = a.exact.convert<double>([](const Rational& v) { return v.get_d(); });
    a.unit.assign(a.exact.dim(), Rational(0));
    a.unit[0] = 1;
    return a;
}

CoefficientAlgebra qh_coefficients(const qt::QHAlgebra& algebra) {
    CoefficientAlgebra a;
    a.name = algebra.base().name() + "(x)A" + std::to_string(algebra.level());
    a.exact = algebra.combined().table();
    a.real = a.exact.convert<double>([](const Rational& v) { return v.get_d(); });
    a.unit = algebra.combined().unit();
    return a;
}

PDESystem make_system(std::string name, JetCoordinateSystem coords, std::vector<JetPolynomial> equations,
                      CoefficientAlgebra algebra) {
    for (const auto& eq : equations)
        for (const auto& [m, c] : eq.terms())
            for (const auto& [id, e] : m.powers())
                if (id < 0 || static_cast<std::size_t>(id) >= coords.size())
                    throw Error(Errc::InvalidInput, "equation references a variable outside the coordinate system");
    return PDESystem{std::move(name), std::move(coords), std::move(equations), std::move(algebra)};
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, const JetCoordinateSystem& coords) : s_(text), coords_(coords) {}

    JetPolynomial parse() {
        auto p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::InvalidInput, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    JetPolynomial expr() {
        JetPolynomial out;
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        auto t = term();
        out = negate ? -t : t;
        while (true) {
            if (eat('+')) out += term();
            else if (eat('-')) out -= term();
            else break;
        }
        return out;
    }
    JetPolynomial term() {
        auto out = power();
        while (eat('*')) out *= power();
        return out;
    }
    JetPolynomial power() {
        auto base = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }
    JetPolynomial primary() {
        skip();
        if (eat('(')) {
            auto p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                        s_[pos_] == '/'))
                ++pos_;
            return JetPolynomial(parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            auto id = coords_.find(s_.substr(start, pos_ - start));
            if (!id) fail("unknown variable '" + s_.substr(start, pos_ - start) + "'");
            return JetPolynomial::var(*id);
        }
        fail("unexpected character");
    }

    std::string s_;
    const JetCoordinateSystem& coords_;
    std::size_t pos_ = 0;
};

}  // namespace

JetPolynomial parse_jet_polynomial(const std::string& text, const JetCoordinateSystem& coords) {
    return PolyParser(text, coords).parse();
}

std::string format_jet_polynomial(const JetPolynomial& p, const JetCoordinateSystem& coords) {
    return p.to_string([&](int id) { return coords.name(id); });
}

namespace {

PDESystem build(const std::string& name, JetCoordinateSystem coords, const std::vector<std::string>& eqs, int level) {
    std::vector<JetPolynomial> polys;
    for (const auto& e : eqs) polys.push_back(parse_jet_polynomial(e, coords));
    return make_system(name, std::move(coords), std::move(polys), cd_coefficients(level));
}

}  // namespace

PDESystem builtin_system(const std::string& name) {
    if (name == "R1")
        return build(name, JetCoordinateSystem({"x", "y"}, {"u1", "u2"}, 1),
                     {"u1_x^4 + u2_y^4 - u1_x^2", "u2_x^6 + u1_y^6 - u2_x*u1_y"}, 0);
    if (name == "S1")
        return build(name, JetCoordinateSystem({"x", "y"}, {"u1", "u2"}, 1),
                     {"u1_x^4 + u2_y^4 - u1_x^3 + u2_y^2", "u2_x^4 + u1_y^4 - u2_x^2*u1_y - u2_x*u1_y^2"}, 0);
    if (name == "T1")
        return build(name, JetCoordinateSystem({"x", "y"}, {"u1", "u2", "u3"}, 1),
                     {"u1^2 - u1_x*u2_y^2", "u2^2 - u2_x^2 - u1_y^2", "u3^3 + u3_y^3 + u2_x*u3_y"}, 0);
    if (name == "heat")
        return build(name, JetCoordinateSystem({"t", "x"}, {"u"}, 2, JetMode::Symmetric), {"u_xx - u_t"}, 2);
    if (name == "dalembert")
        return build(name, JetCoordinateSystem({"x", "y"}, {"u"}, 2, JetMode::Symmetric), {"u*u_xy - u_x*u_y"}, 4);
    throw Error(Errc::InvalidInput, "unknown built-in system " + name);
}

std::vector<std::string> builtin_system_names() { return {"R1", "S1", "T1", "heat", "dalembert"}; }

std::vector<PDESystem> builtin_systems() {
    std::vector<PDESystem> out;
    for (const auto& n : builtin_system_names()) out.push_back(builtin_system(n));
    return out;
}

PDESystem with_algebra(PDESystem system, CoefficientAlgebra algebra) {
    system.algebra = std::move(algebra);
    return system;
}

PolyMatrix formal_jacobian(const PDESystem& system) {
    PolyMatrix jac;
    for (const auto& eq : system.equations) {
        std::vector<JetPolynomial> row;
        for (std::size_t j = 0; j < system.coordinates.size(); ++j) row.push_back(eq.derivative(static_cast<int>(j)));
        jac.push_back(std::move(row));
    }
    return jac;
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int permutation_sign(const std::vector<std::size_t>& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

}  // namespace

std::vector<Minor> minor_determinants(const PolyMatrix& jac, std::size_t size) {
    const std::size_t rows = jac.size();
    const std::size_t cols = rows ? jac[0].size() : 0;
    if (size == 0 || size > std::min(rows, cols)) throw Error(Errc::InvalidInput, "minor size out of range");
    std::vector<Minor> out;
    for (const auto& rs : combinations(rows, size))
        for (const auto& cs : combinations(cols, size)) {
            JetPolynomial det;
            std::vector<std::size_t> perm(size);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                JetPolynomial prod(permutation_sign(perm));
                for (std::size_t k = 0; k < size && !prod.is_zero(); ++k) prod *= jac[rs[k]][cs[perm[k]]];
                det += prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            out.push_back(Minor{rs, cs, std::move(det)});
        }
    return out;
}

template <class T>
std::vector<T> evaluate(const JetPolynomial& p, const CoefficientAlgebra& algebra, const JetPoint<T>& point) {
    using Tr = ScalarTraits<T>;
    const auto& table = algebra.table<T>();
    const auto unit = algebra.unit_as<T>();
    std::vector<T> out(algebra.dim(), Tr::zero());
    for (const auto& [m, c] : p.terms()) {
        auto acc = unit;
        for (const auto& [id, e] : m.powers()) {
            if (id < 0 || static_cast<std::size_t>(id) >= point.size())
                throw Error(Errc::InvalidInput, "point does not cover every jet variable");
            for (int k = 0; k < e; ++k) acc = table.multiply(acc, point[static_cast<std::size_t>(id)]);
        }
        T coeff = Tr::from_rational(c);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeff * acc[i];
    }
    return out;
}

template std::vector<double> evaluate(const JetPolynomial&, const CoefficientAlgebra&, const JetPoint<double>&);
template std::vector<Rational> evaluate(const JetPolynomial&, const CoefficientAlgebra&, const JetPoint<Rational>&);

namespace {

template <class T>
double max_abs(const std::vector<T>& v) {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, ScalarTraits<T>::magnitude(c));
    return m;
}

template <class T>
void check_point(const PDESystem& system, const JetPoint<T>& point) {
    if (point.size() != system.coordinates.size())
        throw Error(Errc::AlgebraMismatch, "point has " + std::to_string(point.size()) + " entries, expected " +
                                               std::to_string(system.coordinates.size()));
    for (const auto& v : point)
        if (v.size() != system.algebra.dim())
            throw Error(Errc::AlgebraMismatch, "point value dimension differs from the coefficient algebra");
}

}  // namespace

template <class T>
PointClassification classify_point(const PDESystem& system, const JetPoint<T>& point, std::size_t minor_size,
                                   double tolerance) {
    using Tr = ScalarTraits<T>;
    check_point(system, point);
    PointClassification out;
    for (std::size_t i = 0; i < system.equations.size(); ++i) {
        auto value = evaluate(system.equations[i], system.algebra, point);
        double r = max_abs(value);
        out.residuals.push_back(r);
        bool off = Tr::exact ? r != 0.0 || std::any_of(value.begin(), value.end(), [](const T& c) { return !Tr::is_zero(c); })
                             : r > tolerance;
        if (off)
            throw Error(Errc::OffVariety, "equation " + std::to_string(i + 1) + " has residual " + std::to_string(r));
    }
    const auto& table = system.algebra.table<T>();
    for (auto& m : minor_determinants(formal_jacobian(system), minor_size)) {
        auto value = evaluate(m.det, system.algebra, point);
        MinorDiagnostic d;
        d.rows = m.rows;
        d.cols = m.cols;
        for (const auto& c : value) {
            d.value.push_back(Tr::to_double(c));
            d.norm_sq += Tr::to_double(c) * Tr::to_double(c);
        }
        auto op = table.multiplication_operator(value, true);
        d.operator_rank = rank(op, tolerance);
        d.invertible = d.operator_rank == system.algebra.dim();
        out.regular = out.regular || d.invertible;
        out.minors.push_back(std::move(d));
    }
    return out;
}

template PointClassification classify_point(const PDESystem&, const JetPoint<double>&, std::size_t, double);
template PointClassification classify_point(const PDESystem&, const JetPoint<Rational>&, std::size_t, double);

template <class T>
ResidualField<T> residual(const PDESystem& system, const SampledGrid<T>& grid) {
    using Tr = ScalarTraits<T>;
    const auto& coords = system.coordinates;
    const std::size_t nd = coords.dependent().size();
    const std::size_t dim = system.algebra.dim();
    if (coords.independent().size() != 2) throw Error(Errc::InvalidInput, "grid residual needs two independent variables");
    if (coords.order() > 2) throw Error(Errc::InvalidInput, "grid residual supports order <= 2");
    if (grid.nx < 3 || grid.ny < 3) throw Error(Errc::ResolutionTooSmall, "need at least 3 nodes per axis");
    if (grid.dim != dim) throw Error(Errc::AlgebraMismatch, "grid values live in a different algebra");
    if (grid.values.size() != grid.nx * grid.ny * nd)
        throw Error(Errc::InvalidInput, "grid value count does not match nx * ny * dependents");
    for (const auto& v : grid.values)
        if (v.size() != dim) throw Error(Errc::AlgebraMismatch, "grid value dimension differs from the algebra");

    auto at = [&](std::size_t i, std::size_t j, std::size_t d) -> const std::vector<T>& {
        return grid.values[(i * grid.ny + j) * nd + d];
    };
    const auto unit = system.algebra.unit_as<T>();
    const T two = Tr::from_int(2), four = Tr::from_int(4);

    ResidualField<T> out;
    out.nx = grid.nx - 2;
    out.ny = grid.ny - 2;
    for (std::size_t i = 1; i + 1 < grid.nx; ++i)
        for (std::size_t j = 1; j + 1 < grid.ny; ++j) {
            JetPoint<T> point;
            for (const auto& v : coords.variables()) {
                std::vector<T> val(dim, Tr::zero());
                if (v.order == -1) {
                    T coord = v.independent == 0 ? Tr::from_int(static_cast<long>(i)) * grid.hx
                                                 : Tr::from_int(static_cast<long>(j)) * grid.hy;
                    for (std::size_t k = 0; k < dim; ++k) val[k] = coord * unit[k];
                } else {
                    auto d = static_cast<std::size_t>(v.dependent);
                    for (std::size_t k = 0; k < dim; ++k) {
                        auto u = [&](long di, long dj) {
                            return at(static_cast<std::size_t>(static_cast<long>(i) + di),
                                      static_cast<std::size_t>(static_cast<long>(j) + dj), d)[k];
                        };
                        const auto& dv = v.derivatives;
                        if (dv.empty()) {
                            val[k] = u(0, 0);
                        } else if (dv.size() == 1) {
                            val[k] = dv[0] == 0 ? (u(1, 0) - u(-1, 0)) / (two * grid.hx)
                                                : (u(0, 1) - u(0, -1)) / (two * grid.hy);
                        } else if (dv[0] == dv[1]) {
                            val[k] = dv[0] == 0 ? (u(1, 0) - two * u(0, 0) + u(-1, 0)) / (grid.hx * grid.hx)
                                                : (u(0, 1) - two * u(0, 0) + u(0, -1)) / (grid.hy * grid.hy);
                        } else {
                            val[k] = (u(1, 1) - u(1, -1) - u(-1, 1) + u(-1, -1)) / (four * grid.hx * grid.hy);
                        }
                    }
                }
                point.push_back(std::move(val));
            }
            std::vector<std::vector<T>> node;
            for (const auto& eq : system.equations) {
                node.push_back(evaluate(eq, system.algebra, point));
                out.max_abs = std::max(out.max_abs, max_abs(node.back()));
            }
            out.values.push_back(std::move(node));
        }
    return out;
}

template ResidualField<double> residual(const PDESystem&, const SampledGrid<double>&);
template ResidualField<Rational> residual(const PDESystem&, const SampledGrid<Rational>&);

template <class T>
GridField<T> make_grid_field(std::size_t nodes, std::size_t dim) {
    using Tr = ScalarTraits<T>;
    if (nodes < 3) throw Error(Errc::ResolutionTooSmall, "need at least 3 grid nodes");
    GridField<T> f;
    f.h = Tr::one() / Tr::from_int(static_cast<long>(nodes));
    f.dt = Tr::zero();
    f.time = Tr::zero();
    f.dim = dim;
    f.values.assign(nodes, std::vector<T>(dim, Tr::zero()));
    return f;
}

template GridField<double> make_grid_field(std::size_t, std::size_t);
template GridField<Rational> make_grid_field(std::size_t, std::size_t);

template <class T>
GridField<T> heat_evolve(const GridField<T>& field, const T& dt, std::size_t steps) {
    using Tr = ScalarTraits<T>;
    const std::size_t n = field.values.size();
    if (n < 3) throw Error(Errc::ResolutionTooSmall, "need at least 3 grid nodes");
    for (const auto& v : field.values)
        if (v.size() != field.dim) throw Error(Errc::AlgebraMismatch, "node value dimension differs from field");
    const T two = Tr::from_int(2);
    if (dt * two > field.h * field.h) throw Error(Errc::UnstableStep, "dt exceeds h^2/2");
    const T r = dt / (field.h * field.h);
    GridField<T> cur = field;
    auto next = cur.values;
    for (std::size_t s = 0; s < steps; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& left = cur.values[(i + n - 1) % n];
            const auto& mid = cur.values[i];
            const auto& right = cur.values[(i + 1) % n];
            for (std::size_t c = 0; c < field.dim; ++c) {
                T lap = (left[c] + right[c]) - two * mid[c];
                next[i][c] = mid[c] + r * lap;
            }
        }
        std::swap(cur.values, next);
        cur.time += dt;
    }
    cur.dt = dt;
    return cur;
}

template GridField<double> heat_evolve(const GridField<double>&, const double&, std::size_t);
template GridField<Rational> heat_evolve(const GridField<Rational>&, const Rational&, std::size_t);

template <class T>
GridField<T> component_field(const GridField<T>& field, std::size_t c) {
    if (c >= field.dim) throw Error(Errc::InvalidInput, "component index out of range");
    GridField<T> out = field;
    out.dim = 1;
    for (std::size_t i = 0; i < field.values.size(); ++i) out.values[i] = {field.values[i][c]};
    return out;
}

template GridField<double> component_field(const GridField<double>&, std::size_t);
template GridField<Rational> component_field(const GridField<Rational>&, std::size_t);

namespace {

using DVec = std::vector<double>;

double dot(const DVec& a, const DVec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Adds v to the orthonormal basis when it is independent; returns true if added.
bool extend_basis(std::vector<DVec>& basis, DVec v, double tol) {
    double scale = std::sqrt(dot(v, v));
    if (scale <= tol) return false;
    for (auto& x : v) x /= scale;
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) {
            double c = dot(v, b);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
        }
    double n = std::sqrt(dot(v, v));
    if (n <= tol) return false;
    for (auto& x : v) x /= n;
    basis.push_back(std::move(v));
    return true;
}

}  // namespace

SeparableReport separable_dalembert_check(const std::vector<DVec>& f, const std::vector<DVec>& fprime,
                                          const std::vector<DVec>& g, const std::vector<DVec>& gprime,
                                          const CoefficientAlgebra& algebra, double tolerance) {
    const std::size_t dim = algebra.dim();
    if (f.size() != fprime.size() || g.size() != gprime.size())
        throw Error(Errc::InvalidInput, "values and derivatives differ in length");
    for (const auto* list : {&f, &fprime, &g, &gprime})
        for (const auto& v : *list)
            if (v.size() != dim) throw Error(Errc::AlgebraMismatch, "sample dimension differs from the algebra");
    const auto& t = algebra.real;
    SeparableReport rep;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            auto u = t.multiply(f[i], g[j]);
            auto uxy = t.multiply(fprime[i], gprime[j]);
            auto ux = t.multiply(fprime[i], g[j]);
            auto uy = t.multiply(f[i], gprime[j]);
            auto a = t.multiply(u, uxy), b = t.multiply(ux, uy);
            DVec r(dim);
            for (std::size_t k = 0; k < dim; ++k) r[k] = a[k] - b[k];
            double m = max_abs(r);
            if (m > rep.max_abs || rep.witness_value.empty()) {
                rep.max_abs = m;
                rep.witness_i = i;
                rep.witness_j = j;
                rep.witness_value = r;
            }
        }

    std::vector<DVec> basis;
    extend_basis(basis, algebra.unit_as<double>(), tolerance);
    for (const auto* list : {&f, &fprime, &g, &gprime})
        for (const auto& v : *list) {
            if (basis.size() == dim) break;
            extend_basis(basis, v, tolerance);
        }
    bool grew = true;
    while (grew && basis.size() < dim) {
        grew = false;
        const std::size_t n = basis.size();
        for (std::size_t a = 0; a < n && basis.size() < dim; ++a)
            for (std::size_t b = 0; b < n && basis.size() < dim; ++b)
                grew = extend_basis(basis, t.multiply(basis[a], basis[b]), tolerance) || grew;
    }
    rep.subalgebra_dim = basis.size();
    bool ok = true;
    for (std::size_t a = 0; a < basis.size() && ok; ++a)
        for (std::size_t b = 0; b < basis.size() && ok; ++b) {
            auto ab = t.multiply(basis[a], basis[b]), ba = t.multiply(basis[b], basis[a]);
            for (std::size_t k = 0; k < dim; ++k)
                if (std::fabs(ab[k] - ba[k]) > tolerance) ok = false;
            for (std::size_t c = 0; c < basis.size() && ok; ++c) {
                auto l = t.multiply(ab, basis[c]);
                auto r = t.multiply(basis[a], t.multiply(basis[b], basis[c]));
                for (std::size_t k = 0; k < dim; ++k)
                    if (std::fabs(l[k] - r[k]) > tolerance) ok = false;
            }
        }
    rep.commutative_associative = ok;
    return rep;
}

SeparableReport separable_dalembert_check(const std::vector<DVec>& f, const std::vector<DVec>& g, double h,
                                          const CoefficientAlgebra& algebra, double tolerance) {
    if (f.size() < 3 || g.size() < 3) throw Error(Errc::ResolutionTooSmall, "need at least 3 samples per axis");
    auto diff = [&](const std::vector<DVec>& v) {
        const std::size_t n = v.size();
        std::vector<DVec> out(n, DVec(algebra.dim()));
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i].size() != algebra.dim()) throw Error(Errc::AlgebraMismatch, "sample dimension differs from the algebra");
            const auto& l = v[(i + n - 1) % n];
            const auto& r = v[(i + 1) % n];
            for (std::size_t k = 0; k < algebra.dim(); ++k) out[i][k] = (r[k] - l[k]) / (2.0 * h);
        }
        return out;
    };
    return separable_dalembert_check(f, diff(f), g, diff(g), algebra, tolerance);
}

}  // namespace hyperalg::pde
