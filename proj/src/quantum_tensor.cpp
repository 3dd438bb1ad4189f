#include "hyperalg/quantum_tensor.hpp"

#include <map>
#include <set>

#include "hyperalg/linalg.hpp"

namespace hyperalg::qt {

namespace {

using Table = StructureConstants<Rational>;

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

// Row echelon accumulator: rows are kept reduced against each other so the
// final nullspace is a single back-substitution.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    void add(Vec row) {
        for (const auto& [pivot, r] : rows_) {
            if (sgn(row[pivot]) == 0) continue;
            Rational f = row[pivot];
            for (std::size_t c = 0; c < cols_; ++c)
                if (sgn(r[c]) != 0) row[c] -= f * r[c];
        }
        std::size_t pivot = cols_;
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(row[c]) != 0) {
                pivot = c;
                break;
            }
        if (pivot == cols_) return;
        Rational inv = 1 / row[pivot];
        for (auto& v : row) v *= inv;
        for (auto& [p, r] : rows_) {
            if (sgn(r[pivot]) == 0) continue;
            Rational f = r[pivot];
            for (std::size_t c = 0; c < cols_; ++c) r[c] -= f * row[c];
        }
        rows_.emplace(pivot, std::move(row));
    }

    bool full() const { return rows_.size() == cols_; }
    std::size_t rank() const { return rows_.size(); }

    std::vector<Vec> nullspace() const {
        std::vector<Vec> out;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (rows_.count(free)) continue;
            Vec v = zero_vec(cols_);
            v[free] = 1;
            for (const auto& [p, r] : rows_) v[p] = -r[free];
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t cols_;
    std::map<std::size_t, Vec> rows_;
};

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

}  // namespace

bool associative_on_basis(const Table& t) {
    const std::size_t n = t.dim();
    std::map<std::size_t, Rational> acc;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                acc.clear();
                for (const auto& [k, g] : t.product(a, b))
                    for (const auto& [m, h] : t.product(k, c)) acc[m] += g * h;
                for (const auto& [k, g] : t.product(b, c))
                    for (const auto& [m, h] : t.product(a, k)) acc[m] -= g * h;
                for (const auto& [m, x] : acc)
                    if (sgn(x) != 0) return false;
            }
    return true;
}

StructureAlgebra::StructureAlgebra(std::string name, Table table, Vec unit, std::optional<Vec> classic_limit)
    : name_(std::move(name)), table_(std::move(table)), unit_(std::move(unit)), functional_(std::move(classic_limit)) {
    const std::size_t n = table_.dim();
    if (n == 0) throw Error(Errc::InvalidAlgebra, "algebra has dimension 0");
    if (unit_.size() != n) throw Error(Errc::InvalidAlgebra, "unit has wrong length");
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = basis(i);
        if (!(table_.multiply(unit_, e) == e) || !(table_.multiply(e, unit_) == e))
            throw Error(Errc::InvalidAlgebra, "unit is not a two-sided identity at basis " + std::to_string(i));
    }
    if (functional_) {
        if (functional_->size() != n) throw Error(Errc::InvalidAlgebra, "functional has wrong length");
        Rational v(0);
        for (std::size_t i = 0; i < n; ++i) v += (*functional_)[i] * unit_[i];
        if (v != 1) throw Error(Errc::InvalidAlgebra, "classic-limit functional is not 1 on the unit");
    }
    associative_ = associative_on_basis(table_);
}

Vec StructureAlgebra::basis(std::size_t i) const {
    Vec v = zero_vec(dim());
    v.at(i) = 1;
    return v;
}

StructureAlgebra real_algebra() {
    Table t(1);
    t.add(0, 0, 0, 1);
    return StructureAlgebra("R", t, {1}, Vec{1});
}

StructureAlgebra complex_algebra() {
    Table t(2);
    t.add(0, 0, 0, 1);
    t.add(0, 1, 1, 1);
    t.add(1, 0, 1, 1);
    t.add(1, 1, 0, -1);
    return StructureAlgebra("C", t, {1, 0}, Vec{1, 0});
}

StructureAlgebra matrix_algebra() {
    // E_ij E_kl = delta_jk E_il, index 2i + j
    Table t(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) t.add(2 * i + j, 2 * j + l, 2 * i + l, 1);
    Rational h(1, 2);
    return StructureAlgebra("M2", t, {1, 0, 0, 1}, Vec{h, 0, 0, h});
}

StructureAlgebra upper_triangular_algebra() {
    // basis E11, E12, E22
    Table t(3);
    t.add(0, 0, 0, 1);
    t.add(0, 1, 1, 1);
    t.add(1, 2, 1, 1);
    t.add(2, 2, 2, 1);
    Rational h(1, 2);
    return StructureAlgebra("T2", t, {1, 0, 1}, Vec{h, 0, h});
}

const std::vector<std::string>& builtin_algebra_names() {
    static const std::vector<std::string> names = {"R", "C", "M2", "T2"};
    return names;
}

StructureAlgebra builtin_algebra(const std::string& name) {
    if (name == "R") return real_algebra();
    if (name == "C") return complex_algebra();
    if (name == "M2") return matrix_algebra();
    if (name == "T2") return upper_triangular_algebra();
    throw Error(Errc::InvalidInput, "unknown algebra '" + name + "' (expected R, C, M2 or T2)");
}

namespace {

StructureAlgebra combine(const StructureAlgebra& base, int level, int max_level) {
    const auto& cdt = cd::structure_constants(level, max_level);
    const std::size_t nb = base.dim(), na = cdt.dim();
    Table t(nb * na);
    for (std::size_t p = 0; p < na; ++p)
        for (std::size_t q = 0; q < na; ++q) {
            auto e = cdt.product(p, q);
            for (std::size_t i = 0; i < nb; ++i)
                for (std::size_t j = 0; j < nb; ++j)
                    for (const auto& [k, g] : base.table().product(i, j))
                        t.add(p * nb + i, q * nb + j, e.index * nb + k, e.sign > 0 ? g : Rational(-g));
        }
    Vec unit = zero_vec(nb * na);
    for (std::size_t i = 0; i < nb; ++i) unit[i] = base.unit()[i];
    std::optional<Vec> functional;
    if (base.classic_limit_functional()) {
        functional = zero_vec(nb * na);
        for (std::size_t i = 0; i < nb; ++i) (*functional)[i] = (*base.classic_limit_functional())[i];
    }
    return StructureAlgebra(base.name() + "(x)A" + std::to_string(level), std::move(t), std::move(unit),
                            std::move(functional));
}

}  // namespace

QHAlgebra::QHAlgebra(StructureAlgebra base, int level, int max_level)
    : base_(std::move(base)), level_(level), combined_(combine(base_, level, max_level)) {}

QHAlgebraPtr tensor_algebra(const StructureAlgebra& base, int level, int max_level) {
    if (level < 0) throw Error(Errc::InvalidInput, "level must be nonnegative");
    return std::make_shared<const QHAlgebra>(base, level, max_level);
}

QHElement make_element(const QHAlgebraPtr& alg, Vec coeffs) {
    if (coeffs.size() != alg->dim()) throw Error(Errc::AlgebraMismatch, "coefficient count does not match algebra");
    return {alg, std::move(coeffs)};
}

QHElement pure_tensor(const QHAlgebraPtr& alg, const Vec& b, const cd::Element<Rational>& a) {
    if (b.size() != alg->base().dim() || a.level() != alg->level())
        throw Error(Errc::AlgebraMismatch, "factor does not belong to this algebra");
    Vec c = zero_vec(alg->dim());
    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t i = 0; i < b.size(); ++i) c[alg->index(i, p)] = b[i] * a[p];
    return {alg, std::move(c)};
}

QHElement qh_multiply(const QHElement& x, const QHElement& y) {
    if (!x.algebra || x.algebra != y.algebra) throw Error(Errc::AlgebraMismatch, "operands belong to different algebras");
    return {x.algebra, x.algebra->combined().multiply(x.coeffs, y.coeffs)};
}

std::size_t span_dimension(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return 0;
    Matrix<Rational> m(vectors.size(), vectors[0].size());
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < vectors[r].size(); ++c) m(r, c) = vectors[r][c];
    return rank(std::move(m));
}

std::vector<Vec> centre(const StructureAlgebra& alg) {
    const std::size_t n = alg.dim();
    const auto& t = alg.table();
    Echelon eq(n);
    // coefficient of a_j in (a e_b - e_b a)_k
    for (std::size_t b = 0; b < n && !eq.full(); ++b) {
        std::vector<Vec> rows(n, zero_vec(n));
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [k, g] : t.product(j, b)) rows[k][j] += g;
            for (const auto& [k, g] : t.product(b, j)) rows[k][j] -= g;
        }
        for (auto& r : rows)
            if (!is_zero(r)) eq.add(std::move(r));
    }
    auto out = eq.nullspace();
    for (const auto& z : out)
        for (std::size_t b = 0; b < n; ++b) {
            Vec e = alg.basis(b);
            if (!(alg.multiply(z, e) == alg.multiply(e, z))) throw std::logic_error("centre element fails to commute");
        }
    return out;
}

std::vector<Vec> nucleus(const StructureAlgebra& alg, std::size_t max_dim) {
    const std::size_t n = alg.dim();
    if (n > max_dim)
        throw Error(Errc::DimTooLarge, "nucleus computation capped at dimension " + std::to_string(max_dim));
    const auto& t = alg.table();
    using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
    // associators of all basis triples, index (a * n + b) * n + c
    std::vector<SparseRow> assoc(n * n * n);
    {
        std::map<std::size_t, Rational> acc;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    acc.clear();
                    for (const auto& [k, g] : t.product(a, b))
                        for (const auto& [m, h] : t.product(k, c)) acc[m] += g * h;
                    for (const auto& [k, g] : t.product(b, c))
                        for (const auto& [m, h] : t.product(a, k)) acc[m] -= g * h;
                    auto& out = assoc[(a * n + b) * n + c];
                    for (const auto& [m, x] : acc)
                        if (sgn(x) != 0) out.emplace_back(m, x);
                }
    }
    auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> const SparseRow& { return assoc[(a * n + b) * n + c]; };
    // The unit always lies in the nucleus, so rank n - 1 settles the answer.
    Echelon eq(n);
    std::set<SparseRow> seen;
    for (std::size_t b = 0; b < n && eq.rank() + 1 < n; ++b)
        for (std::size_t c = 0; c < n && eq.rank() + 1 < n; ++c)
            for (int slot = 0; slot < 3; ++slot) {
                std::map<std::size_t, SparseRow> rows;
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& v = slot == 0 ? at(j, b, c) : slot == 1 ? at(b, j, c) : at(b, c, j);
                    for (const auto& [k, x] : v) rows[k].emplace_back(j, x);
                }
                for (auto& [k, r] : rows) {
                    Rational lead = r.front().second;
                    for (auto& entry : r) entry.second /= lead;
                    if (!seen.insert(r).second) continue;
                    Vec dense = zero_vec(n);
                    for (const auto& [j, x] : r) dense[j] = x;
                    eq.add(std::move(dense));
                }
            }
    return eq.nullspace();
}

Rational classic_limit(const QHElement& x) {
    const auto& f = x.algebra->combined().classic_limit_functional();
    if (!f) throw Error(Errc::NoFunctional, "base algebra " + x.algebra->base().name() + " has no classic-limit functional");
    Rational v(0);
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) v += (*f)[i] * x.coeffs[i];
    return v;
}

FactorEmbeddings embed_factors(const QHAlgebraPtr& alg) {
    FactorEmbeddings out;
    out.embed_B = [alg](const Vec& b) { return pure_tensor(alg, b, cd::Element<Rational>::unit(alg->level())); };
    out.embed_A = [alg](const cd::Element<Rational>& a) { return pure_tensor(alg, alg->base().unit(), a); };
    return out;
}

}  // namespace hyperalg::qt
