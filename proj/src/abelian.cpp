#include "hyperalg/abelian.hpp"

#include <algorithm>

namespace hyperalg::abelian {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(Errc::InvalidInput, "ragged matrix");
        for (long v : r) data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw Error(Errc::InvalidInput, "matrix dimensions do not match");
    IntegerMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (sgn((*this)(i, k)) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
        }
    return out;
}

bool IntegerMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && sgn((*this)(i, j)) != 0) return false;
    return true;
}

Integer IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw Error(Errc::InvalidInput, "determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss
    IntegerMatrix a = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] += f * row[src]
void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}

void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input) {
    IntegerMatrix d = input;
    const std::size_t R = d.rows(), C = d.cols();
    IntegerMatrix U = IntegerMatrix::identity(R), V = IntegerMatrix::identity(C);
    const std::size_t k = std::min(R, C);
    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pr = R, pc = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (sgn(d(i, j)) != 0 && (pr == R || abs(d(i, j)) < abs(d(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == R) break;
            swap_rows(d, t, pr);
            swap_rows(U, t, pr);
            swap_cols(d, t, pc);
            swap_cols(V, t, pc);
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (sgn(d(i, t)) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                add_row(d, i, t, -q);
                add_row(U, i, t, -q);
                if (sgn(d(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (sgn(d(t, j)) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                add_col(d, j, t, -q);
                add_col(V, j, t, -q);
                if (sgn(d(t, j)) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold any offending row into row t and retry
            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == R) break;
            add_row(d, t, bad, 1);
            add_row(U, t, bad, 1);
        }
        if (sgn(d(t, t)) < 0) {
            for (std::size_t c = 0; c < C; ++c) d(t, c) = -d(t, c);
            for (std::size_t c = 0; c < R; ++c) U(t, c) = -U(t, c);
        }
    }
    SmithForm out;
    for (std::size_t t = 0; t < k; ++t) out.diagonal.push_back(d(t, t));
    out.U = std::move(U);
    out.V = std::move(V);
    return out;
}

FGAbelianGroup::FGAbelianGroup(std::size_t free_rank, const std::vector<Integer>& cyclic_orders) : rank_(free_rank) {
    std::vector<Integer> orders;
    for (const auto& o : cyclic_orders) {
        if (sgn(o) < 0) throw Error(Errc::InvalidInput, "cyclic order must be nonnegative");
        if (sgn(o) == 0)
            ++rank_;
        else if (o != 1)
            orders.push_back(o);
    }
    if (orders.empty()) return;
    IntegerMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
    for (const auto& d : smith_normal_form(diag).diagonal)
        if (d != 1) torsion_.push_back(d);
}

FGAbelianGroup FGAbelianGroup::cyclic(const Integer& n) { return FGAbelianGroup(0, {n}); }

Integer FGAbelianGroup::order() const {
    if (rank_ > 0) throw Error(Errc::InfiniteGroup, "group " + to_string() + " is infinite");
    Integer o = 1;
    for (const auto& d : torsion_) o *= d;
    return o;
}

std::string FGAbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (rank_ == 1) parts.push_back("Z");
    if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
    for (const auto& d : torsion_) parts.push_back("Z_" + d.get_str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    std::vector<Integer> t = a.torsion();
    t.insert(t.end(), b.torsion().begin(), b.torsion().end());
    return FGAbelianGroup(a.free_rank() + b.free_rank(), t);
}

FGAbelianGroup decompose(const IntegerMatrix& presentation) {
    auto snf = smith_normal_form(presentation);
    std::size_t rank = presentation.rows();
    std::vector<Integer> orders;
    for (const auto& d : snf.diagonal)
        if (sgn(d) != 0) {
            --rank;
            orders.push_back(d);
        }
    return FGAbelianGroup(rank, orders);
}

bool iso_check(const FGAbelianGroup& g, const FGAbelianGroup& h) { return g == h; }

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// cyclic summands, 0 meaning Z
std::vector<Integer> summands(const FGAbelianGroup& g) {
    std::vector<Integer> out(g.free_rank(), Integer(0));
    out.insert(out.end(), g.torsion().begin(), g.torsion().end());
    return out;
}

Integer hom_cyclic(const Integer& m, const Integer& n) {
    if (sgn(m) == 0) return n;        // Hom(Z, Z_n) = Z_n
    if (sgn(n) == 0) return 1;        // Hom(Z_m, Z) = 0
    return gcd_of(m, n);
}

Integer ext_cyclic(const Integer& m, const Integer& n) {
    if (sgn(m) == 0) return 1;        // Z is free
    if (sgn(n) == 0) return m;        // Ext(Z_m, Z) = Z_m
    return gcd_of(m, n);
}

Integer tensor_cyclic(const Integer& m, const Integer& n) {
    if (sgn(m) == 0) return n;
    if (sgn(n) == 0) return m;
    return gcd_of(m, n);
}

template <class F>
FGAbelianGroup bilinear(const FGAbelianGroup& g, const FGAbelianGroup& h, F&& block) {
    std::vector<Integer> orders;
    for (const auto& m : summands(g))
        for (const auto& n : summands(h)) orders.push_back(block(m, n));
    return FGAbelianGroup(0, orders);
}

}  // namespace

FGAbelianGroup hom(const FGAbelianGroup& g, const FGAbelianGroup& h) { return bilinear(g, h, hom_cyclic); }
FGAbelianGroup ext(const FGAbelianGroup& g, const FGAbelianGroup& h) { return bilinear(g, h, ext_cyclic); }
FGAbelianGroup tensor(const FGAbelianGroup& g, const FGAbelianGroup& h) { return bilinear(g, h, tensor_cyclic); }

FGAbelianGroup quotient_by_multiple(const FGAbelianGroup& h, const Integer& m) {
    // presentation of h with the extra relations m e_i
    auto s = summands(h);
    IntegerMatrix p(s.size(), 2 * s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        p(i, i) = s[i];
        p(i, s.size() + i) = m;
    }
    return decompose(p);
}

FGAbelianGroup cyclic_homology(const Integer& order, std::size_t degree) {
    if (sgn(order) <= 0) throw Error(Errc::InvalidInput, "cyclic group order must be positive");
    if (degree == 0) return FGAbelianGroup::free(1);
    if (degree % 2 == 1) return FGAbelianGroup::cyclic(order);
    return FGAbelianGroup::trivial();
}

FGAbelianGroup sphere_homology(std::size_t n, std::size_t p) {
    if (n == 0) return p == 0 ? FGAbelianGroup::free(2) : FGAbelianGroup::trivial();
    return p == 0 || p == n ? FGAbelianGroup::free(1) : FGAbelianGroup::trivial();
}

long euler_characteristic(std::size_t n) {
    long chi = 0;
    for (std::size_t p = 0; p <= n; ++p) {
        long r = static_cast<long>(sphere_homology(n, p).free_rank());
        chi += p % 2 == 0 ? r : -r;
    }
    return chi;
}

FGAbelianGroup cohomology_uct(const FGAbelianGroup& h_prev, const FGAbelianGroup& h_k, const FGAbelianGroup& m) {
    return direct_sum(hom(h_k, m), ext(h_prev, m));
}

bool automorphism_group_trivial(const FGAbelianGroup& g) {
    return g.is_trivial() || g == FGAbelianGroup::cyclic(2);
}

ExtensionReport extension_count(const FGAbelianGroup& base, const FGAbelianGroup& fiber) {
    if (!base.is_finite() || !fiber.is_finite())
        throw Error(Errc::InfiniteGroup, "extension_count needs finite groups, got " + base.to_string() + " and " +
                                             fiber.to_string());
    ExtensionReport r;
    r.base_order = base.order();
    r.fiber_order = fiber.order();
    r.ext_group = ext(base, fiber);
    r.ext_order = r.ext_group.order();
    r.fiber_aut_trivial = automorphism_group_trivial(fiber);
    if (r.fiber_aut_trivial) r.direct_sum_order = r.base_order * r.fiber_order;
    return r;
}

}  // namespace hyperalg::abelian
