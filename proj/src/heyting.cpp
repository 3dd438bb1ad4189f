#include "hyperalg/heyting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace hyperalg::heyting {

namespace {

Mask full_mask(std::size_t n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::string chain_label(std::size_t k, std::size_t n) {
    if (n <= 1 || k == 0) return "0";
    if (k == n - 1) return "1";
    std::size_t d = n - 1, g = std::gcd(k, d);
    return std::to_string(k / g) + "/" + std::to_string(d / g);
}

// Lattice laws, bounds, residuation and distributivity.
void check_heyting_tables(std::size_t n, std::size_t top, const std::vector<std::uint16_t>& m,
                          const std::vector<std::uint16_t>& j, const std::vector<std::uint16_t>& im) {
    auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return m[a * n + b]; };
    auto J = [&](std::size_t a, std::size_t b) -> std::size_t { return j[a * n + b]; };
    auto I = [&](std::size_t a, std::size_t b) -> std::size_t { return im[a * n + b]; };
    auto fail = [](const std::string& what) { throw Error(Errc::InvalidInput, "not a Heyting algebra: " + what); };
    for (std::size_t a = 0; a < n; ++a) {
        if (M(a, a) != a || J(a, a) != a) fail("idempotence");
        if (M(0, a) != 0 || J(0, a) != a) fail("element 0 is not the bottom");
        if (M(top, a) != a || J(top, a) != top) fail("top is not the top");
        for (std::size_t b = 0; b < n; ++b) {
            if (M(a, b) >= n || J(a, b) >= n || I(a, b) >= n) fail("table entry out of range");
            if (M(a, b) != M(b, a) || J(a, b) != J(b, a)) fail("commutativity");
            if (M(a, J(a, b)) != a || J(a, M(a, b)) != a) fail("absorption");
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (M(a, M(b, c)) != M(M(a, b), c) || J(a, J(b, c)) != J(J(a, b), c)) fail("associativity");
                // a ^ c <= b  <=>  c <= a -> b
                bool lhs = M(M(a, c), b) == M(a, c);
                bool rhs = M(c, I(a, b)) == c;
                if (lhs != rhs) fail("residuation");
                if (M(a, J(b, c)) != J(M(a, b), M(a, c)) || J(a, M(b, c)) != M(J(a, b), J(a, c)))
                    fail("distributivity");
            }
}

std::size_t find_top(std::size_t n, const std::vector<std::uint16_t>& join) {
    std::size_t t = 0;
    for (std::size_t a = 0; a < n; ++a) t = join[t * n + a];
    return t;
}

LawCheck check(std::string name) { return LawCheck{std::move(name), true, {}}; }

void record(LawCheck& c, bool ok, std::vector<std::size_t> witness) {
    if (c.passed && !ok) {
        c.passed = false;
        c.witness = std::move(witness);
    }
}

}  // namespace

std::string mask_label(const std::vector<std::string>& points, Mask m) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (m >> i & 1) {
            if (!first) out += ",";
            out += points[i];
            first = false;
        }
    return out + "}";
}

FiniteTopology make_topology(std::vector<std::string> points, std::vector<Mask> opens) {
    if (points.size() > kMaxPoints) throw Error(Errc::SetTooLarge, "topology has more than 16 points");
    const Mask full = full_mask(points.size());
    std::set<Mask> set;
    for (Mask o : opens) {
        if (o & ~full) throw Error(Errc::InvalidTopology, "open set refers to a point outside the space");
        set.insert(o);
    }
    if (!set.count(0)) throw Error(Errc::InvalidTopology, "the empty set is not open");
    if (!set.count(full)) throw Error(Errc::InvalidTopology, "the whole space is not open");
    for (Mask a : set)
        for (Mask b : set) {
            if (!set.count(a | b))
                throw Error(Errc::InvalidTopology, "union " + mask_label(points, a | b) + " is not open");
            if (!set.count(a & b))
                throw Error(Errc::InvalidTopology, "intersection " + mask_label(points, a & b) + " is not open");
        }
    FiniteTopology t{std::move(points), std::vector<Mask>(set.begin(), set.end())};
    std::stable_sort(t.opens.begin(), t.opens.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    return t;
}

FinitePoset make_poset(std::vector<std::string> elements, std::vector<std::vector<bool>> le) {
    const std::size_t n = elements.size();
    if (n > kMaxPoints) throw Error(Errc::SetTooLarge, "poset has more than 16 elements");
    if (le.size() != n) throw Error(Errc::InvalidPoset, "order matrix has wrong size");
    for (const auto& row : le)
        if (row.size() != n) throw Error(Errc::InvalidPoset, "order matrix has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (!le[i][i]) throw Error(Errc::InvalidPoset, "not reflexive at " + elements[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && le[i][j] && le[j][i])
                throw Error(Errc::InvalidPoset,
                            "not antisymmetric: " + elements[i] + " and " + elements[j] + " (a preorder, not a partial order)");
            for (std::size_t k = 0; k < n; ++k)
                if (le[i][j] && le[j][k] && !le[i][k])
                    throw Error(Errc::InvalidPoset, "not transitive at " + elements[i] + ", " + elements[j] + ", " + elements[k]);
        }
    }
    return {std::move(elements), std::move(le)};
}

FinitePoset make_poset(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    const std::size_t n = elements.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (auto [i, j] : pairs) {
        if (i >= n || j >= n) throw Error(Errc::InvalidPoset, "order pair refers to a missing element");
        le[i][j] = true;
    }
    return make_poset(std::move(elements), std::move(le));
}

HeytingAlgebra::HeytingAlgebra(std::vector<std::string> labels, std::vector<std::uint16_t> meet,
                               std::vector<std::uint16_t> join, std::vector<std::uint16_t> impl)
    : n_(labels.size()), labels_(std::move(labels)), meet_(std::move(meet)), join_(std::move(join)), impl_(std::move(impl)) {
    if (n_ == 0) throw Error(Errc::InvalidInput, "empty algebra");
    if (n_ > kMaxLattice) throw Error(Errc::SetTooLarge, "algebra has more than 256 elements");
    if (meet_.size() != n_ * n_ || join_.size() != n_ * n_ || impl_.size() != n_ * n_)
        throw Error(Errc::InvalidInput, "operation table has wrong size");
    top_ = find_top(n_, join_);
    check_heyting_tables(n_, top_, meet_, join_, impl_);
}

std::optional<std::size_t> HeytingAlgebra::find(const std::string& label) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::size_t relative_pseudo_complement(const HeytingAlgebra& h, std::size_t a, std::size_t b) { return h.impl(a, b); }

std::size_t pseudo_complement(const HeytingAlgebra& h, std::size_t x) { return h.neg(x); }

std::optional<std::size_t> brute_force_implication(std::size_t n, const std::vector<std::size_t>& meet, std::size_t a,
                                                   std::size_t b) {
    auto le = [&](std::size_t x, std::size_t y) { return meet[x * n + y] == x; };
    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < n; ++c)
        if (le(meet[a * n + c], b)) candidates.push_back(c);
    for (std::size_t g : candidates) {
        bool greatest = true;
        for (std::size_t c : candidates)
            if (!le(c, g)) {
                greatest = false;
                break;
            }
        if (greatest) return g;
    }
    return std::nullopt;
}

Mask interior(const FiniteTopology& t, Mask s) {
    Mask out = 0;
    for (Mask o : t.opens)
        if ((o & ~s) == 0) out |= o;
    return out;
}

HeytingAlgebra heyting_from_topology(const FiniteTopology& t) {
    const std::size_t n = t.opens.size();
    if (n > kMaxLattice) throw Error(Errc::SetTooLarge, "topology has more than 256 open sets");
    std::map<Mask, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[t.opens[i]] = i;
    const Mask full = full_mask(t.points.size());
    std::vector<std::uint16_t> meet(n * n), join(n * n), impl(n * n);
    std::vector<std::string> labels;
    for (Mask o : t.opens) labels.push_back(mask_label(t.points, o));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Mask A = t.opens[a], B = t.opens[b];
            meet[a * n + b] = index.at(A & B);
            join[a * n + b] = index.at(A | B);
            impl[a * n + b] = index.at(interior(t, (full & ~A) | B));
        }
    return HeytingAlgebra(std::move(labels), std::move(meet), std::move(join), std::move(impl));
}

HeytingAlgebra heyting_from_chain(std::size_t n) {
    if (n == 0) throw Error(Errc::InvalidInput, "chain needs at least one element");
    if (n > kMaxLattice) throw Error(Errc::SetTooLarge, "chain longer than 256");
    std::vector<std::uint16_t> meet(n * n), join(n * n), impl(n * n);
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < n; ++p) {
        labels.push_back(chain_label(p, n));
        for (std::size_t q = 0; q < n; ++q) {
            meet[p * n + q] = std::min(p, q);
            join[p * n + q] = std::max(p, q);
            impl[p * n + q] = p > q ? q : n - 1;
        }
    }
    return HeytingAlgebra(std::move(labels), std::move(meet), std::move(join), std::move(impl));
}

FiniteTopology upset_topology(const FinitePoset& p, Direction dir) {
    const std::size_t n = p.elements.size();
    if (n > kMaxPoints) throw Error(Errc::SetTooLarge, "poset has more than 16 elements");
    std::vector<Mask> opens;
    for (Mask s = 0; s <= full_mask(n); ++s) {
        bool closed = true;
        for (std::size_t i = 0; i < n && closed; ++i) {
            if (!(s >> i & 1)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                bool related = dir == Direction::Up ? p.le[i][j] : p.le[j][i];
                if (related && !(s >> j & 1)) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) opens.push_back(s);
        if (s == full_mask(n)) break;
    }
    return make_topology(p.elements, std::move(opens));
}

HeytingAlgebra heyting_from_poset_upsets(const FinitePoset& p, Direction dir) {
    return heyting_from_topology(upset_topology(p, dir));
}

HeytingAlgebra heyting_from_lattice(const LatticeTables& l) {
    const std::size_t n = l.labels.size();
    if (n == 0) throw Error(Errc::InvalidInput, "empty lattice");
    if (n > kMaxLattice) throw Error(Errc::SetTooLarge, "lattice has more than 256 elements");
    if (l.meet.size() != n * n || l.join.size() != n * n) throw Error(Errc::InvalidInput, "lattice table has wrong size");
    auto M = [&](std::size_t a, std::size_t b) { return l.meet[a * n + b]; };
    auto J = [&](std::size_t a, std::size_t b) { return l.join[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (M(a, b) >= n || J(a, b) >= n) throw Error(Errc::InvalidInput, "lattice entry out of range");
            if (M(a, b) != M(b, a) || J(a, b) != J(b, a) || M(a, J(a, b)) != a || J(a, M(a, b)) != a)
                throw Error(Errc::InvalidInput, "tables are not a lattice");
            for (std::size_t c = 0; c < n; ++c)
                if (M(a, M(b, c)) != M(M(a, b), c) || J(a, J(b, c)) != J(J(a, b), c))
                    throw Error(Errc::InvalidInput, "tables are not a lattice");
        }
    std::size_t bottom = 0;
    for (std::size_t a = 0; a < n; ++a) bottom = M(bottom, a);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!brute_force_implication(n, l.meet, a, b))
                throw NotHeytingError(a, b,
                                      "no greatest c with " + l.labels[a] + " ^ c <= " + l.labels[b] + " (pair " +
                                          std::to_string(a) + ", " + std::to_string(b) + ")");
    // reindex so the bottom comes first
    std::vector<std::size_t> order, pos(n);
    order.push_back(bottom);
    for (std::size_t a = 0; a < n; ++a)
        if (a != bottom) order.push_back(a);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::uint16_t> meet(n * n), join(n * n), impl(n * n);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(l.labels[order[i]]);
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t a = order[i], b = order[j];
            meet[i * n + j] = pos[M(a, b)];
            join[i * n + j] = pos[J(a, b)];
            impl[i * n + j] = pos[*brute_force_implication(n, l.meet, a, b)];
        }
    }
    return HeytingAlgebra(std::move(labels), std::move(meet), std::move(join), std::move(impl));
}

namespace {

LatticeTables from_order(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    const std::size_t n = labels.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (auto [a, b] : covers) le[a][b] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = true;
    LatticeTables t{std::move(labels), std::vector<std::size_t>(n * n), std::vector<std::size_t>(n * n)};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // greatest lower bound / least upper bound by enumeration
            std::size_t glb = n, lub = n;
            for (std::size_t c = 0; c < n; ++c) {
                if (le[c][a] && le[c][b] && (glb == n || le[glb][c])) glb = c;
                if (le[a][c] && le[b][c] && (lub == n || le[c][lub])) lub = c;
            }
            t.meet[a * n + b] = glb;
            t.join[a * n + b] = lub;
        }
    return t;
}

}  // namespace

LatticeTables pentagon_lattice() {
    // 0 < a < b < 1, 0 < c < 1
    return from_order({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

LatticeTables diamond_lattice() {
    return from_order({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

LatticeTables chain_lattice(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(chain_label(i, n));
        if (i + 1 < n) covers.emplace_back(i, i + 1);
    }
    return from_order(std::move(labels), covers);
}

namespace {

HeytingAlgebra restrict(const HeytingAlgebra& h, const std::vector<std::size_t>& elems,
                        const std::function<std::size_t(std::size_t, std::size_t)>& join) {
    const std::size_t n = elems.size();
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[elems[i]] = i;
    std::vector<std::uint16_t> meet(n * n), jn(n * n), impl(n * n);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(h.label(elems[i]));
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t a = elems[i], b = elems[j];
            meet[i * n + j] = pos.at(h.meet(a, b));
            jn[i * n + j] = pos.at(join(a, b));
            impl[i * n + j] = pos.at(h.impl(a, b));
        }
    }
    return HeytingAlgebra(std::move(labels), std::move(meet), std::move(jn), std::move(impl));
}

}  // namespace

Classification classify_elements(const HeytingAlgebra& h) {
    const std::size_t n = h.size();
    std::vector<std::size_t> regular, complemented;
    for (std::size_t x = 0; x < n; ++x) {
        if (h.neg(h.neg(x)) == x) regular.push_back(x);
        bool has_complement = false;
        for (std::size_t y = 0; y < n && !has_complement; ++y)
            has_complement = h.meet(x, y) == 0 && h.join(x, y) == h.top();
        if (has_complement) complemented.push_back(x);
    }
    bool is_boolean = regular.size() == n;
    auto reg_join = [&h](std::size_t x, std::size_t y) { return h.neg(h.meet(h.neg(x), h.neg(y))); };
    auto sub_join = [&h](std::size_t x, std::size_t y) { return h.join(x, y); };
    HeytingAlgebra h_reg = restrict(h, regular, reg_join);
    HeytingAlgebra h_comp = restrict(h, complemented, sub_join);
    return {std::move(regular), std::move(complemented), is_boolean, std::move(h_reg), std::move(h_comp)};
}

bool LawReport::all_required_pass() const {
    for (const auto& a : axioms)
        if (!a.passed) return false;
    return regular_de_morgan.passed && weak_de_morgan.passed && block_agrees && triple_negation.passed &&
           negation_fixed_point.passed;
}

LawReport law_report(const HeytingAlgebra& h) {
    const std::size_t n = h.size(), one = h.top();
    auto I = [&](std::size_t a, std::size_t b) { return h.impl(a, b); };
    auto M = [&](std::size_t a, std::size_t b) { return h.meet(a, b); };
    auto J = [&](std::size_t a, std::size_t b) { return h.join(a, b); };
    auto N = [&](std::size_t a) { return h.neg(a); };
    LawReport r;
    r.axioms = {check("if x->y = 1 and y->x = 1 then x = y"),
                check("if 1->y = 1 then y = 1"),
                check("x->(y->x) = 1"),
                check("(x->(y->z))->((x->y)->(x->z)) = 1"),
                check("x^y->x = 1"),
                check("x^y->y = 1"),
                check("x->(y->(x^y)) = 1"),
                check("x->x v y = 1"),
                check("y->x v y = 1"),
                check("(x->z)->((y->z)->(x v y->z)) = 1"),
                check("0->x = 1")};
    r.regular_de_morgan = check("not(x v y) = not x ^ not y");
    r.weak_de_morgan = check("not(x ^ y) = not not(not x v not y)");
    r.de_morgan_block = {check("not(x v y) = not x ^ not y and not(x ^ y) = not x v not y"),
                         check("not(x ^ y) = not x v not y"),
                         check("not(x ^ y) = not x v not y for regular x, y"),
                         check("not not(x v y) = not not x v not not y"),
                         check("not not(x v y) = x v y for regular x, y"),
                         check("not(not x ^ not y) = x v y for regular x, y"),
                         check("not x v not not x = 1")};
    r.triple_negation = check("not not not x = not x");
    r.negation_fixed_point = check("not a = a only when H = {a}");
    auto regular = [&](std::size_t x) { return N(N(x)) == x; };
    for (std::size_t x = 0; x < n; ++x) {
        record(r.axioms[1], I(one, x) != one || x == one, {x});
        record(r.axioms[10], I(0, x) == one, {x});
        record(r.de_morgan_block[6], J(N(x), N(N(x))) == one, {x});
        record(r.triple_negation, N(N(N(x))) == N(x), {x});
        record(r.negation_fixed_point, N(x) != x || n == 1, {x});
        for (std::size_t y = 0; y < n; ++y) {
            record(r.axioms[0], !(I(x, y) == one && I(y, x) == one) || x == y, {x, y});
            record(r.axioms[2], I(x, I(y, x)) == one, {x, y});
            record(r.axioms[4], I(M(x, y), x) == one, {x, y});
            record(r.axioms[5], I(M(x, y), y) == one, {x, y});
            record(r.axioms[6], I(x, I(y, M(x, y))) == one, {x, y});
            record(r.axioms[7], I(x, J(x, y)) == one, {x, y});
            record(r.axioms[8], I(y, J(x, y)) == one, {x, y});
            bool classical_and = N(M(x, y)) == J(N(x), N(y));
            record(r.regular_de_morgan, N(J(x, y)) == M(N(x), N(y)), {x, y});
            record(r.weak_de_morgan, N(M(x, y)) == N(N(J(N(x), N(y)))), {x, y});
            record(r.de_morgan_block[0], N(J(x, y)) == M(N(x), N(y)) && classical_and, {x, y});
            record(r.de_morgan_block[1], classical_and, {x, y});
            record(r.de_morgan_block[3], N(N(J(x, y))) == J(N(N(x)), N(N(y))), {x, y});
            if (regular(x) && regular(y)) {
                record(r.de_morgan_block[2], classical_and, {x, y});
                record(r.de_morgan_block[4], N(N(J(x, y))) == J(x, y), {x, y});
                record(r.de_morgan_block[5], N(M(N(x), N(y))) == J(x, y), {x, y});
            }
            for (std::size_t z = 0; z < n; ++z) {
                record(r.axioms[3], I(I(x, I(y, z)), I(I(x, y), I(x, z))) == one, {x, y, z});
                record(r.axioms[9], I(I(x, z), I(I(y, z), I(J(x, y), z))) == one, {x, y, z});
            }
        }
    }
    r.block_passed = true;
    r.block_agrees = true;
    for (const auto& c : r.de_morgan_block) {
        r.block_passed = r.block_passed && c.passed;
        r.block_agrees = r.block_agrees && c.passed == r.de_morgan_block[0].passed;
    }
    return r;
}

LawCheck frame_law(const HeytingAlgebra& h, std::size_t max_size) {
    LawCheck c = check("x ^ join(Y) = join{x ^ y : y in Y}");
    const std::size_t n = h.size();
    if (n > max_size || n > 20) throw Error(Errc::SetTooLarge, "frame-law check is capped by carrier size");
    for (std::size_t x = 0; x < n && c.passed; ++x)
        for (Mask y = 0; y < (Mask{1} << n); ++y) {
            std::size_t big = 0, small = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (y >> i & 1) {
                    big = h.join(big, i);
                    small = h.join(small, h.meet(x, i));
                }
            if (h.meet(x, big) != small) {
                record(c, false, {x, static_cast<std::size_t>(y)});
                break;
            }
        }
    return c;
}

std::vector<std::size_t> Filter::elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i]) out.push_back(i);
    return out;
}

Filter make_filter(const HeytingAlgebra& h, const std::vector<std::size_t>& members) {
    Filter f{std::vector<bool>(h.size(), false)};
    for (auto m : members) {
        if (m >= h.size()) throw Error(Errc::InvalidFilter, "filter member out of range");
        f.members[m] = true;
    }
    if (!f.contains(h.top())) throw Error(Errc::InvalidFilter, "filter does not contain 1");
    for (std::size_t x = 0; x < h.size(); ++x) {
        if (!f.contains(x)) continue;
        for (std::size_t y = 0; y < h.size(); ++y) {
            if (f.contains(y) && !f.contains(h.meet(x, y)))
                throw Error(Errc::InvalidFilter, "filter is not closed under meets: " + h.label(x) + " ^ " + h.label(y));
            if (h.le(x, y) && !f.contains(y))
                throw Error(Errc::InvalidFilter, "filter is not upward closed: " + h.label(x) + " <= " + h.label(y));
        }
    }
    return f;
}

Filter filter_generate(const HeytingAlgebra& h, const std::vector<std::size_t>& generators) {
    // finite meets of generators, then upward closure
    std::size_t m = h.top();
    for (auto g : generators) {
        if (g >= h.size()) throw Error(Errc::InvalidInput, "generator out of range");
        m = h.meet(m, g);
    }
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < h.size(); ++x)
        if (h.le(m, x)) members.push_back(x);
    return make_filter(h, members);
}

Filter filter_intersection(const Filter& a, const Filter& b) {
    Filter out{std::vector<bool>(a.members.size(), false)};
    for (std::size_t i = 0; i < a.members.size(); ++i) out.members[i] = a.members[i] && b.members[i];
    return out;
}

Quotient quotient_by_filter(const HeytingAlgebra& h, const Filter& f) {
    const std::size_t n = h.size();
    if (f.members.size() != n) throw Error(Errc::InvalidFilter, "filter belongs to another algebra");
    make_filter(h, f.elements());
    std::vector<std::size_t> projection(n, n), representative;
    for (std::size_t x = 0; x < n; ++x) {
        if (projection[x] != n) continue;
        projection[x] = representative.size();
        for (std::size_t y = x + 1; y < n; ++y)
            if (f.contains(h.impl(x, y)) && f.contains(h.impl(y, x))) projection[y] = representative.size();
        representative.push_back(x);
    }
    const std::size_t k = representative.size();
    std::vector<std::uint16_t> meet(k * k), join(k * k), impl(k * k);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back("[" + h.label(representative[i]) + "]");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            meet[i * k + j] = projection[h.meet(representative[i], representative[j])];
            join[i * k + j] = projection[h.join(representative[i], representative[j])];
            impl[i * k + j] = projection[h.impl(representative[i], representative[j])];
        }
    // operations must not depend on the chosen representatives
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t i = projection[x], j = projection[y];
            if (meet[i * k + j] != projection[h.meet(x, y)] || join[i * k + j] != projection[h.join(x, y)] ||
                impl[i * k + j] != projection[h.impl(x, y)])
                throw std::logic_error("quotient operations are not well defined");
        }
    return {HeytingAlgebra(std::move(labels), std::move(meet), std::move(join), std::move(impl)), std::move(projection),
            std::move(representative)};
}

bool MorphismReport::is_morphism() const {
    for (const auto& c : clauses)
        if (!c.passed) return false;
    return true;
}

MorphismReport verify_morphism(const HeytingAlgebra& from, const HeytingAlgebra& to, const std::vector<std::size_t>& f) {
    if (f.size() != from.size()) throw Error(Errc::InvalidInput, "map is not total");
    for (auto v : f)
        if (v >= to.size()) throw Error(Errc::InvalidInput, "map value out of range");
    MorphismReport r;
    r.clauses = {check("(i) f(0) = 0"),
                 check("(ii) f(1) = 1"),
                 check("(iii) f(x ^ y) = f(x) ^ f(y)"),
                 check("(iv) f(x v y) = f(x) v f(y)"),
                 check("(v) f(x -> y) = f(x) -> f(y)"),
                 check("(vi) f(not x) = not f(x)")};
    record(r.clauses[0], f[0] == 0, {0});
    record(r.clauses[1], f[from.top()] == to.top(), {from.top()});
    for (std::size_t x = 0; x < from.size(); ++x) {
        record(r.clauses[5], f[from.neg(x)] == to.neg(f[x]), {x});
        for (std::size_t y = 0; y < from.size(); ++y) {
            record(r.clauses[2], f[from.meet(x, y)] == to.meet(f[x], f[y]), {x, y});
            record(r.clauses[3], f[from.join(x, y)] == to.join(f[x], f[y]), {x, y});
            record(r.clauses[4], f[from.impl(x, y)] == to.impl(f[x], f[y]), {x, y});
        }
    }
    return r;
}

Filter kernel(const HeytingAlgebra& from, const HeytingAlgebra& to, const std::vector<std::size_t>& f) {
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < from.size(); ++x)
        if (f.at(x) == to.top()) members.push_back(x);
    return make_filter(from, members);
}

bool first_isomorphism_holds(const HeytingAlgebra& from, const HeytingAlgebra& to, const std::vector<std::size_t>& f) {
    if (!verify_morphism(from, to, f).is_morphism()) return false;
    auto q = quotient_by_filter(from, kernel(from, to, f));
    std::vector<std::size_t> image(f.begin(), f.end());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    auto sub = restrict(to, image, [&to](std::size_t a, std::size_t b) { return to.join(a, b); });
    if (sub.size() != q.algebra.size()) return false;
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < image.size(); ++i) pos[image[i]] = i;
    std::vector<std::size_t> induced(q.algebra.size());
    for (std::size_t c = 0; c < q.algebra.size(); ++c) induced[c] = pos.at(f[q.representative[c]]);
    std::vector<std::size_t> sorted = induced;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    return verify_morphism(q.algebra, sub, induced).is_morphism();
}

std::optional<std::vector<std::size_t>> factor_through_quotient(const HeytingAlgebra& from, const HeytingAlgebra& to,
                                                                const std::vector<std::size_t>& f, const Quotient& q) {
    std::vector<std::size_t> out(q.algebra.size(), to.size());
    for (std::size_t x = 0; x < from.size(); ++x) {
        auto& slot = out[q.projection[x]];
        if (slot == to.size())
            slot = f.at(x);
        else if (slot != f[x])
            return std::nullopt;
    }
    return out;
}

bool BooleanRingReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

BooleanRingReport boolean_ring_roundtrip(std::size_t points) {
    if (points > kMaxPoints) throw Error(Errc::SetTooLarge, "Boolean ring carrier capped at 16 points");
    const Mask one = full_mask(points);
    const std::uint64_t size = std::uint64_t{1} << points;
    auto add = [](Mask a, Mask b) { return a ^ b; };
    auto mul = [](Mask a, Mask b) { return a & b; };
    // ring -> algebra
    auto r_join = [&](Mask a, Mask b) { return add(add(a, b), mul(a, b)); };
    auto r_meet = mul;
    auto r_comp = [&](Mask a) { return add(one, a); };
    // algebra -> ring
    auto a_add = [&](Mask a, Mask b) { return r_join(r_meet(a, r_comp(b)), r_meet(r_comp(a), b)); };
    auto a_mul = [&](Mask a, Mask b) { return r_meet(a, b); };
    auto chi = [&](Mask a) {
        std::vector<int> v(points);
        for (std::size_t i = 0; i < points; ++i) v[i] = static_cast<int>(a >> i & 1);
        return v;
    };

    std::vector<Mask> sample;
    std::vector<std::array<Mask, 3>> triples;
    if (points <= 4) {
        for (std::uint64_t a = 0; a < size; ++a) sample.push_back(static_cast<Mask>(a));
        for (Mask a : sample)
            for (Mask b : sample)
                for (Mask c : sample) triples.push_back({a, b, c});
    } else {
        std::mt19937_64 rng(points);
        std::uniform_int_distribution<Mask> d(0, one);
        for (int i = 0; i < 4096; ++i) triples.push_back({d(rng), d(rng), d(rng)});
    }

    BooleanRingReport rep;
    rep.points = points;
    auto run = [&](const std::string& name, const std::function<bool(Mask, Mask, Mask)>& pred) {
        bool ok = true;
        for (const auto& [a, b, c] : triples)
            if (!pred(a, b, c)) {
                ok = false;
                break;
            }
        rep.checks.push_back({name, ok});
    };
    run("idempotent: x x = x", [&](Mask a, Mask, Mask) { return mul(a, a) == a; });
    run("characteristic 2: x + x = 0", [&](Mask a, Mask, Mask) { return add(a, a) == 0; });
    run("addition associative and commutative",
        [&](Mask a, Mask b, Mask c) { return add(add(a, b), c) == add(a, add(b, c)) && add(a, b) == add(b, a); });
    run("multiplication associative and commutative",
        [&](Mask a, Mask b, Mask c) { return mul(mul(a, b), c) == mul(a, mul(b, c)) && mul(a, b) == mul(b, a); });
    run("distributive", [&](Mask a, Mask b, Mask c) { return mul(a, add(b, c)) == add(mul(a, b), mul(a, c)); });
    run("units: x + 0 = x, x 1 = x", [&](Mask a, Mask, Mask) { return add(a, 0) == a && mul(a, one) == a; });
    run("ring to algebra: join is union, complement is set complement",
        [&](Mask a, Mask b, Mask) { return r_join(a, b) == (a | b) && r_comp(a) == (one & ~a); });
    run("algebra to ring to algebra round trip",
        [&](Mask a, Mask b, Mask) { return a_add(a, b) == add(a, b) && a_mul(a, b) == mul(a, b); });
    run("characteristic function is a ring homomorphism", [&](Mask a, Mask b, Mask) {
        auto ca = chi(a), cb = chi(b), s = chi(add(a, b)), p = chi(mul(a, b));
        for (std::size_t i = 0; i < points; ++i)
            if (s[i] != (ca[i] + cb[i]) % 2 || p[i] != ca[i] * cb[i]) return false;
        return true;
    });
    if (points <= 4) {
        std::set<std::vector<int>> images;
        for (Mask a : sample) images.insert(chi(a));
        rep.checks.push_back({"characteristic function is bijective onto Z2^X", images.size() == size});
    } else {
        // injective on the sample; surjectivity follows from |P(X)| = |Z2^X|
        std::set<std::vector<int>> images;
        std::set<Mask> seen;
        for (const auto& t : triples)
            if (seen.insert(t[0]).second) images.insert(chi(t[0]));
        rep.checks.push_back({"characteristic function is bijective onto Z2^X", images.size() == seen.size()});
    }
    return rep;
}

}  // namespace hyperalg::heyting
