#include "hyperalg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperalg {

Monomial Monomial::var(int id, int exponent) {
    Monomial m;
    if (exponent > 0) m.powers_.emplace_back(id, exponent);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [id, e] : powers_) d += e;
    return d;
}

int Monomial::exponent_of(int id) const {
    for (const auto& [v, e] : powers_)
        if (v == id) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    auto a = powers_.begin(), b = other.powers_.begin();
    while (a != powers_.end() || b != other.powers_.end()) {
        if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
            out.powers_.push_back(*a++);
        } else if (a == powers_.end() || b->first < a->first) {
            out.powers_.push_back(*b++);
        } else {
            out.powers_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::lower(int id) const {
    Monomial out = *this;
    for (auto it = out.powers_.begin(); it != out.powers_.end(); ++it) {
        if (it->first != id) continue;
        if (--it->second == 0) out.powers_.erase(it);
        return out;
    }
    throw std::logic_error("Monomial::lower: variable not present");
}

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(const Rational& constant) {
    if (sgn(constant) != 0) terms_.emplace(Monomial(), constant);
}

Polynomial Polynomial::var(int id, int exponent) { return term(Rational(1), Monomial::var(id, exponent)); }

Polynomial Polynomial::term(const Rational& coeff, const Monomial& mono) {
    Polynomial p;
    p.add_term(mono, coeff);
    return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant()); }

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    terms_ = std::move(out.terms_);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial out(1), base = *this;
    while (n > 0) {
        if (n & 1) out *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return out;
}

Polynomial Polynomial::derivative(int id) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(id);
        if (e > 0) out.add_term(m.lower(id), c * e);
    }
    return out;
}

Rational Polynomial::evaluate(const std::function<Rational(int)>& value) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [id, e] : m.powers()) {
            Rational x = value(id);
            for (int k = 0; k < e; ++k) t *= x;
        }
        total += t;
    }
    return total;
}

std::string Polynomial::to_string(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest degree first, then the map order
    std::vector<std::pair<const Monomial*, const Rational*>> order;
    for (const auto& [m, c] : terms_) order.emplace_back(&m, &c);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first->degree() > b.first->degree(); });
    bool first = true;
    for (const auto& [m, c] : order) {
        Rational coeff = *c;
        bool negative = sgn(coeff) < 0;
        if (negative) coeff = -coeff;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (const auto& [id, e] : m->powers()) {
            if (!mono.empty()) mono += "*";
            mono += name(id);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += coeff.get_str();
        } else if (coeff == 1) {
            out += mono;
        } else {
            out += coeff.get_str() + "*" + mono;
        }
    }
    return out;
}

std::string ScalarTraits<Polynomial>::to_string(const Polynomial& v) {
    return v.to_string([](int id) { return "x" + std::to_string(id); });
}

}  // namespace hyperalg
