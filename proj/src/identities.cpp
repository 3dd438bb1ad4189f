#include "hyperalg/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <random>
#include <thread>

namespace hyperalg::cd {

namespace {

using E = RationalElement;

E mul(const E& a, const E& b) { return table_multiply(a, b); }

E power(const E& z, int n) {
    E out = E::unit(z.level());
    for (int i = 0; i < n; ++i) out = mul(out, z);
    return out;
}

E right_power(const E& z, int n) {
    E out = E::unit(z.level());
    for (int i = 0; i < n; ++i) out = mul(z, out);
    return out;
}

bool power_associative(const E& z) {
    std::vector<E> left(7), right(7);
    for (int n = 0; n <= 6; ++n) {
        left[n] = power(z, n);
        right[n] = right_power(z, n);
        if (!(left[n] == right[n])) return false;
    }
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; n + m <= 6; ++m)
            if (!(mul(left[n], left[m]) == left[n + m])) return false;
    return true;
}

using Check = std::function<bool(const std::vector<E>&)>;

struct IdentitySpec {
    const char* name;
    int arity;
    Check holds;
};

const std::vector<IdentitySpec>& specs() {
    static const std::vector<IdentitySpec> s = {
        {"associativity", 3, [](const std::vector<E>& v) { return associator(v[0], v[1], v[2]).is_zero(); }},
        {"left_alternativity", 2,
         [](const std::vector<E>& v) { return (mul(mul(v[0], v[0]), v[1]) - mul(v[0], mul(v[0], v[1]))).is_zero(); }},
        {"right_alternativity", 2,
         [](const std::vector<E>& v) { return (mul(mul(v[0], v[1]), v[1]) - mul(v[0], mul(v[1], v[1]))).is_zero(); }},
        {"flexibility", 2,
         [](const std::vector<E>& v) { return mul(mul(v[0], v[1]), v[0]) == mul(v[0], mul(v[1], v[0])); }},
        // a(x(ay)) = ((ax)a)y
        {"moufang_left", 3,
         [](const std::vector<E>& v) {
             const E &a = v[0], &x = v[1], &y = v[2];
             return mul(a, mul(x, mul(a, y))) == mul(mul(mul(a, x), a), y);
         }},
        // ((xa)y)a = x((ay)a)
        {"moufang_right", 3,
         [](const std::vector<E>& v) {
             const E &a = v[0], &x = v[1], &y = v[2];
             return mul(mul(mul(x, a), y), a) == mul(x, mul(mul(a, y), a));
         }},
        // (ax)(ya) = (a(xy))a
        {"moufang_middle", 3,
         [](const std::vector<E>& v) {
             const E &a = v[0], &x = v[1], &y = v[2];
             return mul(mul(a, x), mul(y, a)) == mul(mul(a, mul(x, y)), a);
         }},
        {"power_associativity", 1, [](const std::vector<E>& v) { return power_associative(v[0]); }},
        {"norm_multiplicativity", 2,
         [](const std::vector<E>& v) { return norm_sq(mul(v[0], v[1])) == norm_sq(v[0]) * norm_sq(v[1]); }},
    };
    return s;
}

const IdentitySpec& spec_for(const std::string& name) {
    for (const auto& s : specs())
        if (name == s.name) return s;
    throw Error(Errc::InvalidInput, "unknown identity '" + name + "'");
}

void check_level(int level, int cap) {
    if (level < 0) throw Error(Errc::InvalidInput, "level must be nonnegative");
    if (level > cap)
        throw Error(Errc::LevelTooLarge,
                    "level " + std::to_string(level) + " exceeds the cap " + std::to_string(cap));
}

std::vector<E> basis_elements(int level) {
    std::vector<E> out;
    for (std::size_t i = 0; i < (std::size_t{1} << level); ++i) out.push_back(E::basis(level, i));
    return out;
}

// Basis elements followed by e_i + e_j and e_i - e_j (i < j).
std::vector<E> polarization_set(int level) {
    auto out = basis_elements(level);
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            out.push_back(E::basis(level, i) + E::basis(level, j));
            out.push_back(E::basis(level, i) - E::basis(level, j));
        }
    return out;
}

// Iterates the cartesian product of argument pools, stopping at the first
// failure. Norm multiplicativity keeps scanning for a zero-divisor witness.
IdentityVerdict scan(const IdentitySpec& spec, const std::vector<const std::vector<E>*>& pools) {
    IdentityVerdict verdict{spec.name, true, 0, {}};
    const bool prefer_zero_product = std::string(spec.name) == "norm_multiplicativity";
    std::vector<std::size_t> idx(pools.size(), 0);
    std::vector<E> args(pools.size());
    for (;;) {
        for (std::size_t i = 0; i < pools.size(); ++i) args[i] = (*pools[i])[idx[i]];
        ++verdict.checks;
        if (!spec.holds(args)) {
            if (verdict.passed) {
                verdict.passed = false;
                verdict.witness = args;
                if (!prefer_zero_product) return verdict;
            }
            if (prefer_zero_product && mul(args[0], args[1]).is_zero()) {
                verdict.witness = args;
                return verdict;
            }
        }
        std::size_t k = pools.size();
        while (k > 0) {
            --k;
            if (++idx[k] < pools[k]->size()) break;
            idx[k] = 0;
            if (k == 0) return verdict;
        }
    }
}

E random_element(int level, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    E e(level);
    for (std::size_t i = 0; i < e.dim(); ++i) e[i] = dist(rng);
    return e;
}

}  // namespace

const IdentityVerdict& PropertyReport::verdict(const std::string& name) const {
    for (const auto& v : verdicts)
        if (v.name == name) return v;
    throw Error(Errc::InvalidInput, "report has no identity '" + name + "'");
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& s : specs()) n.emplace_back(s.name);
        return n;
    }();
    return names;
}

bool identity_holds(const std::string& name, const std::vector<RationalElement>& args) {
    const auto& spec = spec_for(name);
    if (static_cast<int>(args.size()) != spec.arity)
        throw Error(Errc::InvalidInput, name + " takes " + std::to_string(spec.arity) + " arguments");
    for (const auto& a : args) a.require_same_level(args[0]);
    return spec.holds(args);
}

PropertyReport identity_battery(int level, ExhaustiveBasis, const BatteryOptions& opts) {
    check_level(level, std::min(opts.max_level, opts.max_exhaustive_level));
    PropertyReport report;
    report.level = level;
    report.kind = SampleKind::ExhaustiveBasis;

    const auto basis = basis_elements(level);
    const auto pol = polarization_set(level);
    report.sample_count = pol.size();

    std::vector<std::vector<const std::vector<E>*>> pools = {
        {&basis, &basis, &basis},  // associativity is trilinear
        {&pol, &basis},            // left alternativity: quadratic in a
        {&basis, &pol},            // right alternativity: quadratic in b
        {&pol, &basis},            // flexibility: quadratic in a
        {&pol, &basis, &basis},    // Moufang identities: quadratic in a
        {&pol, &basis, &basis},
        {&pol, &basis, &basis},
        {&pol},                    // power associativity: sampled on the same set
        {&pol, &pol},              // norm: quadratic in each argument
    };

    std::vector<IdentityVerdict> verdicts(specs().size());
    const unsigned threads = std::max(1u, opts.threads);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back([&, t] {
            for (std::size_t i = t; i < specs().size(); i += threads) verdicts[i] = scan(specs()[i], pools[i]);
        });
    for (auto& w : workers) w.join();
    report.verdicts = std::move(verdicts);
    return report;
}

PropertyReport identity_battery(int level, RandomSample sample, const BatteryOptions& opts) {
    check_level(level, opts.max_level);
    PropertyReport report;
    report.level = level;
    report.kind = SampleKind::RandomSample;
    report.sample_count = sample.count;
    report.seed = sample.seed;

    // Samples are drawn sequentially so the report depends only on the seed.
    std::mt19937_64 rng(sample.seed);
    std::vector<std::vector<E>> samples(sample.count);
    for (auto& s : samples)
        for (int k = 0; k < 3; ++k) s.push_back(random_element(level, rng));

    const auto& all = specs();
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    const unsigned threads = std::max(1u, opts.threads);
    // first_failure[t][i]: earliest failing sample index of identity i seen by worker t.
    std::vector<std::vector<std::size_t>> first_failure(threads, std::vector<std::size_t>(all.size(), kNone));
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back([&, t] {
            for (std::size_t s = t; s < samples.size(); s += threads)
                for (std::size_t i = 0; i < all.size(); ++i) {
                    if (first_failure[t][i] != kNone) continue;
                    std::vector<E> args(samples[s].begin(), samples[s].begin() + all[i].arity);
                    if (!all[i].holds(args)) first_failure[t][i] = s;
                }
        });
    for (auto& w : workers) w.join();

    for (std::size_t i = 0; i < all.size(); ++i) {
        std::size_t first = kNone;
        for (unsigned t = 0; t < threads; ++t) first = std::min(first, first_failure[t][i]);
        IdentityVerdict v{all[i].name, first == kNone, sample.count, {}};
        if (!v.passed)
            v.witness.assign(samples[first].begin(), samples[first].begin() + all[i].arity);
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

std::vector<RationalElement> two_term_signed_candidates(int level) {
    std::vector<E> out;
    const std::size_t n = std::size_t{1} << level;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) out.push_back(E::basis(level, i, si) + E::basis(level, j, sj));
    return out;
}

std::vector<std::pair<RationalElement, RationalElement>> find_zero_divisors(int level, TwoTermSigned,
                                                                            unsigned threads, int max_level) {
    check_level(level, max_level);
    const auto& table = structure_constants(level, std::max(max_level, level));

    // s_i e_i + s_j e_j in the same order as two_term_signed_candidates().
    struct TwoTerm {
        std::uint32_t i, j;
        int si, sj;
    };
    std::vector<TwoTerm> cands;
    const std::uint32_t n = 1u << level;
    for (std::uint32_t i = 1; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) cands.push_back({i, j, si, sj});

    auto vanishes = [&](const TwoTerm& a, const TwoTerm& b) {
        // Four signed basis terms; the product is zero iff they cancel in pairs.
        std::array<std::pair<std::uint32_t, int>, 4> terms;
        std::size_t t = 0;
        for (auto [p, sp] : {std::pair{a.i, a.si}, std::pair{a.j, a.sj}})
            for (auto [q, sq] : {std::pair{b.i, b.si}, std::pair{b.j, b.sj}}) {
                auto e = table.product(p, q);
                terms[t++] = {e.index, sp * sq * e.sign};
            }
        for (std::size_t x = 0; x < 4; ++x) {
            int sum = 0;
            for (std::size_t y = 0; y < 4; ++y)
                if (terms[y].first == terms[x].first) sum += terms[y].second;
            if (sum != 0) return false;
        }
        return true;
    };

    threads = std::max(1u, threads);
    std::vector<std::vector<std::size_t>> hits(cands.size());
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back([&, t] {
            for (std::size_t a = t; a < cands.size(); a += threads)
                for (std::size_t b = 0; b < cands.size(); ++b)
                    if (vanishes(cands[a], cands[b])) hits[a].push_back(b);
        });
    for (auto& w : workers) w.join();

    auto element = [level](const TwoTerm& c) {
        return E::basis(level, c.i, c.si) + E::basis(level, c.j, c.sj);
    };
    std::vector<std::pair<E, E>> out;
    for (std::size_t a = 0; a < cands.size(); ++a)
        for (auto b : hits[a]) out.emplace_back(element(cands[a]), element(cands[b]));
    return out;
}

std::vector<std::pair<RationalElement, RationalElement>> find_zero_divisors(
    int level, const std::vector<RationalElement>& candidates, unsigned threads, int max_level) {
    check_level(level, max_level);
    const auto& table = structure_constants(level, max_level);
    std::vector<const E*> nonzero;
    for (const auto& c : candidates) {
        if (c.level() != level) throw Error(Errc::LevelMismatch, "candidate level differs from search level");
        if (!c.is_zero()) nonzero.push_back(&c);
    }

    threads = std::max(1u, threads);
    // Worker t owns rows a = t, t + threads, ...; rows are merged back in order.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> hits(nonzero.size());
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back([&, t] {
            for (std::size_t a = t; a < nonzero.size(); a += threads)
                for (std::size_t b = 0; b < nonzero.size(); ++b)
                    if (table_multiply(table, *nonzero[a], *nonzero[b]).is_zero()) hits[a].emplace_back(a, b);
        });
    for (auto& w : workers) w.join();

    std::vector<std::pair<E, E>> out;
    for (const auto& row : hits)
        for (auto [a, b] : row) out.emplace_back(*nonzero[a], *nonzero[b]);
    return out;
}

}  // namespace hyperalg::cd
