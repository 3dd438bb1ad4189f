#include "hyperalg/cd_core.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace hyperalg::cd {

MultiplicationTable::MultiplicationTable(int level, std::vector<Entry> entries)
    : level_(level), dim_(std::size_t{1} << level), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) throw Error(Errc::InvalidInput, "table size must be dim^2");
}

namespace {

using Entry = MultiplicationTable::Entry;

// e_p e_q following the doubling split of p and q at every level.
Entry basis_product(int level, std::uint32_t p, std::uint32_t q) {
    if (level == 0) return {0, 1};
    const std::uint32_t h = 1u << (level - 1);
    const bool p_hi = p >= h, q_hi = q >= h;
    const std::uint32_t x = p_hi ? p - h : p;
    const std::uint32_t y = q_hi ? q - h : q;
    if (!p_hi && !q_hi) return basis_product(level - 1, x, y);
    if (!p_hi && q_hi) {  // (x,0)(0,y) = (0, y x)
        auto e = basis_product(level - 1, y, x);
        return {e.index + h, e.sign};
    }
    const std::int8_t conj_y = y == 0 ? 1 : -1;
    if (p_hi && !q_hi) {  // (0,x)(y,0) = (0, x conj(y))
        auto e = basis_product(level - 1, x, y);
        return {e.index + h, static_cast<std::int8_t>(e.sign * conj_y)};
    }
    // (0,x)(0,y) = (-conj(y) x, 0)
    auto e = basis_product(level - 1, y, x);
    return {e.index, static_cast<std::int8_t>(-e.sign * conj_y)};
}

constexpr int kCacheLevels = 31;
std::mutex cache_mutex;
std::array<std::unique_ptr<MultiplicationTable>, kCacheLevels> cache;

}  // namespace

const MultiplicationTable& structure_constants(int level, int max_level) {
    if (level < 0) throw Error(Errc::InvalidInput, "level must be nonnegative");
    if (level > max_level || level >= 16)
        throw Error(Errc::LevelTooLarge, "level " + std::to_string(level) + " exceeds the configured cap " +
                                             std::to_string(max_level));
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[level];
    if (!slot) {
        const std::uint32_t n = 1u << level;
        std::vector<Entry> entries(std::size_t{n} * n);
        for (std::uint32_t p = 0; p < n; ++p)
            for (std::uint32_t q = 0; q < n; ++q) entries[std::size_t{p} * n + q] = basis_product(level, p, q);
        slot = std::make_unique<MultiplicationTable>(level, std::move(entries));
    }
    return *slot;
}

}  // namespace hyperalg::cd
