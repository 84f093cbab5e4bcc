#pragma once

// Seeded random instance generation. Everything here is a pure function of
// the seed: the generator is SplitMix64 with the published constants
// (increment 0x9E3779B97F4A7C15, mix multipliers 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB) and bounded sampling is the 128-bit multiply-shift,
// so identical seeds give identical instances on every platform. The
// standard <random> distributions are implementation-defined and are not
// used.

#include <cstdint>
#include <numeric>
#include <vector>

#include "rulesim/core.hpp"

namespace rulesim {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n); n must be positive.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

// Derives an independent stream for a substream index, so grid cells and
// per-seed systems do not share state.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 rng(base ^ (0x632BE59BD9B4E019ULL * (index + 1)));
    return rng.next();
}

struct GenParams {
    std::size_t attrs = 4;
    std::size_t rules = 4;
    std::size_t min_len = 1;
    std::size_t max_len = 2;
    std::size_t values = 2;  // attribute values and decisions are drawn below this
    std::uint64_t seed = 1;
};

// Random system: each rule draws a length uniform in [min_len, max_len], an
// attribute subset of that size (from a1..a_attrs), uniform values and a
// uniform decision.
inline RuleSystem random_system(const GenParams& p) {
    if (p.min_len < 1 || p.min_len > p.max_len || p.max_len > p.attrs)
        throw DomainError("random_system: need 1 <= min_len <= max_len <= attrs");
    if (p.rules < 1) throw DomainError("random_system: need at least one rule");
    if (p.values < 1) throw DomainError("random_system: need at least one value");

    SplitMix64 rng(p.seed);
    std::vector<std::pair<std::vector<Equation>, Nat>> parts;
    parts.reserve(p.rules);
    std::vector<Nat> pool(p.attrs);
    for (std::size_t i = 0; i < p.rules; ++i) {
        const std::size_t len = p.min_len + rng.bounded(p.max_len - p.min_len + 1);
        std::iota(pool.begin(), pool.end(), 1);
        for (std::size_t j = 0; j < len; ++j) {  // partial Fisher-Yates
            const std::size_t pick = j + rng.bounded(pool.size() - j);
            std::swap(pool[j], pool[pick]);
        }
        std::vector<Equation> lhs;
        lhs.reserve(len);
        for (std::size_t j = 0; j < len; ++j)
            lhs.push_back({AttributeId{pool[j]}, static_cast<Nat>(rng.bounded(p.values))});
        parts.emplace_back(std::move(lhs), static_cast<Nat>(rng.bounded(p.values)));
    }
    return RuleSystem::from_parts(std::move(parts));
}

// Uniform tuple over the system's extended value domains: each position draws
// independently from that attribute's values plus star.
inline ExtendedTuple random_tuple(const Measures& m, SplitMix64& rng) {
    std::vector<Assignment> entries;
    entries.reserve(m.n);
    for (auto a : m.attrs) {
        const auto& vals = m.values.at(a);
        const std::uint64_t pick = rng.bounded(vals.size() + 1);
        entries.push_back({a, pick == vals.size() ? ExtendedValue::star()
                                                  : ExtendedValue::of(vals[pick])});
    }
    return ExtendedTuple(std::move(entries));
}

}  // namespace rulesim
