#pragma once

// Exhaustive enumeration of small rule systems, the driver behind the
// oracle-equivalence and bound-verification suites. Systems are duplicate-free
// rule sets drawn from the finite universe of rules over attributes
// a1..a_max_attrs with left-hand sides up to max_len and values below
// value_count, streamed in (size, lexicographic) order.

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "rulesim/core.hpp"

namespace rulesim {

struct EnumParams {
    std::size_t max_attrs = 3;
    std::size_t max_rules = 3;
    std::size_t max_len = 2;
    std::size_t value_count = 2;
    std::uint64_t cap = 1'000'000;  // refuse streams longer than this
};

class SystemEnumerator {
public:
    explicit SystemEnumerator(EnumParams p) : params_(p) {
        if (p.max_attrs == 0) throw DomainError("SystemEnumerator: max_attrs must be positive");
        if (p.max_rules == 0) throw DomainError("SystemEnumerator: max_rules must be positive");
        if (p.value_count == 0)
            throw DomainError("SystemEnumerator: value_count must be positive");
        if (p.max_len > p.max_attrs)
            throw DomainError("SystemEnumerator: max_len exceeds max_attrs");
        build_universe();
        total_ = count_systems();
        if (total_ > p.cap)
            throw BudgetError("SystemEnumerator: " + std::to_string(total_) +
                              " systems exceed the cap of " + std::to_string(p.cap));
        size_ = 1;
        comb_.assign(1, 0);
        fresh_ = true;
    }

    std::uint64_t total_count() const { return total_; }
    std::size_t universe_size() const { return universe_.size(); }

    // Next system in the stream, or nullopt once exhausted.
    std::optional<RuleSystem> next() {
        if (!fresh_ && !advance()) return std::nullopt;
        fresh_ = false;
        if (size_ > universe_.size() || size_ > params_.max_rules) return std::nullopt;
        std::vector<std::pair<std::vector<Equation>, Nat>> parts;
        parts.reserve(size_);
        for (auto i : comb_) parts.push_back(universe_[i]);
        return RuleSystem::from_parts(std::move(parts));
    }

private:
    void build_universe() {
        // Rules ordered by (length, attribute combination, values, decision).
        for (std::size_t len = 0; len <= params_.max_len; ++len) {
            std::vector<std::size_t> attrs(len);
            std::iota(attrs.begin(), attrs.end(), 1);  // attribute indices, 1-based
            while (true) {
                emit_values(attrs);
                if (!next_combination(attrs, params_.max_attrs, 1)) break;
            }
        }
    }

    void emit_values(const std::vector<std::size_t>& attrs) {
        std::vector<Nat> vals(attrs.size(), 0);
        while (true) {
            for (Nat sigma = 0; sigma < params_.value_count; ++sigma) {
                std::vector<Equation> lhs;
                lhs.reserve(attrs.size());
                for (std::size_t i = 0; i < attrs.size(); ++i)
                    lhs.push_back({AttributeId{static_cast<Nat>(attrs[i])}, vals[i]});
                universe_.emplace_back(std::move(lhs), sigma);
            }
            std::size_t i = vals.size();
            while (i > 0 && vals[i - 1] + 1 == params_.value_count) vals[--i] = 0;
            if (i == 0) break;
            ++vals[i - 1];
        }
    }

    // Advances `items` to the next size-|items| combination with entries in
    // [first, first + universe). Returns false when exhausted.
    static bool next_combination(std::vector<std::size_t>& items, std::size_t universe,
                                 std::size_t first) {
        const std::size_t k = items.size();
        if (k == 0) return false;
        std::size_t j = k;
        while (j > 0 && items[j - 1] == first + universe - k + (j - 1)) --j;
        if (j == 0) return false;
        ++items[j - 1];
        for (std::size_t l = j; l < k; ++l) items[l] = items[l - 1] + 1;
        return true;
    }

    bool advance() {
        if (next_combination(comb_, universe_.size(), 0)) return true;
        ++size_;
        if (size_ > params_.max_rules || size_ > universe_.size()) return false;
        comb_.resize(size_);
        std::iota(comb_.begin(), comb_.end(), 0);
        return true;
    }

    std::uint64_t count_systems() const {
        const std::uint64_t sentinel = std::numeric_limits<std::uint64_t>::max();
        unsigned __int128 total = 0;
        const std::size_t r = universe_.size();
        for (std::size_t m = 1; m <= std::min(params_.max_rules, r); ++m) {
            unsigned __int128 binom = 1;
            for (std::size_t i = 0; i < m; ++i) {
                binom = binom * (r - i) / (i + 1);
                if (binom > sentinel) return sentinel;
            }
            total += binom;
            if (total > sentinel) return sentinel;
        }
        return static_cast<std::uint64_t>(total);
    }

    EnumParams params_;
    std::vector<std::pair<std::vector<Equation>, Nat>> universe_;
    std::uint64_t total_ = 0;
    std::size_t size_ = 1;
    std::vector<std::size_t> comb_;
    bool fresh_ = true;
};

}  // namespace rulesim
