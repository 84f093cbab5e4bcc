#pragma once

// Core vocabulary: decision rules over natural-number attributes, rule
// systems and their measures, equation systems with consistency semantics,
// and extended value tuples. Everything here is an immutable value type;
// all operations are pure functions.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rulesim {

using Nat = std::uint32_t;
using RuleId = std::uint32_t;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an instance exceeds a configured search/enumeration budget.
struct BudgetError : DomainError {
    using DomainError::DomainError;
};

struct AttributeId {
    Nat index = 0;
    auto operator<=>(const AttributeId&) const = default;
};

inline std::string to_string(AttributeId a) {
    return "a" + std::to_string(a.index);
}

// A value from the extended domain: a concrete natural number or the
// "any other value" symbol (star). Star compares unequal to every concrete
// value and equal to itself.
class ExtendedValue {
public:
    constexpr ExtendedValue() = default;  // star
    static constexpr ExtendedValue star() { return ExtendedValue{}; }
    static constexpr ExtendedValue of(Nat v) { return ExtendedValue(std::optional<Nat>(v)); }

    constexpr bool is_star() const { return !value_.has_value(); }
    constexpr Nat value() const {
        if (!value_) throw DomainError("ExtendedValue: star has no concrete value");
        return *value_;
    }

    auto operator<=>(const ExtendedValue&) const = default;

private:
    constexpr explicit ExtendedValue(std::optional<Nat> v) : value_(v) {}

    std::optional<Nat> value_;  // nullopt = star; sorts before concrete values
};

inline std::string to_string(ExtendedValue v) {
    return v.is_star() ? std::string("*") : std::to_string(v.value());
}

// Concrete equation "attr = value", the building block of rule left-hand
// sides. Star never appears in a rule.
struct Equation {
    AttributeId attr;
    Nat value = 0;
    auto operator<=>(const Equation&) const = default;
};

// Extended equation "attr = value-or-star": accumulated knowledge entries,
// tuple positions, and query trace entries.
struct Assignment {
    AttributeId attr;
    ExtendedValue value;
    auto operator<=>(const Assignment&) const = default;
};

class DecisionRule {
public:
    // lhs attributes must be pairwise distinct; the stored form is sorted by
    // attribute index.
    DecisionRule(RuleId id, std::vector<Equation> lhs, Nat decision)
        : id_(id), lhs_(std::move(lhs)), decision_(decision) {
        std::sort(lhs_.begin(), lhs_.end());
        for (std::size_t i = 1; i < lhs_.size(); ++i) {
            if (lhs_[i - 1].attr == lhs_[i].attr)
                throw DomainError("DecisionRule: repeated attribute " +
                                  to_string(lhs_[i].attr) + " in left-hand side");
        }
    }

    RuleId id() const { return id_; }
    const std::vector<Equation>& lhs() const { return lhs_; }
    Nat decision() const { return decision_; }
    std::size_t length() const { return lhs_.size(); }
    bool lhs_empty() const { return lhs_.empty(); }

    bool mentions(AttributeId a) const { return value_of(a).has_value(); }
    std::optional<Nat> value_of(AttributeId a) const {
        auto it = std::lower_bound(lhs_.begin(), lhs_.end(), a,
                                   [](const Equation& e, AttributeId x) { return e.attr < x; });
        if (it != lhs_.end() && it->attr == a) return it->value;
        return std::nullopt;
    }

    bool operator==(const DecisionRule&) const = default;

private:
    RuleId id_;
    std::vector<Equation> lhs_;
    Nat decision_;
};

// A finite nonempty collection of decision rules. Ids are stable: systems
// built from scratch number rules 0..m-1 in input order; derived systems
// (restrictions, reducts) inherit ids from their source.
class RuleSystem {
public:
    explicit RuleSystem(std::vector<DecisionRule> rules) : rules_(std::move(rules)) {
        if (rules_.empty()) throw DomainError("RuleSystem: must contain at least one rule");
    }

    // Builds a system from (lhs, decision) pairs, assigning sequential ids.
    static RuleSystem from_parts(std::vector<std::pair<std::vector<Equation>, Nat>> parts) {
        std::vector<DecisionRule> rules;
        rules.reserve(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            rules.emplace_back(static_cast<RuleId>(i), std::move(parts[i].first),
                               parts[i].second);
        return RuleSystem(std::move(rules));
    }

    const std::vector<DecisionRule>& rules() const { return rules_; }
    std::size_t size() const { return rules_.size(); }

    const DecisionRule* find(RuleId id) const {
        for (const auto& r : rules_)
            if (r.id() == id) return &r;
        return nullptr;
    }

    bool operator==(const RuleSystem&) const = default;

private:
    std::vector<DecisionRule> rules_;
};

// A set of extended equations. Set semantics: duplicate (attr, value) pairs
// collapse. The system is inconsistent iff some attribute carries two
// distinct values (star counts as distinct from every concrete value).
class EquationSystem {
public:
    EquationSystem() = default;
    explicit EquationSystem(std::vector<Assignment> eqs) {
        for (const auto& e : eqs) insert(e.attr, e.value);
    }

    void insert(AttributeId a, ExtendedValue v) {
        Assignment e{a, v};
        auto it = std::lower_bound(eqs_.begin(), eqs_.end(), e);
        if (it == eqs_.end() || *it != e) eqs_.insert(it, e);
    }

    void merge(const EquationSystem& other) {
        for (const auto& e : other.eqs_) insert(e.attr, e.value);
    }

    bool consistent() const {
        for (std::size_t i = 1; i < eqs_.size(); ++i)
            if (eqs_[i - 1].attr == eqs_[i].attr) return false;  // values differ by uniqueness
        return true;
    }

    bool contains(AttributeId a, ExtendedValue v) const {
        return std::binary_search(eqs_.begin(), eqs_.end(), Assignment{a, v});
    }

    bool mentions(AttributeId a) const {
        auto it = std::lower_bound(eqs_.begin(), eqs_.end(), a,
                                   [](const Assignment& e, AttributeId x) { return e.attr < x; });
        return it != eqs_.end() && it->attr == a;
    }

    // First value recorded for a (the only one when consistent).
    std::optional<ExtendedValue> value_of(AttributeId a) const {
        auto it = std::lower_bound(eqs_.begin(), eqs_.end(), a,
                                   [](const Assignment& e, AttributeId x) { return e.attr < x; });
        if (it != eqs_.end() && it->attr == a) return it->value;
        return std::nullopt;
    }

    const std::vector<Assignment>& assignments() const { return eqs_; }
    std::size_t size() const { return eqs_.size(); }
    bool empty() const { return eqs_.empty(); }

    bool operator==(const EquationSystem&) const = default;

private:
    std::vector<Assignment> eqs_;  // sorted, unique
};

// Total assignment over a fixed attribute set, each position holding a value
// from that attribute's extended domain.
class ExtendedTuple {
public:
    explicit ExtendedTuple(std::vector<Assignment> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end());
        for (std::size_t i = 1; i < entries_.size(); ++i)
            if (entries_[i - 1].attr == entries_[i].attr)
                throw DomainError("ExtendedTuple: repeated attribute " +
                                  to_string(entries_[i].attr));
    }

    ExtendedValue value_of(AttributeId a) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), a,
                                   [](const Assignment& e, AttributeId x) { return e.attr < x; });
        if (it == entries_.end() || it->attr != a)
            throw DomainError("ExtendedTuple: no value for " + to_string(a));
        return it->value;
    }

    bool has(AttributeId a) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), a,
                                   [](const Assignment& e, AttributeId x) { return e.attr < x; });
        return it != entries_.end() && it->attr == a;
    }

    const std::vector<Assignment>& assignments() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    EquationSystem as_equations() const { return EquationSystem(entries_); }

    bool operator==(const ExtendedTuple&) const = default;

private:
    std::vector<Assignment> entries_;  // sorted by attribute
};

// Attribute set, value sets and the three size measures of a system.
struct Measures {
    std::vector<AttributeId> attrs;               // A(S), increasing index
    std::size_t n = 0;                            // |A(S)|
    std::size_t d = 0;                            // max rule length
    std::size_t k = 0;                            // max |V(a)|, 0 when n = 0
    std::map<AttributeId, std::vector<Nat>> values;  // a -> sorted V(a)
};

inline Measures measures(const RuleSystem& s) {
    Measures m;
    for (const auto& r : s.rules()) {
        m.d = std::max(m.d, r.length());
        for (const auto& eq : r.lhs()) m.values[eq.attr].push_back(eq.value);
    }
    for (auto& [attr, vals] : m.values) {
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        m.attrs.push_back(attr);
        m.k = std::max(m.k, vals.size());
    }
    m.n = m.attrs.size();
    return m;
}

// Is K(r) together with the given equations consistent? Rule left-hand sides
// carry concrete values only, so the union is inconsistent exactly when some
// attribute of the rule appears in `eqs` with a different extended value.
inline bool consistent_union(const DecisionRule& r, const EquationSystem& eqs) {
    for (const auto& eq : r.lhs()) {
        auto v = eqs.value_of(eq.attr);  // eqs assumed consistent: one value per attr
        if (v && *v != ExtendedValue::of(eq.value)) return false;
    }
    return true;
}

// Rule ids realizable for the tuple: K(r) contained in the tuple's equations.
// The tuple must assign every attribute the rules mention. Rules with empty
// left-hand side are realizable for every tuple.
inline std::vector<RuleId> realizable_rules(const RuleSystem& s, const ExtendedTuple& t) {
    std::vector<RuleId> out;
    for (const auto& r : s.rules()) {
        bool ok = true;
        for (const auto& eq : r.lhs()) {
            if (t.value_of(eq.attr) != ExtendedValue::of(eq.value)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(r.id());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Solution for the degenerate case n(S) = 0: the whole system.
inline std::vector<RuleId> degenerate_answer(const RuleSystem& s) {
    for (const auto& r : s.rules())
        if (!r.lhs_empty())
            throw DomainError("degenerate_answer: system has a rule with nonempty left-hand side");
    std::vector<RuleId> out;
    out.reserve(s.size());
    for (const auto& r : s.rules()) out.push_back(r.id());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rulesim
