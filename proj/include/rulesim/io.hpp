#pragma once

// Text formats: the rule-file grammar, tuple strings, JSON simulation
// results and CSV experiment rows. Parsers report position-annotated errors;
// serialize-then-parse is the identity on canonical forms.
//
//   rule  := lhs "->" NAT | "->" NAT
//   lhs   := term (" & " term)*
//   term  := "a" NAT "=" NAT
//   tuple := tterm ("," tterm)*      tterm := "a" NAT "=" (NAT | "*")
//
// '#' starts a comment; blank lines are ignored.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rulesim/core.hpp"
#include "rulesim/simulate.hpp"

namespace rulesim {

struct ParseError : DomainError {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : DomainError("parse error at line " + std::to_string(line_) + ", column " +
                      std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

namespace detail {

// Single-line cursor with 1-based column reporting.
class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool consume(std::string_view token) {
        skip_ws();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view token) {
        if (!consume(token)) fail("expected '" + std::string(token) + "'");
    }
    Nat number(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > std::numeric_limits<Nat>::max()) fail("number out of range");
            ++pos_;
        }
        if (pos_ == start) fail(std::string("expected ") + what);
        return static_cast<Nat>(value);
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, line_, pos_ + 1); }
    std::size_t column() {
        skip_ws();
        return pos_ + 1;
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

inline std::string_view strip_comment(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    return line;
}

}  // namespace detail

inline RuleSystem parse_rules(std::string_view text) {
    std::vector<std::pair<std::vector<Equation>, Nat>> parts;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++line_no;
        const std::size_t end = std::min(text.find('\n', start), text.size());
        const std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        const std::string_view line = detail::strip_comment(raw);
        detail::LineCursor cur(line, line_no);
        if (cur.at_end()) {
            if (end == text.size()) break;
            continue;
        }

        std::vector<Equation> lhs;
        if (!cur.consume("->")) {
            while (true) {
                const std::size_t col = cur.column();
                cur.expect("a");
                const Nat index = cur.number("attribute index");
                cur.expect("=");
                const Nat value = cur.number("value");
                for (const auto& eq : lhs)
                    if (eq.attr.index == index)
                        throw ParseError("repeated attribute a" + std::to_string(index),
                                         line_no, col);
                lhs.push_back({AttributeId{index}, value});
                if (cur.consume("&")) continue;
                cur.expect("->");
                break;
            }
        }
        const Nat decision = cur.number("decision");
        if (!cur.at_end()) cur.fail("unexpected trailing characters");
        parts.emplace_back(std::move(lhs), decision);
        if (end == text.size()) break;
    }
    if (parts.empty()) throw ParseError("expected at least one rule", line_no, 1);
    return RuleSystem::from_parts(std::move(parts));
}

inline RuleSystem load_rules(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open rule file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rules(buf.str());
}

inline std::string serialize_rules(const RuleSystem& s) {
    std::string out;
    for (const auto& r : s.rules()) {
        for (std::size_t i = 0; i < r.lhs().size(); ++i) {
            if (i > 0) out += " & ";
            out += to_string(r.lhs()[i].attr) + "=" + std::to_string(r.lhs()[i].value);
        }
        if (!r.lhs_empty()) out += " ";
        out += "-> " + std::to_string(r.decision()) + "\n";
    }
    return out;
}

// Tuple strings must assign every attribute of the system exactly once;
// values not occurring in the system fold to star.
inline ExtendedTuple parse_tuple(const RuleSystem& s, std::string_view text) {
    const Measures m = measures(s);
    detail::LineCursor cur(text, 1);
    std::vector<Assignment> entries;
    if (!cur.at_end()) {
        while (true) {
            const std::size_t col = cur.column();
            cur.expect("a");
            const Nat index = cur.number("attribute index");
            cur.expect("=");
            ExtendedValue value = ExtendedValue::star();
            if (!cur.consume("*")) value = ExtendedValue::of(cur.number("value or '*'"));
            const AttributeId attr{index};
            if (!m.values.count(attr))
                throw ParseError("unknown attribute a" + std::to_string(index), 1, col);
            for (const auto& e : entries)
                if (e.attr == attr)
                    throw ParseError("repeated attribute a" + std::to_string(index), 1, col);
            entries.push_back({attr, normalize_value(m, attr, value)});
            if (!cur.consume(",")) break;
        }
        if (!cur.at_end()) cur.fail("unexpected trailing characters");
    }
    if (entries.size() != m.n) {
        for (auto a : m.attrs) {
            bool found = false;
            for (const auto& e : entries) found = found || e.attr == a;
            if (!found)
                throw ParseError("missing attribute " + to_string(a), 1, cur.column());
        }
    }
    return ExtendedTuple(std::move(entries));
}

inline std::string serialize_tuple(const ExtendedTuple& t) {
    std::string out;
    for (std::size_t i = 0; i < t.assignments().size(); ++i) {
        if (i > 0) out += ",";
        out += to_string(t.assignments()[i].attr) + "=" + to_string(t.assignments()[i].value);
    }
    return out;
}

inline nlohmann::ordered_json to_json(const SimulationResult& res) {
    nlohmann::ordered_json j;
    j["answer"] = res.answer;
    j["trace"] = nlohmann::ordered_json::array();
    for (const auto& q : res.trace) {
        nlohmann::ordered_json entry;
        entry["attribute"] = to_string(q.attr);
        if (q.value.is_star())
            entry["value"] = "*";
        else
            entry["value"] = q.value.value();
        j["trace"].push_back(entry);
    }
    j["rounds"] = res.rounds;
    j["depth"] = res.depth;
    return j;
}

// One experiment row per simulated tuple. Optional fields are emitted as
// empty cells when absent.
struct CsvRow {
    std::uint64_t seed = 0;
    std::size_t n = 0, d = 0, k = 0, rules = 0;
    std::size_t tuple_id = 0;
    CoverStrategy strategy = CoverStrategy::greedy;
    std::size_t depth = 0;
    std::size_t rounds = 0;
    std::optional<std::size_t> h_exact;
    std::optional<double> depth_ub;
    std::size_t answer_size = 0;
};

inline std::string csv_header() {
    return "seed,n,d,k,rules,tuple_id,strategy,depth,rounds,h_exact,depth_ub,answer_size";
}

inline std::string to_csv_row(const CsvRow& row) {
    std::string out = std::to_string(row.seed) + "," + std::to_string(row.n) + "," +
                      std::to_string(row.d) + "," + std::to_string(row.k) + "," +
                      std::to_string(row.rules) + "," + std::to_string(row.tuple_id) + "," +
                      to_string(row.strategy) + "," + std::to_string(row.depth) + "," +
                      std::to_string(row.rounds) + ",";
    if (row.h_exact) out += std::to_string(*row.h_exact);
    out += ",";
    if (row.depth_ub) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", *row.depth_ub);
        out += buf;
    }
    out += "," + std::to_string(row.answer_size);
    return out;
}

}  // namespace rulesim
