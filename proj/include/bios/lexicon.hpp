#pragma once

// Seed-term dictionary: loading from TSV and rule-based cleaning. Cleaning
// partitions the input into kept and rejected terms, with every rejection
// attributed to the first matching named rule.

#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "bios/detail/stopwords.hpp"
#include "bios/error.hpp"
#include "bios/io.hpp"
#include "bios/text.hpp"

namespace bios {

struct SeedTerm {
    std::string surface;  // normalized
    std::string source;
    std::set<std::string> semtypes;

    bool operator==(const SeedTerm&) const = default;
};

struct RejectedTerm {
    SeedTerm term;
    std::string rule;
};

struct CleanResult {
    std::vector<SeedTerm> kept;
    std::vector<RejectedTerm> rejected;
};

// Named regex rejection rule; patterns match against the whole surface.
struct RegexRule {
    std::string name;
    std::regex pattern;
    std::string pattern_text;
};

struct FilterRuleSet {
    std::set<std::string> stopwords;
    std::vector<RegexRule> regex_rules;
    size_t min_length = 3;          // rejected below this unless a digit is present
    bool reject_pure_numeric = true;
    bool reject_pure_punct = true;

    static FilterRuleSet defaults() {
        FilterRuleSet r;
        r.stopwords = detail::default_stopwords();
        return r;
    }

    void add_regex(const std::string& name, const std::string& pattern) {
        regex_rules.push_back({name, std::regex(pattern), pattern});
    }

    // Name of the first rule the surface violates, if any. Order is fixed:
    // stopword, shape rules, then regex rules in insertion order.
    std::optional<std::string> first_violation(const std::string& surface) const {
        if (stopwords.count(surface)) return "stopword";
        bool has_digit = false, has_alnum = false, has_non_digit_alnum = false;
        for (unsigned char c : surface) {
            if (std::isdigit(c)) has_digit = true;
            if (std::isalnum(c) || c >= 0x80) has_alnum = true;
            if ((std::isalnum(c) || c >= 0x80) && !std::isdigit(c)) has_non_digit_alnum = true;
        }
        if (surface.size() < min_length && !has_digit) return "min_length";
        if (reject_pure_numeric && has_digit && !has_non_digit_alnum) return "pure_numeric";
        if (reject_pure_punct && !has_alnum && !surface.empty()) return "pure_punct";
        for (const auto& rule : regex_rules)
            if (std::regex_search(surface, rule.pattern)) return rule.name;
        return std::nullopt;
    }
};

// TSV columns: surface \t source \t semtype1|semtype2|... Duplicate surfaces
// (after normalization) merge their semantic-type sets; the first source wins.
// An optional per-source filter restricts each term's types to the allowed
// set for its source; terms left with no type are dropped.
inline std::vector<SeedTerm> load_dictionary(
    const std::filesystem::path& path,
    const std::map<std::string, std::set<std::string>>* source_type_filter = nullptr) {
    std::vector<SeedTerm> terms;
    std::map<std::string, size_t> by_surface;
    io::for_each_line(path, [&](size_t lineno, std::string_view line) {
        if (io::trim(line).empty()) return;
        auto cols = io::split(line, '\t');
        if (cols.size() != 3)
            throw ValidationError("dictionary line " + std::to_string(lineno) +
                                  ": expected 3 tab-separated columns, got " +
                                  std::to_string(cols.size()));
        SeedTerm t;
        t.surface = text::normalize(cols[0]);
        t.source = std::string(io::trim(cols[1]));
        if (t.surface.empty())
            throw ValidationError("dictionary line " + std::to_string(lineno) +
                                  ": empty surface");
        for (auto st : io::split(cols[2], '|')) {
            auto trimmed = io::trim(st);
            if (!trimmed.empty()) t.semtypes.insert(std::string(trimmed));
        }
        if (t.semtypes.empty())
            throw ValidationError("dictionary line " + std::to_string(lineno) +
                                  ": no semantic types");
        if (source_type_filter) {
            auto it = source_type_filter->find(t.source);
            if (it != source_type_filter->end()) {
                std::set<std::string> allowed;
                for (const auto& st : t.semtypes)
                    if (it->second.count(st)) allowed.insert(st);
                t.semtypes = std::move(allowed);
                if (t.semtypes.empty()) return;  // fully filtered out
            }
        }
        auto it = by_surface.find(t.surface);
        if (it == by_surface.end()) {
            by_surface[t.surface] = terms.size();
            terms.push_back(std::move(t));
        } else {
            terms[it->second].semtypes.insert(t.semtypes.begin(), t.semtypes.end());
        }
    });
    return terms;
}

// Partitions terms into kept/rejected, preserving input order in both lists.
inline CleanResult clean_terms(const std::vector<SeedTerm>& terms, const FilterRuleSet& rules) {
    CleanResult res;
    for (const auto& t : terms) {
        auto rule = rules.first_violation(t.surface);
        if (rule)
            res.rejected.push_back({t, *rule});
        else
            res.kept.push_back(t);
    }
    return res;
}

}  // namespace bios
