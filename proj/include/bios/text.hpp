#pragma once

// Deterministic text segmentation: sentence splitting, tokenization, and the
// normalization applied before any dictionary matching.

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace bios {

struct Token {
    std::string surface;
    size_t char_start = 0;  // byte offsets into the enclosing document text
    size_t char_end = 0;
};

struct TextSpan {
    size_t start = 0;
    size_t end = 0;
};

namespace text {

// Bytes >= 0x80 (UTF-8 continuation/lead bytes) count as word characters so
// multi-byte sequences are never split.
inline bool is_word_char(unsigned char c) {
    return std::isalnum(c) || c >= 0x80;
}

inline bool is_space_char(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

// Lowercase + collapse internal whitespace; the canonical matching form.
inline std::string normalize(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (is_space_char(static_cast<unsigned char>(c))) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += ascii_lower(c);
    }
    return out;
}

// Splits on whitespace; punctuation becomes its own token; a hyphen stays
// inside a token when flanked by word characters ("ige-mediated").
inline std::vector<Token> tokenize(std::string_view s, size_t base_offset = 0) {
    std::vector<Token> tokens;
    size_t i = 0;
    const size_t n = s.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (is_space_char(c)) {
            ++i;
            continue;
        }
        if (is_word_char(c)) {
            size_t j = i;
            while (j < n) {
                unsigned char cj = static_cast<unsigned char>(s[j]);
                if (is_word_char(cj)) {
                    ++j;
                } else if (cj == '-' && j + 1 < n && j > i &&
                           is_word_char(static_cast<unsigned char>(s[j + 1]))) {
                    ++j;
                } else {
                    break;
                }
            }
            tokens.push_back({std::string(s.substr(i, j - i)), base_offset + i, base_offset + j});
            i = j;
        } else {
            tokens.push_back({std::string(s.substr(i, 1)), base_offset + i, base_offset + i + 1});
            ++i;
        }
    }
    return tokens;
}

inline const std::set<std::string>& default_abbreviations() {
    static const std::set<std::string> abbrevs = {
        "al",  "approx", "ca", "cf",  "dr",  "e.g", "eg",  "et",   "etc", "fig",
        "i.e", "ie",     "mr", "mrs", "ms",  "no",  "prof", "resp", "st",  "vol",
        "vs"};
    return abbrevs;
}

// Sentence boundaries: '.', '?' or '!' followed by whitespace and an
// uppercase letter or digit, unless the word before a '.' is a known
// abbreviation. Returns byte spans into `s`.
inline std::vector<TextSpan> split_sentences(
    std::string_view s, const std::set<std::string>& abbreviations = default_abbreviations()) {
    std::vector<TextSpan> spans;
    const size_t n = s.size();
    size_t start = 0;
    auto flush = [&](size_t end) {
        size_t a = start;
        while (a < end && is_space_char(static_cast<unsigned char>(s[a]))) ++a;
        size_t b = end;
        while (b > a && is_space_char(static_cast<unsigned char>(s[b - 1]))) --b;
        if (b > a) spans.push_back({a, b});
        start = end;
    };
    for (size_t i = 0; i < n; ++i) {
        char c = s[i];
        if (c != '.' && c != '?' && c != '!') continue;
        size_t j = i + 1;
        if (j >= n || !is_space_char(static_cast<unsigned char>(s[j]))) continue;
        while (j < n && is_space_char(static_cast<unsigned char>(s[j]))) ++j;
        if (j >= n) continue;
        unsigned char next = static_cast<unsigned char>(s[j]);
        if (!(std::isupper(next) || std::isdigit(next))) continue;
        if (c == '.') {
            // word immediately before the period
            size_t we = i;
            size_t wb = we;
            while (wb > start) {
                unsigned char p = static_cast<unsigned char>(s[wb - 1]);
                if (is_word_char(p) || p == '.') {
                    --wb;
                } else {
                    break;
                }
            }
            std::string word;
            for (size_t k = wb; k < we; ++k) word += ascii_lower(s[k]);
            if (abbreviations.count(word)) continue;
        }
        flush(i + 1);
    }
    flush(n);
    return spans;
}

}  // namespace text
}  // namespace bios
