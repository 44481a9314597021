#pragma once

// Corpus ingestion: JSONL documents are segmented into sentences and tokens
// once, at load time; everything downstream points back into this structure
// through SentenceOccurrence values.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bios/error.hpp"
#include "bios/io.hpp"
#include "bios/text.hpp"

namespace bios {

struct Sentence {
    std::string doc_id;
    size_t sent_index = 0;  // 0-based within the document
    std::vector<Token> tokens;
    std::optional<std::vector<std::string>> pos_tags;  // aligned 1:1 with tokens

    std::vector<std::string> normalized_tokens() const {
        std::vector<std::string> out;
        out.reserve(tokens.size());
        for (const auto& t : tokens) out.push_back(text::normalize(t.surface));
        return out;
    }
};

struct Document {
    std::string doc_id;
    std::string text;
    std::vector<Sentence> sentences;
};

// Pointer from any extracted item back to its source text. Token indices are
// half-open [token_begin, token_end).
struct SentenceOccurrence {
    std::string doc_id;
    size_t sent_index = 0;
    size_t token_begin = 0;
    size_t token_end = 0;

    bool operator==(const SentenceOccurrence&) const = default;
    auto operator<=>(const SentenceOccurrence&) const = default;
};

class Corpus {
public:
    static Corpus from_jsonl_file(const std::filesystem::path& path) {
        Corpus c;
        io::for_each_line(path, [&](size_t lineno, std::string_view line) {
            c.add_jsonl_line(lineno, line);
        });
        return c;
    }

    static Corpus from_jsonl_string(std::string_view content) {
        Corpus c;
        size_t lineno = 0, start = 0;
        for (size_t i = 0; i <= content.size(); ++i) {
            if (i == content.size() || content[i] == '\n') {
                ++lineno;
                std::string_view line = content.substr(start, i - start);
                if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
                c.add_jsonl_line(lineno, line);
                start = i + 1;
            }
        }
        return c;
    }

    const std::vector<Document>& documents() const { return docs_; }
    size_t size() const { return docs_.size(); }

    const Document& document(const std::string& doc_id) const {
        auto it = index_.find(doc_id);
        if (it == index_.end()) throw Error("unknown doc_id: " + doc_id);
        return docs_[it->second];
    }

    const Sentence& sentence(const std::string& doc_id, size_t sent_index) const {
        const Document& d = document(doc_id);
        if (sent_index >= d.sentences.size())
            throw Error("sentence index out of range in " + doc_id);
        return d.sentences[sent_index];
    }

    const Sentence& sentence(const SentenceOccurrence& occ) const {
        return sentence(occ.doc_id, occ.sent_index);
    }

    // The exact substring of the document covered by the occurrence's tokens.
    std::string resolve_surface(const SentenceOccurrence& occ) const {
        const Document& d = document(occ.doc_id);
        const Sentence& s = sentence(occ);
        if (occ.token_begin >= occ.token_end || occ.token_end > s.tokens.size())
            throw Error("occurrence token span out of range in " + occ.doc_id);
        size_t a = s.tokens[occ.token_begin].char_start;
        size_t b = s.tokens[occ.token_end - 1].char_end;
        return d.text.substr(a, b - a);
    }

    std::pair<size_t, size_t> resolve_char_span(const SentenceOccurrence& occ) const {
        const Sentence& s = sentence(occ);
        if (occ.token_begin >= occ.token_end || occ.token_end > s.tokens.size())
            throw Error("occurrence token span out of range in " + occ.doc_id);
        return {s.tokens[occ.token_begin].char_start, s.tokens[occ.token_end - 1].char_end};
    }

    // Canonical serialized form; a pure function of the ingested bytes.
    std::string serialize() const {
        std::string out;
        for (const auto& d : docs_) {
            nlohmann::json j;
            j["doc_id"] = d.doc_id;
            j["text"] = d.text;
            nlohmann::json sentences = nlohmann::json::array();
            for (const auto& s : d.sentences) {
                nlohmann::json js;
                nlohmann::json toks = nlohmann::json::array();
                for (const auto& t : s.tokens)
                    toks.push_back({t.surface, t.char_start, t.char_end});
                js["tokens"] = toks;
                if (s.pos_tags) js["pos"] = *s.pos_tags;
                sentences.push_back(js);
            }
            j["sentences"] = sentences;
            out += j.dump();
            out += '\n';
        }
        return out;
    }

private:
    void add_jsonl_line(size_t lineno, std::string_view line) {
        if (io::trim(line).empty()) return;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw ValidationError("corpus line " + std::to_string(lineno) + ": malformed JSON");
        if (!j.contains("doc_id") || !j["doc_id"].is_string())
            throw ValidationError("corpus line " + std::to_string(lineno) + ": missing doc_id");
        if (!j.contains("text") || !j["text"].is_string())
            throw ValidationError("corpus line " + std::to_string(lineno) + ": missing text");
        Document d;
        d.doc_id = j["doc_id"].get<std::string>();
        d.text = j["text"].get<std::string>();
        if (d.doc_id.empty())
            throw ValidationError("corpus line " + std::to_string(lineno) + ": empty doc_id");
        if (index_.count(d.doc_id))
            throw ValidationError("corpus line " + std::to_string(lineno) +
                                  ": duplicate doc_id " + d.doc_id);

        auto spans = text::split_sentences(d.text);
        for (size_t si = 0; si < spans.size(); ++si) {
            Sentence s;
            s.doc_id = d.doc_id;
            s.sent_index = si;
            s.tokens = text::tokenize(
                std::string_view(d.text).substr(spans[si].start, spans[si].end - spans[si].start),
                spans[si].start);
            d.sentences.push_back(std::move(s));
        }

        if (j.contains("pos")) {
            const auto& pos = j["pos"];
            if (!pos.is_array() || pos.size() != d.sentences.size())
                throw ValidationError("corpus line " + std::to_string(lineno) +
                                      ": pos not aligned to sentences");
            for (size_t si = 0; si < pos.size(); ++si) {
                if (pos[si].is_null()) continue;
                if (!pos[si].is_array() || pos[si].size() != d.sentences[si].tokens.size())
                    throw ValidationError("corpus line " + std::to_string(lineno) +
                                          ": pos not aligned to tokens of sentence " +
                                          std::to_string(si));
                std::vector<std::string> tags;
                for (const auto& t : pos[si]) {
                    if (!t.is_string())
                        throw ValidationError("corpus line " + std::to_string(lineno) +
                                              ": pos tag is not a string");
                    tags.push_back(t.get<std::string>());
                }
                d.sentences[si].pos_tags = std::move(tags);
            }
        }

        index_[d.doc_id] = docs_.size();
        docs_.push_back(std::move(d));
    }

    std::vector<Document> docs_;
    std::map<std::string, size_t> index_;
};

}  // namespace bios
