#pragma once

// Occurrence index: where in the corpus each dictionary term appears. Built
// with the same longest-match scan used for annotation, so a term that is a
// prefix of a longer dictionary entry is not counted where the longer entry
// wins.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bios/corpus.hpp"
#include "bios/fmm.hpp"
#include "bios/text.hpp"

namespace bios {

struct TermOccurrences {
    std::vector<SentenceOccurrence> occurrences;
    size_t document_count = 0;  // distinct documents with >=1 occurrence
};

class OccurrenceIndex {
public:
    OccurrenceIndex() = default;
    OccurrenceIndex(std::map<std::string, TermOccurrences> entries, size_t corpus_docs)
        : entries_(std::move(entries)), corpus_docs_(corpus_docs) {}

    const std::map<std::string, TermOccurrences>& entries() const { return entries_; }

    size_t occurrence_count(const std::string& term) const {
        auto it = entries_.find(term);
        return it == entries_.end() ? 0 : it->second.occurrences.size();
    }

    const std::vector<SentenceOccurrence>& occurrences(const std::string& term) const {
        static const std::vector<SentenceOccurrence> empty;
        auto it = entries_.find(term);
        return it == entries_.end() ? empty : it->second.occurrences;
    }

    // Fraction of corpus documents containing the term; 0 for unseen terms.
    double document_frequency(const std::string& term) const {
        auto it = entries_.find(term);
        if (it == entries_.end() || corpus_docs_ == 0) return 0.0;
        return static_cast<double>(it->second.document_count) /
               static_cast<double>(corpus_docs_);
    }

    size_t corpus_document_count() const { return corpus_docs_; }

private:
    std::map<std::string, TermOccurrences> entries_;
    size_t corpus_docs_ = 0;
};

// Terms are matched on normalized token sequences, sentence by sentence.
inline OccurrenceIndex build_occurrence_index(const Corpus& corpus,
                                              const std::vector<std::string>& terms) {
    TokenTrie<std::string> trie;
    for (const auto& term : terms) {
        std::string canon = text::normalize(term);
        auto toks = text::tokenize(canon);
        std::vector<std::string> key;
        key.reserve(toks.size());
        for (const auto& t : toks) key.push_back(t.surface);
        if (!key.empty()) trie.insert(key, canon);
    }

    std::map<std::string, TermOccurrences> entries;
    std::map<std::string, std::set<std::string>> docs_with_term;
    for (const auto& doc : corpus.documents()) {
        for (const auto& sent : doc.sentences) {
            auto matches = fmm_match(trie, sent.normalized_tokens());
            for (const auto& m : matches) {
                entries[*m.payload].occurrences.push_back(
                    {doc.doc_id, sent.sent_index, m.token_begin, m.token_end});
                docs_with_term[*m.payload].insert(doc.doc_id);
            }
        }
    }
    for (auto& [term, rec] : entries) rec.document_count = docs_with_term[term].size();
    return OccurrenceIndex(std::move(entries), corpus.size());
}

}  // namespace bios
