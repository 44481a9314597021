#pragma once

// Forward maximum matching over token sequences. The trie is keyed by
// normalized token strings; each accepted entry carries a payload (for the
// dictionary this is the canonical term string).

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bios {

template <typename Payload>
class TokenTrie {
public:
    struct Node {
        std::map<std::string, size_t> children;
        std::optional<Payload> payload;
    };

    TokenTrie() { nodes_.emplace_back(); }

    // Inserts a token sequence; the last write to a key wins.
    void insert(const std::vector<std::string>& key, Payload payload) {
        if (key.empty()) return;
        size_t cur = 0;
        for (const auto& tok : key) {
            auto it = nodes_[cur].children.find(tok);
            if (it == nodes_[cur].children.end()) {
                nodes_.emplace_back();
                it = nodes_[cur].children.emplace(tok, nodes_.size() - 1).first;
            }
            cur = it->second;
        }
        if (nodes_[cur].payload) ++overwrites_;
        nodes_[cur].payload = std::move(payload);
    }

    // Longest entry starting at tokens[pos]; returns (length, payload).
    std::optional<std::pair<size_t, const Payload*>> longest_match(
        const std::vector<std::string>& tokens, size_t pos) const {
        size_t cur = 0;
        std::optional<std::pair<size_t, const Payload*>> best;
        for (size_t i = pos; i < tokens.size(); ++i) {
            auto it = nodes_[cur].children.find(tokens[i]);
            if (it == nodes_[cur].children.end()) break;
            cur = it->second;
            if (nodes_[cur].payload) best = {i - pos + 1, &*nodes_[cur].payload};
        }
        return best;
    }

    const Payload* lookup(const std::vector<std::string>& key) const {
        size_t cur = 0;
        for (const auto& tok : key) {
            auto it = nodes_[cur].children.find(tok);
            if (it == nodes_[cur].children.end()) return nullptr;
            cur = it->second;
        }
        return nodes_[cur].payload ? &*nodes_[cur].payload : nullptr;
    }

    size_t node_count() const { return nodes_.size(); }
    size_t overwrite_count() const { return overwrites_; }

private:
    std::vector<Node> nodes_;
    size_t overwrites_ = 0;
};

// One dictionary hit inside a token sequence; indices are half-open.
template <typename Payload>
struct FmmMatch {
    size_t token_begin = 0;
    size_t token_end = 0;
    const Payload* payload = nullptr;
};

// Scans left to right: at each position take the longest dictionary entry
// starting there and jump past it, otherwise advance by one token. Matches
// never overlap and appear in position order.
template <typename Payload>
std::vector<FmmMatch<Payload>> fmm_match(const TokenTrie<Payload>& trie,
                                         const std::vector<std::string>& tokens) {
    std::vector<FmmMatch<Payload>> out;
    size_t pos = 0;
    while (pos < tokens.size()) {
        auto hit = trie.longest_match(tokens, pos);
        if (hit) {
            out.push_back({pos, pos + hit->first, hit->second});
            pos += hit->first;
        } else {
            ++pos;
        }
    }
    return out;
}

}  // namespace bios
