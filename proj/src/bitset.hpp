#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "co31/embedding.hpp"

namespace co31::detail {

class Bits {
public:
    explicit Bits(int n) : words_((n + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= bit(i); }
    void reset(int i) { words_[i >> 6] &= ~bit(i); }
    bool test(int i) const { return (words_[i >> 6] & bit(i)) != 0; }

    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t w) const { return words_[w]; }
    std::uint64_t& word(std::size_t w) { return words_[w]; }

    int first() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
        }
        return -1;
    }

    bool operator==(const Bits&) const = default;

private:
    static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

    std::vector<std::uint64_t> words_;
};

class AdjacencyBits {
public:
    explicit AdjacencyBits(const Embedding& e) : rows_(e.size(), Bits(e.size())) {
        for (Vertex v = 0; v < e.size(); ++v) {
            for (Vertex w : e.rotation[v]) rows_[v].set(w);
        }
    }

    // Whether the vertices flagged in `allowed` induce a connected graph.
    bool connected(const Bits& allowed) const {
        const int start = allowed.first();
        if (start < 0) return true;
        Bits seen(static_cast<int>(rows_.size()));
        seen.set(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            const Bits& row = rows_[v];
            for (std::size_t w = 0; w < row.word_count(); ++w) {
                std::uint64_t fresh = row.word(w) & allowed.word(w) & ~seen.word(w);
                seen.word(w) |= fresh;
                while (fresh) {
                    stack.push_back(static_cast<int>(w * 64 + std::countr_zero(fresh)));
                    fresh &= fresh - 1;
                }
            }
        }
        return seen == allowed;
    }

private:
    std::vector<Bits> rows_;
};

}  // namespace co31::detail
