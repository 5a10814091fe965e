#pragma once

#include <cstdint>
#include <vector>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace rainbow {

// Fixed-capacity set of small integer ids backed by 64-bit words.
// Tagged so that colour sets, vertex sets and edge sets do not mix.
template <class Tag>
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(int capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {
        if (capacity < 0) throw std::invalid_argument("IndexSet: negative capacity");
    }

    static IndexSet full(int capacity) {
        IndexSet s(capacity);
        for (int i = 0; i < capacity; ++i) s.insert(i);
        return s;
    }

    int capacity() const { return capacity_; }

    bool contains(int i) const {
        assert(i >= 0 && i < capacity_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void insert(int i) {
        assert(i >= 0 && i < capacity_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void erase(int i) {
        assert(i >= 0 && i < capacity_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool is_subset_of(const IndexSet& other) const {
        assert(capacity_ == other.capacity_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    IndexSet& operator|=(const IndexSet& o) {
        assert(capacity_ == o.capacity_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    IndexSet& operator&=(const IndexSet& o) {
        assert(capacity_ == o.capacity_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }

    IndexSet complement() const {
        IndexSet r(capacity_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    IndexSet without(int i) const {
        IndexSet r = *this;
        r.erase(i);
        return r;
    }

    bool operator==(const IndexSet& o) const {
        return capacity_ == o.capacity_ && words_ == o.words_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = 0; i < capacity_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    template <class It>
    static IndexSet of(int capacity, It first, It last) {
        IndexSet s(capacity);
        for (; first != last; ++first) s.insert(*first);
        return s;
    }

    static IndexSet of(int capacity, std::initializer_list<int> ids) {
        return of(capacity, ids.begin(), ids.end());
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    void trim() {
        if (capacity_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (capacity_ % 64)) - 1;
    }

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ColorTag {};
struct VertexTag {};
struct EdgeTag {};

using ColorSet = IndexSet<ColorTag>;
using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

}  // namespace rainbow
