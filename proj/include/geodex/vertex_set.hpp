#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace geodex {

// Vertex subset over 0..n-1 packed into a single machine word.
// The exact pipeline is capped at max_vertices so that every set and
// every interval mask stays one word wide.
class VertexSet {
public:
    using word_type = std::uint32_t;
    static constexpr int max_vertices = 26;

    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static constexpr VertexSet from_word(word_type w) {
        VertexSet s;
        s.bits_ = w;
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    // {0, 1, ..., n-1}
    static VertexSet full(int n) {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("VertexSet: universe size " + std::to_string(n) +
                                        " exceeds " + std::to_string(max_vertices));
        return from_word(n == 0 ? 0u : (word_type{1} << n) - 1u);
    }

    bool contains(int v) const { return v >= 0 && v < max_vertices && (bits_ >> v & 1u); }

    VertexSet& insert(int v) {
        check_range(v);
        bits_ |= word_type{1} << v;
        return *this;
    }

    VertexSet& erase(int v) {
        check_range(v);
        bits_ &= ~(word_type{1} << v);
        return *this;
    }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    word_type word() const { return bits_; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (word_type w = bits_; w != 0; w &= w - 1) out.push_back(std::countr_zero(w));
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (word_type w = bits_; w != 0; w &= w - 1) f(std::countr_zero(w));
    }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return from_word(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return from_word(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return from_word(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

private:
    static void check_range(int v) {
        if (v < 0 || v >= max_vertices)
            throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) +
                                        " out of range [0, " + std::to_string(max_vertices) + ")");
    }

    word_type bits_ = 0;
};

}  // namespace geodex
