#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "reisner/errors.hpp"

namespace reisner {

/// A face is a finite set of vertices with 1-based ids, stored as a 128-bit
/// set.  Vertex v occupies bit v-1.  All set operations are branch-free word
/// arithmetic; faces are cheap to copy and compare.
class Face {
public:
    static constexpr int max_vertices = 128;

    constexpr Face() = default;

    static Face of(std::initializer_list<int> vs) {
        Face f;
        for (int v : vs) f.set(v);
        return f;
    }

    static Face from_vertices(const std::vector<int>& vs) {
        Face f;
        for (int v : vs) f.set(v);
        return f;
    }

    /// Full vertex set {1, ..., n}.
    static Face full(int n) {
        if (n < 0 || n > max_vertices)
            throw ParameterError("Face::full: vertex count out of range");
        Face f;
        for (int v = 1; v <= n; ++v) f.set(v);
        return f;
    }

    void set(int v) {
        check(v);
        w_[(v - 1) >> 6] |= std::uint64_t{1} << ((v - 1) & 63);
    }

    void clear(int v) {
        check(v);
        w_[(v - 1) >> 6] &= ~(std::uint64_t{1} << ((v - 1) & 63));
    }

    bool contains(int v) const {
        if (v < 1 || v > max_vertices) return false;
        return (w_[(v - 1) >> 6] >> ((v - 1) & 63)) & 1u;
    }

    Face with(int v) const {
        Face f = *this;
        f.set(v);
        return f;
    }

    Face without(int v) const {
        Face f = *this;
        f.clear(v);
        return f;
    }

    int size() const {
        return __builtin_popcountll(w_[0]) + __builtin_popcountll(w_[1]);
    }

    bool empty() const { return w_[0] == 0 && w_[1] == 0; }

    bool subset_of(const Face& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    bool intersects(const Face& o) const {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }

    friend Face operator|(const Face& a, const Face& b) {
        Face f;
        f.w_[0] = a.w_[0] | b.w_[0];
        f.w_[1] = a.w_[1] | b.w_[1];
        return f;
    }

    friend Face operator&(const Face& a, const Face& b) {
        Face f;
        f.w_[0] = a.w_[0] & b.w_[0];
        f.w_[1] = a.w_[1] & b.w_[1];
        return f;
    }

    /// Set difference a \ b.
    friend Face operator-(const Face& a, const Face& b) {
        Face f;
        f.w_[0] = a.w_[0] & ~b.w_[0];
        f.w_[1] = a.w_[1] & ~b.w_[1];
        return f;
    }

    bool operator==(const Face& o) const = default;

    /// Smallest vertex, or 0 when empty.
    int min_vertex() const {
        if (w_[0]) return __builtin_ctzll(w_[0]) + 1;
        if (w_[1]) return __builtin_ctzll(w_[1]) + 65;
        return 0;
    }

    /// Largest vertex, or 0 when empty.
    int max_vertex() const {
        if (w_[1]) return 128 - __builtin_clzll(w_[1]);
        if (w_[0]) return 64 - __builtin_clzll(w_[0]);
        return 0;
    }

    /// Smallest vertex strictly greater than v, or 0 when none.
    int next_vertex(int v) const {
        if (v < 0) v = 0;
        if (v >= max_vertices) return 0;
        std::uint64_t lo = w_[0];
        std::uint64_t hi = w_[1];
        if (v < 64) {
            lo &= ~std::uint64_t{0} << v;  // keep bits >= v (vertex > v)
        } else {
            lo = 0;
            if (v > 64) hi &= ~std::uint64_t{0} << (v - 64);
        }
        if (lo) return __builtin_ctzll(lo) + 1;
        if (hi) return __builtin_ctzll(hi) + 65;
        return 0;
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = min_vertex(); v != 0; v = next_vertex(v)) out.push_back(v);
        return out;
    }

    /// Position of v among the sorted vertices (0-based); v must be present.
    int index_of(int v) const {
        int lo_bits;
        if (v <= 64) {
            lo_bits = __builtin_popcountll(w_[0] & ((std::uint64_t{1} << (v - 1)) - 1));
            return lo_bits;
        }
        lo_bits = __builtin_popcountll(w_[0]);
        std::uint64_t mask = (v == 65) ? 0 : ((std::uint64_t{1} << (v - 65)) - 1);
        return lo_bits + __builtin_popcountll(w_[1] & mask);
    }

    /// Order by the sorted vertex sequences (shorter prefix first).  Gives
    /// {1,2} < {1,2,4} < {1,3} < {2}.
    bool lex_less(const Face& o) const {
        std::uint64_t d0 = w_[0] ^ o.w_[0];
        std::uint64_t d1 = w_[1] ^ o.w_[1];
        if (d0 == 0 && d1 == 0) return false;
        int m = d0 ? __builtin_ctzll(d0) + 1 : __builtin_ctzll(d1) + 65;
        if (contains(m)) {
            // this has the smaller differing vertex; smaller unless the other
            // is a proper prefix (no vertex beyond m)
            return o.next_vertex(m) != 0;
        }
        // other has vertex m; this is smaller only when it stops before m
        return next_vertex(m) == 0;
    }

    std::uint64_t word(int i) const { return w_[static_cast<std::size_t>(i)]; }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int v = min_vertex(); v != 0; v = next_vertex(v)) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        s += "}";
        return s;
    }

private:
    static void check(int v) {
        if (v < 1 || v > max_vertices)
            throw ParameterError("vertex id " + std::to_string(v) +
                                 " outside [1," + std::to_string(max_vertices) + "]");
    }

    std::array<std::uint64_t, 2> w_{0, 0};
};

inline bool operator<(const Face& a, const Face& b) { return a.lex_less(b); }

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::uint64_t h = f.word(0) * 0x9e3779b97f4a7c15ull;
        h ^= f.word(1) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

} // namespace reisner
