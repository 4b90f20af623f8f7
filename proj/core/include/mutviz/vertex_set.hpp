#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mutviz {

inline constexpr int kMaxVertices = 64;

// Subset of vertices 0..63 packed into one machine word.  The universe size
// is not stored; operations that need it take the graph as well.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }

    static constexpr VertexSet universe(int n) {
        if (n <= 0) return VertexSet(0);
        if (n >= kMaxVertices) return VertexSet(~std::uint64_t{0});
        return VertexSet((std::uint64_t{1} << n) - 1);
    }

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & std::uint64_t{1}; }

    void add(int v) { bits_ |= std::uint64_t{1} << v; }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet complement_in(int n) const { return universe(n) - *this; }
    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool operator==(const VertexSet&) const = default;

    // Lowest member, or -1 when empty.
    constexpr int lowest() const {
        return bits_ == 0 ? -1 : std::countr_zero(bits_);
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = bits_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

private:
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

}  // namespace mutviz
