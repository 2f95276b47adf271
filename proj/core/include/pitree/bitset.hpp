#ifndef PITREE_BITSET_HPP
#define PITREE_BITSET_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pitree {

// Fixed-universe dynamic bitset. Also serves as the VertexSet type: a
// subset of {0..n-1} for a graph on n vertices. Binary operations require
// both operands to share the same universe.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe);
    static Bitset of(int universe, std::initializer_list<int> members);
    static Bitset full(int universe);

    int universe() const { return n_; }

    bool test(int i) const;
    void set(int i);
    void reset(int i);

    int count() const;
    bool empty() const { return count() == 0; }

    bool contains(const Bitset& other) const; // superset test
    bool intersects(const Bitset& other) const;

    Bitset& operator|=(const Bitset& other);
    Bitset& operator&=(const Bitset& other);
    Bitset& subtract(const Bitset& other); // this \ other, in place

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    Bitset minus(const Bitset& other) const;
    Bitset complement() const; // within the universe

    int first() const;        // smallest member, or -1
    int next(int after) const; // smallest member > after, or -1

    std::vector<int> members() const;

    template <typename F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    bool operator==(const Bitset& other) const = default;

    std::span<const std::uint64_t> words() const { return words_; }

private:
    void check_range(int i) const;
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace pitree

#endif // PITREE_BITSET_HPP
