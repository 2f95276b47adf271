#include "pitree/bitset.hpp"

#include "pitree/errors.hpp"

#include <bit>

namespace pitree {

namespace {
constexpr int kWordBits = 64;
int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }
} // namespace

Bitset::Bitset(int universe) : n_(universe), words_(word_count(universe), 0) {
    if (universe < 0) throw InputError("bitset universe must be nonnegative");
}

Bitset Bitset::of(int universe, std::initializer_list<int> members) {
    Bitset b(universe);
    for (int v : members) b.set(v);
    return b;
}

Bitset Bitset::full(int universe) {
    Bitset b(universe);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    if (universe % kWordBits != 0 && !b.words_.empty())
        b.words_.back() &= (std::uint64_t{1} << (universe % kWordBits)) - 1;
    return b;
}

void Bitset::check_range(int i) const {
    if (i < 0 || i >= n_) throw InputError("bitset index out of range");
}

bool Bitset::test(int i) const {
    check_range(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void Bitset::set(int i) {
    check_range(i);
    words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void Bitset::reset(int i) {
    check_range(i);
    words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

int Bitset::count() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool Bitset::contains(const Bitset& other) const {
    if (n_ != other.n_) throw InputError("bitset universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (other.words_[i] & ~words_[i]) return false;
    return true;
}

bool Bitset::intersects(const Bitset& other) const {
    if (n_ != other.n_) throw InputError("bitset universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

Bitset& Bitset::operator|=(const Bitset& other) {
    if (n_ != other.n_) throw InputError("bitset universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
    if (n_ != other.n_) throw InputError("bitset universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
    if (n_ != other.n_) throw InputError("bitset universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

Bitset Bitset::minus(const Bitset& other) const {
    Bitset r = *this;
    r.subtract(other);
    return r;
}

Bitset Bitset::complement() const {
    return full(n_).minus(*this);
}

int Bitset::first() const {
    return next(-1);
}

int Bitset::next(int after) const {
    int start = after + 1;
    if (start >= n_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) / kWordBits;
    std::uint64_t w = words_[wi] >> (start % kWordBits);
    if (w != 0) return start + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi)
        if (words_[wi] != 0)
            return static_cast<int>(wi) * kWordBits + std::countr_zero(words_[wi]);
    return -1;
}

std::vector<int> Bitset::members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

} // namespace pitree
