#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace rootpat {

/// Dense set of positive-root indices of one fixed root system.
/// Capacity 128 covers every supported system (E8 has 120 positive roots).
class Pattern {
public:
    static constexpr int kCapacity = 128;

    constexpr Pattern() : w_{0, 0} {}

    Pattern(std::initializer_list<int> idxs) : w_{0, 0} {
        for (int i : idxs) set(i);
    }

    static Pattern first_n(int n) {
        Pattern p;
        for (int i = 0; i < n; ++i) p.set(i);
        return p;
    }

    bool test(int i) const { return (w_[unsigned(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) {
        check(i);
        w_[unsigned(i) >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) { w_[unsigned(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const {
        return std::popcount(w_[0]) + std::popcount(w_[1]);
    }
    bool empty() const { return (w_[0] | w_[1]) == 0; }

    bool operator==(const Pattern&) const = default;

    Pattern operator|(const Pattern& o) const { return Pattern(w_[0] | o.w_[0], w_[1] | o.w_[1]); }
    Pattern operator&(const Pattern& o) const { return Pattern(w_[0] & o.w_[0], w_[1] & o.w_[1]); }
    /// Set difference.
    Pattern operator-(const Pattern& o) const { return Pattern(w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]); }
    Pattern& operator|=(const Pattern& o) { w_[0] |= o.w_[0]; w_[1] |= o.w_[1]; return *this; }
    Pattern& operator&=(const Pattern& o) { w_[0] &= o.w_[0]; w_[1] &= o.w_[1]; return *this; }
    Pattern& operator-=(const Pattern& o) { w_[0] &= ~o.w_[0]; w_[1] &= ~o.w_[1]; return *this; }

    bool subset_of(const Pattern& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }
    bool intersects(const Pattern& o) const {
        return (w_[0] & o.w_[0]) | (w_[1] & o.w_[1]);
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int word = 0; word < 2; ++word) {
            uint64_t w = w_[word];
            while (w) {
                int i = std::countr_zero(w);
                f(word * 64 + i);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

private:
    Pattern(uint64_t a, uint64_t b) : w_{a, b} {}
    static void check(int i) {
        if (i < 0 || i >= kCapacity) throw std::out_of_range("Pattern index out of range");
    }
    std::array<uint64_t, 2> w_;
};

}  // namespace rootpat
