#pragma once
// Fixed-capacity color set over the color universe {0, ..., kMaxColors-1}.
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace lcw {

inline constexpr int kMaxColors = 512;

struct ColorSet {
    static constexpr int kWords = kMaxColors / 64;
    std::array<std::uint64_t, kWords> w{};

    static ColorSet of(std::initializer_list<int> colors) {
        ColorSet s;
        for (int c : colors) s.insert(c);
        return s;
    }
    static ColorSet range(int lo, int hi) {  // [lo, hi)
        ColorSet s;
        for (int c = lo; c < hi; ++c) s.insert(c);
        return s;
    }

    bool contains(int c) const { return (w[c >> 6] >> (c & 63)) & 1u; }
    void insert(int c) { w[c >> 6] |= (std::uint64_t{1} << (c & 63)); }
    void erase(int c) { w[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

    int size() const {
        int n = 0;
        for (auto x : w) n += __builtin_popcountll(x);
        return n;
    }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    ColorSet operator|(const ColorSet& o) const {
        ColorSet r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    ColorSet operator&(const ColorSet& o) const {
        ColorSet r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    ColorSet operator-(const ColorSet& o) const {
        ColorSet r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    ColorSet& operator|=(const ColorSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
        return *this;
    }
    ColorSet& operator&=(const ColorSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
        return *this;
    }
    ColorSet& operator-=(const ColorSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= ~o.w[i];
        return *this;
    }

    bool intersects(const ColorSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool subset_of(const ColorSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    bool operator==(const ColorSet& o) const { return w == o.w; }
    bool operator!=(const ColorSet& o) const { return !(*this == o); }

    // Smallest color, or -1 if empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w[i]) return i * 64 + __builtin_ctzll(w[i]);
        return -1;
    }
    // Smallest color > c, or -1.
    int next(int c) const {
        ++c;
        if (c >= kMaxColors) return -1;
        int i = c >> 6;
        std::uint64_t x = w[i] & (~std::uint64_t{0} << (c & 63));
        while (true) {
            if (x) return i * 64 + __builtin_ctzll(x);
            if (++i >= kWords) return -1;
            x = w[i];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int c = first(); c >= 0; c = next(c)) v.push_back(c);
        return v;
    }

    // Lexicographic order on the ascending color sequences.
    int compare(const ColorSet& o) const {
        int a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b ? -1 : 1;
            a = next(a);
            b = o.next(b);
        }
        if (a == b) return 0;
        return a < 0 ? -1 : 1;
    }
    bool operator<(const ColorSet& o) const { return compare(o) < 0; }

    std::string to_string() const {
        std::string s = "{";
        bool fst = true;
        for (int c = first(); c >= 0; c = next(c)) {
            if (!fst) s += ",";
            s += std::to_string(c);
            fst = false;
        }
        return s + "}";
    }
};

}  // namespace lcw
