#pragma once

// Subsets of {1,...,n} as bitmasks (bit h-1 <-> variable h).

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace almansi {

using Mask = std::uint32_t;

inline int mask_size(Mask m) { return std::popcount(m); }
inline Mask mask_bit(int h) { return Mask{1} << (h - 1); }          // variable h, 1-based
inline bool mask_contains(Mask m, int h) { return (m >> (h - 1)) & 1u; }
inline Mask mask_full(int n) { return (n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1); }

struct IndexSet {
    Mask bits{0};
    int n{0};

    IndexSet() = default;
    IndexSet(Mask bits_, int n_) : bits(bits_), n(n_) {
        if (n_ < 0 || n_ > 31) throw std::domain_error("IndexSet: bad variable count");
        if (bits_ & ~mask_full(n_)) throw std::domain_error("IndexSet: member exceeds n");
    }

    static IndexSet empty(int n) { return IndexSet(0, n); }
    static IndexSet full(int n) { return IndexSet(mask_full(n), n); }
    static IndexSet of(const std::vector<int>& members, int n) {
        Mask m = 0;
        for (int h : members) {
            if (h < 1 || h > n) throw std::domain_error("IndexSet: member exceeds n");
            m |= mask_bit(h);
        }
        return IndexSet(m, n);
    }
    // integer interval {1,...,m}
    static IndexSet interval(int m, int n) { return IndexSet(mask_full(m), n); }

    int size() const { return mask_size(bits); }
    bool contains(int h) const { return mask_contains(bits, h); }
    bool subset_of(const IndexSet& o) const { return (bits & ~o.bits) == 0; }
    bool is_interval() const { return bits == mask_full(size()); }

    IndexSet complement() const { return IndexSet(mask_full(n) & ~bits, n); }
    IndexSet set_union(const IndexSet& o) const { return IndexSet(bits | o.bits, n); }
    IndexSet set_intersection(const IndexSet& o) const { return IndexSet(bits & o.bits, n); }
    IndexSet set_difference(const IndexSet& o) const { return IndexSet(bits & ~o.bits, n); }
    IndexSet sym_difference(const IndexSet& o) const { return IndexSet(bits ^ o.bits, n); }

    // ascending 1-based members
    std::vector<int> members() const {
        std::vector<int> out;
        for (int h = 1; h <= n; ++h)
            if (contains(h)) out.push_back(h);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int h : members()) {
            if (!first) s += ',';
            s += std::to_string(h);
            first = false;
        }
        return s + "}";
    }

    bool operator==(const IndexSet&) const = default;
};

// Iterate all subsets of `super` (as masks), including empty and super itself.
inline std::vector<Mask> subsets_of(Mask super) {
    std::vector<Mask> out;
    Mask sub = 0;
    while (true) {
        out.push_back(sub);
        if (sub == super) break;
        sub = (sub - super) & super;  // next subset in enumeration order
    }
    return out;
}

}  // namespace almansi
