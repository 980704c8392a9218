#pragma once

#include <numeric>
#include <string>

namespace abjad {

/// Non-negative fraction over an unsigned integer type. Values are kept as
/// given (unreduced) so the dot-sum / length provenance stays visible.
template <class UInt>
struct Ratio {
    UInt num{0};
    UInt den{1};

    constexpr UInt floor() const { return num / den; }

    /// Round half away from zero. For non-negative values this rounds ties up.
    constexpr UInt round_half_away() const {
        const UInt q = num / den;
        const UInt r = num % den;
        return r >= den - r ? q + 1 : q;
    }

    constexpr Ratio reduced() const {
        UInt a = num, b = den;
        while (b != 0) {
            UInt t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? Ratio{0, 1} : Ratio{num / a, den / a};
    }

    /// Value equality, independent of representation.
    friend constexpr bool operator==(const Ratio& l, const Ratio& r) {
        const Ratio a = l.reduced(), b = r.reduced();
        return a.num == b.num && a.den == b.den;
    }
};

/// Decimal rendering that also works for unsigned __int128.
template <class UInt>
std::string to_decimal(UInt v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

template <class UInt>
std::string to_string(const Ratio<UInt>& r) {
    return to_decimal(r.num) + "/" + to_decimal(r.den);
}

/// Fixed-point rendering with `places` decimals, rounded half away from zero,
/// computed on integers.
template <class UInt>
std::string to_fixed(const Ratio<UInt>& r, int places) {
    UInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const UInt scaled = Ratio<UInt>{r.num * scale, r.den}.round_half_away();
    if (places <= 0) return to_decimal(scaled);
    std::string frac = to_decimal(scaled % scale);
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    return to_decimal(scaled / scale) + "." + frac;
}

} // namespace abjad
