#pragma once

#include <compare>
#include <string>

namespace planarcol {

/// Exact rational with denominator 2. Charges in the discharging rules only
/// ever take half-integer values, so a doubled integer is all we store.
class Half {
public:
    constexpr Half() = default;
    constexpr Half(int whole) : twice_(2 * whole) {}

    static constexpr auto from_twice(int twice) -> Half
    {
        Half h;
        h.twice_ = twice;
        return h;
    }

    constexpr auto twice() const -> int { return twice_; }
    constexpr auto is_integer() const -> bool { return twice_ % 2 == 0; }

    constexpr auto operator+=(Half o) -> Half& { twice_ += o.twice_; return *this; }
    constexpr auto operator-=(Half o) -> Half& { twice_ -= o.twice_; return *this; }
    friend constexpr auto operator+(Half a, Half b) -> Half { return a += b; }
    friend constexpr auto operator-(Half a, Half b) -> Half { return a -= b; }
    friend constexpr auto operator-(Half a) -> Half { return from_twice(-a.twice_); }
    friend constexpr auto operator==(Half, Half) -> bool = default;
    friend constexpr auto operator<=>(Half, Half) = default;

    /// "p/2" form used by the machine-readable reports.
    auto over_two() const -> std::string { return std::to_string(twice_) + "/2"; }

    /// Reduced form for humans: "3", "-1/2".
    auto str() const -> std::string
    {
        if (is_integer())
            return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    int twice_ = 0;
};

}  // namespace planarcol
