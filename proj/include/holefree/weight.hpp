#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace holefree {

/// Exact nonnegative decimal, stored as an integer count of millionths.
class Weight {
public:
    static constexpr std::int64_t kScale = 1'000'000;
    static constexpr int kDecimals = 6;
    /// Largest integer part accepted by the parser; keeps sums over 10^6
    /// vertices far from overflow.
    static constexpr std::int64_t kMaxIntegerPart = 1'000'000'000'000;

    constexpr Weight() = default;
    static constexpr Weight from_units(std::int64_t units) { return Weight(units); }
    static constexpr Weight from_integer(std::int64_t value) { return Weight(value * kScale); }

    /// Parses "12", "2.5", "0.000001". Returns nullopt on anything else,
    /// including a sign, exponent, or more than six decimals.
    static std::optional<Weight> parse(std::string_view text) {
        if (text.empty()) return std::nullopt;
        auto dot = text.find('.');
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
        if (ip.empty() && fp.empty()) return std::nullopt;
        if (dot != std::string_view::npos && fp.empty()) return std::nullopt;
        if (fp.size() > static_cast<std::size_t>(kDecimals)) return std::nullopt;
        auto all_digits = [](std::string_view s) {
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        if (!all_digits(ip) || !all_digits(fp)) return std::nullopt;
        std::int64_t integer = 0;
        if (!ip.empty()) {
            if (ip.size() > 13) return std::nullopt;
            std::from_chars(ip.data(), ip.data() + ip.size(), integer);
            if (integer > kMaxIntegerPart) return std::nullopt;
        }
        std::int64_t frac = 0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(kDecimals); ++i)
            frac = frac * 10 + (i < fp.size() ? fp[i] - '0' : 0);
        return Weight(integer * kScale + frac);
    }

    constexpr std::int64_t units() const noexcept { return units_; }
    constexpr bool is_zero() const noexcept { return units_ == 0; }
    double to_double() const noexcept { return static_cast<double>(units_) / kScale; }

    /// Shortest exact decimal text: "2.5", "3", "0.000001".
    std::string to_string() const {
        std::string s = std::to_string(units_ / kScale);
        std::int64_t frac = units_ % kScale;
        if (frac != 0) {
            std::string f = std::to_string(frac);
            f.insert(0, static_cast<std::size_t>(kDecimals) - f.size(), '0');
            while (f.back() == '0') f.pop_back();
            s += '.' + f;
        }
        return s;
    }

    constexpr Weight& operator+=(Weight o) noexcept {
        units_ += o.units_;
        return *this;
    }
    constexpr Weight& operator-=(Weight o) noexcept {
        units_ -= o.units_;
        return *this;
    }
    friend constexpr Weight operator+(Weight a, Weight b) noexcept { return a += b; }
    friend constexpr Weight operator-(Weight a, Weight b) noexcept { return a -= b; }
    /// Scales by a nonnegative integer.
    friend constexpr Weight operator*(Weight a, std::int64_t k) noexcept { return Weight(a.units_ * k); }

    constexpr auto operator<=>(const Weight&) const noexcept = default;

private:
    constexpr explicit Weight(std::int64_t units) : units_(units) {}
    std::int64_t units_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Weight w) { return os << w.to_string(); }

}  // namespace holefree
