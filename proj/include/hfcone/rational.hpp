#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "hfcone/error.hpp"

namespace hfcone {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Used for absolute Maslov gradings.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (d == 0) throw Error("rational with zero denominator");
        normalize();
    }

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    Rational operator-() const { return {-num_, den_}; }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    /// Largest integer <= this.
    [[nodiscard]] std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    [[nodiscard]] std::int64_t ceil() const { return -(-*this).floor(); }

    [[nodiscard]] std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "n" or "p/q".
    static std::optional<Rational> parse(std::string_view text) {
        auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
            if (s.empty()) return std::nullopt;
            std::size_t pos = 0;
            bool neg = false;
            if (s[0] == '-' || s[0] == '+') {
                neg = s[0] == '-';
                pos = 1;
            }
            if (pos == s.size()) return std::nullopt;
            std::int64_t v = 0;
            for (; pos < s.size(); ++pos) {
                if (s[pos] < '0' || s[pos] > '9') return std::nullopt;
                v = v * 10 + (s[pos] - '0');
            }
            return neg ? -v : v;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            auto n = parse_int(text);
            if (!n) return std::nullopt;
            return Rational(*n);
        }
        auto n = parse_int(text.substr(0, slash));
        auto d = parse_int(text.substr(slash + 1));
        if (!n || !d || *d == 0) return std::nullopt;
        return Rational(*n, *d);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace hfcone
