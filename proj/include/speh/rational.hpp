#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace speh {

// Exact rational on int64, kept normalized (coprime, positive denominator).
// All quantities in this calculus are tiny: half-integer twist exponents and
// alpha values inside (0,1/2), so no overflow handling beyond normalization.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(long long n) : num_(n) {} // NOLINT: implicit by design
    Rat(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool isInteger() const { return den_ == 1; }
    bool isZero() const { return num_ == 0; }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(Rat a, Rat b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }
    friend bool operator<(Rat a, Rat b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator>(Rat a, Rat b) { return b < a; }
    friend bool operator<=(Rat a, Rat b) { return !(b < a); }
    friend bool operator>=(Rat a, Rat b) { return !(a < b); }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    // Accepts INT, INT/INT and a leading '-'; nullopt on anything else.
    static std::optional<Rat> parse(std::string_view text) {
        bool neg = false;
        while (!text.empty() && text.front() == '-') {
            neg = !neg;
            text.remove_prefix(1);
        }
        if (text.empty()) return std::nullopt;
        auto digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        long long n = 0;
        long long d = 1;
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!digits(text)) return std::nullopt;
            n = std::strtoll(std::string(text).c_str(), nullptr, 10);
        } else {
            auto a = text.substr(0, slash);
            auto b = text.substr(slash + 1);
            if (!digits(a) || !digits(b)) return std::nullopt;
            n = std::strtoll(std::string(a).c_str(), nullptr, 10);
            d = std::strtoll(std::string(b).c_str(), nullptr, 10);
            if (d == 0) return std::nullopt;
        }
        return Rat(neg ? -n : n, d);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace speh
