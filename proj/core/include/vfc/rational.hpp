#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "vfc/errors.hpp"

namespace vfc {

// Exact rational with a small numerator/denominator. Valuations in this
// library live in (1/e)Z for tiny e, so 64-bit components are ample.
struct Rat {
    long long num = 0;
    long long den = 1;  // always > 0

    constexpr Rat() = default;
    constexpr Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num * b.num, a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw DivisionByZero("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return a.num * b.den <=> b.num * a.den;
    }

    bool is_integer() const { return den == 1; }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// An element of the value-group sort Gamma together with the distinguished
// top element infinity (the value of 0). infinity + x = infinity, and
// infinity compares strictly above every finite value.
struct ValueQ {
    bool infinite = false;
    Rat value;  // meaningful only when !infinite

    constexpr ValueQ() = default;
    ValueQ(Rat r) : infinite(false), value(r) {}
    ValueQ(long long n) : infinite(false), value(n) {}
    static ValueQ infinity() {
        ValueQ v;
        v.infinite = true;
        return v;
    }

    friend ValueQ operator+(const ValueQ& a, const ValueQ& b) {
        if (a.infinite || b.infinite) return infinity();
        return ValueQ(a.value + b.value);
    }
    friend ValueQ operator*(long long k, const ValueQ& a) {
        if (a.infinite) return infinity();
        return ValueQ(Rat(k) * a.value);
    }

    friend bool operator==(const ValueQ& a, const ValueQ& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }
    // a < b with infinity on top; never (infinity < x).
    friend bool operator<(const ValueQ& a, const ValueQ& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator<=(const ValueQ& a, const ValueQ& b) { return a == b || a < b; }

    std::string str() const { return infinite ? "inf" : value.str(); }
};

}  // namespace vfc
