#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace pathhom {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_string(const Integer& value) { return value.str(); }

namespace detail {

struct Overflow : std::exception {
    const char* what() const noexcept override { return "int64 overflow"; }
};

// int64 that throws Overflow instead of wrapping. Normal-form routines run on
// this first and restart on Integer when an intermediate leaves the range.
class Checked64 {
public:
    Checked64() = default;
    Checked64(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    std::int64_t value() const { return v_; }

    friend Checked64 operator+(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
        return r;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
        return r;
    }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
        return r;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw Overflow{};
        return a.v_ / b.v_;
    }
    friend Checked64 operator%(Checked64 a, Checked64 b) {
        if (b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }
    Checked64 operator-() const {
        if (v_ == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
        return -v_;
    }
    Checked64& operator+=(Checked64 o) { return *this = *this + o; }
    Checked64& operator-=(Checked64 o) { return *this = *this - o; }
    Checked64& operator*=(Checked64 o) { return *this = *this * o; }

    friend bool operator==(Checked64 a, Checked64 b) { return a.v_ == b.v_; }
    friend auto operator<=>(Checked64 a, Checked64 b) { return a.v_ <=> b.v_; }

private:
    std::int64_t v_ = 0;
};

inline Checked64 abs_value(Checked64 x) { return x < Checked64(0) ? -x : x; }
inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline bool is_zero(Checked64 x) { return x == Checked64(0); }
inline bool is_zero(const Integer& x) { return x.is_zero(); }

// Quotient rounded toward negative infinity.
template <class T>
T floor_div(const T& a, const T& b) {
    T q = a / b;
    T r = a - q * b;
    if (!is_zero(r) && ((r < T(0)) != (b < T(0)))) q = q - T(1);
    return q;
}

template <class T>
T convert_to(const Integer& x);

template <>
inline Integer convert_to<Integer>(const Integer& x) { return x; }

template <>
inline Checked64 convert_to<Checked64>(const Integer& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw Overflow{};
    return Checked64(static_cast<std::int64_t>(x));
}

inline Integer to_integer(const Integer& x) { return x; }
inline Integer to_integer(Checked64 x) { return Integer(x.value()); }

}  // namespace detail
}  // namespace pathhom
