#pragma once

#include <complex>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cfree {

/// Complex number with arbitrary-precision rational real and imaginary parts.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(long re) : re_(re) {} // NOLINT: implicit like the builtin numbers
    ComplexRational(mpq_class re, mpq_class im = 0);

    /// Parses "p/q" (or an integer) for each part.
    static ComplexRational parse(std::string_view re, std::string_view im = "0");

    const mpq_class &real() const { return re_; }
    const mpq_class &imag() const { return im_; }

    ComplexRational conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    ComplexRational &operator+=(const ComplexRational &o);
    ComplexRational &operator-=(const ComplexRational &o);
    ComplexRational &operator*=(const ComplexRational &o);
    /// Throws std::domain_error on division by zero.
    ComplexRational &operator/=(const ComplexRational &o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational &b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational &b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational &b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational &b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational &a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const ComplexRational &a, const ComplexRational &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend std::ostream &operator<<(std::ostream &os, const ComplexRational &x);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

using ComplexDouble = std::complex<double>;

/// Compile-time description of a coefficient field.
template <typename T>
struct field_traits;

template <>
struct field_traits<ComplexRational> {
    static constexpr bool exact = true;
    static constexpr std::string_view mode = "exact";
};

template <>
struct field_traits<ComplexDouble> {
    static constexpr bool exact = false;
    static constexpr std::string_view mode = "approx";
};

template <typename T>
concept Scalar = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    field_traits<T>::exact;
};

template <Scalar T>
bool is_zero(const T &x)
{
    return x == T{0};
}

/// Power with a nonnegative integer exponent.
template <Scalar T>
T ipow(T base, unsigned exponent)
{
    T result{1};
    while (exponent != 0) {
        if (exponent & 1u) {
            result = result * base;
        }
        base = base * base;
        exponent >>= 1u;
    }
    return result;
}

ComplexDouble to_complex(const ComplexRational &x);
inline ComplexDouble to_complex(const ComplexDouble &x) { return x; }

std::string to_string(const mpq_class &q);

} // namespace cfree
