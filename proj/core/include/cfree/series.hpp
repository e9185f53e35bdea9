#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <cfree/partitions.hpp>
#include <cfree/scalar.hpp>

namespace cfree {

/// Formal power series c_0 + c_1 z + ... + c_N z^N, everything above N dropped.
template <Scalar T>
class Series {
public:
    using value_type = T;

    explicit Series(std::size_t order = 0) : coeffs_(order + 1, T{0}) {}

    /// Shorter coefficient lists are zero-padded; longer ones are rejected.
    Series(std::size_t order, std::vector<T> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() > order + 1) {
            throw std::invalid_argument("series has more coefficients than its order allows");
        }
        coeffs_.resize(order + 1, T{0});
    }

    static Series identity(std::size_t order)
    {
        Series s(order);
        if (order >= 1) {
            s.coeffs_[1] = T{1};
        }
        return s;
    }

    static Series constant(std::size_t order, T c)
    {
        Series s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<T> &coeffs() const { return coeffs_; }

    const T &operator[](std::size_t i) const { return at(i); }
    const T &at(std::size_t i) const
    {
        if (i > order()) {
            throw std::out_of_range("coefficient " + std::to_string(i) + " beyond series order " +
                                    std::to_string(order()));
        }
        return coeffs_[i];
    }

    Series &set(std::size_t i, T v)
    {
        if (i > order()) {
            throw std::out_of_range("coefficient " + std::to_string(i) + " beyond series order " +
                                    std::to_string(order()));
        }
        coeffs_[i] = std::move(v);
        return *this;
    }

    /// Keeps coefficients 0..k; k must not exceed the current order.
    Series truncated(std::size_t k) const
    {
        if (k > order()) {
            throw std::invalid_argument("cannot truncate a series to a higher order");
        }
        return Series(k, std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k) + 1));
    }

    bool is_zero() const
    {
        for (const auto &c : coeffs_) {
            if (!(c == T{0})) {
                return false;
            }
        }
        return true;
    }

    Series &operator+=(const Series &o)
    {
        check_same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        }
        return *this;
    }

    Series &operator-=(const Series &o)
    {
        check_same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        }
        return *this;
    }

    Series &operator*=(const Series &o)
    {
        check_same_order(o);
        const std::size_t n = order();
        std::vector<T> out(n + 1, T{0});
        for (std::size_t i = 0; i <= n; ++i) {
            if (coeffs_[i] == T{0}) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        coeffs_ = std::move(out);
        return *this;
    }

    Series &operator*=(const T &c)
    {
        for (auto &x : coeffs_) {
            x = x * c;
        }
        return *this;
    }

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator*(Series a, const Series &b) { return a *= b; }
    friend Series operator*(Series a, const T &c) { return a *= c; }
    friend Series operator*(const T &c, Series a) { return a *= c; }
    friend Series operator-(Series a)
    {
        for (auto &x : a.coeffs_) {
            x = T{0} - x;
        }
        return a;
    }

    friend bool operator==(const Series &, const Series &) = default;

private:
    void check_same_order(const Series &o) const
    {
        if (o.order() != order()) {
            throw std::invalid_argument("series orders differ (" + std::to_string(order()) + " vs " +
                                        std::to_string(o.order()) + ")");
        }
    }

    std::vector<T> coeffs_;
};

/// f(g(z)); requires g(0) = 0 and equal orders.
template <Scalar T>
Series<T> compose(const Series<T> &f, const Series<T> &g);

/// Compositional inverse; requires f(0) = 0 and f'(0) != 0.
template <Scalar T>
Series<T> invert_composition(const Series<T> &f);

/// Multiplicative inverse; requires f(0) != 0.
template <Scalar T>
Series<T> reciprocal(const Series<T> &f);

/// f/z for f(0) = 0. The result has order one less than f.
template <Scalar T>
Series<T> divide_by_z(const Series<T> &f);

/// z f. The result has order one more than f.
template <Scalar T>
Series<T> multiply_by_z(const Series<T> &f);

/// Raises the order by padding with zeros.
template <Scalar T>
Series<T> extended(const Series<T> &f, std::size_t order);

/// Largest coefficient distance; both series must have the same order.
template <Scalar T>
double max_abs_diff(const Series<T> &a, const Series<T> &b);

Series<ComplexDouble> to_approx(const Series<ComplexRational> &s);
inline const Series<ComplexDouble> &to_approx(const Series<ComplexDouble> &s) { return s; }

enum class IndexShift { none, minus_one };

/// Product over blocks of the coefficient at the block size (or size - 1).
template <Scalar T>
T cf_weight(std::span<const int> block_sizes, const Series<T> &f, IndexShift shift = IndexShift::none);

template <Scalar T>
T cf_weight(const NCPartition &p, const Series<T> &f, IndexShift shift = IndexShift::none);

template <Scalar T>
T cf_weight(const NCLinkedPartition &g, const Series<T> &f, IndexShift shift = IndexShift::none);

/// gamma_n = sum over NC(n) of Cf_pi(f) Cf_Kr(pi)(g). Needs f(0) = g(0) = 0
/// and an order within the NC enumeration limit.
template <Scalar T>
Series<T> boxed_convolution(const Series<T> &f, const Series<T> &g);

/// Same sum restricted to partitions having {1} as a block.
template <Scalar T>
Series<T> boxed_convolution_checked(const Series<T> &f, const Series<T> &g);

} // namespace cfree
