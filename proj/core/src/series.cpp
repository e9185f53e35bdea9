#include <cfree/series.hpp>

#include <algorithm>
#include <cmath>

#include <cfree/errors.hpp>

namespace cfree {

template <Scalar T>
Series<T> compose(const Series<T> &f, const Series<T> &g)
{
    if (f.order() != g.order()) {
        throw std::invalid_argument("compose: series orders differ");
    }
    if (!is_zero(g[0])) {
        throw std::domain_error("compose: inner series must vanish at 0");
    }
    const std::size_t n = f.order();
    Series<T> result = Series<T>::constant(n, f[n]);
    for (std::size_t i = n; i-- > 0;) {
        result *= g;
        result.set(0, result[0] + f[i]);
    }
    return result;
}

template <Scalar T>
Series<T> invert_composition(const Series<T> &f)
{
    if (!is_zero(f[0])) {
        throw std::domain_error("invert_composition: series must vanish at 0");
    }
    const std::size_t n = f.order();
    if (n == 0) {
        return Series<T>(0);
    }
    if (is_zero(f[1])) {
        throw std::domain_error("invert_composition: linear coefficient is zero");
    }
    // Fix g_k one at a time: raising g_k shifts [z^k] f(g) by f_1 g_k and
    // leaves lower coefficients alone.
    Series<T> g(n);
    g.set(1, T{1} / f[1]);
    for (std::size_t k = 2; k <= n; ++k) {
        const Series<T> fg = compose(f, g);
        g.set(k, T{0} - fg[k] / f[1]);
    }
    return g;
}

template <Scalar T>
Series<T> reciprocal(const Series<T> &f)
{
    if (is_zero(f[0])) {
        throw std::domain_error("reciprocal: constant term is zero");
    }
    const std::size_t n = f.order();
    Series<T> g(n);
    const T inv0 = T{1} / f[0];
    g.set(0, inv0);
    for (std::size_t k = 1; k <= n; ++k) {
        T acc{0};
        for (std::size_t j = 1; j <= k; ++j) {
            acc = acc + f[j] * g[k - j];
        }
        g.set(k, T{0} - acc * inv0);
    }
    return g;
}

template <Scalar T>
Series<T> divide_by_z(const Series<T> &f)
{
    if (!is_zero(f[0])) {
        throw std::domain_error("divide_by_z: constant term is not zero");
    }
    if (f.order() == 0) {
        throw std::invalid_argument("divide_by_z: series of order 0 has nothing left");
    }
    return Series<T>(f.order() - 1, std::vector<T>(f.coeffs().begin() + 1, f.coeffs().end()));
}

template <Scalar T>
Series<T> multiply_by_z(const Series<T> &f)
{
    std::vector<T> c;
    c.reserve(f.order() + 2);
    c.push_back(T{0});
    c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
    return Series<T>(f.order() + 1, std::move(c));
}

template <Scalar T>
Series<T> extended(const Series<T> &f, std::size_t order)
{
    if (order < f.order()) {
        throw std::invalid_argument("extended: target order is lower than the series order");
    }
    return Series<T>(order, f.coeffs());
}

template <Scalar T>
double max_abs_diff(const Series<T> &a, const Series<T> &b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("max_abs_diff: series orders differ");
    }
    double d = 0;
    for (std::size_t i = 0; i <= a.order(); ++i) {
        d = std::max(d, std::abs(to_complex(a[i]) - to_complex(b[i])));
    }
    return d;
}

Series<ComplexDouble> to_approx(const Series<ComplexRational> &s)
{
    std::vector<ComplexDouble> c;
    c.reserve(s.order() + 1);
    for (const auto &x : s.coeffs()) {
        c.push_back(x.to_complex());
    }
    return Series<ComplexDouble>(s.order(), std::move(c));
}

template <Scalar T>
T cf_weight(std::span<const int> block_sizes, const Series<T> &f, IndexShift shift)
{
    T w{1};
    for (int size : block_sizes) {
        const int idx = shift == IndexShift::minus_one ? size - 1 : size;
        if (idx < 0 || static_cast<std::size_t>(idx) > f.order()) {
            throw std::out_of_range("cf_weight: coefficient " + std::to_string(idx) + " beyond series order");
        }
        w = w * f[static_cast<std::size_t>(idx)];
    }
    return w;
}

template <Scalar T>
T cf_weight(const NCPartition &p, const Series<T> &f, IndexShift shift)
{
    const auto sizes = p.block_sizes();
    return cf_weight<T>(std::span<const int>(sizes), f, shift);
}

template <Scalar T>
T cf_weight(const NCLinkedPartition &g, const Series<T> &f, IndexShift shift)
{
    std::vector<int> sizes;
    for (const auto &b : g.blocks()) {
        sizes.push_back(static_cast<int>(b.size()));
    }
    return cf_weight<T>(std::span<const int>(sizes), f, shift);
}

namespace {

template <Scalar T>
Series<T> boxed_sum(const Series<T> &f, const Series<T> &g, bool require_first_singleton)
{
    if (f.order() != g.order()) {
        throw std::invalid_argument("boxed_convolution: series orders differ");
    }
    if (!is_zero(f[0]) || !is_zero(g[0])) {
        throw std::domain_error("boxed_convolution: series must vanish at 0");
    }
    const std::size_t order = f.order();
    if (order > static_cast<std::size_t>(limits::max_nc)) {
        throw resource_error("boxed_convolution: order exceeds the NC enumeration limit");
    }
    Series<T> out(order);
    for (std::size_t n = 1; n <= order; ++n) {
        T acc{0};
        for_each_nc(static_cast<int>(n), [&](const NCPartition &p) {
            if (require_first_singleton && !p.has_singleton_block(1)) {
                return;
            }
            const T a = cf_weight(p, f);
            if (is_zero(a)) {
                return;
            }
            acc = acc + a * cf_weight(kreweras(p), g);
        });
        out.set(n, acc);
    }
    return out;
}

} // namespace

template <Scalar T>
Series<T> boxed_convolution(const Series<T> &f, const Series<T> &g)
{
    return boxed_sum(f, g, false);
}

template <Scalar T>
Series<T> boxed_convolution_checked(const Series<T> &f, const Series<T> &g)
{
    return boxed_sum(f, g, true);
}

#define CFREE_INSTANTIATE_SERIES(T)                                                                     \
    template Series<T> compose(const Series<T> &, const Series<T> &);                                    \
    template Series<T> invert_composition(const Series<T> &);                                            \
    template Series<T> reciprocal(const Series<T> &);                                                    \
    template Series<T> divide_by_z(const Series<T> &);                                                   \
    template Series<T> multiply_by_z(const Series<T> &);                                                 \
    template Series<T> extended(const Series<T> &, std::size_t);                                         \
    template double max_abs_diff(const Series<T> &, const Series<T> &);                                  \
    template T cf_weight(std::span<const int>, const Series<T> &, IndexShift);                           \
    template T cf_weight(const NCPartition &, const Series<T> &, IndexShift);                            \
    template T cf_weight(const NCLinkedPartition &, const Series<T> &, IndexShift);                      \
    template Series<T> boxed_convolution(const Series<T> &, const Series<T> &);                          \
    template Series<T> boxed_convolution_checked(const Series<T> &, const Series<T> &);

CFREE_INSTANTIATE_SERIES(ComplexRational)
CFREE_INSTANTIATE_SERIES(ComplexDouble)

} // namespace cfree
