#include <cfree/transforms.hpp>

#include <stdexcept>

#include <cfree/errors.hpp>

namespace cfree {

namespace {

template <Scalar T>
Series<T> one_plus(const Series<T> &s)
{
    return Series<T>::constant(s.order(), T{1}) + s;
}

template <Scalar T>
void require_moment_series(const Series<T> &m, const char *what)
{
    if (!is_zero(m[0])) {
        throw std::invalid_argument(std::string(what) + ": moment series must have zero constant term");
    }
    if (m.order() < 1) {
        throw std::invalid_argument(std::string(what) + ": moment series needs order >= 1");
    }
}

template <Scalar T>
void require_same_order(const Series<T> &a, const Series<T> &b, const char *what)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(what) + ": series orders differ");
    }
}

// (z(1+m))^{<-1>}, the change of variable shared by R and cR.
template <Scalar T>
Series<T> inverse_of_z_one_plus_m(const Series<T> &m)
{
    return invert_composition(multiply_by_z(one_plus(m)).truncated(m.order()));
}

} // namespace

template <Scalar T>
Series<T> r_transform(const Series<T> &m)
{
    require_moment_series(m, "r_transform");
    return compose(m, inverse_of_z_one_plus_m(m));
}

template <Scalar T>
Series<T> cr_transform(const Series<T> &M, const Series<T> &m)
{
    require_moment_series(M, "cr_transform");
    require_moment_series(m, "cr_transform");
    require_same_order(M, m, "cr_transform");
    const Series<T> rhs = M * one_plus(m) * reciprocal(one_plus(M));
    return compose(rhs, inverse_of_z_one_plus_m(m));
}

namespace {

template <Scalar T>
Series<T> over_z_composed_with_r_inverse(const Series<T> &numerator, const Series<T> &r)
{
    const std::size_t N = r.order();
    return compose(divide_by_z(numerator), invert_composition(r).truncated(N - 1));
}

} // namespace

template <Scalar T>
Series<T> t_transform(const Series<T> &m)
{
    require_moment_series(m, "t_transform");
    if (is_zero(m[1])) {
        throw std::domain_error("t_transform: first moment is zero, T is undefined");
    }
    const Series<T> r = r_transform(m);
    return over_z_composed_with_r_inverse(r, r);
}

template <Scalar T>
Series<T> ct_transform(const Series<T> &M, const Series<T> &m)
{
    require_same_order(M, m, "ct_transform");
    require_moment_series(m, "ct_transform");
    if (is_zero(m[1])) {
        throw std::domain_error("ct_transform: first psi-moment is zero, cT is undefined");
    }
    return over_z_composed_with_r_inverse(cr_transform(M, m), r_transform(m));
}

template <Scalar T>
Series<T> eta_transform(const Series<T> &m)
{
    require_moment_series(m, "eta_transform");
    return m * reciprocal(one_plus(m));
}

template <Scalar T>
Series<T> b_transform(const Series<T> &m)
{
    return divide_by_z(eta_transform(m));
}

template <Scalar T>
Series<T> moments_from_eta(const Series<T> &eta)
{
    if (!is_zero(eta[0])) {
        throw std::domain_error("moments_from_eta: eta must vanish at 0");
    }
    return eta * reciprocal(Series<T>::constant(eta.order(), T{1}) - eta);
}

template <Scalar T>
Series<T> moments_from_b(const Series<T> &b)
{
    return moments_from_eta(multiply_by_z(b));
}

template <Scalar T>
SigmaRoutes<T> sigma_routes(const Series<T> &M_mu, const Series<T> &m_nu)
{
    require_same_order(M_mu, m_nu, "sigma_series");
    require_moment_series(M_mu, "sigma_series");
    require_moment_series(m_nu, "sigma_series");
    if (is_zero(m_nu[1])) {
        throw std::domain_error("sigma_series: first moment of the psi-law is zero");
    }
    const std::size_t K = m_nu.order() - 1;
    Series<T> geometric(K);
    for (std::size_t i = 1; i <= K; ++i) {
        geometric.set(i, T{1});
    }
    Series<T> via_ct = compose(ct_transform(M_mu, m_nu), geometric);
    Series<T> via_b = compose(b_transform(M_mu), invert_composition(eta_transform(m_nu)).truncated(K));
    return {std::move(via_ct), std::move(via_b)};
}

template <Scalar T>
Series<T> sigma_series(const Series<T> &M_mu, const Series<T> &m_nu)
{
    return std::move(sigma_routes(M_mu, m_nu).via_b);
}

template <Scalar T>
Series<T> moments_from_t(const Series<T> &t)
{
    if (is_zero(t[0])) {
        throw std::domain_error("moments_from_t: t_0 is zero");
    }
    const std::size_t N = t.order() + 1;
    const Series<T> tt = extended(t, N);
    Series<T> m(N);
    for (std::size_t n = 1; n <= N; ++n) {
        // [z^{n-1}] of T(m)(1+m) only sees m_1..m_{n-1}.
        const Series<T> rhs = compose(tt, m) * one_plus(m);
        m.set(n, rhs[n - 1]);
    }
    return m;
}

template <Scalar T>
Series<T> phi_moments_from_ct(const Series<T> &ct, const Series<T> &m)
{
    require_moment_series(m, "phi_moments_from_ct");
    if (m.order() != ct.order() + 1) {
        throw std::invalid_argument("phi_moments_from_ct: moment series must have order ct.order() + 1");
    }
    if (is_zero(m[1])) {
        throw std::domain_error("phi_moments_from_ct: first psi-moment is zero");
    }
    const std::size_t N = m.order();
    const Series<T> ctm = compose(extended(ct, N), m);
    Series<T> M(N);
    for (std::size_t n = 1; n <= N; ++n) {
        M.set(n, (ctm * one_plus(M))[n - 1]);
    }
    return M;
}

template <Scalar T>
T moments_via_ncl(const Series<T> &t, const std::optional<Series<T>> &ct, int n)
{
    if (n < 1) {
        throw std::invalid_argument("moments_via_ncl: n must be positive");
    }
    if (t.order() + 1 < static_cast<std::size_t>(n) || (ct && ct->order() + 1 < static_cast<std::size_t>(n))) {
        throw std::invalid_argument("moments_via_ncl: series order too low for n");
    }
    T acc{0};
    for (const auto &g : enumerate_ncl(n)) {
        T w = ipow(t[0], static_cast<unsigned>(n - g.size()));
        if (ct) {
            const auto ext = g.exterior_mask();
            for (std::size_t b = 0; b < ext.size(); ++b) {
                w = w * (ext[b] ? *ct : t)[g.blocks()[b].size() - 1];
            }
        } else {
            w = w * cf_weight(g, t, IndexShift::minus_one);
        }
        acc = acc + w;
    }
    return acc;
}

template <Scalar T>
Series<T> s_transform(const Series<T> &m)
{
    return reciprocal(t_transform(m));
}

template <Scalar T>
TransformBundle<T>::TransformBundle(Series<T> m, Series<T> M) : m_(std::move(m)), M_(std::move(M))
{
    require_same_order(m_, M_, "TransformBundle");
    require_moment_series(m_, "TransformBundle");
    require_moment_series(M_, "TransformBundle");
}

template <Scalar T>
const Series<T> &TransformBundle<T>::r() const
{
    if (!r_) {
        r_ = r_transform(m_);
    }
    return *r_;
}

template <Scalar T>
const Series<T> &TransformBundle<T>::cr() const
{
    if (!cr_) {
        cr_ = cr_transform(M_, m_);
    }
    return *cr_;
}

template <Scalar T>
const Series<T> &TransformBundle<T>::t() const
{
    if (!t_) {
        t_ = t_transform(m_);
    }
    return *t_;
}

template <Scalar T>
const Series<T> &TransformBundle<T>::ct() const
{
    if (!ct_) {
        ct_ = ct_transform(M_, m_);
    }
    return *ct_;
}

template <Scalar T>
const Series<T> &TransformBundle<T>::eta() const
{
    if (!eta_) {
        eta_ = eta_transform(m_);
    }
    return *eta_;
}

template <Scalar T>
const Series<T> &TransformBundle<T>::b() const
{
    if (!b_) {
        b_ = b_transform(m_);
    }
    return *b_;
}

template <Scalar T>
const Series<T> &TransformBundle<T>::sigma() const
{
    if (!sigma_) {
        sigma_ = sigma_series(M_, m_);
    }
    return *sigma_;
}

#define CFREE_INSTANTIATE_TRANSFORMS(T)                                                      \
    template Series<T> r_transform(const Series<T> &);                                        \
    template Series<T> cr_transform(const Series<T> &, const Series<T> &);                    \
    template Series<T> t_transform(const Series<T> &);                                        \
    template Series<T> ct_transform(const Series<T> &, const Series<T> &);                    \
    template Series<T> eta_transform(const Series<T> &);                                      \
    template Series<T> b_transform(const Series<T> &);                                        \
    template Series<T> moments_from_eta(const Series<T> &);                                   \
    template Series<T> moments_from_b(const Series<T> &);                                     \
    template SigmaRoutes<T> sigma_routes(const Series<T> &, const Series<T> &);               \
    template Series<T> sigma_series(const Series<T> &, const Series<T> &);                    \
    template Series<T> moments_from_t(const Series<T> &);                                     \
    template Series<T> phi_moments_from_ct(const Series<T> &, const Series<T> &);             \
    template T moments_via_ncl(const Series<T> &, const std::optional<Series<T>> &, int);     \
    template Series<T> s_transform(const Series<T> &);                                        \
    template class TransformBundle<T>;

CFREE_INSTANTIATE_TRANSFORMS(ComplexRational)
CFREE_INSTANTIATE_TRANSFORMS(ComplexDouble)

} // namespace cfree
