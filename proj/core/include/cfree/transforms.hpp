#pragma once

#include <optional>

#include <cfree/series.hpp>

namespace cfree {

// Moment series carry a zero constant term (m_0 = 1 is implicit). Transforms
// that divide by z (T, cT, B, Sigma) come out one order lower than their input.

/// Solves R(z(1+m)) = m, i.e. R = m o (z(1+m))^{<-1>}.
template <Scalar T>
Series<T> r_transform(const Series<T> &m);

/// Solves cR(z(1+m)) (1+M) = M (1+m).
template <Scalar T>
Series<T> cr_transform(const Series<T> &M, const Series<T> &m);

/// ((1/z) R) o R^{<-1>}, coefficients t_0 = m_1, t_1, ...; m_1 = 0 is a domain error.
template <Scalar T>
Series<T> t_transform(const Series<T> &m);

/// ((1/z) cR) o R^{<-1>}; needs m_1 != 0.
template <Scalar T>
Series<T> ct_transform(const Series<T> &M, const Series<T> &m);

/// m / (1+m).
template <Scalar T>
Series<T> eta_transform(const Series<T> &m);

/// eta / z, constant term m_1.
template <Scalar T>
Series<T> b_transform(const Series<T> &m);

/// Inverse of eta: m = eta / (1 - eta).
template <Scalar T>
Series<T> moments_from_eta(const Series<T> &eta);

/// Moments of order one more than B.
template <Scalar T>
Series<T> moments_from_b(const Series<T> &b);

template <Scalar T>
struct SigmaRoutes {
    Series<T> via_ct; ///< cT o (z/(1-z))
    Series<T> via_b;  ///< B_mu o eta_nu^{<-1>}
};

/// Both routes to Sigma for the pair whose phi-law has moments M_mu and whose
/// psi-law has moments m_nu. The psi first moment must be nonzero.
template <Scalar T>
SigmaRoutes<T> sigma_routes(const Series<T> &M_mu, const Series<T> &m_nu);

/// Sigma computed as B_mu o eta_nu^{<-1>}.
template <Scalar T>
Series<T> sigma_series(const Series<T> &M_mu, const Series<T> &m_nu);

/// Solves m_n = [z^{n-1}] T(m(z)) (1 + m(z)). Output order is T's order + 1.
template <Scalar T>
Series<T> moments_from_t(const Series<T> &t);

/// Solves M_n = [z^{n-1}] cT(m(z)) (1 + M(z)); m must have order cT's order + 1.
template <Scalar T>
Series<T> phi_moments_from_ct(const Series<T> &ct, const Series<T> &m);

/// m_n as the sum over NCL(n) of t_0^{n-|g|} prod_B t_{|B|-1}. With ct given,
/// exterior blocks use ct instead (this yields M_n).
template <Scalar T>
T moments_via_ncl(const Series<T> &t, const std::optional<Series<T>> &ct, int n);

/// The S-transform, 1/T.
template <Scalar T>
Series<T> s_transform(const Series<T> &m);

/// Lazily computed transforms of one (psi, phi) moment pair. Caches are not
/// synchronised; share a bundle across threads only after forcing what you need.
template <Scalar T>
class TransformBundle {
public:
    TransformBundle(Series<T> m, Series<T> M);

    const Series<T> &m() const { return m_; }
    const Series<T> &M() const { return M_; }
    const Series<T> &r() const;
    const Series<T> &cr() const;
    const Series<T> &t() const;
    const Series<T> &ct() const;
    const Series<T> &eta() const;
    const Series<T> &b() const;
    /// Sigma of the pair (mu, nu) whose phi-law is M and psi-law is m.
    const Series<T> &sigma() const;

private:
    Series<T> m_;
    Series<T> M_;
    mutable std::optional<Series<T>> r_, cr_, t_, ct_, eta_, b_, sigma_;
};

} // namespace cfree
