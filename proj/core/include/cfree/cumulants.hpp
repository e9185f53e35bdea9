#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <cfree/partitions.hpp>
#include <cfree/series.hpp>

namespace cfree {

// Moment series m(z) = sum_{n>=1} m_n z^n and cumulant series
// R(z) = sum_{n>=1} r_n z^n are stored with a zero constant term.

/// r from m via the triangular recurrence m_n = sum_p r_p [z^{n-p}] (1+m)^p.
template <Scalar T>
Series<T> free_cumulants_from_moments(const Series<T> &m);

template <Scalar T>
Series<T> moments_from_free_cumulants(const Series<T> &r);

/// cr from (M, m) via M_n = sum_p cr_p [z^{n-p}] (1+m)^{p-1} (1+M).
template <Scalar T>
Series<T> cfree_cumulants_from_moments(const Series<T> &M, const Series<T> &m);

template <Scalar T>
Series<T> moments_from_cfree_cumulants(const Series<T> &cr, const Series<T> &r);

/// m_n as the sum over NC(n) of products of r_{|B|}.
template <Scalar T>
T moment_nc_sum(const Series<T> &r, int n);

/// M_n as the sum over NC(n): exterior blocks weigh cr_{|B|}, interior r_{|B|}.
template <Scalar T>
T phi_moment_nc_sum(const Series<T> &cr, const Series<T> &r, int n);

template <Scalar T>
struct OneStateData {
    Series<T> m;
    Series<T> r;

    static OneStateData from_moments(Series<T> m);
    static OneStateData from_cumulants(Series<T> r);
};

template <Scalar T>
struct TwoStateData {
    OneStateData<T> psi;
    Series<T> M;
    Series<T> cr;

    static TwoStateData from_moments(Series<T> m, Series<T> M);
    static TwoStateData from_cumulants(Series<T> r, Series<T> cr);

    std::size_t order() const { return M.order(); }
};

/// kappa_pi[a_1..a_n]: word[i] indexes into `letters`; a block touching two
/// different letters contributes 0.
template <Scalar T>
T kappa(const NCPartition &p, std::span<const int> word, std::span<const OneStateData<T>> letters);

/// The two-state version: exterior blocks use c-free cumulants.
template <Scalar T>
T cfree_kappa(const NCPartition &p, std::span<const int> word, std::span<const TwoStateData<T>> letters);

/// r_n(XY) as the sum of kappa_sigma[X,Y,...,X,Y] over NC_0(2n).
template <Scalar T>
T product_psi_cumulants(const Series<T> &rX, const Series<T> &rY, int n);

/// cr_n(XY) as the sum of the two-state kappa_sigma over NC_0(2n).
template <Scalar T>
T product_phi_cumulants(const TwoStateData<T> &X, const TwoStateData<T> &Y, int n);

/// Series of cr_n(XY) computed from the NC_0 sums, orders 1..N.
template <Scalar T>
Series<T> product_psi_cumulant_series(const TwoStateData<T> &X, const TwoStateData<T> &Y);
template <Scalar T>
Series<T> product_phi_cumulant_series(const TwoStateData<T> &X, const TwoStateData<T> &Y);

/// (1/z) cR_XY as
///   [(1/z)cR_X o ((1/a1) R_X box-checked R_Y)] * [(1/z)cR_Y o ((1/b1) R_Y box-checked R_X)],
/// with a1 = r_1(X), b1 = r_1(Y) required nonzero. Order is one less than the data.
template <Scalar T>
Series<T> cfree_product_formula(const TwoStateData<T> &X, const TwoStateData<T> &Y);

/// Letters of a word; kUnit stands for the algebra unit.
inline constexpr int kUnit = -1;

enum class State { psi, phi };

template <Scalar T>
using MomentOracle = std::function<T(std::span<const int>)>;

/// R^n or cR^n of a word through the defining interval recurrences. The
/// oracles give psi / phi of any subword (the empty word has moment 1).
template <Scalar T>
T word_cumulant(const MomentOracle<T> &psi, const MomentOracle<T> &phi, std::span<const int> word, State state);

} // namespace cfree
