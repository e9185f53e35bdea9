#pragma once

#include <optional>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include <cfree/scalar.hpp>
#include <cfree/series.hpp>

namespace cfree {

/// Point mass at exp(2 pi i turns).
struct Atom {
    mpq_class turns;
    mpq_class weight;

    friend bool operator==(const Atom &, const Atom &) = default;
};

/// Probability measure with finitely many atoms; turns reduced to [0, 1).
struct Atomic {
    std::vector<Atom> atoms;
};

struct Haar {};

/// Poisson-kernel measure with moments alpha^n, |alpha| < 1.
struct PoissonKernel {
    ComplexDouble alpha;
};

/// Moments m_1..m_K of an otherwise unspecified measure.
struct MomentSeq {
    std::vector<ComplexDouble> values;
};

using CircleMeasure = std::variant<Atomic, Haar, PoissonKernel, MomentSeq>;

/// (mu, nu): mu carries the phi-law, nu the psi-law.
struct MeasurePair {
    CircleMeasure mu;
    CircleMeasure nu;
};

/// Unit scalar gamma and a finite positive atomic measure sigma.
struct IdGenerator {
    ComplexDouble gamma{1.0, 0.0};
    std::vector<Atom> sigma;
};

ComplexDouble unit_from_turns(const mpq_class &turns);
/// Representative of turns in (-1/2, 1/2].
mpq_class principal_turns(const mpq_class &turns);

/// Validates weights (nonnegative, total 1) and reduces turns mod 1.
Atomic make_atomic(std::vector<Atom> atoms);
Atomic dirac(const mpq_class &turns);
PoissonKernel make_poisson(ComplexDouble alpha);
IdGenerator make_generator(ComplexDouble gamma, std::vector<Atom> sigma);

bool is_haar(const CircleMeasure &m);

/// m_1..m_N. MomentSeq inputs shorter than N raise std::invalid_argument.
std::vector<ComplexDouble> moments_of(const CircleMeasure &m, std::size_t N);
/// The moment series of order N (zero constant term).
Series<ComplexDouble> moment_series(const CircleMeasure &m, std::size_t N);
/// Exact moments when they are Gaussian rationals: Haar, or atoms at quarter turns.
std::optional<Series<ComplexRational>> exact_moment_series(const CircleMeasure &m, std::size_t N);

// Convolutions at the level of moment series. Orders must agree.

template <Scalar T>
struct PairMoments {
    Series<T> M; ///< phi-moments (mu)
    Series<T> m; ///< psi-moments (nu)
};

/// B multiplies.
template <Scalar T>
Series<T> boolean_convolve_moments(const Series<T> &a, const Series<T> &b);

/// T multiplies; first moments must be nonzero.
template <Scalar T>
Series<T> free_convolve_moments(const Series<T> &a, const Series<T> &b);

/// T and cT multiply. When both psi-laws are Haar the phi-moments are
/// (c_1 c_2)^n and the psi-law stays Haar; a single Haar-type (zero first
/// moment) psi-law is rejected with unsupported_domain.
template <Scalar T>
PairMoments<T> cfree_convolve_moments(const PairMoments<T> &a, const PairMoments<T> &b);

CircleMeasure boolean_convolve(const CircleMeasure &a, const CircleMeasure &b, std::size_t N);
CircleMeasure free_multiplicative_convolve(const CircleMeasure &a, const CircleMeasure &b, std::size_t N);
MeasurePair cfree_multiplicative_convolve(const MeasurePair &a, const MeasurePair &b, std::size_t N);
PairMoments<ComplexDouble> pair_moments(const MeasurePair &p, std::size_t N);

// Approximate series functions; branch is principal at the constant term.

Series<ComplexDouble> series_exp(const Series<ComplexDouble> &f);
/// Throws std::domain_error when f(0) is zero or a negative real.
Series<ComplexDouble> series_log(const Series<ComplexDouble> &f);
Series<ComplexDouble> series_pow(const Series<ComplexDouble> &f, double exponent);

/// sum_j w_j (1 + zeta_j z)/(1 - zeta_j z) = sum_j w_j (1 + 2 sum_k zeta_j^k z^k).
Series<ComplexDouble> herglotz_kernel(const std::vector<Atom> &sigma, std::size_t N);

/// gamma exp(sign * kernel), sign = +1 or -1.
Series<ComplexDouble> herglotz_exp(const IdGenerator &g, int sign, std::size_t N);

/// B = gamma exp(-kernel); N moments.
MomentSeq idiv_boolean_measure(const IdGenerator &g, std::size_t N);
/// eta^{<-1>} = z gamma exp(+kernel); N moments.
MomentSeq idiv_free_measure(const IdGenerator &g, std::size_t N);

/// (gamma^{1/n} principal, sigma/n).
IdGenerator generator_root(const IdGenerator &g, int n);
IdGenerator generator_power(const IdGenerator &g, double t);

/// nu_t from eta^{<-1>} = z gamma^t exp(t kernel); mu_t from
/// B = (sigma_target o eta_{nu_t})^t. t = 0 gives (delta_1, delta_1).
MeasurePair semigroup_pair(const IdGenerator &gen_nu, const Series<ComplexDouble> &sigma_target, double t,
                           std::size_t N);

/// The n-th root pair built from (gamma^{1/n}, sigma/n) and sigma_target^{1/n}.
MeasurePair idiv_root_pair(const IdGenerator &gen_nu, const Series<ComplexDouble> &sigma_target, int n,
                           std::size_t N);

struct PsdReport {
    bool psd = false;
    double min_eigenvalue = 0.0;
};

/// Toeplitz matrix [m_{j-k}] of size N/2 + 1 with m_0 = 1, m_{-n} = conj(m_n).
PsdReport toeplitz_psd_check(const std::vector<ComplexDouble> &moments, double tol = 1e-9);

struct CenteredArrayRow {
    std::vector<mpq_class> b_turns;
    std::vector<ComplexDouble> b;
    std::vector<Atomic> centered;
    std::vector<Series<ComplexDouble>> h;
};

/// b = exp(i int_{|arg z| < 1} arg z dmu), mu° = mu pulled back by b, and
///   h(z) = -i int Im z dmu° + int (1 - Re z)(1 + z w)/(1 - z w) dmu°(z)
/// expanded in w to order N. Measures must be atomic.
CenteredArrayRow center_array(const std::vector<CircleMeasure> &row, std::size_t N);

struct LimitConfig {
    double s = 0.5;
    mpq_class omega_turns{1, 4};
    std::vector<int> n_list{4, 8, 16, 32};
    std::size_t order = 8;
};

struct LimitRow {
    int n = 0;
    /// |Sigma_j - B_j| for j = 0..order-1.
    std::vector<double> gaps;
    ComplexDouble gamma;
    /// int z^j dsigma_n for j = 0..order-1.
    std::vector<ComplexDouble> sigma_moments;
};

struct LimitReport {
    std::vector<LimitRow> rows;
    /// Generator read off log B of the boolean power at the largest n.
    ComplexDouble fitted_gamma;
    std::vector<ComplexDouble> fitted_sigma_moments;
};

/// mu_nk = nu_nk = (1 - s/n) delta_1 + (s/n) delta_omega for k = 1..n; compares
/// Sigma of the n-fold pair product with B of the n-fold boolean power.
LimitReport limit_experiment(const LimitConfig &config);

/// (gamma, sigma moments 0..K) matching log B = log gamma - sigma(T) - 2 sum_k sigma^_k z^k.
std::pair<ComplexDouble, std::vector<ComplexDouble>> fit_boolean_generator(const Series<ComplexDouble> &b);

} // namespace cfree
