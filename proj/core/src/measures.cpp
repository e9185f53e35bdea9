#include <cfree/measures.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include <cfree/errors.hpp>
#include <cfree/transforms.hpp>

namespace cfree {

namespace {

mpq_class reduce_turns(const mpq_class &turns)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), turns.get_num_mpz_t(), turns.get_den_mpz_t());
    mpq_class out(r, turns.get_den());
    out.canonicalize();
    return out;
}

// Exact value of exp(2 pi i turns) when turns is a multiple of 1/4.
std::optional<ComplexRational> quarter_unit(const mpq_class &turns)
{
    const mpq_class four = turns * 4;
    if (four.get_den() != 1) {
        return std::nullopt;
    }
    mpz_class k;
    mpz_fdiv_r_ui(k.get_mpz_t(), four.get_num_mpz_t(), 4);
    switch (k.get_ui()) {
    case 0:
        return ComplexRational(1);
    case 1:
        return ComplexRational(0, 1);
    case 2:
        return ComplexRational(-1);
    default:
        return ComplexRational(0, -1);
    }
}

template <Scalar T>
bool series_is_zero(const Series<T> &s)
{
    return s.is_zero();
}

} // namespace

ComplexDouble unit_from_turns(const mpq_class &turns)
{
    if (auto q = quarter_unit(turns)) {
        return q->to_complex();
    }
    const double angle = 2.0 * std::numbers::pi * reduce_turns(turns).get_d();
    return {std::cos(angle), std::sin(angle)};
}

mpq_class principal_turns(const mpq_class &turns)
{
    mpq_class t = reduce_turns(turns);
    if (t > mpq_class(1, 2)) {
        t -= 1;
    }
    return t;
}

Atomic make_atomic(std::vector<Atom> atoms)
{
    if (atoms.empty()) {
        throw std::invalid_argument("atomic measure needs at least one atom");
    }
    mpq_class total = 0;
    for (auto &a : atoms) {
        if (a.weight < 0) {
            throw std::invalid_argument("atomic measure has a negative weight");
        }
        a.turns = reduce_turns(a.turns);
        total += a.weight;
    }
    if (total != 1) {
        throw std::invalid_argument("atomic measure weights sum to " + total.get_str() + ", not 1");
    }
    return Atomic{std::move(atoms)};
}

Atomic dirac(const mpq_class &turns) { return make_atomic({Atom{turns, 1}}); }

PoissonKernel make_poisson(ComplexDouble alpha)
{
    if (!(std::abs(alpha) < 1.0)) {
        throw std::invalid_argument("Poisson kernel parameter must satisfy |alpha| < 1");
    }
    return PoissonKernel{alpha};
}

IdGenerator make_generator(ComplexDouble gamma, std::vector<Atom> sigma)
{
    if (std::abs(std::abs(gamma) - 1.0) > 1e-12) {
        throw std::invalid_argument("generator gamma must have modulus 1");
    }
    for (auto &a : sigma) {
        if (a.weight < 0) {
            throw std::invalid_argument("generator sigma has a negative weight");
        }
        a.turns = reduce_turns(a.turns);
    }
    return IdGenerator{gamma, std::move(sigma)};
}

bool is_haar(const CircleMeasure &m) { return std::holds_alternative<Haar>(m); }

std::vector<ComplexDouble> moments_of(const CircleMeasure &m, std::size_t N)
{
    if (N < 1) {
        throw std::invalid_argument("moments_of: N must be at least 1");
    }
    std::vector<ComplexDouble> out(N, ComplexDouble{0.0, 0.0});
    std::visit(
        [&](const auto &x) {
            using V = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<V, Atomic>) {
                for (std::size_t n = 1; n <= N; ++n) {
                    for (const auto &a : x.atoms) {
                        out[n - 1] += a.weight.get_d() * unit_from_turns(a.turns * static_cast<long>(n));
                    }
                }
            } else if constexpr (std::is_same_v<V, PoissonKernel>) {
                ComplexDouble p = 1.0;
                for (std::size_t n = 1; n <= N; ++n) {
                    p *= x.alpha;
                    out[n - 1] = p;
                }
            } else if constexpr (std::is_same_v<V, MomentSeq>) {
                if (x.values.size() < N) {
                    throw std::invalid_argument("moment sequence has " + std::to_string(x.values.size()) +
                                                " values, " + std::to_string(N) + " requested");
                }
                std::copy(x.values.begin(), x.values.begin() + static_cast<std::ptrdiff_t>(N), out.begin());
            }
        },
        m);
    return out;
}

Series<ComplexDouble> moment_series(const CircleMeasure &m, std::size_t N)
{
    std::vector<ComplexDouble> c{ComplexDouble{0.0, 0.0}};
    const auto v = moments_of(m, N);
    c.insert(c.end(), v.begin(), v.end());
    return Series<ComplexDouble>(N, std::move(c));
}

std::optional<Series<ComplexRational>> exact_moment_series(const CircleMeasure &m, std::size_t N)
{
    if (is_haar(m)) {
        return Series<ComplexRational>(N);
    }
    const auto *atomic = std::get_if<Atomic>(&m);
    if (atomic == nullptr) {
        return std::nullopt;
    }
    Series<ComplexRational> s(N);
    for (const auto &a : atomic->atoms) {
        const auto zeta = quarter_unit(a.turns);
        if (!zeta) {
            return std::nullopt;
        }
        ComplexRational p(1);
        for (std::size_t n = 1; n <= N; ++n) {
            p *= *zeta;
            s.set(n, s[n] + ComplexRational(a.weight) * p);
        }
    }
    return s;
}

template <Scalar T>
Series<T> boolean_convolve_moments(const Series<T> &a, const Series<T> &b)
{
    return moments_from_b(b_transform(a) * b_transform(b));
}

template <Scalar T>
Series<T> free_convolve_moments(const Series<T> &a, const Series<T> &b)
{
    return moments_from_t(t_transform(a) * t_transform(b));
}

template <Scalar T>
PairMoments<T> cfree_convolve_moments(const PairMoments<T> &a, const PairMoments<T> &b)
{
    const std::size_t N = a.M.order();
    if (a.m.order() != N || b.M.order() != N || b.m.order() != N) {
        throw std::invalid_argument("cfree convolution: moment orders differ");
    }
    if (series_is_zero(a.m) && series_is_zero(b.m)) {
        // Both psi-laws Haar: B_mu is the constant c_1 c_2.
        const T c = a.M[1] * b.M[1];
        Series<T> M(N);
        T p{1};
        for (std::size_t n = 1; n <= N; ++n) {
            p = p * c;
            M.set(n, p);
        }
        return {std::move(M), Series<T>(N)};
    }
    if (is_zero(a.m[1]) || is_zero(b.m[1])) {
        throw unsupported_domain("cfree convolution: a psi-law with zero first moment is only supported "
                                 "when both psi-laws are Haar");
    }
    Series<T> m = free_convolve_moments(a.m, b.m);
    const Series<T> ct = ct_transform(a.M, a.m) * ct_transform(b.M, b.m);
    Series<T> M = phi_moments_from_ct(ct, m);
    return {std::move(M), std::move(m)};
}

namespace {

CircleMeasure as_measure(const Series<ComplexDouble> &m)
{
    return MomentSeq{std::vector<ComplexDouble>(m.coeffs().begin() + 1, m.coeffs().end())};
}

} // namespace

CircleMeasure boolean_convolve(const CircleMeasure &a, const CircleMeasure &b, std::size_t N)
{
    return as_measure(boolean_convolve_moments(moment_series(a, N), moment_series(b, N)));
}

CircleMeasure free_multiplicative_convolve(const CircleMeasure &a, const CircleMeasure &b, std::size_t N)
{
    return as_measure(free_convolve_moments(moment_series(a, N), moment_series(b, N)));
}

PairMoments<ComplexDouble> pair_moments(const MeasurePair &p, std::size_t N)
{
    return {moment_series(p.mu, N), moment_series(p.nu, N)};
}

MeasurePair cfree_multiplicative_convolve(const MeasurePair &a, const MeasurePair &b, std::size_t N)
{
    const auto out = cfree_convolve_moments(pair_moments(a, N), pair_moments(b, N));
    CircleMeasure nu = out.m.is_zero() ? CircleMeasure{Haar{}} : as_measure(out.m);
    return {as_measure(out.M), std::move(nu)};
}

Series<ComplexDouble> series_exp(const Series<ComplexDouble> &f)
{
    const std::size_t N = f.order();
    Series<ComplexDouble> e(N);
    e.set(0, std::exp(f[0]));
    for (std::size_t n = 1; n <= N; ++n) {
        ComplexDouble acc = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += static_cast<double>(k) * f[k] * e[n - k];
        }
        e.set(n, acc / static_cast<double>(n));
    }
    return e;
}

Series<ComplexDouble> series_log(const Series<ComplexDouble> &f)
{
    const ComplexDouble f0 = f[0];
    if (f0 == ComplexDouble{0.0, 0.0} || (f0.imag() == 0.0 && f0.real() < 0.0)) {
        throw std::domain_error("series_log: constant term lies on the branch cut");
    }
    const std::size_t N = f.order();
    Series<ComplexDouble> l(N);
    l.set(0, std::log(f0));
    for (std::size_t n = 1; n <= N; ++n) {
        ComplexDouble acc = static_cast<double>(n) * f[n];
        for (std::size_t k = 1; k < n; ++k) {
            acc -= static_cast<double>(k) * l[k] * f[n - k];
        }
        l.set(n, acc / (static_cast<double>(n) * f0));
    }
    return l;
}

Series<ComplexDouble> series_pow(const Series<ComplexDouble> &f, double exponent)
{
    if (exponent == 0.0) {
        return Series<ComplexDouble>::constant(f.order(), 1.0);
    }
    return series_exp(series_log(f) * ComplexDouble(exponent, 0.0));
}

Series<ComplexDouble> herglotz_kernel(const std::vector<Atom> &sigma, std::size_t N)
{
    Series<ComplexDouble> u(N);
    for (const auto &a : sigma) {
        const double w = a.weight.get_d();
        u.set(0, u[0] + w);
        for (std::size_t k = 1; k <= N; ++k) {
            u.set(k, u[k] + 2.0 * w * unit_from_turns(a.turns * static_cast<long>(k)));
        }
    }
    return u;
}

Series<ComplexDouble> herglotz_exp(const IdGenerator &g, int sign, std::size_t N)
{
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("herglotz_exp: sign must be +1 or -1");
    }
    return series_exp(herglotz_kernel(g.sigma, N) * ComplexDouble(sign, 0.0)) * g.gamma;
}

namespace {

MomentSeq to_moment_seq(const Series<ComplexDouble> &m)
{
    return MomentSeq{std::vector<ComplexDouble>(m.coeffs().begin() + 1, m.coeffs().end())};
}

Series<ComplexDouble> free_eta(const IdGenerator &g, std::size_t N)
{
    return invert_composition(multiply_by_z(herglotz_exp(g, +1, N - 1)));
}

void require_order(std::size_t N)
{
    if (N < 1) {
        throw std::invalid_argument("number of moments must be at least 1");
    }
}

} // namespace

MomentSeq idiv_boolean_measure(const IdGenerator &g, std::size_t N)
{
    require_order(N);
    return to_moment_seq(moments_from_b(herglotz_exp(g, -1, N - 1)));
}

MomentSeq idiv_free_measure(const IdGenerator &g, std::size_t N)
{
    require_order(N);
    return to_moment_seq(moments_from_eta(free_eta(g, N)));
}

IdGenerator generator_power(const IdGenerator &g, double t)
{
    if (t < 0) {
        throw std::invalid_argument("generator_power: exponent must be nonnegative");
    }
    IdGenerator out = g;
    out.gamma = std::polar(1.0, t * std::arg(g.gamma));
    const mpq_class factor(t);
    for (auto &a : out.sigma) {
        a.weight *= factor;
    }
    return out;
}

IdGenerator generator_root(const IdGenerator &g, int n)
{
    if (n < 1) {
        throw std::invalid_argument("generator_root: n must be positive");
    }
    IdGenerator out = g;
    out.gamma = std::polar(1.0, std::arg(g.gamma) / n);
    for (auto &a : out.sigma) {
        a.weight /= n;
    }
    return out;
}

MeasurePair semigroup_pair(const IdGenerator &gen_nu, const Series<ComplexDouble> &sigma_target, double t,
                           std::size_t N)
{
    require_order(N);
    if (!(t >= 0)) {
        throw std::invalid_argument("semigroup_pair: t must be nonnegative");
    }
    if (sigma_target.order() + 1 < N) {
        throw std::invalid_argument("semigroup_pair: sigma target order must be at least N - 1");
    }
    if (t == 0) {
        return {dirac(0), dirac(0)};
    }
    const Series<ComplexDouble> eta = free_eta(generator_power(gen_nu, t), N);
    const Series<ComplexDouble> powered = series_pow(sigma_target.truncated(N - 1), t);
    const Series<ComplexDouble> b = compose(powered, eta.truncated(N - 1));
    return {to_moment_seq(moments_from_b(b)), to_moment_seq(moments_from_eta(eta))};
}

MeasurePair idiv_root_pair(const IdGenerator &gen_nu, const Series<ComplexDouble> &sigma_target, int n,
                           std::size_t N)
{
    if (n < 1) {
        throw std::invalid_argument("idiv_root_pair: n must be positive");
    }
    return semigroup_pair(generator_root(gen_nu, n), series_pow(sigma_target, 1.0 / n), 1.0, N);
}

PsdReport toeplitz_psd_check(const std::vector<ComplexDouble> &moments, double tol)
{
    const std::size_t size = moments.size() / 2 + 1;
    Eigen::MatrixXcd A(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    auto moment = [&](long k) -> ComplexDouble {
        if (k == 0) {
            return 1.0;
        }
        const auto &v = moments[static_cast<std::size_t>(std::labs(k)) - 1];
        return k > 0 ? v : std::conj(v);
    };
    for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t k = 0; k < size; ++k) {
            A(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                moment(static_cast<long>(j) - static_cast<long>(k));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(A, Eigen::EigenvaluesOnly);
    PsdReport r;
    r.min_eigenvalue = solver.eigenvalues().minCoeff();
    r.psd = r.min_eigenvalue >= -tol;
    return r;
}

#define CFREE_INSTANTIATE_MEASURES(T)                                                       \
    template Series<T> boolean_convolve_moments(const Series<T> &, const Series<T> &);       \
    template Series<T> free_convolve_moments(const Series<T> &, const Series<T> &);          \
    template PairMoments<T> cfree_convolve_moments(const PairMoments<T> &, const PairMoments<T> &);

CFREE_INSTANTIATE_MEASURES(ComplexRational)
CFREE_INSTANTIATE_MEASURES(ComplexDouble)

} // namespace cfree
