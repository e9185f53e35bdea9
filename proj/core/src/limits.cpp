#include <cfree/measures.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <cfree/transforms.hpp>

namespace cfree {

CenteredArrayRow center_array(const std::vector<CircleMeasure> &row, std::size_t N)
{
    CenteredArrayRow out;
    for (const auto &measure : row) {
        const auto *mu = std::get_if<Atomic>(&measure);
        if (mu == nullptr) {
            throw std::invalid_argument("center_array: measures must be atomic");
        }
        // Only atoms with |arg| < 1 (radians) enter the centering integral.
        mpq_class b_turns = 0;
        for (const auto &a : mu->atoms) {
            const mpq_class p = principal_turns(a.turns);
            if (std::abs(2.0 * std::numbers::pi * p.get_d()) < 1.0) {
                b_turns += a.weight * p;
            }
        }
        std::vector<Atom> shifted;
        for (const auto &a : mu->atoms) {
            shifted.push_back(Atom{a.turns - b_turns, a.weight});
        }
        Atomic centered = make_atomic(std::move(shifted));

        Series<ComplexDouble> h(N);
        for (const auto &a : centered.atoms) {
            const double w = a.weight.get_d();
            const ComplexDouble zeta = unit_from_turns(a.turns);
            const double defect = w * (1.0 - zeta.real());
            h.set(0, h[0] + ComplexDouble(defect, -w * zeta.imag()));
            for (std::size_t k = 1; k <= N; ++k) {
                h.set(k, h[k] + 2.0 * defect * unit_from_turns(a.turns * static_cast<long>(k)));
            }
        }
        out.b.push_back(unit_from_turns(b_turns));
        out.b_turns.push_back(std::move(b_turns));
        out.centered.push_back(std::move(centered));
        out.h.push_back(std::move(h));
    }
    return out;
}

std::pair<ComplexDouble, std::vector<ComplexDouble>> fit_boolean_generator(const Series<ComplexDouble> &b)
{
    const Series<ComplexDouble> l = series_log(b);
    std::vector<ComplexDouble> moments;
    moments.push_back(-l[0].real());
    for (std::size_t k = 1; k <= l.order(); ++k) {
        moments.push_back(-0.5 * l[k]);
    }
    return {std::polar(1.0, l[0].imag()), std::move(moments)};
}

LimitReport limit_experiment(const LimitConfig &config)
{
    if (config.order < 2) {
        throw std::invalid_argument("limit_experiment: order must be at least 2");
    }
    if (config.n_list.empty()) {
        throw std::invalid_argument("limit_experiment: empty n list");
    }
    const std::size_t N = config.order;
    const mpq_class s(config.s);
    LimitReport report;
    Series<ComplexDouble> last_b;
    for (int n : config.n_list) {
        if (n < 1 || s > n || s < 0) {
            throw std::invalid_argument("limit_experiment: need n >= 1 and 0 <= s <= n");
        }
        const mpq_class eps = s / n;
        const CircleMeasure mu = make_atomic({Atom{0, 1 - eps}, Atom{config.omega_turns, eps}});
        const PairMoments<ComplexDouble> unit{moment_series(mu, N), moment_series(mu, N)};

        PairMoments<ComplexDouble> pair = unit;
        Series<ComplexDouble> boolean_power = unit.M;
        for (int k = 1; k < n; ++k) {
            pair = cfree_convolve_moments(pair, unit);
            boolean_power = boolean_convolve_moments(boolean_power, unit.M);
        }
        const Series<ComplexDouble> sigma = sigma_series(pair.M, pair.m);
        const Series<ComplexDouble> b = b_transform(boolean_power);

        LimitRow row;
        row.n = n;
        for (std::size_t j = 0; j <= sigma.order(); ++j) {
            row.gaps.push_back(std::abs(sigma[j] - b[j]));
        }

        // gamma_n = exp(i sum_k arg b_nk + i sum_k int Im z dmu°_nk) and
        // sigma_n = sum_k (1 - Re z) dmu°_nk, all rows k identical here.
        const auto centered = center_array(std::vector<CircleMeasure>(static_cast<std::size_t>(n), mu), N);
        double phase = 0.0;
        row.sigma_moments.assign(N, ComplexDouble{0.0, 0.0});
        for (std::size_t k = 0; k < centered.centered.size(); ++k) {
            phase += 2.0 * std::numbers::pi * principal_turns(centered.b_turns[k]).get_d();
            for (const auto &a : centered.centered[k].atoms) {
                const double w = a.weight.get_d();
                const ComplexDouble zeta = unit_from_turns(a.turns);
                phase += w * zeta.imag();
                for (std::size_t j = 0; j < N; ++j) {
                    row.sigma_moments[j] += w * (1.0 - zeta.real()) * unit_from_turns(a.turns * static_cast<long>(j));
                }
            }
        }
        row.gamma = std::polar(1.0, phase);
        report.rows.push_back(std::move(row));
        last_b = b;
    }
    auto [gamma, moments] = fit_boolean_generator(last_b);
    report.fitted_gamma = gamma;
    report.fitted_sigma_moments = std::move(moments);
    return report;
}

} // namespace cfree
