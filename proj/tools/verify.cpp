#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <cfree/cfree.hpp>

namespace cfree::cli {

namespace {

using Q = ComplexRational;
using SQ = Series<Q>;

class Recorder {
public:
    Recorder(std::ostream &log, std::string suite) : log_(log), suite_(std::move(suite)) {}

    void check(const std::string &name, bool ok, const std::string &detail = {})
    {
        log_ << "[" << suite_ << "] " << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) {
            log_ << " (" << detail << ")";
        }
        log_ << "\n";
        failures_ += ok ? 0 : 1;
    }

    // Runs `body` `cases` times and records one line: every case must pass.
    void repeat(const std::string &name, int cases, const std::function<bool()> &body)
    {
        int bad = 0;
        for (int i = 0; i < cases; ++i) {
            bad += body() ? 0 : 1;
        }
        check(name, bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " cases");
    }

    int failures() const { return failures_; }

private:
    std::ostream &log_;
    std::string suite_;
    int failures_ = 0;
};

std::vector<unsigned long> catalan_numbers(int n)
{
    std::vector<unsigned long> c{1};
    for (int k = 1; k <= n; ++k) {
        unsigned long sum = 0;
        for (int i = 0; i < k; ++i) {
            sum += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
        }
        c.push_back(sum);
    }
    return c;
}

int suite_partitions(const VerifyOptions &, std::ostream &log)
{
    Recorder r(log, "partitions");
    const auto catalan = catalan_numbers(10);
    bool counts = true;
    for (int n = 1; n <= 10; ++n) {
        counts = counts && enumerate_nc(n).size() == catalan[static_cast<std::size_t>(n)];
    }
    r.check("|NC(n)| equals Catalan(n) for n <= 10", counts);

    bool sizes = true;
    bool involutive_up_to_rotation = true;
    for (int n = 1; n <= 7; ++n) {
        for (const auto &p : enumerate_nc(n)) {
            const auto k = kreweras(p);
            sizes = sizes && p.size() + k.size() == n + 1;
            involutive_up_to_rotation = involutive_up_to_rotation && kreweras(k).size() == p.size();
        }
    }
    r.check("|p| + |Kr(p)| = n + 1 for n <= 7", sizes);
    r.check("|Kr(Kr(p))| = |p| for n <= 7", involutive_up_to_rotation);

    bool nc0 = true;
    for (int n = 1; n <= 5; ++n) {
        const auto zero = enumerate_nc_0(2 * n);
        const auto doubled = double_partition(NCPartition::singletons(n));
        for (const auto &sigma : enumerate_nc_s(2 * n)) {
            const bool in = std::find(zero.begin(), zero.end(), sigma) != zero.end();
            nc0 = nc0 && in == (nc_join(sigma, doubled) == NCPartition::one_block(2 * n));
        }
    }
    r.check("NC_0 membership matches the join criterion for 2n <= 10", nc0);

    bool fibers = true;
    for (int n = 1; n <= 5; ++n) {
        std::size_t total = 0;
        for (const auto &[pi, fiber] : group_nc_s_by_join(2 * n)) {
            total += fiber.size();
        }
        fibers = fibers && total == enumerate_nc_s(2 * n).size();
        fibers = fibers && group_nc_s_by_join(2 * n).at(NCPartition::one_block(n)) == enumerate_nc_0(2 * n);
    }
    r.check("join fibers partition NC_S(2n), fiber of 1_n is NC_0(2n)", fibers);

    bool contains = true;
    for (int n = 1; n <= 6; ++n) {
        const auto ncl = enumerate_ncl(n);
        for (const auto &p : enumerate_nc(n)) {
            const NCLinkedPartition g(p);
            contains = contains && std::binary_search(ncl.begin(), ncl.end(), g);
            const auto cls = ncl_classify(g);
            contains = contains && cls.exterior.size() == p.exterior_blocks().size();
        }
    }
    r.check("NC(n) inside NCL(n) with matching exterior blocks, n <= 6", contains);
    return r.failures();
}

int suite_series(const VerifyOptions &opt, std::ostream &log)
{
    Recorder r(log, "series");
    RandomInputs rnd(opt.seed);
    const std::size_t N = opt.order;
    const std::size_t box_order = std::min<std::size_t>(N, 6);
    r.repeat("compose(invert(f), f) = z exactly", 20, [&] {
        const SQ f = rnd.series(N);
        return compose(invert_composition(f), f) == SQ::identity(N) &&
               compose(f, invert_composition(f)) == SQ::identity(N);
    });
    r.repeat("reciprocal(f) * f = 1 exactly", 20, [&] {
        const SQ f = rnd.unit_series(N);
        return reciprocal(f) * f == SQ::constant(N, Q(1));
    });
    r.repeat("boxed convolution is associative with unit z", 5, [&] {
        const SQ f = rnd.series(box_order);
        const SQ g = rnd.series(box_order);
        const SQ h = rnd.series(box_order);
        const SQ z = SQ::identity(box_order);
        return boxed_convolution(boxed_convolution(f, g), h) == boxed_convolution(f, boxed_convolution(g, h)) &&
               boxed_convolution(f, z) == f && boxed_convolution(z, f) == f;
    });
    r.repeat("invert(f) o (f box g) = (1/a1) (f box-checked g)", 10, [&] {
        const SQ f = rnd.series(box_order);
        const SQ g = rnd.series(box_order);
        return compose(invert_composition(f), boxed_convolution(f, g)) ==
               boxed_convolution_checked(f, g) * (Q(1) / f[1]);
    });
    return r.failures();
}

int suite_cumulants(const VerifyOptions &opt, std::ostream &log)
{
    Recorder r(log, "cumulants");
    RandomInputs rnd(opt.seed + 1);
    const std::size_t N = opt.order;
    r.repeat("moments -> free cumulants -> moments", 20, [&] {
        const SQ m = rnd.series(N);
        return moments_from_free_cumulants(free_cumulants_from_moments(m)) == m;
    });
    r.repeat("phi-moments -> c-free cumulants -> phi-moments", 20, [&] {
        const SQ m = rnd.series(N);
        const SQ M = rnd.series(N);
        return moments_from_cfree_cumulants(cfree_cumulants_from_moments(M, m), free_cumulants_from_moments(m)) == M;
    });
    r.repeat("recurrences agree with the NC sums", 5, [&] {
        const SQ rr = rnd.series(N);
        const SQ cr = rnd.series(N);
        const SQ m = moments_from_free_cumulants(rr);
        const SQ M = moments_from_cfree_cumulants(cr, rr);
        for (int n = 1; n <= static_cast<int>(N); ++n) {
            if (moment_nc_sum(rr, n) != m[static_cast<std::size_t>(n)] ||
                phi_moment_nc_sum(cr, rr, n) != M[static_cast<std::size_t>(n)]) {
                return false;
            }
        }
        return true;
    });
    r.repeat("NC_0 sums agree with boxed convolution of R-series", 5, [&] {
        const std::size_t k = std::min<std::size_t>(N, 5);
        const SQ rx = rnd.series(k);
        const SQ ry = rnd.series(k);
        const SQ box = boxed_convolution(rx, ry);
        for (std::size_t n = 1; n <= k; ++n) {
            if (product_psi_cumulants(rx, ry, static_cast<int>(n)) != box[n]) {
                return false;
            }
        }
        return true;
    });
    r.repeat("cumulants with a unit entry vanish (words up to length 5)", 3, [&] {
        const SQ m = rnd.series(6);
        const SQ M = rnd.series(6);
        auto strip = [](std::span<const int> w) {
            return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](int l) { return l != kUnit; }));
        };
        MomentOracle<Q> psi = [&](std::span<const int> w) {
            const auto k = strip(w);
            return k == 0 ? Q(1) : m[k];
        };
        MomentOracle<Q> phi = [&](std::span<const int> w) {
            const auto k = strip(w);
            return k == 0 ? Q(1) : M[k];
        };
        for (int len = 2; len <= 5; ++len) {
            for (int pos = 0; pos < len; ++pos) {
                std::vector<int> word(static_cast<std::size_t>(len), 0);
                word[static_cast<std::size_t>(pos)] = kUnit;
                if (word_cumulant(psi, phi, word, State::psi) != Q(0) ||
                    word_cumulant(psi, phi, word, State::phi) != Q(0)) {
                    return false;
                }
            }
        }
        return true;
    });
    return r.failures();
}

int suite_transforms(const VerifyOptions &opt, std::ostream &log)
{
    Recorder r(log, "transforms");
    RandomInputs rnd(opt.seed + 2);
    const std::size_t N = opt.order;
    const std::size_t prod_order = std::min<std::size_t>(N, 5);
    int t_ok = 0;
    int ct_ok = 0;
    const int cases = 10;
    for (int i = 0; i < cases; ++i) {
        const auto X = TwoStateData<Q>::from_cumulants(rnd.series(prod_order), rnd.series(prod_order));
        const auto Y = TwoStateData<Q>::from_cumulants(rnd.series(prod_order), rnd.series(prod_order));
        const auto XY = TwoStateData<Q>::from_cumulants(product_psi_cumulant_series(X, Y),
                                                         product_phi_cumulant_series(X, Y));
        t_ok += t_transform(XY.psi.m) == t_transform(X.psi.m) * t_transform(Y.psi.m) ? 1 : 0;
        ct_ok += ct_transform(XY.M, XY.psi.m) == ct_transform(X.M, X.psi.m) * ct_transform(Y.M, Y.psi.m) ? 1 : 0;
    }
    r.check("T_XY = T_X T_Y with XY from NC_0 sums", t_ok == cases, std::to_string(t_ok) + "/10 cases");
    r.check("cT_XY = cT_X cT_Y with XY from NC_0 sums", ct_ok == cases, std::to_string(ct_ok) + "/10 cases");

    const int ncl_max = static_cast<int>(std::min<std::size_t>(N + 1, 8));
    r.repeat("NCL sums = functional-identity recurrences = T round trip", 3, [&] {
        const SQ t = rnd.unit_series(static_cast<std::size_t>(ncl_max - 1));
        const SQ ct = rnd.unit_series(static_cast<std::size_t>(ncl_max - 1));
        const SQ m = moments_from_t(t);
        const SQ M = phi_moments_from_ct(ct, m);
        for (int n = 1; n <= ncl_max; ++n) {
            if (moments_via_ncl(t, std::optional<SQ>{}, n) != m[static_cast<std::size_t>(n)] ||
                moments_via_ncl(t, std::optional<SQ>{ct}, n) != M[static_cast<std::size_t>(n)]) {
                return false;
            }
        }
        return t_transform(m) == t && ct_transform(M, m) == ct;
    });
    r.repeat("Sigma: cT o z/(1-z) = B_mu o eta_nu^{<-1>}", 10, [&] {
        const SQ m = rnd.series(N);
        const SQ M = rnd.series(N);
        const auto routes = sigma_routes(M, m);
        return routes.via_ct == routes.via_b && routes.via_b[0] == M[1];
    });
    r.repeat("T * S = 1", 10, [&] {
        const SQ m = rnd.series(N);
        return t_transform(m) * s_transform(m) == SQ::constant(N - 1, Q(1));
    });
    return r.failures();
}

int suite_measures(const VerifyOptions &opt, std::ostream &log)
{
    Recorder r(log, "measures");
    RandomInputs rnd(opt.seed + 3);
    const std::size_t N = std::max<std::size_t>(opt.order, 2);
    auto random_pair = [&] { return MeasurePair{rnd.atomic(3, 12), rnd.atomic_nonzero_mean(3, 12)}; };
    auto diff = [&](const MeasurePair &a, const MeasurePair &b) {
        const auto x = pair_moments(a, N);
        const auto y = pair_moments(b, N);
        return std::max(max_abs_diff(x.M, y.M), max_abs_diff(x.m, y.m));
    };
    r.repeat("pair convolution is commutative and associative (1e-9)", 10, [&] {
        const auto a = random_pair();
        const auto b = random_pair();
        const auto c = random_pair();
        const auto ab = cfree_multiplicative_convolve(a, b, N);
        const auto ba = cfree_multiplicative_convolve(b, a, N);
        const auto left = cfree_multiplicative_convolve(ab, c, N);
        const auto right = cfree_multiplicative_convolve(a, cfree_multiplicative_convolve(b, c, N), N);
        return diff(ab, ba) < 1e-9 && diff(left, right) < 1e-9;
    });
    r.repeat("convolution outputs pass the Toeplitz PSD gate (1e-7)", 10, [&] {
        const auto a = random_pair();
        const auto b = random_pair();
        const auto p = cfree_multiplicative_convolve(a, b, N);
        return toeplitz_psd_check(moments_of(p.mu, N), 1e-7).psd && toeplitz_psd_check(moments_of(p.nu, N), 1e-7).psd &&
               toeplitz_psd_check(moments_of(boolean_convolve(a.mu, b.mu, N), N), 1e-7).psd;
    });
    r.repeat("Haar psi-laws: phi-moments (c1 c2)^n exactly", 10, [&] {
        const Atomic mu1 = rnd.atomic(3, 4);
        const Atomic mu2 = rnd.atomic(3, 4);
        const PairMoments<Q> a{*exact_moment_series(mu1, N), SQ(N)};
        const PairMoments<Q> b{*exact_moment_series(mu2, N), SQ(N)};
        const auto out = cfree_convolve_moments(a, b);
        const Q c = a.M[1] * b.M[1];
        for (std::size_t n = 1; n <= N; ++n) {
            if (out.M[n] != ipow(c, static_cast<unsigned>(n))) {
                return false;
            }
        }
        return out.m.is_zero();
    });
    const IdGenerator gen = make_generator(unit_from_turns(mpq_class(1, 10)),
                                           {Atom{mpq_class(1, 3), mpq_class(1, 4)}, Atom{mpq_class(1, 7), mpq_class(1, 8)}});
    const IdGenerator gen_mu = make_generator(unit_from_turns(mpq_class(1, 12)), {Atom{mpq_class(2, 5), mpq_class(1, 5)}});
    const auto target = herglotz_exp(gen_mu, -1, N - 1);
    const auto whole = semigroup_pair(gen, target, 1.0, N);
    bool roots = true;
    for (int n = 2; n <= 5; ++n) {
        const auto root = idiv_root_pair(gen, target, n, N);
        MeasurePair acc = root;
        for (int k = 1; k < n; ++k) {
            acc = cfree_multiplicative_convolve(acc, root, N);
        }
        roots = roots && diff(acc, whole) < 1e-9;
    }
    r.check("n-th roots of a generator pair recombine, n <= 5 (1e-9)", roots);
    bool law = true;
    for (double s : {0.25, 0.5, 1.0}) {
        for (double t : {0.25, 0.5, 1.0}) {
            const auto lhs = cfree_multiplicative_convolve(semigroup_pair(gen, target, s, N),
                                                           semigroup_pair(gen, target, t, N), N);
            law = law && diff(lhs, semigroup_pair(gen, target, s + t, N)) < 1e-9;
        }
    }
    r.check("semigroup law for s, t in {1/4, 1/2, 1} (1e-9)", law);
    return r.failures();
}

} // namespace

int run_verify(const VerifyOptions &options, std::ostream &log)
{
    if (options.order < 2 || options.order > 8) {
        log << "verify: --order must be between 2 and 8\n";
        return 2;
    }
    const std::vector<std::pair<std::string, int (*)(const VerifyOptions &, std::ostream &)>> suites{
        {"partitions", suite_partitions}, {"series", suite_series},     {"cumulants", suite_cumulants},
        {"transforms", suite_transforms}, {"measures", suite_measures},
    };
    int failures = 0;
    for (const auto &[name, fn] : suites) {
        if (options.suite == "all" || options.suite == name) {
            failures += fn(options, log);
        }
    }
    log << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace cfree::cli
