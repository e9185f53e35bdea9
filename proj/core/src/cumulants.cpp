#include <cfree/cumulants.hpp>

#include <map>
#include <stdexcept>

namespace cfree {

namespace {

template <Scalar T>
void require_zero_constant(const Series<T> &s, const char *what)
{
    if (!is_zero(s[0])) {
        throw std::invalid_argument(std::string(what) + ": series must have zero constant term");
    }
}

template <Scalar T>
Series<T> one_plus(const Series<T> &s)
{
    return Series<T>::constant(s.order(), T{1}) + s;
}

// powers[p] = base^p for p = 0..count-1.
template <Scalar T>
std::vector<Series<T>> powers(const Series<T> &base, std::size_t count)
{
    std::vector<Series<T>> out;
    out.reserve(count);
    out.push_back(Series<T>::constant(base.order(), T{1}));
    for (std::size_t p = 1; p < count; ++p) {
        out.push_back(out.back() * base);
    }
    return out;
}

} // namespace

template <Scalar T>
Series<T> free_cumulants_from_moments(const Series<T> &m)
{
    require_zero_constant(m, "free_cumulants_from_moments");
    const std::size_t N = m.order();
    const auto pw = powers(one_plus(m), N + 1);
    Series<T> r(N);
    for (std::size_t n = 1; n <= N; ++n) {
        T acc = m[n];
        for (std::size_t p = 1; p < n; ++p) {
            acc = acc - r[p] * pw[p][n - p];
        }
        r.set(n, acc);
    }
    return r;
}

template <Scalar T>
Series<T> moments_from_free_cumulants(const Series<T> &r)
{
    require_zero_constant(r, "moments_from_free_cumulants");
    const std::size_t N = r.order();
    Series<T> m(N);
    for (std::size_t n = 1; n <= N; ++n) {
        // [z^{n-p}] (1+m)^p only involves m_1..m_{n-1}, all known by now.
        const auto pw = powers(one_plus(m), n);
        T acc = r[n];
        for (std::size_t p = 1; p < n; ++p) {
            acc = acc + r[p] * pw[p][n - p];
        }
        m.set(n, acc);
    }
    return m;
}

template <Scalar T>
Series<T> cfree_cumulants_from_moments(const Series<T> &M, const Series<T> &m)
{
    require_zero_constant(M, "cfree_cumulants_from_moments");
    require_zero_constant(m, "cfree_cumulants_from_moments");
    if (M.order() != m.order()) {
        throw std::invalid_argument("cfree_cumulants_from_moments: series orders differ");
    }
    const std::size_t N = M.order();
    const auto pw = powers(one_plus(m), N + 1);
    const Series<T> onePlusM = one_plus(M);
    Series<T> cr(N);
    for (std::size_t n = 1; n <= N; ++n) {
        T acc = M[n];
        for (std::size_t p = 1; p < n; ++p) {
            acc = acc - cr[p] * (pw[p - 1] * onePlusM)[n - p];
        }
        cr.set(n, acc);
    }
    return cr;
}

template <Scalar T>
Series<T> moments_from_cfree_cumulants(const Series<T> &cr, const Series<T> &r)
{
    require_zero_constant(cr, "moments_from_cfree_cumulants");
    if (cr.order() != r.order()) {
        throw std::invalid_argument("moments_from_cfree_cumulants: series orders differ");
    }
    const std::size_t N = cr.order();
    const Series<T> m = moments_from_free_cumulants(r);
    const auto pw = powers(one_plus(m), N + 1);
    Series<T> M(N);
    for (std::size_t n = 1; n <= N; ++n) {
        const Series<T> onePlusM = one_plus(M);
        T acc = cr[n];
        for (std::size_t p = 1; p < n; ++p) {
            acc = acc + cr[p] * (pw[p - 1] * onePlusM)[n - p];
        }
        M.set(n, acc);
    }
    return M;
}

template <Scalar T>
T moment_nc_sum(const Series<T> &r, int n)
{
    T acc{0};
    for_each_nc(n, [&](const NCPartition &p) { acc = acc + cf_weight(p, r); });
    return acc;
}

template <Scalar T>
T phi_moment_nc_sum(const Series<T> &cr, const Series<T> &r, int n)
{
    T acc{0};
    for_each_nc(n, [&](const NCPartition &p) {
        const auto sizes = p.block_sizes();
        const auto ext = p.exterior_mask();
        T w{1};
        for (std::size_t b = 0; b < sizes.size(); ++b) {
            w = w * (ext[b] ? cr : r)[static_cast<std::size_t>(sizes[b])];
        }
        acc = acc + w;
    });
    return acc;
}

template <Scalar T>
OneStateData<T> OneStateData<T>::from_moments(Series<T> m)
{
    Series<T> r = free_cumulants_from_moments(m);
    return {std::move(m), std::move(r)};
}

template <Scalar T>
OneStateData<T> OneStateData<T>::from_cumulants(Series<T> r)
{
    Series<T> m = moments_from_free_cumulants(r);
    return {std::move(m), std::move(r)};
}

template <Scalar T>
TwoStateData<T> TwoStateData<T>::from_moments(Series<T> m, Series<T> M)
{
    Series<T> cr = cfree_cumulants_from_moments(M, m);
    return {OneStateData<T>::from_moments(std::move(m)), std::move(M), std::move(cr)};
}

template <Scalar T>
TwoStateData<T> TwoStateData<T>::from_cumulants(Series<T> r, Series<T> cr)
{
    Series<T> M = moments_from_cfree_cumulants(cr, r);
    return {OneStateData<T>::from_cumulants(std::move(r)), std::move(M), std::move(cr)};
}

namespace {

// Letter shared by all elements of the block, or -1 when mixed.
int block_letter(const Block &b, std::span<const int> word)
{
    const int first = word[static_cast<std::size_t>(b.front() - 1)];
    for (int e : b) {
        if (word[static_cast<std::size_t>(e - 1)] != first) {
            return -1;
        }
    }
    return first;
}

void check_word(const NCPartition &p, std::span<const int> word, std::size_t letter_count)
{
    if (word.size() != static_cast<std::size_t>(p.n())) {
        throw std::invalid_argument("kappa: word length differs from partition size");
    }
    for (int l : word) {
        if (l < 0 || static_cast<std::size_t>(l) >= letter_count) {
            throw std::invalid_argument("kappa: letter index out of range");
        }
    }
}

} // namespace

template <Scalar T>
T kappa(const NCPartition &p, std::span<const int> word, std::span<const OneStateData<T>> letters)
{
    check_word(p, word, letters.size());
    T w{1};
    for (const auto &b : p.blocks()) {
        const int l = block_letter(b, word);
        if (l < 0) {
            return T{0};
        }
        w = w * letters[static_cast<std::size_t>(l)].r[b.size()];
    }
    return w;
}

template <Scalar T>
T cfree_kappa(const NCPartition &p, std::span<const int> word, std::span<const TwoStateData<T>> letters)
{
    check_word(p, word, letters.size());
    const auto blocks = p.blocks();
    const auto ext = p.exterior_mask();
    T w{1};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const int l = block_letter(blocks[i], word);
        if (l < 0) {
            return T{0};
        }
        const auto &data = letters[static_cast<std::size_t>(l)];
        w = w * (ext[i] ? data.cr : data.psi.r)[blocks[i].size()];
    }
    return w;
}

template <Scalar T>
T product_psi_cumulants(const Series<T> &rX, const Series<T> &rY, int n)
{
    T acc{0};
    for (const auto &sigma : enumerate_nc_0(2 * n)) {
        T w{1};
        for (const auto &b : sigma.blocks()) {
            w = w * (b.front() % 2 == 1 ? rX : rY)[b.size()];
        }
        acc = acc + w;
    }
    return acc;
}

template <Scalar T>
T product_phi_cumulants(const TwoStateData<T> &X, const TwoStateData<T> &Y, int n)
{
    T acc{0};
    for (const auto &sigma : enumerate_nc_0(2 * n)) {
        const auto blocks = sigma.blocks();
        const auto ext = sigma.exterior_mask();
        T w{1};
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const auto &data = blocks[i].front() % 2 == 1 ? X : Y;
            w = w * (ext[i] ? data.cr : data.psi.r)[blocks[i].size()];
        }
        acc = acc + w;
    }
    return acc;
}

template <Scalar T>
Series<T> product_psi_cumulant_series(const TwoStateData<T> &X, const TwoStateData<T> &Y)
{
    Series<T> out(X.order());
    for (std::size_t n = 1; n <= X.order(); ++n) {
        out.set(n, product_psi_cumulants(X.psi.r, Y.psi.r, static_cast<int>(n)));
    }
    return out;
}

template <Scalar T>
Series<T> product_phi_cumulant_series(const TwoStateData<T> &X, const TwoStateData<T> &Y)
{
    Series<T> out(X.order());
    for (std::size_t n = 1; n <= X.order(); ++n) {
        out.set(n, product_phi_cumulants(X, Y, static_cast<int>(n)));
    }
    return out;
}

template <Scalar T>
Series<T> cfree_product_formula(const TwoStateData<T> &X, const TwoStateData<T> &Y)
{
    const T a1 = X.psi.r[1];
    const T b1 = Y.psi.r[1];
    if (is_zero(a1) || is_zero(b1)) {
        throw std::domain_error("cfree_product_formula: first free cumulants must be nonzero");
    }
    const std::size_t N = X.order();
    const Series<T> innerX = (boxed_convolution_checked(X.psi.r, Y.psi.r) * (T{1} / a1)).truncated(N - 1);
    const Series<T> innerY = (boxed_convolution_checked(Y.psi.r, X.psi.r) * (T{1} / b1)).truncated(N - 1);
    return compose(divide_by_z(X.cr), innerX) * compose(divide_by_z(Y.cr), innerY);
}

namespace {

template <Scalar T>
class WordCumulants {
public:
    WordCumulants(const MomentOracle<T> &psi, const MomentOracle<T> &phi) : psi_(psi), phi_(phi) {}

    T get(const std::vector<int> &word, State state)
    {
        auto &memo = state == State::psi ? psi_memo_ : phi_memo_;
        if (auto it = memo.find(word); it != memo.end()) {
            return it->second;
        }
        const std::size_t n = word.size();
        const MomentOracle<T> &last = state == State::psi ? psi_ : phi_;
        if (!last) {
            throw std::invalid_argument("word_cumulant: missing moment oracle");
        }
        T value = moment(last, word);
        // Subsets {1 = i_1 < ... < i_p} of positions, encoded on positions 2..n;
        // the full subset is the unknown cumulant itself.
        const std::uint32_t full = (n > 1) ? ((1u << (n - 1)) - 1) : 0u;
        for (std::uint32_t mask = 0; mask < full; ++mask) {
            std::vector<std::size_t> idx{0};
            for (std::size_t i = 1; i < n; ++i) {
                if (mask & (1u << (i - 1))) {
                    idx.push_back(i);
                }
            }
            std::vector<int> sub;
            for (auto i : idx) {
                sub.push_back(word[i]);
            }
            T term = get(sub, state);
            for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
                term = term * moment(psi_, slice(word, idx[k] + 1, idx[k + 1]));
            }
            term = term * moment(last, slice(word, idx.back() + 1, n));
            value = value - term;
        }
        memo.emplace(word, value);
        return value;
    }

private:
    static std::vector<int> slice(const std::vector<int> &w, std::size_t from, std::size_t to)
    {
        return {w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to)};
    }

    static T moment(const MomentOracle<T> &oracle, const std::vector<int> &w)
    {
        if (w.empty()) {
            return T{1};
        }
        return oracle(std::span<const int>(w));
    }

    const MomentOracle<T> &psi_;
    const MomentOracle<T> &phi_;
    std::map<std::vector<int>, T> psi_memo_;
    std::map<std::vector<int>, T> phi_memo_;
};

} // namespace

template <Scalar T>
T word_cumulant(const MomentOracle<T> &psi, const MomentOracle<T> &phi, std::span<const int> word, State state)
{
    if (word.empty()) {
        throw std::invalid_argument("word_cumulant: word must be nonempty");
    }
    if (word.size() > 20) {
        throw std::invalid_argument("word_cumulant: word too long");
    }
    if (!psi) {
        throw std::invalid_argument("word_cumulant: the psi oracle is always required");
    }
    WordCumulants<T> wc(psi, phi);
    return wc.get(std::vector<int>(word.begin(), word.end()), state);
}

#define CFREE_INSTANTIATE_CUMULANTS(T)                                                                   \
    template Series<T> free_cumulants_from_moments(const Series<T> &);                                    \
    template Series<T> moments_from_free_cumulants(const Series<T> &);                                    \
    template Series<T> cfree_cumulants_from_moments(const Series<T> &, const Series<T> &);                \
    template Series<T> moments_from_cfree_cumulants(const Series<T> &, const Series<T> &);                \
    template T moment_nc_sum(const Series<T> &, int);                                                     \
    template T phi_moment_nc_sum(const Series<T> &, const Series<T> &, int);                              \
    template struct OneStateData<T>;                                                                      \
    template struct TwoStateData<T>;                                                                      \
    template T kappa(const NCPartition &, std::span<const int>, std::span<const OneStateData<T>>);       \
    template T cfree_kappa(const NCPartition &, std::span<const int>, std::span<const TwoStateData<T>>); \
    template T product_psi_cumulants(const Series<T> &, const Series<T> &, int);                          \
    template T product_phi_cumulants(const TwoStateData<T> &, const TwoStateData<T> &, int);              \
    template Series<T> product_psi_cumulant_series(const TwoStateData<T> &, const TwoStateData<T> &);     \
    template Series<T> product_phi_cumulant_series(const TwoStateData<T> &, const TwoStateData<T> &);     \
    template Series<T> cfree_product_formula(const TwoStateData<T> &, const TwoStateData<T> &);           \
    template T word_cumulant(const MomentOracle<T> &, const MomentOracle<T> &, std::span<const int>, State);

CFREE_INSTANTIATE_CUMULANTS(ComplexRational)
CFREE_INSTANTIATE_CUMULANTS(ComplexDouble)

} // namespace cfree
