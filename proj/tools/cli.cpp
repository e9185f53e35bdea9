#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <cfree/cfree.hpp>

namespace cfree::cli {

namespace {

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
}

// ---- nc / ncl ----------------------------------------------------------------

void cmd_nc(int n, const std::string &cls, bool count_only, std::ostream &out)
{
    std::vector<NCPartition> parts;
    if (cls == "nc") {
        parts = enumerate_nc(n);
    } else if (cls == "nc_s") {
        parts = enumerate_nc_s(n);
    } else {
        parts = enumerate_nc_0(n);
    }
    if (count_only) {
        out << parts.size() << "\n";
        return;
    }
    for (const auto &p : parts) {
        out << to_json(p).dump() << "\n";
    }
}

void cmd_ncl(int n, bool classify, bool count_only, std::ostream &out)
{
    const auto parts = enumerate_ncl(n);
    if (count_only) {
        out << parts.size() << "\n";
        return;
    }
    for (const auto &g : parts) {
        json j = to_json(g);
        if (classify) {
            const auto c = ncl_classify(g);
            j["exterior"] = c.exterior;
            j["interior"] = c.interior;
            j["singly"] = c.singly;
            j["doubly"] = c.doubly;
        }
        out << j.dump() << "\n";
    }
}

// ---- transform -----------------------------------------------------------------

template <Scalar T>
Series<T> moments_at_order(const Series<T> &s, std::size_t order)
{
    if (order > s.order()) {
        throw std::invalid_argument("requested order " + std::to_string(order) + " exceeds input order " +
                                    std::to_string(s.order()));
    }
    return s.truncated(order);
}

template <Scalar T>
json apply_transform(const std::string &what, const Series<T> &m, const Series<T> &M)
{
    if (what == "r") {
        return to_json(r_transform(m));
    }
    if (what == "cr") {
        return to_json(cr_transform(M, m));
    }
    if (what == "t") {
        return to_json(t_transform(m));
    }
    if (what == "ct") {
        return to_json(ct_transform(M, m));
    }
    if (what == "eta") {
        return to_json(eta_transform(m));
    }
    if (what == "b") {
        return to_json(b_transform(m));
    }
    return to_json(sigma_series(M, m));
}

// Input forms: a moment series (psi = phi), {"m": series, "M": series}, a
// measure (psi = phi), or a measure pair (phi-law mu, psi-law nu).
json cmd_transform(const json &in, const std::string &what, std::size_t order)
{
    if (in.contains("mu") && in.contains("nu")) {
        const auto p = pair_from_json(in);
        return apply_transform(what, moment_series(p.nu, order), moment_series(p.mu, order));
    }
    if (in.contains("type")) {
        const auto s = moment_series(measure_from_json(in), order);
        return apply_transform(what, s, s);
    }
    if (in.contains("m")) {
        const AnySeries m = series_from_json(in.at("m"));
        const AnySeries M = in.contains("M") ? series_from_json(in.at("M")) : m;
        if (m.index() != M.index()) {
            throw std::invalid_argument("m and M must share a scalar mode");
        }
        return std::visit(
            [&](const auto &ms) {
                using S = std::decay_t<decltype(ms)>;
                return apply_transform(what, moments_at_order(ms, order), moments_at_order(std::get<S>(M), order));
            },
            m);
    }
    const AnySeries m = series_from_json(in);
    return std::visit(
        [&](const auto &ms) {
            const auto s = moments_at_order(ms, order);
            return apply_transform(what, s, s);
        },
        m);
}

// ---- convolve ------------------------------------------------------------------

json cmd_convolve(const std::string &kind, const json &a, const json &b, std::size_t order)
{
    if (kind == "cfree") {
        return to_json(cfree_multiplicative_convolve(pair_from_json(a), pair_from_json(b), order));
    }
    const CircleMeasure ma = measure_from_json(a);
    const CircleMeasure mb = measure_from_json(b);
    if (kind == "boolean") {
        return to_json(boolean_convolve(ma, mb, order));
    }
    return to_json(free_multiplicative_convolve(ma, mb, order));
}

// ---- limit ---------------------------------------------------------------------

std::vector<int> parse_n_list(const std::string &text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("--n-list: '" + item + "' is not an integer");
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("--n-list is empty");
    }
    return out;
}

json limit_summary(const LimitReport &r)
{
    auto cjson = [](ComplexDouble z) { return json::array({z.real(), z.imag()}); };
    json gamma = json::array();
    json sigma = json::array();
    for (const auto &row : r.rows) {
        gamma.push_back({{"n", row.n}, {"value", cjson(row.gamma)}});
        json values = json::array();
        for (const auto &v : row.sigma_moments) {
            values.push_back(cjson(v));
        }
        sigma.push_back({{"n", row.n}, {"values", values}});
    }
    json fitted = json::array();
    for (const auto &v : r.fitted_sigma_moments) {
        fitted.push_back(cjson(v));
    }
    return {{"gamma_n", gamma},
            {"sigma_n_moments", sigma},
            {"fit", {{"gamma", cjson(r.fitted_gamma)}, {"sigma_moments", fitted}}}};
}

void write_limit_csv(const LimitReport &r, std::ostream &out)
{
    out << "n,j,gap\n";
    out << std::setprecision(17);
    for (const auto &row : r.rows) {
        for (std::size_t j = 0; j < row.gaps.size(); ++j) {
            out << row.n << "," << j << "," << row.gaps[j] << "\n";
        }
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Conditionally free multiplicative convolution toolkit"};
    app.require_subcommand(1);

    int n = 0;
    std::string cls = "nc";
    bool count_only = false;
    auto *nc = app.add_subcommand("nc", "Enumerate non-crossing partitions (JSON lines)");
    nc->add_option("--n", n, "Ground-set size (2n for nc_s / nc_0)")->required();
    nc->add_option("--class", cls, "nc | nc_s | nc_0")->check(CLI::IsMember({"nc", "nc_s", "nc_0"}));
    nc->add_flag("--count-only", count_only, "Print only the count");

    bool classify = false;
    auto *ncl = app.add_subcommand("ncl", "Enumerate non-crossing linked partitions (JSON lines)");
    ncl->add_option("--n", n, "Ground-set size")->required();
    ncl->add_flag("--classify", classify, "Add exterior/interior blocks and cover sets");
    ncl->add_flag("--count-only", count_only, "Print only the count");

    std::string in_path;
    std::string what;
    std::size_t order = 8;
    auto *transform = app.add_subcommand("transform", "Compute a transform of moment data");
    transform->add_option("--in", in_path, "Series, {m, M}, measure or pair JSON")->required();
    transform->add_option("--what", what, "r | cr | t | ct | eta | b | sigma")
        ->required()
        ->check(CLI::IsMember({"r", "cr", "t", "ct", "eta", "b", "sigma"}));
    transform->add_option("--order", order, "Moment order N");

    std::string kind;
    std::string a_path;
    std::string b_path;
    auto *convolve = app.add_subcommand("convolve", "Convolve two measures or measure pairs");
    convolve->add_option("--kind", kind, "boolean | free | cfree")
        ->required()
        ->check(CLI::IsMember({"boolean", "free", "cfree"}));
    convolve->add_option("--a", a_path, "First measure (pair for cfree) JSON")->required();
    convolve->add_option("--b", b_path, "Second measure (pair for cfree) JSON")->required();
    convolve->add_option("--order", order, "Number of moments");

    std::string gamma_turns;
    std::string sigma_path;
    auto *idiv = app.add_subcommand("idiv", "Infinitely divisible law from a generator");
    idiv->add_option("--gamma", gamma_turns, "gamma as rational turns, e.g. 1/8")->required();
    idiv->add_option("--sigma", sigma_path, "Atomic sigma JSON (atoms array or {\"atoms\": ...})")->required();
    idiv->add_option("--kind", kind, "boolean | free")->required()->check(CLI::IsMember({"boolean", "free"}));
    idiv->add_option("--order", order, "Number of moments");

    std::string gen_path;
    std::string target_path;
    double t = 1.0;
    auto *semigroup = app.add_subcommand("semigroup", "Member of the convolution semigroup at time t");
    semigroup->add_option("--gen", gen_path, "Generator JSON for the psi-law")->required();
    semigroup->add_option("--sigma-target", target_path, "Sigma series JSON at t = 1")->required();
    semigroup->add_option("--t", t, "Time, t >= 0")->required();
    semigroup->add_option("--order", order, "Number of moments");

    double s = 0.5;
    std::string omega = "1/4";
    std::string n_list = "4,8,16,32";
    std::string csv_path;
    std::string summary_path;
    auto *limit = app.add_subcommand("limit", "Pair-product versus boolean-power limit experiment");
    limit->add_option("--s", s, "Mass parameter s");
    limit->add_option("--omega", omega, "Atom position in rational turns");
    limit->add_option("--n-list", n_list, "Comma separated n values");
    limit->add_option("--order", order, "Moment order N");
    limit->add_option("--out", csv_path, "CSV report path (n,j,gap)")->required();
    limit->add_option("--summary", summary_path, "JSON summary path (default: stdout)");

    VerifyOptions vopt;
    auto *verify = app.add_subcommand("verify", "Run randomized verification suites");
    verify->add_option("--suite", vopt.suite, "partitions | series | cumulants | transforms | measures | all")
        ->check(CLI::IsMember({"partitions", "series", "cumulants", "transforms", "measures", "all"}));
    verify->add_option("--order", vopt.order, "Truncation order");
    verify->add_option("--seed", vopt.seed, "Random seed");

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (nc->parsed()) {
            cmd_nc(n, cls, count_only, out);
        } else if (ncl->parsed()) {
            cmd_ncl(n, classify, count_only, out);
        } else if (transform->parsed()) {
            out << cmd_transform(read_json_file(in_path), what, order).dump() << "\n";
        } else if (convolve->parsed()) {
            out << cmd_convolve(kind, read_json_file(a_path), read_json_file(b_path), order).dump() << "\n";
        } else if (idiv->parsed()) {
            json g = {{"gamma", gamma_turns}, {"sigma", read_json_file(sigma_path)}};
            const IdGenerator gen = generator_from_json(g);
            const CircleMeasure m = kind == "boolean" ? idiv_boolean_measure(gen, order) : idiv_free_measure(gen, order);
            out << to_json(m).dump() << "\n";
        } else if (semigroup->parsed()) {
            const IdGenerator gen = generator_from_json(read_json_file(gen_path));
            const auto target = approx_series_from_json(read_json_file(target_path));
            out << to_json(semigroup_pair(gen, target, t, order)).dump() << "\n";
        } else if (limit->parsed()) {
            LimitConfig config;
            config.s = s;
            config.omega_turns = rational_from_json(json(omega));
            config.n_list = parse_n_list(n_list);
            config.order = order;
            const LimitReport report = limit_experiment(config);
            std::ofstream csv(csv_path);
            if (!csv) {
                throw std::invalid_argument("cannot write '" + csv_path + "'");
            }
            write_limit_csv(report, csv);
            const std::string summary = limit_summary(report).dump(2);
            if (summary_path.empty()) {
                out << summary << "\n";
            } else {
                std::ofstream js(summary_path);
                if (!js) {
                    throw std::invalid_argument("cannot write '" + summary_path + "'");
                }
                js << summary << "\n";
            }
        } else if (verify->parsed()) {
            return run_verify(vopt, out);
        }
    } catch (const unsupported_domain &e) {
        err << "unsupported domain: " << e.what() << "\n";
        return 3;
    } catch (const resource_error &e) {
        err << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error &e) {
        err << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace cfree::cli
