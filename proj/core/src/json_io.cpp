#include <cfree/json_io.hpp>

#include <stdexcept>

namespace cfree {

namespace {

[[noreturn]] void bad(const std::string &what) { throw std::invalid_argument("malformed JSON: " + what); }

const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

ComplexDouble complex_from_json(const json &j)
{
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        bad("expected [re, im] numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const ComplexDouble &z) { return json::array({z.real(), z.imag()}); }

std::vector<Atom> atoms_from_json(const json &j)
{
    if (!j.is_array()) {
        bad("atoms must be an array");
    }
    std::vector<Atom> atoms;
    for (const auto &a : j) {
        atoms.push_back(Atom{rational_from_json(field(a, "turns")), rational_from_json(field(a, "weight"))});
    }
    return atoms;
}

json atoms_to_json(const std::vector<Atom> &atoms)
{
    json out = json::array();
    for (const auto &a : atoms) {
        out.push_back({{"turns", a.turns.get_str()}, {"weight", a.weight.get_str()}});
    }
    return out;
}

std::vector<Block> blocks_from_json(const json &j, int &n)
{
    n = field(j, "n").get<int>();
    const json &bl = field(j, "blocks");
    if (!bl.is_array()) {
        bad("blocks must be an array");
    }
    std::vector<Block> blocks;
    for (const auto &b : bl) {
        blocks.push_back(b.get<Block>());
    }
    return blocks;
}

} // namespace

mpq_class rational_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return mpq_class(j.get<long>());
    }
    if (j.is_string()) {
        return ComplexRational::parse(j.get<std::string>()).real();
    }
    bad("expected a rational as \"p/q\" string or integer");
}

json to_json(const SetPartition &p) { return {{"n", p.n()}, {"blocks", p.blocks()}}; }

json to_json(const NCLinkedPartition &g) { return {{"n", g.n()}, {"blocks", g.blocks()}}; }

NCPartition nc_partition_from_json(const json &j)
{
    int n = 0;
    auto blocks = blocks_from_json(j, n);
    return NCPartition(n, blocks);
}

NCLinkedPartition ncl_partition_from_json(const json &j)
{
    int n = 0;
    auto blocks = blocks_from_json(j, n);
    return NCLinkedPartition(n, std::move(blocks));
}

json to_json(const Series<ComplexRational> &s)
{
    json coeffs = json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(json::array({c.real().get_str(), c.imag().get_str()}));
    }
    return {{"order", s.order()}, {"mode", "exact"}, {"coeffs", coeffs}};
}

json to_json(const Series<ComplexDouble> &s)
{
    json coeffs = json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(complex_to_json(c));
    }
    return {{"order", s.order()}, {"mode", "approx"}, {"coeffs", coeffs}};
}

json to_json(const AnySeries &s)
{
    return std::visit([](const auto &x) { return to_json(x); }, s);
}

AnySeries series_from_json(const json &j)
{
    const auto order = field(j, "order").get<std::size_t>();
    const auto mode = field(j, "mode").get<std::string>();
    const json &coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) {
        bad("coeffs must be an array");
    }
    if (mode == "exact") {
        std::vector<ComplexRational> c;
        for (const auto &x : coeffs) {
            if (x.is_array() && x.size() == 2) {
                c.emplace_back(rational_from_json(x[0]), rational_from_json(x[1]));
            } else {
                c.emplace_back(rational_from_json(x));
            }
        }
        return Series<ComplexRational>(order, std::move(c));
    }
    if (mode == "approx") {
        std::vector<ComplexDouble> c;
        for (const auto &x : coeffs) {
            c.push_back(complex_from_json(x));
        }
        return Series<ComplexDouble>(order, std::move(c));
    }
    bad("mode must be \"exact\" or \"approx\"");
}

Series<ComplexDouble> approx_series_from_json(const json &j)
{
    return std::visit([](const auto &s) { return Series<ComplexDouble>(to_approx(s)); }, series_from_json(j));
}

json to_json(const CircleMeasure &m)
{
    return std::visit(
        [](const auto &x) -> json {
            using V = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<V, Atomic>) {
                return {{"type", "atomic"}, {"atoms", atoms_to_json(x.atoms)}};
            } else if constexpr (std::is_same_v<V, Haar>) {
                return {{"type", "haar"}};
            } else if constexpr (std::is_same_v<V, PoissonKernel>) {
                return {{"type", "poisson"}, {"alpha", complex_to_json(x.alpha)}};
            } else {
                json values = json::array();
                for (const auto &v : x.values) {
                    values.push_back(complex_to_json(v));
                }
                return {{"type", "moments"}, {"values", values}};
            }
        },
        m);
}

CircleMeasure measure_from_json(const json &j)
{
    const auto type = field(j, "type").get<std::string>();
    if (type == "atomic") {
        return make_atomic(atoms_from_json(field(j, "atoms")));
    }
    if (type == "haar") {
        return Haar{};
    }
    if (type == "poisson") {
        return make_poisson(complex_from_json(field(j, "alpha")));
    }
    if (type == "moments") {
        MomentSeq m;
        for (const auto &v : field(j, "values")) {
            m.values.push_back(complex_from_json(v));
        }
        return m;
    }
    bad("unknown measure type '" + type + "'");
}

json to_json(const MeasurePair &p) { return {{"mu", to_json(p.mu)}, {"nu", to_json(p.nu)}}; }

MeasurePair pair_from_json(const json &j)
{
    return {measure_from_json(field(j, "mu")), measure_from_json(field(j, "nu"))};
}

IdGenerator generator_from_json(const json &j)
{
    const json &g = field(j, "gamma");
    const ComplexDouble gamma = g.is_array() ? complex_from_json(g) : unit_from_turns(rational_from_json(g));
    std::vector<Atom> sigma;
    if (j.contains("sigma")) {
        const json &s = j.at("sigma");
        sigma = atoms_from_json(s.is_object() ? field(s, "atoms") : s);
    }
    return make_generator(gamma, std::move(sigma));
}

json to_json(const IdGenerator &g)
{
    return {{"gamma", complex_to_json(g.gamma)}, {"sigma", atoms_to_json(g.sigma)}};
}

} // namespace cfree
