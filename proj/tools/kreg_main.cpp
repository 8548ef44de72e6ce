// Command-line surface for constructing k-regular polynomial maps and
// verifying their defining properties with exact rational arithmetic.
//
// Exit codes: 0 = success / property held, 1 = counterexample or violation
// found (witness in the JSON payload), 2 = input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "kreg/constructions.hpp"
#include "kreg/interpolation.hpp"
#include "kreg/json_io.hpp"
#include "kreg/local_schemes.hpp"
#include "kreg/parse.hpp"
#include "kreg/regularity.hpp"

namespace {

using kreg::Json;

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kInputError = 2;

void emit(const Json& j, const std::string& output_path) {
    std::string text = j.dump(2) + "\n";
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write to " + output_path);
        out << text;
    }
}

kreg::PolyMap load_map(const std::string& path) {
    return kreg::polymap_from_json(kreg::parse_json_file(path));
}

struct ConstructArgs {
    std::string family;
    std::size_t n = 0;
    std::uint32_t k = 0;
    bool mirror = false;
    std::string output;
};

int run_construct(const ConstructArgs& a) {
    kreg::MapRecipe recipe{kreg::map_family_from_string(a.family), a.n, a.k, a.mirror};
    emit(kreg::to_json(kreg::build_map(recipe)), a.output);
    return kOk;
}

struct BoundsArgs {
    std::size_t n = 0;
    std::uint32_t k = 0;
    std::string output;
};

int run_bounds(const BoundsArgs& a) {
    Json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["generic"] = kreg::generic_bound(a.n, a.k);
    if (a.n >= 2 && a.k > 3)
        j["thm3"] = kreg::binomial_coefficient(a.n + a.k - 2, a.k - 2) + 1;
    if (a.n >= 2 && a.k > 4)
        j["thm4"] = kreg::binomial_coefficient(a.n + a.k - 3, a.n) + a.n + 1;
    if (a.n == 1)
        j["caveat"] = "the n=1 generic bound k-1 is one below the rational-normal-curve count k";
    emit(j, a.output);
    return kOk;
}

struct VerifyArgs {
    std::string map_path;
    std::size_t k = 0;
    std::uint64_t trials = 0;
    std::int64_t seed = 0;
    std::string mode = "random";
    std::string field = "rational";
    std::uint32_t curve_degree = 3;
    std::int64_t num_abs = 10;
    std::int64_t den_max = 8;
    bool no_isotropic = false;
    std::string output;
};

template <class S>
int verify_with_scalar(const VerifyArgs& a, const kreg::PolyMap& map,
                       const kreg::SamplerConfig& cfg) {
    kreg::SearchReport<S> rep;
    if (a.mode == "random") {
        rep = kreg::random_search<S>(map, a.k, a.trials, a.seed, cfg);
    } else if (a.mode == "cluster") {
        kreg::ClusterConfig cc;
        cc.curve_degree = a.curve_degree;
        rep = kreg::cluster_search<S>(map, a.k, a.trials, a.seed, cc, cfg);
    } else {
        throw std::invalid_argument("mode must be 'random' or 'cluster'");
    }
    emit(kreg::to_json(rep, a.mode), a.output);
    return rep.counterexample ? kCounterexample : kOk;
}

int run_verify(const VerifyArgs& a) {
    auto map = load_map(a.map_path);
    kreg::SamplerConfig cfg;
    cfg.num_abs = a.num_abs;
    cfg.den_max = a.den_max;
    if (a.field == "rational") {
        cfg.isotropic = false;
        return verify_with_scalar<kreg::Rat>(a, map, cfg);
    }
    if (a.field == "gaussian") {
        cfg.isotropic = !a.no_isotropic;
        return verify_with_scalar<kreg::GaussRat>(a, map, cfg);
    }
    throw std::invalid_argument("field must be 'rational' or 'gaussian'");
}

struct WeightsArgs {
    std::string map_path;
    std::string output;
};

int run_weights(const WeightsArgs& a) {
    auto map = load_map(a.map_path);
    auto w = kreg::find_torus_weights(map);
    Json j;
    if (w) {
        j["weights"] = w->values();
        Json degrees = Json::array();
        for (const auto& f : map) degrees.push_back(*kreg::weighted_degree(f, *w));
        j["component_degrees"] = std::move(degrees);
    } else {
        j["weights"] = nullptr;
    }
    emit(j, a.output);
    return kOk;
}

struct InterpolateArgs {
    std::string map_path, nodes_path, values_path;
    std::string output;
};

int run_interpolate(const InterpolateArgs& a) {
    auto map = load_map(a.map_path);
    Json nodes_json = kreg::parse_json_file(a.nodes_path);
    if (!nodes_json.contains("points"))
        throw std::invalid_argument("nodes file needs a \"points\" array");
    auto nodes = kreg::tuple_from_json<kreg::Rat>(nodes_json.at("points"));
    Json values_json = kreg::parse_json_file(a.values_path);
    if (!values_json.contains("values"))
        throw std::invalid_argument("values file needs a \"values\" array");
    std::vector<kreg::Rat> values;
    for (const auto& v : values_json.at("values")) values.push_back(kreg::rat_from_json(v));

    try {
        auto coeffs = kreg::interpolate(map, nodes, values);
        Json j;
        Json cs = Json::array();
        for (const auto& c : coeffs) cs.push_back(c.str());
        j["coeffs"] = std::move(cs);
        j["polynomial"] = kreg::to_json(kreg::as_polynomial(map, coeffs));
        emit(j, a.output);
        return kOk;
    } catch (const kreg::NotRegularOnNodes& e) {
        Json j;
        j["error"] = "not-regular-on-nodes";
        j["rank"] = e.rank();
        j["k"] = e.k();
        j["nodes"] = kreg::tuple_to_json(nodes);
        emit(j, a.output);
        return kCounterexample;
    }
}

struct HilbertArgs {
    std::string algebra;
    std::string output;
};

kreg::FiniteLocalAlgebra algebra_from_spec(const std::string& spec) {
    if (spec.rfind("monomial:", 0) == 0) {
        std::string list = spec.substr(9);
        std::vector<std::string> items;
        std::size_t start = 0;
        while (start <= list.size()) {
            auto comma = list.find(',', start);
            if (comma == std::string::npos) {
                items.push_back(list.substr(start));
                break;
            }
            items.push_back(list.substr(start, comma - start));
            start = comma + 1;
        }
        std::size_t nvars = 0;
        std::vector<kreg::Polynomial> polys;
        for (const auto& item : items) {
            auto p = kreg::parse_polynomial(item);
            nvars = std::max(nvars, p.nvars());
            polys.push_back(std::move(p));
        }
        std::vector<kreg::Monomial> gens;
        for (const auto& p : polys) {
            if (p.term_count() != 1 || p.terms().begin()->second != kreg::Rat(1))
                throw std::invalid_argument("monomial ideal generators must be plain monomials");
            std::vector<std::uint32_t> exps(nvars, 0);
            const auto& e = p.terms().begin()->first;
            for (std::size_t i = 0; i < e.nvars(); ++i) exps[i] = e[i];
            gens.emplace_back(std::move(exps));
        }
        return kreg::FiniteLocalAlgebra::monomial_quotient(nvars, std::move(gens));
    }
    return kreg::SchemeFamily::parse(spec).make();
}

int run_hilbert(const HilbertArgs& a) {
    auto alg = algebra_from_spec(a.algebra);
    auto h = kreg::hilbert_function(alg);
    Json j;
    j["algebra"] = alg.str();
    j["dim"] = alg.dim();
    Json basis = Json::array();
    for (const auto& m : alg.basis()) basis.push_back(m.str());
    j["basis"] = std::move(basis);
    j["hilbert"] = kreg::to_json(h);
    emit(j, a.output);
    return kOk;
}

struct ApolarArgs {
    std::string socle;
    std::string output;
};

int run_apolar(const ApolarArgs& a) {
    auto f = kreg::parse_polynomial(a.socle);
    auto gens = kreg::apolar_annihilator(f);
    Json j;
    j["socle"] = f.str();
    Json gj = Json::array(), gp = Json::array();
    for (const auto& g : gens) {
        gj.push_back(kreg::to_json(g));
        gp.push_back(g.str());
    }
    j["generators"] = std::move(gj);
    j["generators_pretty"] = std::move(gp);
    bool homogeneous = true;
    std::uint64_t d = f.degree();
    for (const auto& [m, c] : f.terms()) homogeneous = homogeneous && m.degree() == d;
    if (homogeneous) j["hilbert"] = kreg::to_json(kreg::apolar_hilbert(f));
    emit(j, a.output);
    return kOk;
}

struct AvoidArgs {
    std::string map_path, center_path, family;
    std::uint64_t trials = 0;
    std::int64_t seed = 0;
    std::string output;
};

int run_avoid(const AvoidArgs& a) {
    auto map = load_map(a.map_path);
    Json center_json = kreg::parse_json_file(a.center_path);
    if (!center_json.contains("coords"))
        throw std::invalid_argument("center file needs a \"coords\" array");
    std::vector<kreg::Rat> center;
    for (const auto& c : center_json.at("coords")) center.push_back(kreg::rat_from_json(c));
    auto family = kreg::SchemeFamily::parse(a.family);
    auto rep = kreg::avoidance_experiment(map, center, family, a.trials, a.seed);
    emit(kreg::to_json(rep, family.str()), a.output);
    return rep.violations == 0 ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-regular polynomial maps: construction and exact verification"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "emit a map family as PolyMap JSON");
    construct->add_option("--family", construct_args.family,
                          "veronese | base | thm3 | thm4 | real3reg")->required();
    construct->add_option("--n", construct_args.n, "ambient variable count")->required();
    construct->add_option("--k,--r", construct_args.k, "family parameter (Veronese degree r)");
    construct->add_flag("--mirror", construct_args.mirror, "reverse variable indices (thm3/thm4)");
    construct->add_option("-o,--output", construct_args.output, "output path (default stdout)");

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "generic dimension bound and family sizes");
    bounds->add_option("--n", bounds_args.n)->required();
    bounds->add_option("--k", bounds_args.k)->required();
    bounds->add_option("-o,--output", bounds_args.output);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "seeded counterexample search for k-regularity");
    verify->add_option("--map", verify_args.map_path, "PolyMap JSON file")->required();
    verify->add_option("--k", verify_args.k, "tuple size")->required();
    verify->add_option("--trials", verify_args.trials)->required();
    verify->add_option("--seed", verify_args.seed, "campaign seed (required, no clock default)")
        ->required();
    verify->add_option("--mode", verify_args.mode, "random | cluster");
    verify->add_option("--field", verify_args.field, "rational | gaussian");
    verify->add_option("--curve-degree", verify_args.curve_degree, "cluster curve degree");
    verify->add_option("--num-abs", verify_args.num_abs, "sampler numerator bound");
    verify->add_option("--den-max", verify_args.den_max, "sampler denominator bound");
    verify->add_flag("--no-isotropic", verify_args.no_isotropic,
                     "disable isotropic-line tuples in the gaussian sampler");
    verify->add_option("-o,--output", verify_args.output);

    WeightsArgs weights_args;
    auto* weights = app.add_subcommand("weights", "positive torus weights for a map, if any");
    weights->add_option("--map", weights_args.map_path)->required();
    weights->add_option("-o,--output", weights_args.output);

    InterpolateArgs interpolate_args;
    auto* interpolate = app.add_subcommand("interpolate", "match values at nodes exactly");
    interpolate->add_option("--map", interpolate_args.map_path)->required();
    interpolate->add_option("--nodes", interpolate_args.nodes_path)->required();
    interpolate->add_option("--values", interpolate_args.values_path)->required();
    interpolate->add_option("-o,--output", interpolate_args.output);

    HilbertArgs hilbert_args;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a finite local algebra");
    hilbert->add_option("--algebra", hilbert_args.algebra,
                        "curvilinear:k | special:k | monomial:m1,m2,...")->required();
    hilbert->add_option("-o,--output", hilbert_args.output);

    ApolarArgs apolar_args;
    auto* apolar = app.add_subcommand("apolar", "annihilator of a dual socle generator");
    apolar->add_option("--socle", apolar_args.socle, "e.g. \"y1^2+y2^2\"")->required();
    apolar->add_option("-o,--output", apolar_args.output);

    AvoidArgs avoid_args;
    auto* avoid = app.add_subcommand("avoid", "projection-center avoidance experiment");
    avoid->add_option("--map", avoid_args.map_path)->required();
    avoid->add_option("--center", avoid_args.center_path, "JSON {\"coords\": [...]}")->required();
    avoid->add_option("--family", avoid_args.family, "curvilinear:k | special:k")->required();
    avoid->add_option("--trials", avoid_args.trials)->required();
    avoid->add_option("--seed", avoid_args.seed)->required();
    avoid->add_option("-o,--output", avoid_args.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kInputError;
    }

    try {
        if (construct->parsed()) return run_construct(construct_args);
        if (bounds->parsed()) return run_bounds(bounds_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (weights->parsed()) return run_weights(weights_args);
        if (interpolate->parsed()) return run_interpolate(interpolate_args);
        if (hilbert->parsed()) return run_hilbert(hilbert_args);
        if (apolar->parsed()) return run_apolar(apolar_args);
        if (avoid->parsed()) return run_avoid(avoid_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
