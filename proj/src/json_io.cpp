#include "kreg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace kreg {

Json scalar_to_json(const Rat& x) { return x.str(); }

Json scalar_to_json(const GaussRat& x) {
    Json j;
    j["re"] = x.re.str();
    j["im"] = x.im.str();
    return j;
}

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return Rat::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    throw std::invalid_argument("expected a rational as string or integer, got " + j.dump());
}

GaussRat gauss_from_json(const Json& j) {
    if (j.is_object()) {
        if (!j.contains("re") || !j.contains("im"))
            throw std::invalid_argument("Gaussian scalar needs \"re\" and \"im\": " + j.dump());
        return GaussRat(rat_from_json(j.at("re")), rat_from_json(j.at("im")));
    }
    return GaussRat(rat_from_json(j));  // plain rationals lift
}

Json to_json(const Polynomial& p) {
    Json j;
    j["n"] = p.nvars();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["exp"] = m.exps();
        t["coef"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON needs \"n\" and \"terms\"");
    auto n = j.at("n").get<std::size_t>();
    Polynomial p(n);
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            throw std::invalid_argument("polynomial term needs \"exp\" and \"coef\"");
        auto exps = t.at("exp").get<std::vector<std::uint32_t>>();
        if (exps.size() != n)
            throw std::invalid_argument("polynomial term exponent length differs from n");
        p.add_term(Monomial(std::move(exps)), rat_from_json(t.at("coef")));
    }
    return p;
}

Json to_json(const PolyMap& m) {
    Json j;
    j["n"] = m.nvars();
    Json comps = Json::array();
    for (const auto& f : m) comps.push_back(to_json(f));
    j["components"] = std::move(comps);
    return j;
}

PolyMap polymap_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("components"))
        throw std::invalid_argument("map JSON needs \"n\" and \"components\"");
    auto n = j.at("n").get<std::size_t>();
    std::vector<Polynomial> comps;
    for (const auto& c : j.at("components")) comps.push_back(polynomial_from_json(c));
    return PolyMap(n, std::move(comps));
}

Json to_json(const HilbertFn& h) { return Json(h.values); }

Json to_json(const Embedding& e) {
    Json j;
    j["algebra"] = e.algebra.str();
    Json basis = Json::array();
    for (const auto& m : e.algebra.basis()) basis.push_back(m.str());
    j["basis"] = std::move(basis);
    Json images = Json::array();
    for (const auto& img : e.images) {
        Json coords = Json::array();
        for (const auto& c : img.coords) coords.push_back(c.str());
        images.push_back(std::move(coords));
    }
    j["images"] = std::move(images);
    return j;
}

Json to_json(const AvoidanceReport& rep, const std::string& family) {
    Json j;
    j["family"] = family;
    j["seed"] = rep.seed;
    j["config_digest"] = rep.config_digest;
    j["trials"] = rep.trials;
    j["violations"] = rep.violations;
    Json w = Json::array();
    for (const auto& e : rep.witnesses) w.push_back(to_json(e));
    j["witnesses"] = std::move(w);
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

}  // namespace kreg
