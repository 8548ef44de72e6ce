#pragma once

#include <string>

#include <json.hpp>

#include "kreg/local_schemes.hpp"
#include "kreg/polynomial.hpp"
#include "kreg/regularity.hpp"

namespace kreg {

using Json = nlohmann::ordered_json;

// Scalars serialize as exact strings: "p" or "p/q" for rationals,
// {"re": ..., "im": ...} for Gaussian rationals. Parsing accepts JSON
// integers as well.
Json scalar_to_json(const Rat& x);
Json scalar_to_json(const GaussRat& x);
Rat rat_from_json(const Json& j);
GaussRat gauss_from_json(const Json& j);

template <class S>
S scalar_from_json(const Json& j) {
    if constexpr (std::is_same_v<S, GaussRat>) {
        return gauss_from_json(j);
    } else {
        return rat_from_json(j);
    }
}

// {"n": 3, "terms": [{"exp": [3,0,0], "coef": "1"}, ...]}, terms in
// leading-first graded-lex order (the polynomial's canonical term order).
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"n": 3, "components": [Polynomial, ...]}
Json to_json(const PolyMap& m);
PolyMap polymap_from_json(const Json& j);

template <class S>
Json tuple_to_json(const PointTuple<S>& pts) {
    Json arr = Json::array();
    for (const auto& p : pts) {
        Json row = Json::array();
        for (const auto& x : p) row.push_back(scalar_to_json(x));
        arr.push_back(std::move(row));
    }
    return arr;
}

template <class S>
PointTuple<S> tuple_from_json(const Json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("points: expected an array of points");
    PointTuple<S> pts;
    for (const auto& row : arr) {
        if (!row.is_array()) throw std::invalid_argument("points: each point must be an array");
        std::vector<S> p;
        for (const auto& x : row) p.push_back(scalar_from_json<S>(x));
        pts.push_back(std::move(p));
    }
    return pts;
}

template <class S>
Json to_json(const SearchReport<S>& rep, const std::string& mode) {
    Json j;
    j["mode"] = mode;
    j["seed"] = rep.seed;
    j["config_digest"] = rep.config_digest;
    j["trials_requested"] = rep.trials_requested;
    j["trials_run"] = rep.trials_run;
    if (rep.counterexample) {
        Json c;
        c["trial"] = rep.counterexample->trial;
        if (rep.counterexample->scale) c["scale"] = rep.counterexample->scale->str();
        c["rank"] = rep.counterexample->rank;
        c["points"] = tuple_to_json(rep.counterexample->points);
        j["counterexample"] = std::move(c);
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

/// Debug dump: array of rows of exact scalar strings.
template <class S>
Json matrix_to_json(const Matrix<S>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const HilbertFn& h);

Json to_json(const Embedding& e);

Json to_json(const AvoidanceReport& rep, const std::string& family);

/// Reads a whole file; throws std::invalid_argument when unreadable.
std::string read_file(const std::string& path);

Json parse_json_file(const std::string& path);

}  // namespace kreg
