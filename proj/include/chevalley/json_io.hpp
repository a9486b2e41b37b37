// JSON and TSV serialization.  All numbers are emitted as exact decimal
// strings ("p/q" for rationals), so reports are byte-identical across runs
// and characters round-trip exactly.
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "chevalley/characters.hpp"
#include "chevalley/rootdata.hpp"

namespace chevalley {

using Json = nlohmann::ordered_json;

inline Json weight_to_json(const Weight& w) {
    Json a = Json::array();
    for (const auto& c : w.coords) a.push_back(to_string(c));
    return a;
}

inline Weight weight_from_json(const Json& j) {
    RatVec coords;
    for (const auto& c : j) coords.push_back(parse_rat(c.get<std::string>()));
    return Weight(std::move(coords));
}

inline Json coweight_to_json(const Coweight& l) {
    Json a = Json::array();
    for (const auto& c : l.coords) a.push_back(to_string(c));
    return a;
}

inline Json rootdatum_to_json(const RootDatum& d) {
    Json j;
    j["type"] = d.name;
    j["rank"] = d.rank;
    j["convention"] = "simply connected form: coweight lattice = coroot lattice";
    Json cm = Json::array();
    for (const auto& row : d.cartan) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        cm.push_back(r);
    }
    j["cartan_matrix"] = cm;
    Json roots = Json::array();
    for (const auto& r : d.positive_roots) roots.push_back(weight_to_json(r));
    j["positive_roots"] = roots;
    j["rho"] = weight_to_json(d.rho);
    j["theta"] = weight_to_json(d.theta);
    j["dual_coxeter"] = to_string(d.dual_coxeter_number);
    return j;
}

inline Json character_to_json(const GradedCharacter& ch) {
    Json j;
    j["rank"] = ch.rank;
    Json cut;
    cut["q_max"] = ch.cutoffs.q_max ? Json(*ch.cutoffs.q_max) : Json(nullptr);
    cut["weight_window"] = ch.cutoffs.weight_window ? Json(*ch.cutoffs.weight_window) : Json(nullptr);
    cut["mixed"] = ch.cutoffs.mixed;
    j["cutoffs"] = cut;
    Json terms = Json::array();
    for (const auto& [k, v] : ch.terms) {
        Json t;
        t["weight"] = weight_to_json(k.weight);
        t["q"] = k.q;
        t["t"] = k.t;
        t["coeff"] = to_string(v);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline GradedCharacter character_from_json(const Json& j) {
    GradedCharacter ch(j.at("rank").get<int>());
    const auto& cut = j.at("cutoffs");
    if (!cut.at("q_max").is_null()) ch.cutoffs.q_max = cut.at("q_max").get<long>();
    if (!cut.at("weight_window").is_null())
        ch.cutoffs.weight_window = cut.at("weight_window").get<long>();
    ch.cutoffs.mixed = cut.at("mixed").get<bool>();
    for (const auto& t : j.at("terms")) {
        ch.terms[CharKey{weight_from_json(t.at("weight")), t.at("q").get<long>(),
                         t.at("t").get<long>()}] = Int(t.at("coeff").get<std::string>());
    }
    return ch;
}

inline std::string character_to_tsv(const GradedCharacter& ch) {
    std::ostringstream os;
    os << "weight\tq\tt\tcoeff\n";
    for (const auto& [k, v] : ch.terms) {
        for (std::size_t i = 0; i < k.weight.coords.size(); ++i)
            os << (i ? "," : "") << to_string(k.weight.coords[i]);
        os << "\t" << k.q << "\t" << k.t << "\t" << to_string(v) << "\n";
    }
    return os.str();
}

}  // namespace chevalley
