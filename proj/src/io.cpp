#include "earcomb/io.hpp"

#include <fstream>
#include <sstream>

namespace earcomb::io {

SimplicialComplex complex_from_json(const json& j) {
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<Face>());
    SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));
    if (j.contains("vertices")) {
        std::vector<int> declared = j["vertices"].get<std::vector<int>>();
        std::sort(declared.begin(), declared.end());
        std::vector<int> used = K.vertices();
        for (int v : used)
            if (!std::binary_search(declared.begin(), declared.end(), v))
                throw std::invalid_argument("complex JSON: facet vertex not declared");
    }
    return K;
}

json complex_to_json(const SimplicialComplex& K) {
    return {{"vertices", K.vertices()}, {"facets", K.facets()}};
}

Matroid matroid_from_json(const json& j) {
    return Matroid::from_bases(j.at("ground").get<int>(),
                               j.at("bases").get<std::vector<std::vector<int>>>());
}

PosetData poset_from_json(const json& j) {
    PosetData out;
    std::map<int, int> rank_of;
    for (const auto& e : j.at("elements")) rank_of[e.at("id").get<int>()] = e.at("rank").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    out.poset = RankedPoset::from_covers(rank_of, covers);
    if (j.contains("labels")) {
        out.has_labeling = true;
        for (const auto& [key, val] : j["labels"].items()) {
            std::istringstream is(key);
            int a, b;
            char comma;
            is >> a >> comma >> b;
            out.labeling[{a, b}] = val.get<int>();
        }
    }
    return out;
}

json poset_to_json(const RankedPoset& P, const EdgeLabeling* labeling) {
    json elements = json::array();
    json covers = json::array();
    for (int id : P.elements()) {
        elements.push_back({{"id", id}, {"rank", P.rank_of(id)}});
        for (int up : P.covers_above(id)) covers.push_back({id, up});
    }
    json out = {{"elements", elements}, {"covers", covers}};
    if (labeling) {
        json labels = json::object();
        for (const auto& [edge, l] : *labeling)
            labels[std::to_string(edge.first) + "," + std::to_string(edge.second)] = l;
        out["labels"] = labels;
    }
    return out;
}

json flag_vector_to_json(const FlagVector& v) {
    json out = json::object();
    for (const auto& [S, val] : v.at) {
        std::string key;
        for (size_t i = 0; i < S.size(); ++i) key += (i ? "," : "") + std::to_string(S[i]);
        out[key.empty() ? "{}" : key] = val;
    }
    return out;
}

json ear_sequence_to_json(const EarSequence& ears, const CedReport& report) {
    json jears = json::array();
    for (const Ear& e : ears.ears) {
        TopType t = certify_ball_or_sphere(e.complex, e.shelling);
        jears.push_back({{"piece", e.piece_index},
                         {"descent_index", e.descent_index},
                         {"descent_chain", e.descent_chain},
                         {"facets", e.shelling},
                         {"facet_labels", e.facet_labels},
                         {"certificate", to_string(t)}});
    }
    json dropped = json::array();
    for (const auto& d : ears.dropped)
        dropped.push_back({{"piece", d.piece_index}, {"descent_index", d.descent_index}});

    SimplicialComplex uni;
    for (const Ear& e : ears.ears) uni = complex_union(uni, e.complex);
    json out = {{"S", ears.S.members},
                {"ambient_rank", ears.ambient_rank},
                {"ears", jears},
                {"dropped", dropped},
                {"union_f_vector", f_vector(uni)},
                {"union_h_vector", h_vector(uni)},
                {"ced_report",
                 {{"union", report.union_ok},
                  {"pieces", report.pieces_ok},
                  {"balls", report.balls_ok},
                  {"boundary", report.boundary_ok},
                  {"polytopality", "assumed-not-rechecked"},
                  {"failures", report.failures}}}};
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace earcomb::io
