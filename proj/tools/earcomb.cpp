// Batch front-end: parse inputs, run the decomposition pipelines, emit a JSON
// report and a human-readable summary.
//
// Exit codes: 0 all requested checks pass, 1 a certificate or inequality
// failed, 2 input validation failure.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "earcomb/ced.hpp"
#include "earcomb/errors.hpp"
#include "earcomb/faceposet.hpp"
#include "earcomb/geomlat.hpp"
#include "earcomb/io.hpp"
#include "earcomb/poset.hpp"
#include "earcomb/topology.hpp"

using namespace earcomb;
using earcomb::io::json;

namespace {

size_t max_faces_cap() {
    if (const char* e = std::getenv("EARCOMB_MAX_FACES")) {
        long long v = std::stoll(e);
        if (v > 0) return (size_t)v;
    }
    return kDefaultMaxFaces;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

std::string set_to_string(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

/// Nonempty subsets of [d-1] in lex order of their sorted member lists.
std::vector<std::vector<int>> nonempty_subsets_lex(int d) {
    std::vector<std::vector<int>> out;
    for (const auto& S : subsets_of_interval(d))
        if (!S.empty()) out.push_back(S);
    std::sort(out.begin(), out.end());
    return out;
}

/// Inequality table for one decomposition run: the unimodality and symmetry
/// bounds on the union's h-vector, the g-vector test, and the flag h-vector
/// dominance inequalities (for small rank).
json inequality_report(const SimplicialComplex& delta, const EarSequence& ears, bool& all_pass) {
    json rows = json::array();
    std::vector<long long> h = h_vector(delta);
    int d = (int)h.size() - 1;
    for (int i = 0; 2 * i < d; ++i) {
        bool ok = h[i] <= h[i + 1];
        rows.push_back({{"check", "h_" + std::to_string(i) + " <= h_" + std::to_string(i + 1)},
                        {"lhs", h[i]},
                        {"rhs", h[i + 1]},
                        {"pass", ok}});
        all_pass = all_pass && ok;
        bool ok2 = h[i] <= h[d - i];
        rows.push_back({{"check", "h_" + std::to_string(i) + " <= h_" + std::to_string(d - i)},
                        {"lhs", h[i]},
                        {"rhs", h[d - i]},
                        {"pass", ok2}});
        all_pass = all_pass && ok2;
    }
    std::vector<long long> g;
    g.push_back(h.empty() ? 1 : h[0]);
    for (int i = 1; 2 * i <= d; ++i) g.push_back(h[i] - h[i - 1]);
    bool gok = is_m_vector(g);
    all_pass = all_pass && gok;

    json out = {{"h_vector_rows", rows}, {"g_vector", g}, {"g_is_m_vector", gok}};

    int m = (int)ears.S.members.size();
    if (m >= 1 && m <= 4) {
        FlagVector fh = flag_h_of_complex(delta, ears.selected_rank, m + 1);
        json frows = json::array();
        auto subsets = nonempty_subsets_lex(m + 1);
        for (const auto& T : subsets) {
            for (const auto& Sp : subsets) {
                if (T == Sp) continue;
                if (!dominates(RankSet(m + 1, T), RankSet(m + 1, Sp)).dominates) continue;
                bool ok = fh.get(T) <= fh.get(Sp);
                frows.push_back({{"T", T},
                                 {"S", Sp},
                                 {"h_T", fh.get(T)},
                                 {"h_S", fh.get(Sp)},
                                 {"pass", ok}});
                all_pass = all_pass && ok;
            }
        }
        out["flag_dominance_rows"] = frows;
    }
    return out;
}

/// Runs the engine for one rank set and appends the report entry.
bool run_one(const BooleanPieceSequence& seq, const RankedPoset& ambient, const RankSet& S,
             json& runs, std::ostream& summary) {
    EarSequence ears = build_ears(seq, S);
    SimplicialComplex delta = order_complex(rank_select(ambient, S));
    CedReport report = verify_ced(delta, ears, max_faces_cap());
    bool pass = report.pass();
    json entry = io::ear_sequence_to_json(ears, report);
    entry["inequalities"] = inequality_report(delta, ears, pass);
    entry["pass"] = pass;
    runs.push_back(entry);
    summary << "S=" << set_to_string(S.members) << ": " << ears.ears.size() << " ears ("
            << ears.dropped.size() << " empty dropped), decomposition "
            << (report.pass() ? "verified" : "FAILED") << ", inequalities "
            << (pass ? "pass" : "FAIL") << "\n";
    if (!report.pass())
        for (const auto& f : report.failures) summary << "  failure: " << f << "\n";
    return pass;
}

void emit(const json& report, const std::string& out_path, const std::string& summary) {
    std::cout << summary;
    if (!out_path.empty()) {
        io::write_json_file(out_path, report);
        std::cout << "report written to " << out_path << "\n";
    }
}

int cmd_boolean(int d, const std::string& s_arg, const std::string& out_path) {
    LabeledPoset B = boolean_lattice(d);
    BooleanPieceSequence seq;
    seq.ambient = B.poset;
    seq.pieces.push_back({B.poset, B.labeling});
    validate_pieces(seq);

    std::vector<std::vector<int>> selections;
    if (s_arg == "all")
        selections = nonempty_subsets_lex(d);
    else
        selections.push_back(parse_int_list(s_arg));

    json runs = json::array();
    std::ostringstream summary;
    summary << "boolean lattice, d=" << d << "\n";
    bool all = true;
    for (const auto& mem : selections) all = run_one(seq, B.poset, RankSet(d, mem), runs, summary) && all;
    emit({{"pipeline", "boolean"}, {"d", d}, {"runs", runs}, {"pass", all}}, out_path,
         summary.str());
    return all ? 0 : 1;
}

int cmd_geometric(const std::string& in_path, const std::string& s_arg,
                  const std::string& out_path) {
    Matroid M = io::matroid_from_json(io::load_json_file(in_path));
    FlatLattice L = lattice_of_flats(M);
    int d = M.rank();
    EdgeLabeling nu = minimal_labeling(L);
    if (!verify_el_labeling(L.poset, nu))
        throw NotELLabelingError("minimal labeling failed EL verification");
    BooleanPieceSequence seq = geometric_pieces(L);

    std::vector<std::vector<int>> selections;
    if (s_arg == "all")
        selections = nonempty_subsets_lex(d);
    else
        selections.push_back(parse_int_list(s_arg));

    json runs = json::array();
    std::ostringstream summary;
    summary << "lattice of flats, rank " << d << ", " << M.bases().size() << " bases, "
            << seq.pieces.size() << " nbc-bases\n";
    bool all = true;
    for (const auto& mem : selections) all = run_one(seq, L.poset, RankSet(d, mem), runs, summary) && all;
    emit({{"pipeline", "geometric"},
          {"input", in_path},
          {"rank", d},
          {"nbc_bases", M.nbc_bases()},
          {"runs", runs},
          {"pass", all}},
         out_path, summary.str());
    return all ? 0 : 1;
}

/// Face poset with facets kept distinct, bounded by the empty face and an
/// artificial maximum; used for d-in-S exploration only.
RankedPoset unidentified_face_poset(const SimplicialComplex& K, std::vector<Face>& face_of_id) {
    int d = K.dim() + 1;
    face_of_id.clear();
    for (const Face& f : K.faces()) face_of_id.push_back(f);
    std::sort(face_of_id.begin(), face_of_id.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::map<Face, int> id_of;
    std::map<int, int> rank_of;
    for (size_t i = 0; i < face_of_id.size(); ++i) {
        id_of[face_of_id[i]] = (int)i;
        rank_of[(int)i] = (int)face_of_id[i].size();
    }
    int top = (int)face_of_id.size();
    rank_of[top] = d + 1;
    std::vector<std::pair<int, int>> covers;
    for (const auto& [f, id] : id_of) {
        if ((int)f.size() == d) covers.emplace_back(id, top);
        for (const auto& [g, gid] : id_of)
            if (g.size() == f.size() + 1 &&
                std::includes(g.begin(), g.end(), f.begin(), f.end()))
                covers.emplace_back(id, gid);
    }
    return RankedPoset::from_covers(rank_of, covers);
}

int cmd_faceposet(const std::string& in_path, const std::string& s_arg,
                  const std::string& shelling_arg, bool allow_explore,
                  const std::string& out_path) {
    json jin = io::load_json_file(in_path);
    SimplicialComplex K = io::complex_from_json(jin);
    std::vector<Face> input_facets;
    for (const auto& f : jin.at("facets")) {
        Face face = f.get<Face>();
        std::sort(face.begin(), face.end());
        input_facets.push_back(face);
    }
    int d = K.dim() + 1;

    std::vector<Face> order;
    if (!shelling_arg.empty()) {
        for (int idx : parse_int_list(shelling_arg)) {
            if (idx < 0 || idx >= (int)input_facets.size())
                throw std::invalid_argument("shelling index out of range");
            order.push_back(input_facets[idx]);
        }
    } else {
        if (K.facets().size() > 8)
            throw std::invalid_argument(
                "no shelling order given and too many facets for brute-force search");
        auto found = find_shelling(K);
        if (!found) throw NotAShellingError(1, 1);
        order = *found;
    }

    std::vector<std::vector<int>> selections;
    if (s_arg == "all")
        selections = nonempty_subsets_lex(d);
    else
        selections.push_back(parse_int_list(s_arg));

    // rank sets touching the facet rank need the open d-in-S construction;
    // only an order-complex exploration is offered there
    json runs = json::array();
    std::ostringstream summary;
    summary << "face poset of a " << (d - 1) << "-complex, " << K.facets().size() << " facets\n";
    bool all = true;
    FacePosetPipeline pipe;
    bool pipe_built = false;
    for (const auto& mem : selections) {
        bool has_d = std::find(mem.begin(), mem.end(), d) != mem.end();
        for (int i : mem)
            if (i < 1 || i > d) throw std::invalid_argument("rank set member out of range");
        if (has_d) {
            if (!allow_explore) {
                std::cerr << "S=" << set_to_string(mem)
                          << ": selecting the facet rank is outside the supported construction; "
                             "rerun with --allow-explore to inspect the order complex\n";
                return 2;
            }
            std::vector<Face> face_of_id;
            RankedPoset fpu = unidentified_face_poset(K, face_of_id);
            SimplicialComplex delta = order_complex(rank_select(fpu, RankSet(d + 1, mem)));
            HomologyProfile H = reduced_homology(delta, max_faces_cap());
            bool tree = delta.dim() == 1 && H.is_trivial();
            summary << "S=" << set_to_string(mem) << " (exploration): order complex dim "
                    << delta.dim() << ", f=" << json(f_vector(delta)).dump()
                    << ", tree: " << (tree ? "true" : "false") << "\n";
            runs.push_back({{"S", mem},
                            {"mode", "exploration"},
                            {"order_complex", io::complex_to_json(delta)},
                            {"f_vector", f_vector(delta)},
                            {"tree", tree}});
            continue;
        }
        if (!pipe_built) {
            pipe = faceposet_pieces(K, order);
            pipe_built = true;
        }
        all = run_one(pipe.seq, pipe.fp.poset, RankSet(d, mem), runs, summary) && all;
    }
    emit({{"pipeline", "faceposet"}, {"input", in_path}, {"d", d}, {"runs", runs}, {"pass", all}},
         out_path, summary.str());
    return all ? 0 : 1;
}

int cmd_dominance(int d, const std::string& t_arg, const std::string& s_arg, bool table,
                  const std::string& out_path) {
    json out = {{"pipeline", "dominance"}, {"d", d}};
    std::ostringstream summary;
    if (table) {
        json rows = json::array();
        auto subsets = nonempty_subsets_lex(d);
        summary << "dominating pairs for d=" << d << ":\n";
        for (const auto& T : subsets)
            for (const auto& S : subsets) {
                if (T == S) continue;
                if (dominates(RankSet(d, T), RankSet(d, S)).dominates) {
                    rows.push_back({{"T", T}, {"S", S}});
                    summary << "  " << set_to_string(T) << " is dominated by " << set_to_string(S)
                            << "\n";
                }
            }
        out["pairs"] = rows;
    } else {
        RankSet T(d, parse_int_list(t_arg)), S(d, parse_int_list(s_arg));
        DominanceResult r = dominates(T, S);
        summary << "dominates: " << (r.dominates ? "true" : "false") << "\n";
        json wit = json::array();
        for (const auto& [p, q] : r.witness) {
            wit.push_back({{"from", p}, {"to", q}});
            summary << "  " << json(p).dump() << " -> " << json(q).dump() << "\n";
        }
        out["T"] = T.members;
        out["S"] = S.members;
        out["dominates"] = r.dominates;
        out["witness"] = wit;
    }
    emit(out, out_path, summary.str());
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& shelling_arg,
               const std::string& out_path) {
    json jin = io::load_json_file(in_path);
    std::ostringstream summary;
    json out = {{"pipeline", "verify"}, {"input", in_path}};
    bool pass = true;

    if (jin.contains("facets")) {
        SimplicialComplex K = io::complex_from_json(jin);
        out["f_vector"] = f_vector(K);
        out["h_vector"] = h_vector(K);
        summary << "complex: " << K.facets().size() << " facets, f=" << json(f_vector(K)).dump()
                << ", h=" << json(h_vector(K)).dump() << "\n";
        std::vector<Face> order;
        if (!shelling_arg.empty()) {
            std::vector<Face> input_facets;
            for (const auto& f : jin["facets"]) {
                Face face = f.get<Face>();
                std::sort(face.begin(), face.end());
                input_facets.push_back(face);
            }
            for (int idx : parse_int_list(shelling_arg)) order.push_back(input_facets.at(idx));
        } else if (K.facets().size() <= 8) {
            if (auto found = find_shelling(K)) order = *found;
        }
        if (!order.empty()) {
            ShellingCertificate cert = verify_shelling(K, order);
            out["shelling"] = cert.order;
            out["restrictions"] = cert.restrictions;
            TopType t = certify_ball_or_sphere(K, order, max_faces_cap());
            out["certificate"] = to_string(t);
            summary << "shelling verified; certificate: " << to_string(t) << "\n";
        } else {
            summary << "no shelling order known\n";
        }
        bool cm = is_cohen_macaulay(K, max_faces_cap());
        out["cohen_macaulay"] = cm;
        summary << "Cohen-Macaulay: " << (cm ? "true" : "false") << "\n";
    } else if (jin.contains("elements")) {
        io::PosetData P = io::poset_from_json(jin);
        out["flag_f"] = io::flag_vector_to_json(flag_f(P.poset));
        out["flag_h"] = io::flag_vector_to_json(flag_h(P.poset));
        summary << "poset: " << P.poset.elements().size() << " elements, rank "
                << P.poset.top_rank() << "\n";
        if (P.has_labeling) {
            bool el = verify_el_labeling(P.poset, P.labeling);
            bool sd = el && is_sd_el(P.poset, P.labeling);
            out["el_labeling"] = el;
            out["sd_el_labeling"] = sd;
            pass = pass && el;
            summary << "EL-labeling: " << (el ? "true" : "false")
                    << ", permutation labels: " << (sd ? "true" : "false") << "\n";
            if (el) {
                bool agree = flag_h(P.poset) == flag_h_by_descents(P.poset, P.labeling);
                out["flag_h_descent_agreement"] = agree;
                pass = pass && agree;
                summary << "flag h via descents agrees: " << (agree ? "true" : "false") << "\n";
            }
        }
    } else if (jin.contains("bases")) {
        Matroid M = io::matroid_from_json(jin);
        FlatLattice L = lattice_of_flats(M);
        EdgeLabeling nu = minimal_labeling(L);
        bool el = verify_el_labeling(L.poset, nu);
        pass = pass && el;
        out["rank"] = M.rank();
        out["simple"] = M.is_simple();
        out["nbc_bases"] = M.nbc_bases();
        out["minimal_labeling_is_el"] = el;
        summary << "matroid: rank " << M.rank() << ", " << M.bases().size() << " bases, "
                << M.nbc_bases().size() << " nbc-bases; minimal labeling EL: "
                << (el ? "true" : "false") << "\n";
    } else {
        throw std::invalid_argument("unrecognized input (expected facets, elements, or bases)");
    }
    out["pass"] = pass;
    emit(out, out_path, summary.str());
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex-ear decompositions of rank-selected subposets"};
    app.require_subcommand(1);

    int d = 3;
    std::string s_arg = "all", t_arg, input, out_path, shelling_arg;
    bool allow_explore = false, table = false;

    auto* cb = app.add_subcommand("boolean", "decompose rank-selected Boolean lattices");
    cb->add_option("--d", d, "rank of the Boolean lattice")->required();
    cb->add_option("--S", s_arg, "rank set, comma-separated, or 'all'");
    cb->add_option("--out", out_path, "JSON report path");

    auto* cg = app.add_subcommand("geometric", "decompose rank-selected lattices of flats");
    cg->add_option("input", input, "matroid JSON file")->required();
    cg->add_option("--S", s_arg, "rank set, comma-separated, or 'all'");
    cg->add_option("--out", out_path, "JSON report path");

    auto* cf = app.add_subcommand("faceposet", "decompose rank-selected face posets");
    cf->add_option("input", input, "complex JSON file")->required();
    cf->add_option("--S", s_arg, "rank set, comma-separated, or 'all'");
    cf->add_option("--shelling", shelling_arg, "facet indices (0-based) giving a shelling order");
    cf->add_flag("--allow-explore", allow_explore,
                 "report the order complex when the facet rank is selected");
    cf->add_option("--out", out_path, "JSON report path");

    auto* cd = app.add_subcommand("dominance", "descent-class dominance queries");
    cd->add_option("--d", d, "permutation size")->required();
    cd->add_option("--T", t_arg, "dominated rank set");
    cd->add_option("--S", s_arg, "dominating rank set");
    cd->add_flag("--table", table, "list all dominating pairs");
    cd->add_option("--out", out_path, "JSON report path");

    auto* cv = app.add_subcommand("verify", "verify certificates of a complex, poset or matroid");
    cv->add_option("input", input, "JSON file")->required();
    cv->add_option("--shelling", shelling_arg, "facet indices (0-based) giving a shelling order");
    cv->add_option("--out", out_path, "JSON report path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cb->parsed()) return cmd_boolean(d, s_arg, out_path);
        if (cg->parsed()) return cmd_geometric(input, s_arg, out_path);
        if (cf->parsed()) return cmd_faceposet(input, s_arg, shelling_arg, allow_explore, out_path);
        if (cd->parsed()) {
            if (!table && (t_arg.empty() || s_arg == "all")) {
                std::cerr << "dominance needs --T and --S, or --table\n";
                return 2;
            }
            return cmd_dominance(d, t_arg, s_arg, table, out_path);
        }
        if (cv->parsed()) return cmd_verify(input, shelling_arg, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
