// End-to-end acceptance checks. Each criterion prints a single pass/fail
// line; the exit code is nonzero when any criterion fails.

#include <chrono>
#include <iostream>
#include <set>
#include <vector>

#include "earcomb/ced.hpp"
#include "earcomb/faceposet.hpp"
#include "earcomb/geomlat.hpp"
#include "earcomb/poset.hpp"
#include "earcomb/topology.hpp"

using namespace earcomb;

namespace {

struct RunRecord {
    EarSequence ears;
    SimplicialComplex delta;
    int sel_rank;           // rank of the selected subposet = |S| + 1
    bool from_faceposet;
    bool full_selection;    // S = [d-1] of the ambient poset
};

struct Corpus {
    std::vector<RunRecord> runs;
    std::vector<LabeledPoset> labeled_posets;  // every EL-labeled poset seen
    bool ok = true;
    std::string first_failure;

    void note(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
        ok = ok && cond;
    }
};

std::vector<std::vector<int>> nonempty_subsets(int d) {
    std::vector<std::vector<int>> out;
    for (const auto& S : subsets_of_interval(d))
        if (!S.empty()) out.push_back(S);
    return out;
}

std::vector<int> full_interval(int d) {
    std::vector<int> out;
    for (int i = 1; i < d; ++i) out.push_back(i);
    return out;
}

void run_all_selections(Corpus& corpus, const BooleanPieceSequence& seq,
                        const RankedPoset& ambient, bool from_faceposet,
                        const std::string& tag) {
    int d = ambient.top_rank();
    for (const auto& S : nonempty_subsets(d)) {
        RunRecord rec;
        rec.ears = build_ears(seq, RankSet(d, S));
        rec.delta = order_complex(rank_select(ambient, RankSet(d, S)));
        rec.sel_rank = (int)S.size() + 1;
        rec.from_faceposet = from_faceposet;
        rec.full_selection = (int)S.size() == d - 1;
        auto report = verify_ced(rec.delta, rec.ears);
        corpus.note(report.pass(), tag + ": decomposition failed");
        corpus.runs.push_back(std::move(rec));
    }
}

bool criterion1(Corpus& corpus) {
    bool ok = true;
    for (int d = 2; d <= 5; ++d) {
        LabeledPoset B = boolean_lattice(d);
        BooleanPieceSequence seq;
        seq.ambient = B.poset;
        seq.pieces.push_back({B.poset, B.labeling});
        validate_pieces(seq);
        corpus.labeled_posets.push_back(B);
        for (const auto& S : nonempty_subsets(d)) {
            RunRecord rec;
            rec.ears = build_ears(seq, RankSet(d, S));
            rec.delta = order_complex(rank_select(B.poset, RankSet(d, S)));
            rec.sel_rank = (int)S.size() + 1;
            rec.from_faceposet = false;
            rec.full_selection = (int)S.size() == d - 1;
            ok = ok && verify_ced(rec.delta, rec.ears).pass();
            ok = ok && rec.ears.ears.size() == descent_class(RankSet(d, S)).size();
            corpus.runs.push_back(std::move(rec));
        }
    }
    return ok;
}

bool criterion2() {
    for (int d = 2; d <= 5; ++d) {
        LabeledPoset B = boolean_lattice(d);
        BooleanPiece piece{B.poset, B.labeling};
        for (const auto& S : nonempty_subsets(d)) {
            RankSet rs(d, S);
            size_t t = descent_chains(piece, rs).size();
            for (size_t i = 0; i < t; ++i) {
                auto a = gamma_facets(piece, rs, (int)i);
                auto b = gamma_facets_definitional(piece, rs, (int)i);
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b) return false;
            }
        }
    }
    return true;
}

Matroid k4_graphic() {
    std::vector<std::vector<int>> bases;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) {
                std::vector<int> t = {a, b, c};
                if (t == std::vector<int>{1, 2, 4} || t == std::vector<int>{1, 3, 5} ||
                    t == std::vector<int>{2, 3, 6} || t == std::vector<int>{4, 5, 6})
                    continue;
                bases.push_back(t);
            }
    return Matroid::from_bases(6, bases);
}

bool criterion3(Corpus& corpus) {
    std::vector<std::vector<int>> u35_bases;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = b + 1; c <= 5; ++c) u35_bases.push_back({a, b, c});
    std::vector<Matroid> matroids = {
        Matroid::from_bases(3, {{1, 2}, {1, 3}, {2, 3}}),
        Matroid::from_bases(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}),
        Matroid::from_bases(5, u35_bases),
        k4_graphic(),
    };
    bool ok = true;
    for (const Matroid& M : matroids) {
        FlatLattice L = lattice_of_flats(M);
        EdgeLabeling nu = minimal_labeling(L);
        ok = ok && verify_el_labeling(L.poset, nu);
        corpus.labeled_posets.push_back({L.poset, nu});

        auto nbc = M.nbc_bases();
        for (const Chain& c : L.poset.maximal_chains()) {
            auto w = chain_label(c, nu);
            std::sort(w.begin(), w.end());
            ok = ok && std::find(nbc.begin(), nbc.end(), w) != nbc.end();
        }

        BooleanPieceSequence seq = geometric_pieces(L);
        size_t before = corpus.runs.size();
        run_all_selections(corpus, seq, L.poset, false, "geometric");
        ok = ok && corpus.ok;

        int d = M.rank();
        if (d >= 2) {
            for (size_t i = before; i < corpus.runs.size(); ++i) {
                if (!corpus.runs[i].full_selection) continue;
                ok = ok && check_labels_lemma(L, seq, corpus.runs[i].ears);
            }
        }
    }
    return ok;
}

bool criterion4(Corpus& corpus) {
    struct Inst {
        SimplicialComplex K;
        std::vector<Face> order;
    };
    std::vector<Inst> instances;
    instances.push_back({SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4},
                                                         {2, 3, 4}}),
                         {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}});
    {
        auto oct = SimplicialComplex::from_facets({{1, 3, 5},
                                                   {1, 3, 6},
                                                   {1, 4, 5},
                                                   {1, 4, 6},
                                                   {2, 3, 5},
                                                   {2, 3, 6},
                                                   {2, 4, 5},
                                                   {2, 4, 6}});
        auto order = find_shelling(oct);
        if (!order) return false;
        instances.push_back({oct, *order});
    }
    instances.push_back({SimplicialComplex::from_facets({{1, 2, 3}, {2, 3, 4}}),
                         {{1, 2, 3}, {2, 3, 4}}});
    for (unsigned seed = 1; seed <= 12; ++seed) {
        auto s2 = random_shellable_complex(2, 10, seed);
        instances.push_back({s2.complex, s2.order});
        auto s3 = random_shellable_complex(3, 10, 100 + seed);
        instances.push_back({s3.complex, s3.order});
    }
    if (instances.size() < 23) return false;  // 3 named + at least 20 random

    bool ok = true;
    for (const auto& inst : instances) {
        FacePosetPipeline pipe = faceposet_pieces(inst.K, inst.order);  // hyp checks inside
        ok = ok && pipe.seq.hypotheses_checked;
        ok = ok && check_easyfact(pipe);
        for (const auto& piece : pipe.seq.pieces)
            corpus.labeled_posets.push_back({piece.poset, piece.labeling});
        size_t before = corpus.runs.size();
        run_all_selections(corpus, pipe.seq, pipe.fp.poset, true, "faceposet");
        ok = ok && corpus.ok;
        (void)before;
    }
    return ok;
}

bool criterion5(const Corpus& corpus) {
    for (const RunRecord& rec : corpus.runs) {
        auto h = h_vector(rec.delta);
        int d = (int)h.size() - 1;
        std::vector<long long> g = {h.empty() ? 1 : h[0]};
        for (int i = 0; 2 * i < d; ++i) {
            if (h[i] > h[i + 1]) return false;
            if (h[i] > h[d - i]) return false;
        }
        for (int i = 1; 2 * i <= d; ++i) g.push_back(h[i] - h[i - 1]);
        if (!is_m_vector(g)) return false;
        if (rec.delta.face_count() <= 1000 && !is_two_cm(rec.delta)) return false;
    }
    return true;
}

bool criterion6(const Corpus& corpus) {
    for (const RunRecord& rec : corpus.runs) {
        for (size_t k = 1; k < rec.ears.ears.size(); ++k) {
            const Ear& ear = rec.ears.ears[k];
            if (certify_ball_or_sphere(ear.complex, ear.shelling) != TopType::Ball)
                return false;  // later ears must be certified balls
            if (!check_flagstuff(ear, rec.ears.selected_rank, rec.sel_rank)) return false;
        }
        if (rec.full_selection && !check_flag_recurrence(rec.ears)) return false;
    }
    // dominance implies the flag inequality on every face-poset union
    for (const RunRecord& rec : corpus.runs) {
        if (!rec.from_faceposet) continue;
        int m = rec.sel_rank;
        if (m > 5) continue;
        FlagVector fh = flag_h_of_complex(rec.delta, rec.ears.selected_rank, m);
        for (const auto& T : nonempty_subsets(m))
            for (const auto& S : nonempty_subsets(m)) {
                if (T == S) continue;
                if (!dominates(RankSet(m, T), RankSet(m, S)).dominates) continue;
                if (fh.get(T) > fh.get(S)) return false;
            }
    }
    return true;
}

bool criterion7() {
    bool ok = true;
    ok = ok && dominates(RankSet(4, {1}), RankSet(4, {1, 3})).dominates;
    ok = ok && dominates(RankSet(5, {1}), RankSet(5, {1, 2})).dominates;
    ok = ok && w_set(RankSet(4, {2, 3})).members == std::vector<int>{1, 3};
    ok = ok && w_set(RankSet(4, {1, 2})).members == std::vector<int>{2};
    ok = ok && w_set(RankSet(4, {1})).members == std::vector<int>{1};

    // two triangles, ranks {2,3} selected from the unidentified face poset:
    // a connected acyclic graph
    auto K = SimplicialComplex::from_facets({{1, 2, 3}, {2, 3, 4}});
    std::map<Face, int> id_of;
    std::map<int, int> rank_of;
    int next = 0;
    for (const Face& f : K.faces()) {
        id_of[f] = next;
        rank_of[next] = (int)f.size();
        ++next;
    }
    rank_of[next] = 4;  // artificial maximum above the facets
    std::vector<std::pair<int, int>> covers;
    for (const auto& [f, id] : id_of) {
        if ((int)f.size() == 3) covers.emplace_back(id, next);
        for (const auto& [g, gid] : id_of)
            if (g.size() == f.size() + 1 && std::includes(g.begin(), g.end(), f.begin(), f.end()))
                covers.emplace_back(id, gid);
    }
    auto P = RankedPoset::from_covers(rank_of, covers);
    auto delta = order_complex(rank_select(P, RankSet(4, {2, 3})));
    ok = ok && delta.dim() == 1;
    auto H = reduced_homology(delta);
    ok = ok && H.is_trivial();  // connected and acyclic
    ok = ok && f_vector(delta) == std::vector<long long>{1, 7, 6};
    return ok;
}

bool criterion8(const Corpus& corpus) {
    for (const LabeledPoset& lp : corpus.labeled_posets) {
        if (!verify_el_labeling(lp.poset, lp.labeling)) return false;
        if (!(flag_h_by_descents(lp.poset, lp.labeling) == flag_h(lp.poset))) return false;
        if (refinement(flag_h(lp.poset)) != h_vector(order_complex(lp.poset))) return false;
    }
    for (const RunRecord& rec : corpus.runs) {
        FlagVector fh = flag_h_of_complex(rec.delta, rec.ears.selected_rank, rec.sel_rank);
        if (refinement(fh) != h_vector(rec.delta)) return false;
    }
    return true;
}

int report(int n, bool pass, const std::string& what) {
    std::cout << "criterion " << n << " (" << what << "): " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    Corpus corpus;
    int failures = 0;

    bool c1 = criterion1(corpus);
    failures += report(1, c1, "boolean pipeline, d=2..5, every rank set");
    failures += report(2, criterion2(), "gamma facet oracle equivalence, d<=5");
    bool c3 = criterion3(corpus);
    failures += report(3, c3, "geometric pipeline on U23, U34, U35, K4");
    bool c4 = criterion4(corpus);
    failures += report(4, c4, "face poset pipeline incl. 24 random shellable complexes");
    failures += report(5, criterion5(corpus), "h-vector inequalities, g M-vectors, 2-CM unions");
    failures += report(6, criterion6(corpus), "flag identity, recurrence, dominance inequalities");
    failures += report(7, criterion7(), "point values and the two-triangle tree");
    failures += report(8, criterion8(corpus), "flag h cross-oracle and refinement identity");

    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    std::cout << (failures ? "FAILED" : "OK") << " (" << corpus.runs.size()
              << " decompositions, " << secs << "s)";
    if (!corpus.ok) std::cout << " first failure: " << corpus.first_failure;
    std::cout << "\n";
    return failures ? 1 : 0;
}
