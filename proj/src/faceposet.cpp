#include "earcomb/faceposet.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "earcomb/errors.hpp"

namespace earcomb {

IdentifiedFacePoset identified_face_poset(const SimplicialComplex& K) {
    if (!K.is_pure()) throw NotPureError("identified_face_poset requires a pure complex");
    if (K.is_empty_complex() || K.is_void_complex())
        throw std::invalid_argument("identified_face_poset: complex has no facets");
    int d = K.dim() + 1;
    std::vector<Face> proper;  // faces of size 0..d-1
    for (const Face& f : K.faces())
        if ((int)f.size() < d) proper.push_back(f);
    std::sort(proper.begin(), proper.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    IdentifiedFacePoset out;
    std::map<int, int> rank_of;
    for (size_t i = 0; i < proper.size(); ++i) {
        out.face_of_id.push_back(proper[i]);
        out.id_of_face[proper[i]] = (int)i;
        rank_of[(int)i] = (int)proper[i].size();
    }
    out.top_id = (int)proper.size();
    rank_of[out.top_id] = d;
    std::vector<std::pair<int, int>> covers;
    for (size_t a = 0; a < proper.size(); ++a) {
        for (size_t b = 0; b < proper.size(); ++b) {
            if (proper[b].size() == proper[a].size() + 1 &&
                std::includes(proper[b].begin(), proper[b].end(), proper[a].begin(),
                              proper[a].end()))
                covers.emplace_back((int)a, (int)b);
        }
        if ((int)proper[a].size() == d - 1) covers.emplace_back((int)a, out.top_id);
    }
    out.poset = RankedPoset::from_covers(rank_of, covers);
    return out;
}

BooleanPiece facet_subposet(const IdentifiedFacePoset& P, const Face& facet,
                            const Face& restriction) {
    Face F = facet, r = restriction;
    std::sort(F.begin(), F.end());
    std::sort(r.begin(), r.end());
    if (!std::includes(F.begin(), F.end(), r.begin(), r.end()))
        throw BadRestrictionError("facet_subposet: restriction not contained in facet");
    int d = (int)F.size();
    // phi: non-restriction vertices first, each block in ascending vertex order
    std::map<int, int> phi;
    int next = 1;
    for (int v : F)
        if (!std::binary_search(r.begin(), r.end(), v)) phi[v] = next++;
    for (int v : r) phi[v] = next++;

    std::map<int, int> rank_of;
    std::vector<int> ids;  // subset of F of size < d -> poset id
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        if (__builtin_popcount(mask) == d) continue;
        Face sub;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) sub.push_back(F[i]);
        int id = P.id_of(sub);
        ids.push_back(id);
        rank_of[id] = (int)sub.size();
    }
    rank_of[P.top_id] = d;
    BooleanPiece piece;
    std::vector<std::pair<int, int>> covers;
    for (int a : ids) {
        const Face& fa = P.face_of_id[a];
        if ((int)fa.size() == d - 1) {
            covers.emplace_back(a, P.top_id);
            for (int v : F)
                if (!std::binary_search(fa.begin(), fa.end(), v))
                    piece.labeling[{a, P.top_id}] = phi[v];
        }
        for (int b : ids) {
            const Face& fb = P.face_of_id[b];
            if (fb.size() != fa.size() + 1 ||
                !std::includes(fb.begin(), fb.end(), fa.begin(), fa.end()))
                continue;
            covers.emplace_back(a, b);
            for (int v : fb)
                if (!std::binary_search(fa.begin(), fa.end(), v)) piece.labeling[{a, b}] = phi[v];
        }
    }
    piece.poset = RankedPoset::from_covers(rank_of, covers);
    return piece;
}

FacePosetPipeline faceposet_pieces(const SimplicialComplex& K, const std::vector<Face>& order) {
    FacePosetPipeline out;
    out.cert = verify_shelling(K, order);
    out.fp = identified_face_poset(K);
    out.seq.ambient = out.fp.poset;
    for (size_t i = 0; i < out.cert.order.size(); ++i)
        out.seq.pieces.push_back(
            facet_subposet(out.fp, out.cert.order[i], out.cert.restrictions[i]));
    validate_pieces(out.seq);
    return out;
}

bool check_easyfact(const FacePosetPipeline& pipe) {
    const auto& pieces = pipe.seq.pieces;
    for (size_t i = 0; i < pieces.size(); ++i) {
        const RankedPoset& Pi = pieces[i].poset;
        const Face& ri = pipe.cert.restrictions[i];
        // all chains of the proper part of P_i
        std::set<Face> chains;
        for (const Chain& mc : Pi.maximal_chains()) {
            Chain proper(mc.begin() + 1, mc.end() - 1);
            for (size_t mask = 0; mask < (size_t(1) << proper.size()); ++mask) {
                Face f;
                for (size_t b = 0; b < proper.size(); ++b)
                    if (mask & (size_t(1) << b)) f.push_back(proper[b]);
                std::sort(f.begin(), f.end());
                chains.insert(std::move(f));
            }
        }
        for (const Face& e : chains) {
            bool is_new = true;
            if (i > 0) {
                for (size_t j = 0; j < i && is_new; ++j) {
                    bool in = true;
                    for (int id : e)
                        if (!pieces[j].poset.contains(id)) in = false;
                    if (in) is_new = false;
                }
            }
            // top proper element as a face of F_i; the empty chain's top is
            // the empty face
            Face x;
            for (int id : e) {
                const Face& f = pipe.fp.face_of_id[id];
                if (f.size() >= x.size()) x = f;
            }
            bool contains_r = std::includes(x.begin(), x.end(), ri.begin(), ri.end());
            if (is_new != contains_r) return false;
        }
    }
    return true;
}

ShellableSample random_shellable_complex(int dim, int facet_count, unsigned seed) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("random_shellable_complex: dim 1..3");
    std::mt19937 rng(seed);
    int fs = dim + 1;
    std::vector<Face> shelled;
    Face first(fs);
    for (int i = 0; i < fs; ++i) first[i] = i + 1;
    shelled.push_back(first);
    int next_vertex = fs + 1;
    int guard = 0;
    while ((int)shelled.size() < facet_count && guard < 1000) {
        ++guard;
        // pick a ridge of an existing facet, attach a new or existing vertex
        const Face& base = shelled[rng() % shelled.size()];
        Face ridge = base;
        ridge.erase(ridge.begin() + rng() % ridge.size());
        int v;
        if (rng() % 3 == 0 && next_vertex > fs + 1) {
            v = (int)(rng() % (next_vertex - 1)) + 1;
        } else {
            v = next_vertex;
        }
        Face cand = ridge;
        cand.push_back(v);
        std::sort(cand.begin(), cand.end());
        if (cand.size() != (size_t)fs) continue;
        if (std::find(shelled.begin(), shelled.end(), cand) != shelled.end()) continue;
        // accept only if the grown order remains a shelling
        std::vector<Face> trial = shelled;
        trial.push_back(cand);
        try {
            verify_shelling(SimplicialComplex::from_facets(trial), trial);
        } catch (const std::exception&) {
            continue;
        }
        shelled = std::move(trial);
        if (v == next_vertex) ++next_vertex;
    }
    return {SimplicialComplex::from_facets(shelled), shelled};
}

}  // namespace earcomb
