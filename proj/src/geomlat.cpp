#include "earcomb/geomlat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "earcomb/errors.hpp"

namespace earcomb {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::vector<int>> subsets_of_ground(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

Matroid Matroid::from_bases(int ground_size, std::vector<std::vector<int>> bases) {
    Matroid M;
    M.ground_ = ground_size;
    if (ground_size < 1 || ground_size > 20)
        throw NotAMatroidError("ground size out of supported range");
    if (bases.empty()) throw NotAMatroidError("no bases given");
    for (auto& b : bases) {
        b = sorted_unique(std::move(b));
        for (int e : b)
            if (e < 1 || e > ground_size) throw NotAMatroidError("basis element out of range");
    }
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    size_t d = bases[0].size();
    for (const auto& b : bases)
        if (b.size() != d) throw NotAMatroidError("bases of unequal size");
    // exchange axiom
    for (const auto& A : bases) {
        for (const auto& B : bases) {
            for (int x : A) {
                if (std::binary_search(B.begin(), B.end(), x)) continue;
                bool ok = false;
                for (int y : B) {
                    if (std::binary_search(A.begin(), A.end(), y)) continue;
                    std::vector<int> C;
                    for (int e : A)
                        if (e != x) C.push_back(e);
                    C.push_back(y);
                    C = sorted_unique(std::move(C));
                    if (std::binary_search(bases.begin(), bases.end(), C)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) throw NotAMatroidError("basis-exchange axiom fails");
            }
        }
    }
    M.bases_ = std::move(bases);
    return M;
}

bool Matroid::is_independent(const std::vector<int>& set) const {
    std::vector<int> s = sorted_unique(set);
    for (const auto& b : bases_)
        if (std::includes(b.begin(), b.end(), s.begin(), s.end())) return true;
    return false;
}

int Matroid::rank_of(const std::vector<int>& set) const {
    std::vector<int> s = sorted_unique(set);
    int best = 0;
    for (const auto& b : bases_) {
        std::vector<int> inter;
        std::set_intersection(b.begin(), b.end(), s.begin(), s.end(),
                              std::back_inserter(inter));
        best = std::max(best, (int)inter.size());
    }
    return best;
}

std::vector<int> Matroid::closure(const std::vector<int>& set) const {
    std::vector<int> s = sorted_unique(set);
    int r = rank_of(s);
    std::vector<int> out;
    for (int e = 1; e <= ground_; ++e) {
        std::vector<int> t = s;
        t.push_back(e);
        if (rank_of(t) == r) out.push_back(e);
    }
    return sorted_unique(std::move(out));
}

bool Matroid::is_simple() const {
    for (int e = 1; e <= ground_; ++e)
        if (rank_of({e}) != 1) return false;
    for (int e = 1; e <= ground_; ++e)
        for (int f = e + 1; f <= ground_; ++f)
            if (rank_of({e, f}) != 2) return false;
    return true;
}

std::vector<std::vector<int>> Matroid::circuits() const {
    std::vector<std::vector<int>> dep;
    for (const auto& s : subsets_of_ground(ground_))
        if (!s.empty() && !is_independent(s)) dep.push_back(s);
    std::vector<std::vector<int>> out;
    for (const auto& c : dep) {
        bool minimal = true;
        for (const auto& c2 : dep)
            if (c2 != c && std::includes(c.begin(), c.end(), c2.begin(), c2.end()))
                minimal = false;
        if (minimal) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> Matroid::nbc_bases() const {
    std::vector<std::vector<int>> broken;
    for (const auto& c : circuits()) {
        std::vector<int> bc(c.begin() + 1, c.end());  // circuit minus its least element
        broken.push_back(bc);
    }
    std::vector<std::vector<int>> out;
    for (const auto& b : bases_) {
        bool ok = true;
        for (const auto& bc : broken)
            if (std::includes(b.begin(), b.end(), bc.begin(), bc.end())) ok = false;
        if (ok) out.push_back(b);
    }
    std::sort(out.begin(), out.end());  // lex order of index sequences
    return out;
}

int FlatLattice::atom_id(int ground_element) const {
    return id_of_flat.at(matroid.closure({ground_element}));
}

int FlatLattice::join(int a, int b) const {
    std::vector<int> u = flat_of_id[a];
    u.insert(u.end(), flat_of_id[b].begin(), flat_of_id[b].end());
    return id_of_flat.at(matroid.closure(u));
}

FlatLattice lattice_of_flats(const Matroid& M) {
    if (!M.is_simple()) throw NotSimpleError("matroid has loops or parallel elements");
    std::set<std::vector<int>> flats;
    for (const auto& s : subsets_of_ground(M.ground_size())) flats.insert(M.closure(s));

    FlatLattice L;
    L.matroid = M;
    std::vector<std::vector<int>> sorted_flats(flats.begin(), flats.end());
    std::sort(sorted_flats.begin(), sorted_flats.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  int ra = M.rank_of(a), rb = M.rank_of(b);
                  if (ra != rb) return ra < rb;
                  return a < b;
              });
    std::map<int, int> rank_of;
    for (size_t i = 0; i < sorted_flats.size(); ++i) {
        L.flat_of_id.push_back(sorted_flats[i]);
        L.id_of_flat[sorted_flats[i]] = (int)i;
        rank_of[(int)i] = M.rank_of(sorted_flats[i]);
    }
    std::vector<std::pair<int, int>> covers;
    for (size_t a = 0; a < sorted_flats.size(); ++a)
        for (size_t b = 0; b < sorted_flats.size(); ++b)
            if (rank_of[(int)b] == rank_of[(int)a] + 1 &&
                std::includes(sorted_flats[b].begin(), sorted_flats[b].end(),
                              sorted_flats[a].begin(), sorted_flats[a].end()))
                covers.emplace_back((int)a, (int)b);
    L.poset = RankedPoset::from_covers(rank_of, covers);

    // geometric-lattice verification: atomicity and semimodularity
    for (size_t x = 0; x < sorted_flats.size(); ++x) {
        std::vector<int> atoms_below;
        for (int e : sorted_flats[x]) atoms_below.push_back(e);
        if (M.closure(atoms_below) != sorted_flats[x])
            throw NotAMatroidError("flat lattice not atomic");
    }
    for (size_t x = 0; x < sorted_flats.size(); ++x) {
        for (size_t y = 0; y < sorted_flats.size(); ++y) {
            std::vector<int> uni = sorted_flats[x];
            uni.insert(uni.end(), sorted_flats[y].begin(), sorted_flats[y].end());
            std::vector<int> meet;
            std::set_intersection(sorted_flats[x].begin(), sorted_flats[x].end(),
                                  sorted_flats[y].begin(), sorted_flats[y].end(),
                                  std::back_inserter(meet));
            if (M.rank_of(sorted_flats[x]) + M.rank_of(sorted_flats[y]) <
                M.rank_of(uni) + M.rank_of(meet))
                throw NotAMatroidError("flat lattice not semimodular");
        }
    }
    return L;
}

EdgeLabeling minimal_labeling(const FlatLattice& L) {
    EdgeLabeling out;
    for (int x : L.poset.elements()) {
        for (int y : L.poset.covers_above(x)) {
            for (int i = 1; i <= L.matroid.ground_size(); ++i) {
                if (L.join(x, L.atom_id(i)) == y) {
                    out[{x, y}] = i;
                    break;
                }
            }
            if (!out.count({x, y}))
                throw NotAMatroidError("minimal labeling: no atom generates the cover");
        }
    }
    return out;
}

BooleanPiece basis_subposet(const FlatLattice& L, const std::vector<int>& basis) {
    std::vector<int> B = sorted_unique(basis);
    if ((int)B.size() != L.matroid.rank() || !L.matroid.is_independent(B))
        throw NotABasisError("basis_subposet: not a basis of full rank");
    int d = (int)B.size();
    std::map<int, int> rank_of;
    std::set<int> elems;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) sub.push_back(B[i]);
        int id = L.id_of_flat.at(L.matroid.closure(sub));
        if (elems.count(id))
            throw NotABasisError("basis_subposet: join map is not injective");
        elems.insert(id);
        rank_of[id] = __builtin_popcount(mask);
    }
    std::vector<std::pair<int, int>> covers;
    BooleanPiece piece;
    for (int a : elems) {
        for (int b : elems) {
            if (rank_of[b] != rank_of[a] + 1 || !L.poset.leq(a, b)) continue;
            covers.emplace_back(a, b);
            // label: ground index of the unique basis element new in b
            int label = 0;
            for (int e : B) {
                bool in_b = std::binary_search(L.flat_of_id[b].begin(), L.flat_of_id[b].end(), e);
                bool in_a = std::binary_search(L.flat_of_id[a].begin(), L.flat_of_id[a].end(), e);
                if (in_b && !in_a) label = e;
            }
            if (label == 0) throw NotABasisError("basis_subposet: cover adds no basis element");
            piece.labeling[{a, b}] = label;
        }
    }
    piece.poset = RankedPoset::from_covers(rank_of, covers);
    return piece;
}

BooleanPieceSequence geometric_pieces(const FlatLattice& L) {
    BooleanPieceSequence seq;
    seq.ambient = L.poset;
    for (const auto& B : L.matroid.nbc_bases()) seq.pieces.push_back(basis_subposet(L, B));
    validate_pieces(seq);
    return seq;
}

bool check_labels_lemma(const FlatLattice& L, const BooleanPieceSequence& seq,
                        const EarSequence& ears) {
    if ((int)ears.S.members.size() != L.poset.top_rank() - 1)
        throw std::invalid_argument("check_labels_lemma: ears must be built at S = [d-1]");
    EdgeLabeling nu = minimal_labeling(L);
    // at S = [d-1] each piece contributes at most one ear
    std::map<int, std::set<Face>> ear_facets;
    for (const Ear& e : ears.ears) {
        auto& s = ear_facets[e.piece_index];
        s.insert(e.complex.facets().begin(), e.complex.facets().end());
    }
    for (size_t q = 0; q < seq.pieces.size(); ++q) {
        const BooleanPiece& piece = seq.pieces[q];
        const std::set<Face>* facets = ear_facets.count((int)q) ? &ear_facets[(int)q] : nullptr;
        for (const Chain& c : piece.poset.maximal_chains()) {
            Face f(c.begin() + 1, c.end() - 1);
            std::sort(f.begin(), f.end());
            bool in_ear = facets && facets->count(f);
            bool labels_agree = chain_label(c, piece.labeling) == chain_label(c, nu);
            if (in_ear != labels_agree) return false;
        }
    }
    return true;
}

}  // namespace earcomb
