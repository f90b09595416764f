#include "earcomb/ced.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "earcomb/errors.hpp"

namespace earcomb {

namespace {

std::string chain_to_string(const Chain& c) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? " < " : "") << c[i];
    os << ")";
    return os.str();
}

std::vector<int> descent_positions(const std::vector<int>& word) {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) out.push_back((int)i + 1);
    return out;
}

// restriction of a full bottom-to-top chain to the given ranks (by position)
Chain restrict_chain(const Chain& full, const std::vector<int>& ranks) {
    Chain out;
    for (int r : ranks) out.push_back(full[r]);
    return out;
}

// Face (sorted ids) -> chain ordered by rank
Chain face_to_chain(const Face& f, const RankedPoset& P) {
    Chain c = f;
    std::sort(c.begin(), c.end(), [&](int a, int b) { return P.rank_of(a) < P.rank_of(b); });
    return c;
}

// All distinct chains of the proper part of a bounded poset, as element-id
// sets (subsets of maximal chains), including the empty chain.
std::set<Face> proper_chains(const RankedPoset& P) {
    std::set<Face> out;
    for (const Chain& mc : P.maximal_chains()) {
        Chain proper;
        for (int id : mc)
            if (id != *P.bottom() && id != *P.top()) proper.push_back(id);
        size_t n = proper.size();
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            Face f;
            for (size_t b = 0; b < n; ++b)
                if (mask & (size_t(1) << b)) f.push_back(proper[b]);
            std::sort(f.begin(), f.end());
            out.insert(std::move(f));
        }
    }
    return out;
}

bool subset_of(const Face& f, const std::set<int>& elems) {
    for (int id : f)
        if (!elems.count(id)) return false;
    return true;
}

// Per-(piece, S) decomposition data.
struct PieceDecomp {
    std::vector<Chain> dchains;                // d_i in lex label order
    std::vector<Chain> keys;                   // (d_i) restricted outside S
    std::map<Chain, std::vector<Face>> fam;    // key -> facets of L (c_S), sorted
    std::map<Chain, std::set<int>> fam_elems;  // key -> element set of L
};

PieceDecomp decompose_piece(const BooleanPiece& piece, const RankSet& S) {
    int d = piece.poset.top_rank();
    std::vector<int> comp = RankSet(d, S.members).complement().members;
    PieceDecomp out;
    std::vector<std::pair<std::vector<int>, Chain>> with_labels;
    for (const Chain& c : piece.poset.maximal_chains()) {
        auto w = chain_label(c, piece.labeling);
        with_labels.emplace_back(w, c);
        Chain key = restrict_chain(c, comp);
        Face f;
        for (int r : S.members) f.push_back(c[r]);
        std::sort(f.begin(), f.end());
        out.fam[key].push_back(f);
        auto& es = out.fam_elems[key];
        es.insert(f.begin(), f.end());
        if (piece.poset.bottom()) es.insert(*piece.poset.bottom());
        if (piece.poset.top()) es.insert(*piece.poset.top());
        if (descent_positions(w) == S.members) {
            out.dchains.push_back(c);  // placeholder, re-sorted below
        }
    }
    std::sort(out.dchains.begin(), out.dchains.end(), [&](const Chain& a, const Chain& b) {
        return chain_label(a, piece.labeling) < chain_label(b, piece.labeling);
    });
    for (auto& [k, v] : out.fam) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (const Chain& di : out.dchains) out.keys.push_back(restrict_chain(di, comp));
    return out;
}

std::vector<Face> gamma_by_upsilon(const BooleanPiece& piece, const RankSet& S,
                                   const PieceDecomp& dec, int i) {
    int d = piece.poset.top_rank();
    std::vector<int> comp = RankSet(d, S.members).complement().members;
    std::vector<Face> out;
    for (const Face& e : dec.fam.at(dec.keys[i])) {
        Chain completed = upsilon(piece.poset, piece.labeling, face_to_chain(e, piece.poset));
        if (restrict_chain(completed, comp) == dec.keys[i]) out.push_back(e);
    }
    return out;
}

std::vector<Face> gamma_by_definition(const PieceDecomp& dec, int i) {
    std::vector<Face> out;
    for (const Face& e : dec.fam.at(dec.keys[i])) {
        bool in_earlier = false;
        for (int j = 0; j < i && !in_earlier; ++j)
            if (subset_of(e, dec.fam_elems.at(dec.keys[j]))) in_earlier = true;
        if (!in_earlier) out.push_back(e);
    }
    return out;
}

}  // namespace

void validate_pieces(BooleanPieceSequence& seq) {
    int d = seq.ambient.top_rank();
    // hypothesis 1: each piece is a B_d copy with an S_d-EL-labeling
    for (size_t q = 0; q < seq.pieces.size(); ++q) {
        const BooleanPiece& p = seq.pieces[q];
        if (!p.poset.is_bounded() || p.poset.top_rank() != d ||
            (long long)p.poset.elements().size() != (1LL << d))
            throw HypothesisViolation(1, "piece " + std::to_string(q) + " is not a B_d copy");
        for (int id : p.poset.elements())
            if (!seq.ambient.contains(id))
                throw HypothesisViolation(1, "piece " + std::to_string(q) +
                                                 " has element outside ambient poset");
        // rank census of B_d
        std::vector<long long> census(d + 1, 0);
        for (int id : p.poset.elements()) census[p.poset.rank_of(id)] += 1;
        for (int k = 0; k <= d; ++k) {
            long long binom = 1;
            for (int t = 1; t <= k; ++t) binom = binom * (d - t + 1) / t;
            if (census[k] != binom)
                throw HypothesisViolation(1,
                                          "piece " + std::to_string(q) + " fails B_d rank census");
        }
        if (!is_sd_el(p.poset, p.labeling))
            throw HypothesisViolation(1, "piece " + std::to_string(q) +
                                             " labeling is not an S_d-EL-labeling");
    }
    // hypothesis 2: every maximal chain of the ambient poset lies in a piece
    for (const Chain& c : seq.ambient.maximal_chains()) {
        bool housed = false;
        for (const BooleanPiece& p : seq.pieces) {
            bool in = true;
            for (int id : c)
                if (!p.poset.contains(id)) in = false;
            if (in) {
                housed = true;
                break;
            }
        }
        if (!housed) throw HypothesisViolation(2, chain_to_string(c));
    }
    // hypothesis 3: completions of shared chains stay in earlier pieces
    for (size_t i = 1; i < seq.pieces.size(); ++i) {
        const BooleanPiece& pi = seq.pieces[i];
        for (const Face& e : proper_chains(pi.poset)) {
            bool in_earlier = false;
            for (size_t j = 0; j < i && !in_earlier; ++j) {
                bool in = true;
                for (int id : e)
                    if (!seq.pieces[j].poset.contains(id)) in = false;
                in_earlier = in;
            }
            if (!in_earlier) continue;
            Chain comp = upsilon(pi.poset, pi.labeling, face_to_chain(e, pi.poset));
            bool ok = false;
            for (size_t k = 0; k < i && !ok; ++k) {
                bool in = true;
                for (int id : comp)
                    if (!seq.pieces[k].poset.contains(id)) in = false;
                ok = in;
            }
            if (!ok) throw HypothesisViolation(3, chain_to_string(face_to_chain(e, pi.poset)));
        }
    }
    seq.hypotheses_checked = true;
}

std::vector<Chain> descent_chains(const BooleanPiece& piece, const RankSet& S) {
    return decompose_piece(piece, S).dchains;
}

RankedPoset build_L(const BooleanPiece& piece, const RankSet& S, const Chain& d_i) {
    int d = piece.poset.top_rank();
    std::vector<int> comp = RankSet(d, S.members).complement().members;
    Chain key = restrict_chain(d_i, comp);
    PieceDecomp dec = decompose_piece(piece, S);
    const std::set<int>& elems = dec.fam_elems.at(key);

    // induced subposet, re-graded to rank |S|+1
    std::map<int, int> sel_rank;
    {
        std::map<int, int> pos;
        pos[0] = 0;
        for (size_t i = 0; i < S.members.size(); ++i) pos[S.members[i]] = (int)i + 1;
        pos[d] = (int)S.members.size() + 1;
        for (int id : elems) {
            int r = piece.poset.rank_of(id);
            if (pos.count(r)) sel_rank[id] = pos[r];
        }
    }
    std::vector<std::pair<int, int>> covers;
    for (auto& [a, ra] : sel_rank)
        for (auto& [b, rb] : sel_rank)
            if (rb == ra + 1 && piece.poset.leq(a, b)) covers.emplace_back(a, b);
    return RankedPoset::from_covers(sel_rank, covers);
}

std::vector<Face> gamma_facets(const BooleanPiece& piece, const RankSet& S, int i) {
    PieceDecomp dec = decompose_piece(piece, S);
    return gamma_by_upsilon(piece, S, dec, i);
}

std::vector<Face> gamma_facets_definitional(const BooleanPiece& piece, const RankSet& S,
                                            int i) {
    PieceDecomp dec = decompose_piece(piece, S);
    return gamma_by_definition(dec, i);
}

EarSequence build_ears(const BooleanPieceSequence& seq, const RankSet& S) {
    if (!seq.hypotheses_checked)
        throw std::invalid_argument("build_ears: run validate_pieces first");
    int d = seq.ambient.top_rank();
    if (S.d != d) throw std::invalid_argument("build_ears: S ambient d mismatch");
    if (S.members.empty()) throw EmptyRankSetError("build_ears: S must be nonempty");

    EarSequence out;
    out.S = S;
    out.ambient_rank = d;
    for (int id : seq.ambient.elements()) {
        int r = seq.ambient.rank_of(id);
        auto it = std::find(S.members.begin(), S.members.end(), r);
        if (it != S.members.end())
            out.selected_rank[id] = (int)(it - S.members.begin()) + 1;
    }

    std::vector<std::set<int>> piece_elems;
    for (size_t q = 0; q < seq.pieces.size(); ++q) {
        const BooleanPiece& piece = seq.pieces[q];
        out.piece_selected.push_back(order_complex(rank_select(piece.poset, S)));
        PieceDecomp dec = decompose_piece(piece, S);
        for (size_t i = 0; i < dec.dchains.size(); ++i) {
            std::vector<Face> gamma = gamma_by_upsilon(piece, S, dec, (int)i);
            {
                std::vector<Face> gdef = gamma_by_definition(dec, (int)i);
                std::vector<Face> a = gamma, b = gdef;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b)
                    throw std::logic_error(
                        "gamma facet oracle mismatch (completion test vs definition)");
            }
            std::vector<Face> kept;
            for (const Face& e : gamma) {
                bool in_x = false;
                for (const auto& pe : piece_elems)
                    if (subset_of(e, pe)) {
                        in_x = true;
                        break;
                    }
                if (!in_x) kept.push_back(e);
            }
            if (kept.empty()) {
                out.dropped.push_back({(int)q, (int)i});
                continue;
            }
            Ear ear;
            ear.piece_index = (int)q;
            ear.descent_index = (int)i;
            ear.descent_chain = dec.dchains[i];
            std::vector<std::pair<std::vector<int>, Face>> labeled;
            for (const Face& e : kept) {
                Chain completed =
                    upsilon(piece.poset, piece.labeling, face_to_chain(e, piece.poset));
                labeled.emplace_back(chain_label(completed, piece.labeling), e);
            }
            // reverse lexicographic by completed label
            std::sort(labeled.begin(), labeled.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
            for (auto& [w, e] : labeled) {
                ear.shelling.push_back(e);
                ear.facet_labels.push_back(w);
            }
            ear.complex = SimplicialComplex::from_facets(ear.shelling);
            out.ears.push_back(std::move(ear));
        }
        std::set<int> es(piece.poset.elements().begin(), piece.poset.elements().end());
        piece_elems.push_back(std::move(es));
    }
    return out;
}

CedReport verify_ced(const SimplicialComplex& delta, const EarSequence& ears,
                     size_t max_faces) {
    CedReport rep;
    if (ears.ears.empty()) {
        rep.failures.push_back("no ears");
        return rep;
    }
    int dim_sel = (int)ears.S.members.size() - 1;

    // property i: union of ears equals delta
    SimplicialComplex uni;
    for (const Ear& e : ears.ears) uni = complex_union(uni, e.complex);
    rep.union_ok = uni.faces() == delta.faces();
    if (!rep.union_ok) rep.failures.push_back("property i: union of ears differs from complex");

    // properties ii and iii
    rep.pieces_ok = true;
    rep.balls_ok = true;
    for (size_t k = 0; k < ears.ears.size(); ++k) {
        const Ear& ear = ears.ears[k];
        if (!ear.complex.is_pure() || ear.complex.dim() != dim_sel) {
            rep.pieces_ok = false;
            rep.failures.push_back("ear " + std::to_string(k) + ": wrong dimension or impure");
            continue;
        }
        TopType t = certify_ball_or_sphere(ear.complex, ear.shelling, max_faces);
        if (k == 0) {
            if (t != TopType::Sphere) {
                rep.pieces_ok = false;
                rep.failures.push_back("property ii: first ear not certified a sphere");
            }
        } else {
            const SimplicialComplex& piece_sphere = ears.piece_selected[ear.piece_index];
            bool proper = std::includes(piece_sphere.faces().begin(), piece_sphere.faces().end(),
                                        ear.complex.faces().begin(), ear.complex.faces().end()) &&
                          ear.complex.faces().size() < piece_sphere.faces().size();
            if (!proper) {
                rep.pieces_ok = false;
                rep.failures.push_back("property ii: ear " + std::to_string(k) +
                                       " not a proper subcomplex of its piece sphere");
            }
            if (t != TopType::Ball) {
                rep.balls_ok = false;
                rep.failures.push_back("property iii: ear " + std::to_string(k) +
                                       " not certified a ball");
            }
        }
    }

    // property iv: intersection with the preceding union is the ear boundary
    rep.boundary_ok = true;
    std::set<Face> prev;
    for (size_t k = 0; k < ears.ears.size(); ++k) {
        const Ear& ear = ears.ears[k];
        if (k > 0) {
            std::set<Face> inter;
            for (const Face& f : ear.complex.faces())
                if (prev.count(f)) inter.insert(f);
            SimplicialComplex bd = boundary_subcomplex(ear.complex);
            std::set<Face> bdf;
            if (!bd.is_empty_complex()) bdf = bd.faces();
            if (inter != bdf) {
                rep.boundary_ok = false;
                rep.failures.push_back("property iv: ear " + std::to_string(k) +
                                       " intersection differs from its boundary");
            }
        }
        prev.insert(ear.complex.faces().begin(), ear.complex.faces().end());
    }
    return rep;
}

namespace {

// multiply the poly by (nu_i + c) for c in {0, -1}: helper expansions
MultilinearPoly expand_term(int d, const std::vector<int>& outside, bool minus_one,
                            long long coeff) {
    // coeff * prod_{i in outside} (nu_i - 1)  or  coeff * prod nu_i
    MultilinearPoly p;
    p.d = d;
    if (!minus_one) {
        p.coeff[outside] = coeff;
        return p;
    }
    size_t n = outside.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        std::vector<int> sub;
        for (size_t b = 0; b < n; ++b)
            if (mask & (size_t(1) << b)) sub.push_back(outside[b]);
        long long sign = ((n - sub.size()) % 2 == 0) ? 1 : -1;
        p.coeff[sub] += sign * coeff;
    }
    return p;
}

void poly_add(MultilinearPoly& a, const MultilinearPoly& b) {
    for (auto& [k, v] : b.coeff) a.coeff[k] += v;
}

void poly_trim(MultilinearPoly& a) {
    for (auto it = a.coeff.begin(); it != a.coeff.end();)
        it = (it->second == 0) ? a.coeff.erase(it) : std::next(it);
}

std::vector<int> set_difference_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

FlagVector interior_flag_f(const Ear& ear, const std::map<int, int>& rank_of_vertex, int d) {
    if (certify_ball_or_sphere(ear.complex, ear.shelling) != TopType::Ball)
        throw NotABallError("interior_flag_f: ear is not a certified ball");
    SimplicialComplex bd = boundary_subcomplex(ear.complex);
    std::set<Face> bdf;
    if (!bd.is_empty_complex()) bdf = bd.faces();
    FlagVector f;
    f.d = d;
    for (const auto& S : subsets_of_interval(d)) f.at[S] = 0;
    for (const Face& face : ear.complex.faces()) {
        if (face.empty() || bdf.count(face)) continue;
        std::set<int> cols;
        for (int v : face) cols.insert(rank_of_vertex.at(v));
        f.at[std::vector<int>(cols.begin(), cols.end())] += 1;
    }
    return f;
}

bool check_flagstuff(const Ear& ear, const std::map<int, int>& rank_of_vertex, int d) {
    FlagVector fprime = interior_flag_f(ear, rank_of_vertex, d);  // throws unless a ball
    FlagVector h = flag_h_of_complex(ear.complex, rank_of_vertex, d);
    std::vector<int> full;
    for (int i = 1; i <= d - 1; ++i) full.push_back(i);

    MultilinearPoly lhs, rhs;
    lhs.d = rhs.d = d;
    for (const auto& S : subsets_of_interval(d)) {
        std::vector<int> outside = set_difference_sorted(full, S);
        poly_add(lhs, expand_term(d, outside, true, fprime.get(S)));
        poly_add(rhs, expand_term(d, outside, false, h.get(set_difference_sorted(full, S))));
    }
    poly_trim(lhs);
    poly_trim(rhs);
    return lhs == rhs;
}

bool check_flag_recurrence(const EarSequence& ears) {
    int d = ears.ambient_rank;
    if ((int)ears.S.members.size() != d - 1)
        throw std::invalid_argument("check_flag_recurrence: requires S = [d-1]");
    if (ears.ears.size() < 2) return true;  // vacuous
    SimplicialComplex acc = ears.ears[0].complex;
    for (size_t k = 1; k < ears.ears.size(); ++k) {
        const Ear& ear = ears.ears[k];
        FlagVector h_prev = flag_h_of_complex(acc, ears.selected_rank, d);
        acc = complex_union(acc, ear.complex);
        FlagVector h_cur = flag_h_of_complex(acc, ears.selected_rank, d);
        std::map<std::vector<int>, long long> desc_count;
        for (const auto& w : ear.facet_labels) desc_count[descent_positions(w)] += 1;
        for (const auto& S : subsets_of_interval(d)) {
            long long dc = desc_count.count(S) ? desc_count[S] : 0;
            if (h_cur.get(S) != h_prev.get(S) + dc) return false;
        }
    }
    return true;
}

bool check_switch_lemma(const Ear& ear, const BooleanPiece& piece) {
    const RankedPoset& P = piece.poset;
    std::set<Face> facets(ear.complex.facets().begin(), ear.complex.facets().end());
    std::map<std::vector<int>, long long> desc_count;
    for (size_t idx = 0; idx < ear.shelling.size(); ++idx) {
        Chain full = upsilon(P, piece.labeling, face_to_chain(ear.shelling[idx], P));
        auto w = chain_label(full, piece.labeling);
        desc_count[descent_positions(w)] += 1;
        // (a) undoing an ascent keeps the chain inside the ear
        for (size_t j = 0; j + 1 < w.size(); ++j) {
            if (w[j] >= w[j + 1]) continue;
            int below = full[j], above = full[j + 2];
            int other = -1;
            for (int y : P.covers_above(below))
                if (y != full[j + 1] && P.leq(y, above)) other = y;
            if (other < 0) return false;  // B_d structure violated
            Face switched;
            for (size_t t = 1; t + 1 < full.size(); ++t)
                switched.push_back(t == j + 1 ? other : full[t]);
            std::sort(switched.begin(), switched.end());
            if (!facets.count(switched)) return false;
        }
    }
    // (b) dominance inequality on descent-class counts
    int d = P.top_rank();
    auto subs = subsets_of_interval(d);
    for (const auto& T : subs) {
        for (const auto& S : subs) {
            if (T == S) continue;
            if (!dominates(RankSet(d, T), RankSet(d, S)).dominates) continue;
            long long ct = desc_count.count(T) ? desc_count[T] : 0;
            long long cs = desc_count.count(S) ? desc_count[S] : 0;
            if (ct > cs) return false;
        }
    }
    return true;
}

}  // namespace earcomb
