#pragma once

#include <map>
#include <string>
#include <vector>

#include "earcomb/poset.hpp"
#include "earcomb/topology.hpp"

namespace earcomb {

/// One Boolean piece: a subposet of the ambient poset isomorphic to B_d,
/// with an S_d-EL-labeling (alphabet need not be [d]).
struct BooleanPiece {
    RankedPoset poset;
    EdgeLabeling labeling;
};

struct BooleanPieceSequence {
    RankedPoset ambient;
    std::vector<BooleanPiece> pieces;
    bool hypotheses_checked = false;
};

/// Checks the three decomposition hypotheses: each piece is a copy of B_d
/// with an S_d-EL-labeling, every chain of the ambient poset lies in some
/// piece, and the completion of any chain shared with an earlier piece stays
/// in an earlier piece. Throws HypothesisViolation; sets hypotheses_checked.
void validate_pieces(BooleanPieceSequence& seq);

struct Ear {
    SimplicialComplex complex;                    // vertices are poset element ids
    std::vector<Face> shelling;                   // facet order, reverse-lex by completed label
    std::vector<std::vector<int>> facet_labels;   // full chain label per facet, same order
    int piece_index = 0;                          // q (0-based)
    int descent_index = 0;                        // i within the piece (0-based)
    Chain descent_chain;                          // d_i, a full chain of the piece
};

struct EarSequence {
    RankSet S;
    int ambient_rank = 0;
    std::vector<Ear> ears;
    std::map<int, int> selected_rank;                 // vertex id -> rank in 1..|S|
    std::vector<SimplicialComplex> piece_selected;    // Delta((P_q)_S) per piece
    struct Dropped {
        int piece_index, descent_index;
    };
    std::vector<Dropped> dropped;                     // empty ears, with provenance
};

/// Maximal chains of the piece whose label descent set is S, in lex order of
/// their labels. S may be empty (single increasing chain); the engine itself
/// requires S nonempty.
std::vector<Chain> descent_chains(const BooleanPiece& piece, const RankSet& S);

/// Subposet of (P_q)_S generated by the chains agreeing with d_i outside S.
RankedPoset build_L(const BooleanPiece& piece, const RankSet& S, const Chain& d_i);

/// Facets of Gamma_i by the completion test: e with Upsilon(e) agreeing with
/// d_i at every rank outside S.
std::vector<Face> gamma_facets(const BooleanPiece& piece, const RankSet& S, int i);

/// Facets of Gamma_i by the definition: maximal chains of L_i lying in no
/// earlier L_j. Must agree with gamma_facets (engine cross-checks).
std::vector<Face> gamma_facets_definitional(const BooleanPiece& piece, const RankSet& S, int i);

EarSequence build_ears(const BooleanPieceSequence& seq, const RankSet& S);

struct CedReport {
    bool union_ok = false;
    bool pieces_ok = false;    // property ii: sphere cert for the first ear,
                               // proper-subcomplex for the rest (polytopality
                               // of the pieces is assumed, not re-proven)
    bool balls_ok = false;     // property iii
    bool boundary_ok = false;  // property iv
    std::vector<std::string> failures;
    bool pass() const { return union_ok && pieces_ok && balls_ok && boundary_ok; }
};

CedReport verify_ced(const SimplicialComplex& delta, const EarSequence& ears,
                     size_t max_faces = kDefaultMaxFaces);

/// Integer multilinear polynomial in nu_1..nu_{d-1}; key = support subset.
struct MultilinearPoly {
    int d = 1;
    std::map<std::vector<int>, long long> coeff;
    bool operator==(const MultilinearPoly& o) const { return d == o.d && coeff == o.coeff; }
};

/// Flag f-vector of the interior (faces off the boundary, empty face
/// excluded) of a Ball-certified ear.
FlagVector interior_flag_f(const Ear& ear, const std::map<int, int>& rank_of_vertex, int d);

/// Interior-f vs flag-h polynomial identity for a Ball-certified ear,
/// compared coefficient-by-coefficient.
bool check_flagstuff(const Ear& ear, const std::map<int, int>& rank_of_vertex, int d);

/// Accretion recurrence for the flag h-vector, for ears built at S = [d-1].
bool check_flag_recurrence(const EarSequence& ears);

/// Closure of ear facet labels under undoing descents (switch lemma), plus
/// the resulting dominance inequalities on descent-class counts.
bool check_switch_lemma(const Ear& ear, const BooleanPiece& piece);

}  // namespace earcomb
