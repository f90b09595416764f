#pragma once

#include <map>
#include <vector>

#include "earcomb/ced.hpp"
#include "earcomb/complex.hpp"
#include "earcomb/poset.hpp"

namespace earcomb {

/// Face poset of a pure complex with all facets identified into a single
/// top element. rank(face) = |face|; the empty face is the bottom.
struct IdentifiedFacePoset {
    RankedPoset poset;
    std::vector<Face> face_of_id;  // id -> face (vertex set); unused for the top id
    std::map<Face, int> id_of_face;
    int top_id = -1;

    int id_of(const Face& f) const { return id_of_face.at(f); }
};

IdentifiedFacePoset identified_face_poset(const SimplicialComplex& K);

/// Boolean piece over one facet: its face poset with the top replaced by
/// 1-hat, labeled by a bijection that puts the restriction face last
/// (within each block, ascending global vertex order).
BooleanPiece facet_subposet(const IdentifiedFacePoset& P, const Face& facet,
                            const Face& restriction);

/// Pieces in shelling order, hypotheses validated. Throws NotAShellingError
/// if the order is not a shelling.
struct FacePosetPipeline {
    IdentifiedFacePoset fp;
    ShellingCertificate cert;
    BooleanPieceSequence seq;
};

FacePosetPipeline faceposet_pieces(const SimplicialComplex& K, const std::vector<Face>& order);

/// New-at-i chains are exactly those whose top proper element contains the
/// restriction face r(F_i). Regression oracle for the completion hypothesis.
bool check_easyfact(const FacePosetPipeline& pipe);

/// Random pure shellable complex grown by shelling moves, for corpus tests.
/// dim is the complex dimension (1, 2 or 3); deterministic in the seed.
/// The returned order is a shelling witness.
struct ShellableSample {
    SimplicialComplex complex;
    std::vector<Face> order;
};

ShellableSample random_shellable_complex(int dim, int facet_count, unsigned seed);

}  // namespace earcomb
