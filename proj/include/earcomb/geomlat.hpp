#pragma once

#include <map>
#include <vector>

#include "earcomb/ced.hpp"
#include "earcomb/poset.hpp"

namespace earcomb {

/// Matroid on ground set {1..l} given by its bases. The ground order is the
/// atom order of the whole section and is part of the input contract.
class Matroid {
  public:
    /// Validates the basis-exchange axiom; throws NotAMatroidError.
    static Matroid from_bases(int ground_size, std::vector<std::vector<int>> bases);

    int ground_size() const { return ground_; }
    int rank() const { return (int)bases_[0].size(); }
    const std::vector<std::vector<int>>& bases() const { return bases_; }

    bool is_independent(const std::vector<int>& set) const;
    int rank_of(const std::vector<int>& set) const;
    std::vector<int> closure(const std::vector<int>& set) const;
    bool is_simple() const;  // no loops, no parallel pairs

    /// Minimal dependent sets, brute force (ground sets <= ~12).
    std::vector<std::vector<int>> circuits() const;

    /// Bases containing no broken circuit, in lex order.
    std::vector<std::vector<int>> nbc_bases() const;

  private:
    int ground_ = 0;
    std::vector<std::vector<int>> bases_;  // each sorted; list sorted
};

/// Lattice of flats of a simple matroid. Element ids index the flats; the
/// atom for ground element i is the flat closure({i}).
struct FlatLattice {
    RankedPoset poset;
    std::vector<std::vector<int>> flat_of_id;  // id -> sorted ground subset
    std::map<std::vector<int>, int> id_of_flat;
    Matroid matroid;

    int atom_id(int ground_element) const;
    int join(int a, int b) const;
};

/// Builds the flat lattice and verifies it is geometric (atomic and
/// semimodular). Throws NotSimpleError / NotAMatroidError.
FlatLattice lattice_of_flats(const Matroid& M);

/// nu(x, y) = min{ i : x v a_i = y }.
EdgeLabeling minimal_labeling(const FlatLattice& L);

/// The Boolean subposet of joins of subsets of a basis, with the basis
/// labeling over the alphabet of ground indices. Throws NotABasisError.
BooleanPiece basis_subposet(const FlatLattice& L, const std::vector<int>& basis);

/// Pieces for the decomposition engine: basis subposets over the nbc-bases
/// in lex order, hypotheses validated.
BooleanPieceSequence geometric_pieces(const FlatLattice& L);

/// Chain-by-chain check that membership in the ear of piece i coincides with
/// the basis label equalling the minimal label, for ears built at S = [d-1].
bool check_labels_lemma(const FlatLattice& L, const BooleanPieceSequence& seq,
                        const EarSequence& ears);

}  // namespace earcomb
