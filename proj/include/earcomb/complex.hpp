#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "earcomb/combinat.hpp"
#include "earcomb/errors.hpp"

namespace earcomb {

using Face = std::vector<int>;  // sorted vertex ids; {} is the empty face

/// A finite simplicial complex given by its facets (inclusion-maximal faces).
/// The empty complex (no faces at all) and the void complex (only the empty
/// face) are distinct: the former has no facets, the latter has {} as its
/// single facet.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;  // the empty complex

    /// Canonicalizes: sorts vertex lists, deduplicates, drops faces contained
    /// in another.
    static SimplicialComplex from_facets(std::vector<Face> facets);

    const std::vector<Face>& facets() const { return facets_; }
    std::vector<int> vertices() const;

    bool is_empty_complex() const { return facets_.empty(); }
    bool is_void_complex() const { return facets_.size() == 1 && facets_[0].empty(); }

    /// -1 for the void complex; throws on the empty complex.
    int dim() const;
    bool is_pure() const;

    /// All faces including the empty face (for a nonempty complex).
    const std::set<Face>& faces() const;
    bool has_face(const Face& f) const;
    size_t face_count() const { return faces().size(); }

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }

  private:
    std::vector<Face> facets_;           // canonical: each sorted, list sorted
    mutable std::set<Face> face_cache_;  // lazily filled downward closure
    mutable bool faces_built_ = false;
};

struct ShellingCertificate {
    std::vector<Face> order;
    std::vector<Face> restrictions;  // r(F_i); restrictions[0] is empty
};

/// Proper vertex coloring, vertex id -> color in {1..d}.
using Coloring = std::map<int, int>;

std::vector<long long> f_vector(const SimplicialComplex& K);
std::vector<long long> h_vector(const SimplicialComplex& K);

/// Transform f -> h for a (d-1)-dimensional complex, and its inverse.
std::vector<long long> f_to_h(const std::vector<long long>& f);
std::vector<long long> h_to_f(const std::vector<long long>& h);

/// Checks the facet ordering against the pairwise shelling condition and
/// returns the restriction faces r(F_i). Throws NotAShellingError on the
/// first violated pair.
ShellingCertificate verify_shelling(const SimplicialComplex& K, const std::vector<Face>& order);

SimplicialComplex skeleton(const SimplicialComplex& K, int r);

/// Downward closure of the codimension-1 faces lying in exactly one facet.
SimplicialComplex boundary_subcomplex(const SimplicialComplex& K);

struct BarycentricSubdivision {
    SimplicialComplex complex;
    Coloring coloring;                 // color = cardinality of the original face
    std::vector<Face> vertex_face;     // new vertex id -> original face (ids are 1-based)
};

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& K);

bool is_proper_coloring(const SimplicialComplex& K, const Coloring& c);

/// Faces all of whose vertex colors lie in S.
SimplicialComplex color_selected(const SimplicialComplex& K, const Coloring& c, const RankSet& S);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// Backtracking search for a shelling order (small facet counts only).
std::optional<std::vector<Face>> find_shelling(const SimplicialComplex& K,
                                               size_t max_facets = 8);

}  // namespace earcomb
