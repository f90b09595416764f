#pragma once

#include <vector>

#include "earcomb/complex.hpp"

namespace earcomb {

/// Rational reduced Betti numbers and integral torsion coefficients,
/// indexed by dimension 0..dim K.
struct HomologyProfile {
    std::vector<long long> betti;
    std::vector<std::vector<long long>> torsion;

    bool is_trivial() const;
    bool is_sphere(int n) const;  // beta_n = 1, all else 0, no torsion
};

inline constexpr size_t kDefaultMaxFaces = 10000;

/// Reduced simplicial homology from integral boundary matrices and Smith
/// normal form. Throws TooLargeError above the face cap.
HomologyProfile reduced_homology(const SimplicialComplex& K,
                                 size_t max_faces = kDefaultMaxFaces);

enum class TopType { Sphere, Ball, Unknown };

const char* to_string(TopType t);

/// Sound certificate: Sphere / Ball only when shellability (under the given
/// facet order), homology, and ridge-degree conditions all line up;
/// Unknown otherwise. Never a false positive.
TopType certify_ball_or_sphere(const SimplicialComplex& K, const std::vector<Face>& order,
                               size_t max_faces = kDefaultMaxFaces);

SimplicialComplex link(const SimplicialComplex& K, const Face& F);
SimplicialComplex vertex_deletion(const SimplicialComplex& K, int v);

/// Reisner criterion over the rationals.
bool is_cohen_macaulay(const SimplicialComplex& K, size_t max_faces = kDefaultMaxFaces);

/// CM, and every vertex deletion is CM of the same dimension.
bool is_two_cm(const SimplicialComplex& K, size_t max_faces = kDefaultMaxFaces);

}  // namespace earcomb
