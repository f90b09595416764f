#include "earcomb/topology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>

namespace earcomb {

bool HomologyProfile::is_trivial() const {
    for (long long b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

bool HomologyProfile::is_sphere(int n) const {
    if (n < 0 || n >= (int)betti.size()) return false;
    for (int i = 0; i < (int)betti.size(); ++i)
        if (betti[i] != (i == n ? 1 : 0)) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

namespace {

using Mat = std::vector<std::vector<mpz_class>>;

// Diagonal of the Smith normal form (nonzero entries, with the divisibility
// chain enforced).
std::vector<mpz_class> smith_diagonal(Mat a) {
    std::vector<mpz_class> diag;
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    size_t t = 0;
    while (t < rows && t < cols) {
        // locate a nonzero pivot of minimal magnitude
        size_t pr = t, pc = t;
        bool found = false;
        mpz_class best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(best))) {
                    best = a[i][j];
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[t], a[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] != 0) {
                mpz_class q = a[i][t] / a[t][t];
                for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] != 0) {
                mpz_class q = a[t][j] / a[t][t];
                for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
        }
        if (!clean) continue;  // smaller remainders appeared; re-pivot

        // pivot must divide every remaining entry for a true SNF diagonal
        bool divides_all = true;
        for (size_t i = t + 1; i < rows && divides_all; ++i)
            for (size_t j = t + 1; j < cols && divides_all; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    divides_all = false;
                }
        if (!divides_all) continue;

        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& K, size_t max_faces) {
    if (K.face_count() > max_faces)
        throw TooLargeError("reduced_homology: complex exceeds face cap");
    HomologyProfile prof;
    if (K.is_empty_complex() || K.is_void_complex()) return prof;
    int n = K.dim();
    // faces by cardinality (index 0 holds the empty face)
    std::vector<std::vector<Face>> by_dim(n + 2);
    std::vector<std::map<Face, int>> index(n + 2);
    for (const Face& f : K.faces()) by_dim[f.size()].push_back(f);
    for (int k = 0; k <= n + 1; ++k) {
        std::sort(by_dim[k].begin(), by_dim[k].end());
        for (size_t i = 0; i < by_dim[k].size(); ++i) index[k][by_dim[k][i]] = (int)i;
    }
    // reduced boundary d_k : C_{k-1 faces of size k+1}... we index by face size:
    // bnd[s] maps size-s faces to size-(s-1) faces, s = 1..n+1.
    std::vector<long long> rank(n + 3, 0);
    std::vector<std::vector<long long>> tors(n + 3);
    for (int s = 1; s <= n + 1; ++s) {
        Mat m(by_dim[s - 1].size(), std::vector<mpz_class>(by_dim[s].size(), 0));
        for (size_t c = 0; c < by_dim[s].size(); ++c) {
            const Face& f = by_dim[s][c];
            for (int drop = 0; drop < s; ++drop) {
                Face g;
                for (int i = 0; i < s; ++i)
                    if (i != drop) g.push_back(f[i]);
                m[index[s - 1].at(g)][c] = (drop % 2 == 0) ? 1 : -1;
            }
        }
        auto diag = smith_diagonal(std::move(m));
        rank[s] = (long long)diag.size();
        for (const mpz_class& d : diag)
            if (d > 1) tors[s].push_back((long long)d.get_si());
    }
    prof.betti.resize(n + 1);
    prof.torsion.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        // H_k uses chains of face size k+1
        prof.betti[k] = (long long)by_dim[k + 1].size() - rank[k + 1] - rank[k + 2];
        prof.torsion[k] = tors[k + 2];
    }
    return prof;
}

const char* to_string(TopType t) {
    switch (t) {
        case TopType::Sphere: return "Sphere";
        case TopType::Ball: return "Ball";
        default: return "Unknown";
    }
}

TopType certify_ball_or_sphere(const SimplicialComplex& K, const std::vector<Face>& order,
                               size_t max_faces) {
    if (K.is_empty_complex() || K.is_void_complex() || !K.is_pure()) return TopType::Unknown;
    try {
        verify_shelling(K, order);
    } catch (const std::exception&) {
        return TopType::Unknown;
    }
    HomologyProfile h;
    try {
        h = reduced_homology(K, max_faces);
    } catch (const TooLargeError&) {
        return TopType::Unknown;
    }
    int n = K.dim();
    // ridge degrees
    std::map<Face, int> ridge_count;
    for (const Face& F : K.facets())
        if (n == 0)
            ridge_count[{}] += 1;
        else
            for (int v : F) {
                Face ridge;
                for (int w : F)
                    if (w != v) ridge.push_back(w);
                ridge_count[ridge] += 1;
            }
    bool all_two = true, at_most_two = true;
    for (auto& [r, c] : ridge_count) {
        if (c != 2) all_two = false;
        if (c > 2) at_most_two = false;
    }
    if (all_two && h.is_sphere(n)) return TopType::Sphere;
    if (at_most_two && h.is_trivial() && !boundary_subcomplex(K).is_empty_complex())
        return TopType::Ball;
    return TopType::Unknown;
}

SimplicialComplex link(const SimplicialComplex& K, const Face& F) {
    Face f = F;
    std::sort(f.begin(), f.end());
    std::vector<Face> out;
    for (const Face& fac : K.facets()) {
        if (std::includes(fac.begin(), fac.end(), f.begin(), f.end())) {
            Face g;
            std::set_difference(fac.begin(), fac.end(), f.begin(), f.end(),
                                std::back_inserter(g));
            out.push_back(g);
        }
    }
    return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex vertex_deletion(const SimplicialComplex& K, int v) {
    std::vector<Face> out;
    for (const Face& f : K.faces()) {
        if (std::find(f.begin(), f.end(), v) == f.end()) out.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(out));
}

bool is_cohen_macaulay(const SimplicialComplex& K, size_t max_faces) {
    if (K.is_empty_complex() || K.is_void_complex()) return true;
    if (K.face_count() > max_faces)
        throw TooLargeError("is_cohen_macaulay: complex exceeds face cap");
    for (const Face& F : K.faces()) {
        SimplicialComplex lk = link(K, F);
        if (lk.is_void_complex()) continue;  // link of a facet
        int dl = lk.dim();
        HomologyProfile h = reduced_homology(lk, max_faces);
        for (int i = 0; i < dl; ++i)
            if (h.betti[i] != 0) return false;
    }
    return true;
}

bool is_two_cm(const SimplicialComplex& K, size_t max_faces) {
    if (!is_cohen_macaulay(K, max_faces)) return false;
    int d = K.dim();
    for (int v : K.vertices()) {
        SimplicialComplex del = vertex_deletion(K, v);
        if (del.is_empty_complex() || del.is_void_complex()) return false;
        if (del.dim() != d) return false;
        if (!is_cohen_macaulay(del, max_faces)) return false;
    }
    return true;
}

}  // namespace earcomb
