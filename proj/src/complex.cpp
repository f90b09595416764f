#include "earcomb/complex.hpp"

#include <algorithm>
#include <functional>

namespace earcomb {

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
    SimplicialComplex K;
    for (Face& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // keep inclusion-maximal faces only
    for (size_t i = 0; i < facets.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < facets.size() && maximal; ++j) {
            if (i != j && facets[i].size() <= facets[j].size() &&
                std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                              facets[i].end()) &&
                facets[i] != facets[j])
                maximal = false;
            if (i != j && facets[i] == facets[j] && i > j) maximal = false;
        }
        if (maximal) K.facets_.push_back(facets[i]);
    }
    std::sort(K.facets_.begin(), K.facets_.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return K;
}

std::vector<int> SimplicialComplex::vertices() const {
    std::set<int> vs;
    for (const Face& f : facets_) vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

int SimplicialComplex::dim() const {
    if (facets_.empty()) throw BadDimensionError("dim of the empty complex is undefined");
    size_t m = 0;
    for (const Face& f : facets_) m = std::max(m, f.size());
    return (int)m - 1;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    for (const Face& f : facets_)
        if (f.size() != facets_[0].size()) return false;
    return true;
}

const std::set<Face>& SimplicialComplex::faces() const {
    if (!faces_built_) {
        for (const Face& f : facets_) {
            // all subsets
            size_t n = f.size();
            for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
                Face g;
                for (size_t b = 0; b < n; ++b)
                    if (mask & (size_t(1) << b)) g.push_back(f[b]);
                face_cache_.insert(std::move(g));
            }
        }
        faces_built_ = true;
    }
    return face_cache_;
}

bool SimplicialComplex::has_face(const Face& f) const {
    Face g = f;
    std::sort(g.begin(), g.end());
    for (const Face& fac : facets_)
        if (std::includes(fac.begin(), fac.end(), g.begin(), g.end())) return true;
    return false;
}

std::vector<long long> f_vector(const SimplicialComplex& K) {
    if (!K.is_pure()) throw NotPureError("f_vector requires a pure complex");
    if (K.is_empty_complex()) return {};
    int d = K.dim() + 1;
    std::vector<long long> f(d + 1, 0);
    for (const Face& face : K.faces()) f[face.size()] += 1;
    return f;
}

std::vector<long long> f_to_h(const std::vector<long long>& f) {
    // sum f_i (t-1)^{d-i} = sum h_i t^{d-i}
    int d = (int)f.size() - 1;
    std::vector<long long> h(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long long acc = 0;
        for (int i = 0; i <= k; ++i) {
            long long c = 1;
            for (int t = 1; t <= k - i; ++t) c = c * (d - i - t + 1) / t;
            acc += ((k - i) % 2 == 0 ? 1 : -1) * c * f[i];
        }
        h[k] = acc;
    }
    return h;
}

std::vector<long long> h_to_f(const std::vector<long long>& h) {
    int d = (int)h.size() - 1;
    std::vector<long long> f(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long long acc = 0;
        for (int i = 0; i <= k; ++i) {
            long long c = 1;
            for (int t = 1; t <= k - i; ++t) c = c * (d - i - t + 1) / t;
            acc += c * h[i];
        }
        f[k] = acc;
    }
    return f;
}

std::vector<long long> h_vector(const SimplicialComplex& K) {
    return f_to_h(f_vector(K));
}

ShellingCertificate verify_shelling(const SimplicialComplex& K, const std::vector<Face>& order) {
    if (!K.is_pure()) throw NotPureError("verify_shelling requires a pure complex");
    {
        std::vector<Face> a = order, b = K.facets();
        for (Face& f : a) std::sort(f.begin(), f.end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw std::invalid_argument("verify_shelling: order is not a permutation of facets");
    }
    ShellingCertificate cert;
    cert.order = order;
    for (Face& f : cert.order) std::sort(f.begin(), f.end());
    size_t fs = cert.order.empty() ? 0 : cert.order[0].size();
    for (size_t k = 1; k < cert.order.size(); ++k) {
        const Face& Fk = cert.order[k];
        for (size_t j = 0; j < k; ++j) {
            const Face& Fj = cert.order[j];
            Face inter;
            std::set_intersection(Fj.begin(), Fj.end(), Fk.begin(), Fk.end(),
                                  std::back_inserter(inter));
            bool ok = false;
            for (size_t jp = 0; jp < k && !ok; ++jp) {
                Face ip;
                std::set_intersection(cert.order[jp].begin(), cert.order[jp].end(), Fk.begin(),
                                      Fk.end(), std::back_inserter(ip));
                if (ip.size() == fs - 1 &&
                    std::includes(ip.begin(), ip.end(), inter.begin(), inter.end()))
                    ok = true;
            }
            if (!ok) throw NotAShellingError((int)k + 1, (int)j + 1);
        }
    }
    // restriction faces r(F_i) = { v in F_i : F_i - v lies in an earlier facet }
    for (size_t k = 0; k < cert.order.size(); ++k) {
        const Face& Fk = cert.order[k];
        Face r;
        for (int v : Fk) {
            Face ridge;
            for (int w : Fk)
                if (w != v) ridge.push_back(w);
            for (size_t j = 0; j < k; ++j) {
                if (std::includes(cert.order[j].begin(), cert.order[j].end(), ridge.begin(),
                                  ridge.end())) {
                    r.push_back(v);
                    break;
                }
            }
        }
        cert.restrictions.push_back(r);
    }
    return cert;
}

SimplicialComplex skeleton(const SimplicialComplex& K, int r) {
    if (K.is_empty_complex()) throw BadDimensionError("skeleton of the empty complex");
    if (r < 0 || r > K.dim()) throw BadDimensionError("skeleton dimension out of range");
    std::vector<Face> out;
    for (const Face& f : K.faces())
        if ((int)f.size() == r + 1) out.push_back(f);
    if (out.empty()) out.push_back({});  // r = -1 never happens; void guard
    return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& K) {
    if (!K.is_pure()) throw NotPureError("boundary_subcomplex requires a pure complex");
    if (K.is_empty_complex() || K.is_void_complex()) return {};
    size_t fs = K.facets()[0].size();
    std::map<Face, int> ridge_count;
    for (const Face& F : K.facets()) {
        for (int v : F) {
            Face ridge;
            for (int w : F)
                if (w != v) ridge.push_back(w);
            ridge_count[ridge] += 1;
        }
    }
    (void)fs;
    std::vector<Face> bd;
    for (auto& [ridge, cnt] : ridge_count)
        if (cnt == 1) bd.push_back(ridge);
    return SimplicialComplex::from_facets(std::move(bd));
}

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& K) {
    BarycentricSubdivision out;
    std::vector<Face> nonempty;
    for (const Face& f : K.faces())
        if (!f.empty()) nonempty.push_back(f);
    std::sort(nonempty.begin(), nonempty.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::map<Face, int> id_of;
    for (size_t i = 0; i < nonempty.size(); ++i) {
        id_of[nonempty[i]] = (int)i + 1;
        out.coloring[(int)i + 1] = (int)nonempty[i].size();
    }
    out.vertex_face.resize(nonempty.size() + 1);
    for (size_t i = 0; i < nonempty.size(); ++i) out.vertex_face[i + 1] = nonempty[i];

    // facets of the subdivision: maximal flags of nonempty faces
    std::vector<Face> flags;
    std::vector<int> chain;
    auto contains = [](const Face& big, const Face& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    std::function<void(size_t)> dfs = [&](size_t top_idx) {
        bool extended = false;
        for (size_t j = 0; j < nonempty.size(); ++j) {
            if (nonempty[j].size() > nonempty[top_idx].size() &&
                contains(nonempty[j], nonempty[top_idx])) {
                extended = true;
                chain.push_back(id_of[nonempty[j]]);
                dfs(j);
                chain.pop_back();
            }
        }
        if (!extended) flags.push_back(chain);
    };
    for (size_t i = 0; i < nonempty.size(); ++i) {
        if (nonempty[i].size() == 1) {
            chain = {id_of[nonempty[i]]};
            dfs(i);
        }
    }
    out.complex = SimplicialComplex::from_facets(std::move(flags));
    return out;
}

bool is_proper_coloring(const SimplicialComplex& K, const Coloring& c) {
    for (const Face& F : K.facets()) {
        std::set<int> colors;
        for (int v : F) {
            auto it = c.find(v);
            if (it == c.end()) return false;
            if (!colors.insert(it->second).second) return false;
        }
    }
    return true;
}

SimplicialComplex color_selected(const SimplicialComplex& K, const Coloring& c,
                                 const RankSet& S) {
    if (!is_proper_coloring(K, c)) throw ImproperColoringError("coloring not proper on complex");
    std::vector<Face> kept;
    for (const Face& f : K.faces()) {
        bool ok = true;
        for (int v : f)
            if (!S.contains(c.at(v))) ok = false;
        if (ok) kept.push_back(f);
    }
    if (kept.size() == 1 && kept[0].empty()) return {};  // only the empty face selected
    return SimplicialComplex::from_facets(std::move(kept));
}

namespace {

// Can facet F be appended to the shelled prefix? (its old part must be a
// union of ridges)
bool extends_shelling(const std::vector<Face>& prefix, const Face& F) {
    if (prefix.empty()) return true;
    std::vector<int> old_vertices;  // v with F - v contained in an earlier facet
    std::set<int> R;
    for (int v : F) {
        Face ridge;
        for (int w : F)
            if (w != v) ridge.push_back(w);
        for (const Face& G : prefix)
            if (std::includes(G.begin(), G.end(), ridge.begin(), ridge.end())) {
                R.insert(v);
                break;
            }
    }
    if (R.empty()) return false;
    // every old face of F must avoid some vertex of R, i.e. not contain R;
    // equivalently every face of F containing R must be new
    size_t n = F.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        Face g;
        for (size_t b = 0; b < n; ++b)
            if (mask & (size_t(1) << b)) g.push_back(F[b]);
        bool contains_R = true;
        for (int v : R)
            if (std::find(g.begin(), g.end(), v) == g.end()) contains_R = false;
        bool old = false;
        for (const Face& G : prefix)
            if (std::includes(G.begin(), G.end(), g.begin(), g.end())) old = true;
        if (contains_R == old) return false;
    }
    return true;
}

bool shelling_dfs(std::vector<Face>& prefix, std::vector<Face>& rest) {
    if (rest.empty()) return true;
    for (size_t i = 0; i < rest.size(); ++i) {
        Face f = rest[i];
        if (!extends_shelling(prefix, f)) continue;
        prefix.push_back(f);
        rest.erase(rest.begin() + i);
        if (shelling_dfs(prefix, rest)) return true;
        rest.insert(rest.begin() + i, f);
        prefix.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Face>> find_shelling(const SimplicialComplex& K, size_t max_facets) {
    if (!K.is_pure()) return std::nullopt;
    if (K.facets().size() > max_facets) return std::nullopt;
    std::vector<Face> prefix, rest = K.facets();
    if (shelling_dfs(prefix, rest)) return prefix;
    return std::nullopt;
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> fs = a.facets();
    fs.insert(fs.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex::from_facets(std::move(fs));
}

}  // namespace earcomb
