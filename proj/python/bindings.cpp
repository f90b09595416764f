#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "earcomb/ced.hpp"
#include "earcomb/faceposet.hpp"
#include "earcomb/geomlat.hpp"
#include "earcomb/io.hpp"
#include "earcomb/poset.hpp"
#include "earcomb/topology.hpp"

namespace py = pybind11;
using namespace earcomb;
using earcomb::io::json;

namespace {

py::object to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

SimplicialComplex complex_of(const std::vector<Face>& facets) {
    return SimplicialComplex::from_facets(facets);
}

py::object run_pipeline(const BooleanPieceSequence& seq, const RankedPoset& ambient,
                        const RankSet& S) {
    EarSequence ears = build_ears(seq, S);
    SimplicialComplex delta = order_complex(rank_select(ambient, S));
    CedReport report = verify_ced(delta, ears);
    json out = io::ear_sequence_to_json(ears, report);
    out["pass"] = report.pass();
    return to_py(out);
}

}  // namespace

PYBIND11_MODULE(_earcomb, m) {
    m.doc() = "convex-ear decompositions of rank-selected subposets";

    m.def("f_vector", [](const std::vector<Face>& facets) { return f_vector(complex_of(facets)); });
    m.def("h_vector", [](const std::vector<Face>& facets) { return h_vector(complex_of(facets)); });

    m.def("verify_shelling", [](const std::vector<Face>& facets, const std::vector<Face>& order) {
        return verify_shelling(complex_of(facets), order).restrictions;
    });
    m.def("find_shelling", [](const std::vector<Face>& facets) -> py::object {
        auto found = find_shelling(complex_of(facets));
        if (!found) return py::none();
        return py::cast(*found);
    });

    m.def("reduced_homology", [](const std::vector<Face>& facets) {
        HomologyProfile H = reduced_homology(complex_of(facets));
        py::dict out;
        out["betti"] = H.betti;
        out["torsion"] = H.torsion;
        return out;
    });
    m.def("certify_ball_or_sphere",
          [](const std::vector<Face>& facets, const std::vector<Face>& order) {
              return std::string(to_string(certify_ball_or_sphere(complex_of(facets), order)));
          });
    m.def("is_cohen_macaulay",
          [](const std::vector<Face>& facets) { return is_cohen_macaulay(complex_of(facets)); });
    m.def("is_two_cm",
          [](const std::vector<Face>& facets) { return is_two_cm(complex_of(facets)); });

    m.def("descent_class", [](int d, const std::vector<int>& S) {
        return descent_class(RankSet(d, S));
    });
    m.def("dominates", [](int d, const std::vector<int>& T, const std::vector<int>& S) {
        DominanceResult r = dominates(RankSet(d, T), RankSet(d, S));
        return py::make_tuple(r.dominates, r.witness);
    });
    m.def("w_set", [](int d, const std::vector<int>& S) { return w_set(RankSet(d, S)).members; });
    m.def("weak_leq", &weak_leq);
    m.def("macaulay_pseudopower", &macaulay_pseudopower);
    m.def("is_m_vector", &is_m_vector);

    m.def("nbc_bases", [](int ground, const std::vector<std::vector<int>>& bases) {
        return Matroid::from_bases(ground, bases).nbc_bases();
    });

    m.def("boolean_decomposition", [](int d, const std::vector<int>& S) {
        LabeledPoset B = boolean_lattice(d);
        BooleanPieceSequence seq;
        seq.ambient = B.poset;
        seq.pieces.push_back({B.poset, B.labeling});
        validate_pieces(seq);
        return run_pipeline(seq, B.poset, RankSet(d, S));
    });

    m.def("geometric_decomposition",
          [](int ground, const std::vector<std::vector<int>>& bases, const std::vector<int>& S) {
              Matroid M = Matroid::from_bases(ground, bases);
              FlatLattice L = lattice_of_flats(M);
              BooleanPieceSequence seq = geometric_pieces(L);
              return run_pipeline(seq, L.poset, RankSet(M.rank(), S));
          });

    m.def("faceposet_decomposition",
          [](const std::vector<Face>& facets, const std::vector<Face>& order,
             const std::vector<int>& S) {
              SimplicialComplex K = complex_of(facets);
              FacePosetPipeline pipe = faceposet_pieces(K, order);
              return run_pipeline(pipe.seq, pipe.fp.poset, RankSet(K.dim() + 1, S));
          });
}
