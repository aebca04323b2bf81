#include "lpkern/biorthogonal.hpp"
#include "lpkern/generator.hpp"
#include "lpkern/io.hpp"
#include "lpkern/operator_builder.hpp"
#include "lpkern/support_graph.hpp"
#include "lpkern/verification.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace lpkern;

namespace {

py::object big_int(const Int& v) {
    const std::string s = v.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

Int big_int_from(const py::handle& h) { return Int(py::str(h).cast<std::string>()); }

py::list family_to_list(const VectorFamily<Rational>& fam) {
    py::list out;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        py::list coords;
        for (const auto& [lab, val] : fam.vectors[i].entries)
            coords.append(py::make_tuple(lab, big_int(boost::multiprecision::numerator(val)),
                                         big_int(boost::multiprecision::denominator(val))));
        out.append(py::make_tuple(fam.ids[i], coords));
    }
    return out;
}

VectorFamily<Rational> family_from_list(const SpaceDescriptor& space, const py::sequence& rows) {
    VectorFamily<Rational> fam(space);
    for (const auto& row : rows) {
        const auto pair = row.cast<py::sequence>();
        const auto id = pair[0].cast<VectorId>();
        std::vector<std::pair<Label, Rational>> entries;
        for (const auto& c : pair[1].cast<py::sequence>()) {
            const auto e = c.cast<py::sequence>();
            const Label lab = e[0].cast<Label>();
            const Int num = big_int_from(e[1]);
            const Int den = e.size() > 2 ? big_int_from(e[2]) : Int(1);
            entries.emplace_back(lab, make_rational(num, den));
        }
        fam.push_back(id, SparseVector<Rational>::from_entries(std::move(entries)));
    }
    return fam;
}

py::dict partition_dict(const VectorFamily<Rational>& fam, const std::string& algo) {
    const SupportFamily sf = SupportFamily::of(fam);
    ComponentDecomposition comp =
        algo == "graph" ? components_graph(sf) : components_equivrel(sf);
    bool agree = true;
    if (algo == "both") agree = comp == components_graph(sf);
    const auto part = disjoint_partition(sf, comp);
    py::dict out;
    out["report"] = partition_report(sf, comp, part);
    py::list groups;
    for (const auto& grp : part.groups) {
        py::list ids;
        for (VectorId v : grp) ids.append(v);
        groups.append(ids);
    }
    out["groups"] = groups;
    out["n_groups"] = part.groups.size();
    out["algorithms_agree"] = agree;
    return out;
}

}  // namespace

PYBIND11_MODULE(_lpkern, m) {
    m.doc() = "finite-scale constructions on sparse lp/c0 models";

    py::class_<SpaceDescriptor>(m, "Space")
        .def_static("lp",
                    [](std::int64_t num, std::int64_t den, std::uint64_t universe) {
                        return SpaceDescriptor::lp(Exponent(num, den), universe);
                    },
                    py::arg("p_num"), py::arg("p_den"), py::arg("universe_size"))
        .def_static("c0", &SpaceDescriptor::c0, py::arg("universe_size"))
        .def("dual", &SpaceDescriptor::dual)
        .def_property_readonly("universe_size",
                               [](const SpaceDescriptor& s) { return s.universe_size; })
        .def_property_readonly("kind", [](const SpaceDescriptor& s) {
            return s.kind == SpaceKind::Lp ? "lp" : "c0";
        })
        .def_property_readonly("p", [](const SpaceDescriptor& s) {
            return py::make_tuple(s.p.num, s.p.den);
        });

    py::class_<VectorFamily<Rational>>(m, "Family")
        .def_static("from_list", &family_from_list, py::arg("space"), py::arg("rows"))
        .def("to_list", &family_to_list)
        .def("__len__", &VectorFamily<Rational>::size)
        .def_property_readonly("space",
                               [](const VectorFamily<Rational>& f) { return f.space; });

    m.def("generate",
          [](std::uint64_t n, const SpaceDescriptor& space, const std::string& dist,
             std::uint64_t param, std::uint64_t seed) {
              GenConfig cfg;
              cfg.n_vectors = n;
              cfg.space = space;
              cfg.dist = dist == "geometric" ? SupportDist::Geometric : SupportDist::Fixed;
              cfg.support_param = param;
              cfg.seed = seed;
              return generate_family(cfg);
          },
          py::arg("n"), py::arg("space"), py::arg("dist") = "fixed", py::arg("param") = 4,
          py::arg("seed") = 0);

    m.def("partition", &partition_dict, py::arg("family"), py::arg("algo") = "both");

    m.def("annihilator", &annihilator, py::arg("family"));
    m.def("pre_annihilator", &pre_annihilator, py::arg("family"));

    m.def("markushevich", [](const VectorFamily<Rational>& y) {
        const auto sys = markushevich(y);
        return py::make_tuple(sys.vectors, sys.functionals);
    });

    m.def("dense_image_operator_json", [](const VectorFamily<Rational>& fam) {
        const auto nz = fam.without_zeros();
        const SupportFamily sf = SupportFamily::of(nz);
        const auto part = disjoint_partition(sf, components_equivrel(sf));
        const auto theta = InjectionMap::tail_allocator(part, fam.space);
        return operator_to_json(dense_image_operator(nz, part, theta).op);
    });

    m.def("kernel_via_duality_json", [](const VectorFamily<Rational>& y) {
        return operator_to_json(kernel_operator_via_duality(y));
    });
    m.def("kernel_via_quotient_json", [](const VectorFamily<Rational>& y) {
        return operator_to_json(kernel_operator_via_quotient(y, y.space));
    });
    m.def("kernel_certified", [](const std::string& op_json, const VectorFamily<Rational>& y) {
        return subspace_equal(kernel_basis(operator_from_json(op_json)), rref_basis(y));
    });
    m.def("operator_rank",
          [](const std::string& op_json) { return rank(operator_from_json(op_json)); });

    m.def("check_duality_chain", [](const std::string& op_json) {
        return check_duality_chain(operator_from_json(op_json)).to_json();
    });
    m.def("check_lemma25_roundtrip", [](const VectorFamily<Rational>& d) {
        return check_lemma25_roundtrip(d).to_json();
    });

    m.def("family_to_jsonl", [](const VectorFamily<Rational>& fam) {
        std::ostringstream os;
        write_family_jsonl(os, fam);
        return os.str();
    });
    m.def("family_from_jsonl", [](const std::string& text) {
        std::istringstream is(text);
        return read_family_jsonl(is);
    });
}
