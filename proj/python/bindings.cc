// Copyright 2026 The modlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Exact values cross the boundary as Python int,
// fractions.Fraction, or the textual cyclotomic grammar ("1/2*e(1/3)").

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modlat/enumerate.h"
#include "modlat/serialize.h"

namespace py = pybind11;
using namespace modlat;

namespace {

py::object to_py(const Integer &x) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational &x) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(Integer(x.get_num())), to_py(Integer(x.get_den())));
}

Integer to_integer(const py::handle &h) {
    if (!py::isinstance<py::int_>(h)) {
        throw py::type_error("expected int entries");
    }
    return Integer(py::str(h).cast<std::string>());
}

IntMatrix to_int_matrix(const py::sequence &rows) {
    const std::size_t n = rows.size();
    std::size_t cols = n == 0 ? 0 : py::len(rows[0]);
    IntMatrix m(n, cols);
    for (std::size_t i = 0; i < n; i++) {
        py::sequence row = rows[i].cast<py::sequence>();
        if (row.size() != cols) {
            throw py::value_error("ragged matrix");
        }
        for (std::size_t j = 0; j < cols; j++) {
            m(i, j) = to_integer(row[j]);
        }
    }
    return m;
}

py::list from_int_matrix(const IntMatrix &m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); i++) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); j++) {
            row.append(to_py(m(i, j)));
        }
        rows.append(row);
    }
    return rows;
}

GramMatrix to_gram(const py::sequence &rows) {
    return GramMatrix::check(to_int_matrix(rows));
}

std::vector<std::vector<std::string>> str_matrix(const Matrix<Cyclotomic> &m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++) {
            out[i].push_back(m(i, j).str());
        }
    }
    return out;
}

ModularData make_data(const std::vector<std::vector<std::string>> &s, const std::vector<std::string> &twists,
                      std::vector<std::string> names) {
    Matrix<Cyclotomic> m(s.size(), s.size());
    for (std::size_t i = 0; i < s.size(); i++) {
        if (s[i].size() != s.size()) {
            throw py::value_error("s_tilde must be square");
        }
        for (std::size_t j = 0; j < s.size(); j++) {
            m(i, j) = parse_cyclotomic(s[i][j]);
        }
    }
    std::vector<Cyclotomic> t;
    for (const auto &x : twists) {
        t.push_back(parse_cyclotomic(x));
    }
    return ModularData(std::move(m), std::move(t), std::move(names));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pointed modular data from even lattices in exact arithmetic";

    auto base = py::register_exception<ModularDataError>(m, "ModularDataError", PyExc_RuntimeError);
    py::register_exception<LatticeError>(m, "LatticeError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    (void)base;

    py::class_<ModularData>(m, "ModularData")
        .def(py::init(&make_data), py::arg("s_tilde"), py::arg("twists"),
             py::arg("label_names") = std::vector<std::string>{},
             "Build generic data from cyclotomic strings such as \"1 + e(1/5) + e(4/5)\".")
        .def_property_readonly("rank", &ModularData::rank)
        .def_property_readonly("s_tilde", [](const ModularData &md) { return str_matrix(md.s_tilde()); })
        .def_property_readonly("twists",
                               [](const ModularData &md) {
                                   std::vector<std::string> out;
                                   for (const auto &t : md.twists()) {
                                       out.push_back(t.root_str());
                                   }
                                   return out;
                               })
        .def_property_readonly("label_names", &ModularData::label_names)
        .def_property_readonly("provenance",
                               [](const ModularData &md) -> py::object {
                                   if (!md.provenance()) {
                                       return py::none();
                                   }
                                   return from_int_matrix(md.provenance()->entries());
                               })
        .def("approx_s_tilde",
             [](const ModularData &md) {
                 std::vector<std::vector<std::complex<double>>> out(md.rank());
                 for (std::size_t i = 0; i < md.rank(); i++) {
                     for (std::size_t j = 0; j < md.rank(); j++) {
                         out[i].push_back(md.s_tilde()(i, j).approx_complex());
                     }
                 }
                 return out;
             })
        .def("same_data", &ModularData::same_data)
        .def("__eq__", [](const ModularData &a, const ModularData &b) { return a == b; })
        .def("__repr__", [](const ModularData &md) { return "<ModularData rank " + std::to_string(md.rank()) + ">"; });

    m.def("from_lattice", [](const py::sequence &b) { return from_lattice(to_gram(b)); }, py::arg("b"),
          "Pointed modular data G_B of an even, symmetric, nondegenerate Gram matrix.");
    m.def("product", &product);
    m.def("relabel", &relabel, py::arg("data"), py::arg("perm"));
    m.def("canonical_form", &canonical_form, py::arg("data"), py::arg("rank_bound") = kDefaultCanonicalRankBound);
    m.def("direct_sum", [](const py::sequence &a, const py::sequence &b) {
        return from_int_matrix(direct_sum(to_gram(a), to_gram(b)).entries());
    });

    m.def("serialize", [](const ModularData &md) { return serialize(md); });
    m.def("parse_modular_data", [](const std::string &text) { return parse_modular_data(text); });

    m.def(
        "verify",
        [](const ModularData &md) {
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto &c : verify(md).checks) {
                out.emplace_back(c.name, c.passed, c.detail);
            }
            return out;
        },
        "List of (relation, passed, detail).");
    m.def("gauss_data", [](const ModularData &md) {
        GaussData g = gauss_data(md);
        py::dict d;
        d["d_squared"] = g.d_squared.str();
        d["p_plus"] = g.p_plus.str();
        d["p_minus"] = g.p_minus.str();
        d["identity_holds"] = g.identity_holds;
        return d;
    });
    m.def("quantum_dimensions", [](const ModularData &md) {
        std::vector<std::string> out;
        for (const auto &d : quantum_dimensions(md)) {
            out.push_back(d.str());
        }
        return out;
    });
    m.def(
        "verlinde_fusion",
        [](const ModularData &md) {
            FusionTensor ft = verlinde_fusion(md);
            const std::size_t n = md.rank();
            std::vector<std::vector<std::vector<uint64_t>>> out(n, std::vector<std::vector<uint64_t>>(n));
            for (std::size_t i = 0; i < n; i++) {
                for (std::size_t j = 0; j < n; j++) {
                    for (std::size_t k = 0; k < n; k++) {
                        out[i][j].push_back(ft(i, j, k));
                    }
                }
            }
            return out;
        },
        "N[i][j][k], the multiplicity of k in i x j.");
    m.def(
        "fusion_probabilities",
        [](const ModularData &md, Label i, Label j) {
            py::list out;
            for (const auto &o : fusion_probabilities(md, verlinde_fusion(md), i, j)) {
                out.append(py::make_tuple(o.label, to_py(o.probability)));
            }
            return out;
        },
        py::arg("data"), py::arg("i"), py::arg("j"));
    m.def("dual_permutation", &dual_permutation);
    m.def(
        "link_invariant",
        [](const ModularData &md, const py::sequence &linking, const std::vector<Label> &colors) {
            return colored_link_invariant(md, FramedLink(to_int_matrix(linking), colors)).str();
        },
        py::arg("data"), py::arg("linking"), py::arg("colors"));

    m.def("determinant", [](const py::sequence &a) { return to_py(determinant(to_int_matrix(a))); });
    m.def(
        "smith_normal_form",
        [](const py::sequence &a) {
            SmithDecomposition d = smith_normal_form(to_int_matrix(a));
            py::list diag;
            for (const auto &x : d.diagonal) {
                diag.append(to_py(x));
            }
            return py::make_tuple(from_int_matrix(d.left), from_int_matrix(d.right), diag);
        },
        "(U, V, diagonal) with U A V = diag.");
    m.def("discriminant_group", [](const py::sequence &b) {
        DiscriminantGroup g = discriminant_group(to_gram(b));
        py::list reps;
        for (const auto &v : g.representatives()) {
            py::list row;
            for (const auto &x : v) {
                row.append(to_py(x));
            }
            reps.append(row);
        }
        return reps;
    });

    m.def(
        "generate_gram_matrices",
        [](std::size_t max_dim, long max_entry, std::optional<long> max_rank) {
            py::list out;
            for (const auto &b : generate_gram_matrices({max_dim, max_entry, max_rank})) {
                out.append(from_int_matrix(b.entries()));
            }
            return out;
        },
        py::arg("max_dim"), py::arg("max_entry"), py::arg("max_rank") = py::none());
    m.def(
        "classify",
        [](const py::sequence &corpus, std::size_t rank_bound) {
            std::vector<GramMatrix> grams;
            for (const auto &b : corpus) {
                grams.push_back(to_gram(b.cast<py::sequence>()));
            }
            Classification c;
            {
                py::gil_scoped_release release;
                c = classify(grams, rank_bound);
            }
            py::dict out;
            for (const auto &[rank, classes] : c.by_rank) {
                py::list items;
                for (const auto &cls : classes) {
                    py::dict d;
                    d["key"] = cls.key;
                    d["witness"] = from_int_matrix(cls.witness.entries());
                    d["twists"] = cls.twist_multiset;
                    d["members"] = cls.members;
                    items.append(d);
                }
                out[py::int_(rank)] = items;
            }
            return out;
        },
        py::arg("corpus"), py::arg("rank_bound") = kDefaultCanonicalRankBound);
}
