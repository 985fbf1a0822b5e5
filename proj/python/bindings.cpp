#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilclean/nilclean.hpp"

namespace py = pybind11;
using namespace nilclean;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::uint32_t> indices(const ElementSet& s) {
    std::vector<std::uint32_t> out;
    for (ElementId e : s) out.push_back(e.index);
    return out;
}

ElementId element_of(const RingTable& r, std::size_t i) { return r.element(i); }

py::object predicate(const PredicateResult& res) {
    return py::make_tuple(res.holds, res.witness ? py::cast(res.witness->index) : py::none());
}

py::dict lift_dict(const LiftResult& l) {
    py::dict d;
    d["lifted"] = l.lifted.index;
    d["difference"] = l.difference.index;
    d["iterations"] = l.iterations;
    return d;
}

py::object witness_dict(const std::optional<DecompositionWitness>& w) {
    if (!w) return py::none();
    py::dict d;
    std::vector<std::uint32_t> parts;
    for (ElementId p : w->parts) parts.push_back(p.index);
    d["parts"] = parts;
    d["nilpotent"] = w->nilpotent.index;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite rings as Cayley tables: classification, lifting and nil-clean decompositions.";

    py::register_exception<RingError>(m, "RingError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<RingTable>(m, "RingTable")
        .def_property_readonly("order", &RingTable::order)
        .def_property_readonly("zero", [](const RingTable& r) { return r.zero().index; })
        .def_property_readonly("one", [](const RingTable& r) { return r.one().index; })
        .def_property_readonly("label", &RingTable::label)
        .def("add", [](const RingTable& r, std::size_t a, std::size_t b) {
            return r.add(element_of(r, a), element_of(r, b)).index;
        })
        .def("mul", [](const RingTable& r, std::size_t a, std::size_t b) {
            return r.mul(element_of(r, a), element_of(r, b)).index;
        })
        .def("neg", [](const RingTable& r, std::size_t a) { return r.neg(element_of(r, a)).index; })
        .def("pow", [](const RingTable& r, std::size_t a, unsigned k) {
            return r.pow(element_of(r, a), k).index;
        })
        .def("is_commutative", &RingTable::is_commutative)
        .def("to_json", [](const RingTable& r) { return to_python(ring_to_json(r)); })
        .def("__eq__", [](const RingTable& a, const RingTable& b) { return a == b; })
        .def("__len__", &RingTable::order)
        .def("__repr__", [](const RingTable& r) {
            return "<RingTable " + r.label() + " order=" + std::to_string(r.order()) + ">";
        });

    m.def("make_zn", [](std::uint64_t n, std::size_t cap) { return make_zn(n, {cap}); },
          py::arg("n"), py::arg("order_cap") = kDefaultOrderCap);
    m.def("make_gf", [](std::uint64_t p, unsigned k, std::size_t cap) { return make_gf(p, k, {cap}); },
          py::arg("p"), py::arg("k"), py::arg("order_cap") = kDefaultOrderCap);
    m.def("make_matrix_ring",
          [](const RingTable& base, unsigned k, std::size_t cap) { return make_matrix_ring(base, k, {cap}); },
          py::arg("base"), py::arg("k"), py::arg("order_cap") = kDefaultOrderCap);
    m.def("make_product",
          [](const RingTable& a, const RingTable& b, std::size_t cap) { return make_product(a, b, {cap}); },
          py::arg("r1"), py::arg("r2"), py::arg("order_cap") = kDefaultOrderCap);
    m.def("parse_ring",
          [](const std::string& text, std::size_t cap) {
              return build_ring(*parse_ring_expr(text), Catalog::standard(), {cap});
          },
          py::arg("expr"), py::arg("order_cap") = kDefaultOrderCap,
          "Build a ring from an expression such as 'Z/4 x GF(3^2)' or 'M2(Z/2)'.");
    m.def("ring_from_json", [](const std::string& text) { return ring_from_json(Json::parse(text)); });
    m.def("get_ring", [](const std::string& name) { return get_ring(name).ring; });

    m.def("validate_ring", [](const RingTable& r) -> py::object {
        const auto v = validate_ring(r);
        if (!v) return py::none();
        std::vector<std::uint32_t> w;
        for (ElementId e : v->witnesses) w.push_back(e.index);
        py::dict d;
        d["axiom"] = to_string(v->axiom);
        d["detail"] = v->detail;
        d["witnesses"] = w;
        return d;
    });
    m.def("characteristic", &characteristic);
    m.def("int_embed", [](const RingTable& r, std::int64_t k) { return int_embed(r, k).index; });
    m.def("corner_ring", [](const RingTable& r, std::size_t e) {
        CornerRing c = corner_ring(r, element_of(r, e));
        std::vector<std::uint32_t> emb;
        for (ElementId x : c.embedding) emb.push_back(x.index);
        return py::make_tuple(c.ring, emb);
    });
    m.def("primary_decomposition", [](const RingTable& r) {
        py::list out;
        for (const auto& f : primary_decomposition(r).factors) {
            py::dict d;
            d["central_idempotent"] = f.central_idempotent.index;
            d["corner"] = f.corner.ring;
            d["prime"] = f.prime;
            d["exponent"] = f.exponent;
            out.append(d);
        }
        return out;
    });

    m.def("is_nilpotent", [](const RingTable& r, std::size_t a) { return is_nilpotent(r, element_of(r, a)); });
    m.def("commute", [](const RingTable& r, std::size_t a, std::size_t b) {
        return commute(r, element_of(r, a), element_of(r, b));
    });
    m.def("classify", [](const RingTable& r) {
        const auto& c = classify(r);
        py::dict d;
        d["nilpotents"] = indices(c.nilpotents);
        d["idempotents"] = indices(c.idempotents);
        d["tripotents"] = indices(c.tripotents);
        d["five_potents"] = indices(c.five_potents);
        d["involutions"] = indices(c.involutions);
        d["units"] = indices(c.units);
        d["squares"] = indices(c.squares);
        return d;
    });
    m.def("all_squares", [](const RingTable& r) { return indices(all_squares(r)); });

    m.def("generated_subring",
          [](const RingTable& r, std::size_t a) { return indices(generated_subring(r, element_of(r, a)).elements); });
    m.def("lift_idempotent",
          [](const RingTable& r, std::size_t a) { return lift_dict(lift_idempotent(r, element_of(r, a))); });
    m.def("lift_tripotent",
          [](const RingTable& r, std::size_t a) { return lift_dict(lift_tripotent(r, element_of(r, a))); });
    m.def("tripotent_split", [](const RingTable& r, std::size_t p) {
        const auto s = tripotent_split(r, element_of(r, p));
        return py::make_tuple(s.plus.index, s.minus.index);
    });

    m.def("find_decomposition",
          [](const RingTable& r, std::size_t a, const std::string& shape) {
              return witness_dict(find_decomposition(r, element_of(r, a), parse_shape(shape)));
          },
          py::arg("ring"), py::arg("element"), py::arg("shape"),
          "Least commuting decomposition for a shape like 'e,e' (nilpotent implicit), or None.");
    m.def("decompose_constructively", [](const RingTable& r, std::size_t a) {
        const auto c = decompose_constructively(r, element_of(r, a));
        py::dict d = witness_dict(c.witness).cast<py::dict>();
        d["shape"] = to_string(c.shape);
        return d;
    });

    m.def("is_strongly_2_nil_clean", [](const RingTable& r) { return predicate(is_strongly_2_nil_clean(r)); });
    m.def("is_zhou_nil_clean", [](const RingTable& r) { return predicate(is_zhou_nil_clean(r)); });
    m.def("check_characterization", [](const RingTable& r, const std::string& id) {
        return predicate(check_characterization(r, parse_characterization_id(id)));
    });
    m.def("cross_check", [](const RingTable& r) { return to_python(report_to_json(cross_check(r))); });
    m.def("survey",
          [](std::size_t max_order, unsigned threads) {
              py::list out;
              std::vector<SurveyRow> rows;
              {
                  py::gil_scoped_release release;
                  rows = run_survey(survey_set(max_order), threads);
              }
              for (const auto& row : rows) {
                  Json j = report_to_json(row.report);
                  j["name"] = row.name;
                  j["expected_mismatches"] = row.mismatches;
                  out.append(to_python(j));
              }
              return out;
          },
          py::arg("max_order"), py::arg("threads") = 0);
}
