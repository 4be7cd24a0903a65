#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffrt/errors.hpp"
#include "ffrt/fedder.hpp"
#include "ffrt/matfac.hpp"
#include "ffrt/monomial.hpp"
#include "ffrt/parse.hpp"
#include "ffrt/relmat.hpp"
#include "ffrt/signature.hpp"

namespace py = pybind11;
using namespace ffrt;

namespace {

/// Value wrapper so the immutable ring descriptor can cross the boundary.
struct PyRing {
    RingPtr ptr;
};

py::int_ big_to_py(const BigInt& z) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object fraction(const BigRat& r) {
    py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(big_to_py(r.get_num()), big_to_py(r.get_den()));
}

py::dict split_result_dict(const SplitResult& s) {
    py::dict d;
    d["t"] = s.t;
    d["r"] = s.r;
    d["reduced_size"] = s.reduced_size;
    d["precision_used"] = s.precision_used;
    return d;
}

py::dict report_dict(const SignatureReport& report) {
    py::dict d;
    d["dimension"] = report.dimension;
    d["alpha"] = report.alpha;
    d["exact"] = report.exact ? fraction(*report.exact) : py::object(py::none());
    py::list estimates;
    for (const SignatureEstimate& est : report.estimates) {
        py::dict e;
        e["e"] = est.e;
        e["a_e"] = big_to_py(est.free_rank);
        e["ratio"] = fraction(est.ratio);
        estimates.append(e);
    }
    d["estimates"] = estimates;
    return d;
}

py::dict counts_dict(const DiagonalCounts& counts) {
    py::dict out;
    for (const auto& [c, mult] : counts) {
        out[py::tuple(py::cast(c))] = big_to_py(mult);
    }
    return out;
}

py::dict verdict_dict(const PurityVerdict& v) {
    py::dict out;
    out["f_pure"] = v.f_pure;
    out["witness"] = v.witness ? py::object(py::tuple(py::cast(*v.witness))) : py::object(py::none());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Frobenius pushforward computations for hypersurfaces over F_p";

    py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
    py::register_exception<instability_error>(m, "InstabilityError", PyExc_ArithmeticError);
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);

    py::class_<PyRing>(m, "Ring")
        .def_static("make",
                    [](std::uint64_t p, std::size_t nvars) { return PyRing{Ring::make(Prime(p), nvars)}; },
                    py::arg("p"), py::arg("nvars"))
        .def_property_readonly("p", [](const PyRing& r) { return r.ptr->p(); })
        .def_property_readonly("var_names", [](const PyRing& r) { return r.ptr->var_names(); })
        .def("truncated", [](const PyRing& r, Exp bound) { return PyRing{r.ptr->truncated(bound)}; })
        .def("adjoin", [](const PyRing& r, const std::string& name) { return PyRing{r.ptr->adjoin(name)}; })
        .def("__repr__", [](const PyRing& r) { return r.ptr->describe(); });

    py::class_<Poly>(m, "Poly")
        .def_static("parse",
                    [](const std::string& text, const PyRing& ring) { return parse_poly(text, ring.ptr); },
                    py::arg("text"), py::arg("ring"))
        .def_property_readonly("ring", [](const Poly& p) { return PyRing{p.ring()}; })
        .def("is_zero", &Poly::is_zero)
        .def("is_local_unit", &Poly::is_local_unit)
        .def("degree", &Poly::degree)
        .def("__add__", &Poly::operator+)
        .def("__sub__", py::overload_cast<const Poly&>(&Poly::operator-, py::const_))
        .def("__mul__", py::overload_cast<const Poly&>(&Poly::operator*, py::const_))
        .def("__neg__", py::overload_cast<>(&Poly::operator-, py::const_))
        .def("__pow__", [](const Poly& a, std::uint64_t k) { return pow(a, k); })
        .def("__eq__", &Poly::operator==)
        .def("__str__", [](const Poly& p) { return to_string(p); })
        .def("__repr__", [](const Poly& p) { return "Poly(" + to_string(p) + ")"; });

    m.def("local_inverse", &local_inverse, py::arg("a"), py::arg("bound"));

    py::class_<FrobeniusBasis>(m, "FrobeniusBasis")
        .def(py::init([](const PyRing& ring, std::uint32_t level) { return FrobeniusBasis(ring.ptr, level); }),
             py::arg("ring"), py::arg("level"))
        .def_property_readonly("q", &FrobeniusBasis::q)
        .def_property_readonly("rank_count",
                               [](const FrobeniusBasis& b) { return big_to_py(b.rank_count()); })
        .def("size", &FrobeniusBasis::size)
        .def("index", &FrobeniusBasis::index)
        .def("monomial", [](const FrobeniusBasis& b, std::size_t i) { return b.monomial(i); })
        .def("coordinates", [](const FrobeniusBasis& b, const Poly& g) {
            py::dict out;
            for (const auto& [rho, h] : b.coordinates(g)) {
                out[py::tuple(py::cast(rho))] = h;
            }
            return out;
        });

    py::class_<RelationMatrix>(m, "RelationMatrix")
        .def_static("build", &RelationMatrix::build, py::arg("f"), py::arg("level"))
        .def_static("block_extension", &RelationMatrix::block_extension, py::arg("coeffs"),
                    py::arg("level"), py::arg("new_var_name") = "y")
        .def_property_readonly("size", &RelationMatrix::size)
        .def_property_readonly("level", &RelationMatrix::level)
        .def("entry", [](const RelationMatrix& m, std::size_t i, std::size_t j) { return m.entry(i, j); })
        .def("entries", [](const RelationMatrix& m) {
            py::list out;
            m.mat().for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) {
                out.append(py::make_tuple(i, j, to_string(v)));
            });
            return out;
        })
        .def("__mul__", &RelationMatrix::operator*)
        .def("__add__", &RelationMatrix::operator+)
        .def("__eq__", &RelationMatrix::operator==)
        .def("to_text", &RelationMatrix::to_text);

    py::class_<MatrixFactorization>(m, "MatrixFactorization")
        .def_static("from_power", &MatrixFactorization::from_power, py::arg("f"), py::arg("k"),
                    py::arg("level"))
        .def_property_readonly("size", &MatrixFactorization::size)
        .def("plus_uv", &MatrixFactorization::plus_uv)
        .def("plus_z_squared", &MatrixFactorization::plus_z_squared);

    m.def("split_trivial",
          [](const MatrixFactorization& mf, Exp precision) {
              return split_result_dict(split_trivial(mf, precision));
          },
          py::arg("mf"), py::arg("precision"));
    m.def("split_power_factorization",
          [](const Poly& f, std::uint64_t k, std::uint32_t level, std::optional<Exp> precision) {
              return split_result_dict(split_power_factorization(f, k, level, precision));
          },
          py::arg("f"), py::arg("k"), py::arg("level"), py::arg("precision") = py::none());
    m.def("default_precision", &default_precision, py::arg("f"), py::arg("q"));

    m.def("diagonal_entry_counts",
          [](const std::vector<Exp>& d, std::uint64_t k, std::uint64_t p, std::uint32_t level) {
              return counts_dict(diagonal_entry_counts(d, k, Prime(p), level));
          },
          py::arg("d"), py::arg("k"), py::arg("p"), py::arg("level"));
    m.def("free_rank_formula",
          [](const std::vector<Exp>& d, std::uint64_t k, std::uint64_t p, std::uint32_t level) {
              return big_to_py(free_rank_formula(d, k, Prime(p), level));
          },
          py::arg("d"), py::arg("k"), py::arg("p"), py::arg("level"));
    m.def("diagonalize_monomial_matrix",
          [](const RelationMatrix& A) { return counts_dict(diagonalize_monomial_matrix(A)); });
    m.def("decompose_monomial_quotient",
          [](const std::vector<Monomial>& gens, std::uint64_t p, std::uint32_t level) {
              IdealDecomposition dec = decompose_monomial_quotient(gens, Prime(p), level);
              py::list summands;
              for (const auto& [ideal, mult] : dec.multiplicities) {
                  py::list gens_py;
                  for (const Monomial& g : ideal) gens_py.append(py::tuple(py::cast(g)));
                  py::dict d;
                  d["ideal"] = gens_py;
                  d["multiplicity"] = big_to_py(mult);
                  summands.append(d);
              }
              py::dict out;
              out["summands"] = summands;
              out["total"] = big_to_py(dec.total);
              return out;
          },
          py::arg("gens"), py::arg("p"), py::arg("level"));

    m.def("signature_uv_closed",
          [](const std::vector<Exp>& d) { return fraction(signature_uv_closed(d)); }, py::arg("d"));
    m.def("signature_uv_empirical",
          [](const std::vector<Exp>& d, std::uint64_t p, std::uint32_t e_min, std::uint32_t e_max) {
              return report_dict(signature_uv_empirical(d, Prime(p), e_min, e_max));
          },
          py::arg("d"), py::arg("p"), py::arg("e_min") = 1, py::arg("e_max") = 6);
    m.def("signature_plus_z2",
          [](const std::vector<Exp>& d, std::uint64_t p, std::uint32_t e_min, std::uint32_t e_max) {
              return report_dict(signature_plus_z2(d, Prime(p), e_min, e_max));
          },
          py::arg("d"), py::arg("p"), py::arg("e_min") = 1, py::arg("e_max") = 6);
    m.def("signature_artin_schreier",
          [](const Poly& f, std::uint32_t d, std::optional<Exp> precision) {
              ArtinSchreierResult result = signature_artin_schreier(f, d, precision);
              py::dict out;
              out["signature"] = fraction(result.signature);
              out["block_free_rank"] = result.free_rank;
              out["precision_used"] = result.precision_used;
              return out;
          },
          py::arg("f"), py::arg("d"), py::arg("precision") = py::none());
    m.def("faulhaber_sum", [](std::uint32_t s, std::uint64_t delta) {
        return fraction(faulhaber_sum(s, BigInt(static_cast<unsigned long>(delta))));
    });
    m.def("bernoulli", [](std::uint32_t j) { return fraction(bernoulli(j)); });

    m.def("fedder_principal", [](const Poly& f) { return verdict_dict(fedder_principal(f)); });
    m.def("fedder_monomial_ideal", [](const std::vector<Monomial>& gens, std::uint64_t p) {
        return verdict_dict(fedder_monomial_ideal(gens, Prime(p)));
    });
}
