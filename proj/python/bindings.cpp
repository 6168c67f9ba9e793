#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tt/checker.hpp"
#include "tt/elaborate.hpp"
#include "tt/nbe.hpp"
#include "tt/oracle.hpp"
#include "tt/printer.hpp"
#include "tt/properties.hpp"
#include "tt/testkit.hpp"

namespace py = pybind11;
using namespace tt;

namespace {

std::optional<std::string_view> view(const std::optional<std::string>& s) {
    if (!s) return std::nullopt;
    return std::string_view(*s);
}

py::dict fuzz(const Signature& sig, std::size_t count, std::uint64_t seed, std::size_t size) {
    std::size_t failures = 0;
    std::size_t skipped = 0;
    py::list details;
    for (std::size_t i = 0; i < count; ++i) {
        try {
            for (const auto& f : {testkit::normalization_case(sig, testkit::gen_case(sig, seed + i, size)),
                                  testkit::renaming_case(sig, testkit::gen_renaming_case(sig, seed + i, size))})
                if (f) {
                    ++failures;
                    details.append(f->property + ": " + f->detail);
                }
        } catch (const testkit::GenerationStuck&) {
            ++skipped;
        }
    }
    py::dict out;
    out["cases"] = count;
    out["failures"] = failures;
    out["skipped"] = skipped;
    out["details"] = details;
    return out;
}

} // namespace

PYBIND11_MODULE(_ttkernel, m) {
    m.doc() = "Dependent type theory kernel with normalization by evaluation";

    py::exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::exception<TypeError>(m, "KernelTypeError", PyExc_ValueError);
    py::exception<FuelExhausted>(m, "FuelExhausted", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        // raises an instance of one of the types above with extra attributes
        auto raise = [](const char* type_name, const char* message, py::dict attrs) {
            const py::object type = py::module_::import("ttkernel._ttkernel").attr(type_name);
            py::object exc = type(message);
            for (auto item : attrs) exc.attr(item.first) = item.second;
            PyErr_SetObject(type.ptr(), exc.ptr());
        };
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            raise("ParseError", e.what(), py::dict(py::arg("line") = e.pos().line, py::arg("col") = e.pos().col));
        } catch (const TypeError& e) {
            py::dict attrs(py::arg("code") = std::string(error_code_name(e.code())));
            attrs["line"] = e.span() ? py::cast(e.span()->start.line) : py::none();
            attrs["col"] = e.span() ? py::cast(e.span()->start.col) : py::none();
            raise("KernelTypeError", e.what(), attrs);
        } catch (const FuelExhausted& e) {
            raise("FuelExhausted", e.what(), py::dict());
        }
    });

    py::class_<Signature>(m, "Signature")
        .def(py::init<>())
        .def("__len__", &Signature::size)
        .def("__contains__", [](const Signature& s, const std::string& n) { return s.contains(n); })
        .def("names", [](const Signature& s) {
            std::vector<std::string> out;
            for (const auto& d : s.decls()) out.push_back(name_of(d));
            return out;
        });

    m.def("load_signature", [](const std::string& src) { return load_signature(src); }, py::arg("source"),
          "Parse, elaborate and check a declaration file's contents.");

    m.def(
        "normalize",
        [](const Signature& sig, const std::string& expr, const std::optional<std::string>& type) {
            const auto [t, ty] = elaborate_closed(sig, expr, view(type));
            return print_nf(normalize_tm(sig, {}, ty, t));
        },
        py::arg("sig"), py::arg("expr"), py::arg("type") = py::none(),
        "Normal form of a closed expression, printed in surface syntax.");

    m.def(
        "oracle_normalize",
        [](const Signature& sig, const std::string& expr, const std::optional<std::string>& type,
           std::size_t fuel) {
            const auto [t, ty] = elaborate_closed(sig, expr, view(type));
            return print_term(rw_normalize(sig, {}, ty, t, fuel));
        },
        py::arg("sig"), py::arg("expr"), py::arg("type") = py::none(), py::arg("fuel") = kDefaultFuel,
        "Normal form computed by the rewriting oracle.");

    m.def(
        "equal",
        [](const Signature& sig, const std::string& a, const std::string& b, const std::optional<std::string>& type) {
            const auto [t, ty] = elaborate_closed(sig, a, view(type));
            const Term u = elaborate_expr(sig, parse_expr(b));
            check(sig, {}, u, ty);
            return conv_tm(sig, {}, ty, t, u);
        },
        py::arg("sig"), py::arg("a"), py::arg("b"), py::arg("type") = py::none(),
        "Definitional equality of two closed expressions.");

    m.def(
        "infer_type",
        [](const Signature& sig, const std::string& expr) {
            const auto [t, ty] = elaborate_closed(sig, expr);
            return print_nf(normalize_ty(sig, {}, ty));
        },
        py::arg("sig"), py::arg("expr"));

    m.def("fuzz", &fuzz, py::arg("sig"), py::arg("count") = 100, py::arg("seed") = 1, py::arg("size") = 12,
          "Run the generated property suites; returns counts and failure details.");
}
