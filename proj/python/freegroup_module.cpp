#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freegroup/freegroup.hpp"

namespace py = pybind11;
namespace fg = freegroup;

namespace {

fg::Word word_from_pairs(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  std::vector<fg::Syllable> raw;
  raw.reserve(pairs.size());
  for (const auto& [s, e] : pairs) raw.push_back({s, e});
  return fg::reduce(raw);
}

std::vector<std::pair<std::int64_t, std::int64_t>> word_pairs(const fg::Word& w) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& s : w.syllables()) out.emplace_back(s.symbol, s.exponent);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Free group on finitely many generators";

  auto base = py::register_exception<fg::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<fg::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<fg::UnboundIdentifierError>(m, "UnboundIdentifierError", base.ptr());
  py::register_exception<fg::RecyclingError>(m, "RecyclingError", base.ptr());
  py::register_exception<fg::OverflowError>(m, "OverflowError", base.ptr());
  py::register_exception<fg::OutOfAlphabetError>(m, "OutOfAlphabetError", base.ptr());
  py::register_exception<fg::InvalidSymbolError>(m, "InvalidSymbolError", base.ptr());
  py::register_exception<fg::InvalidWordError>(m, "InvalidWordError", base.ptr());
  py::register_exception<fg::InvalidAlphabetError>(m, "InvalidAlphabetError", base.ptr());
  py::register_exception<fg::InvalidSpecError>(m, "InvalidSpecError", base.ptr());

  py::class_<fg::Alphabet>(m, "Alphabet")
      .def(py::init<std::vector<std::string>>(), py::arg("names"))
      .def_static("letters", &fg::Alphabet::letters, py::return_value_policy::copy)
      .def_static("from_lines", &fg::Alphabet::from_lines, py::arg("text"))
      .def_property_readonly("names", [](const fg::Alphabet& a) {
        return std::vector<std::string>(a.names().begin(), a.names().end());
      })
      .def("__len__", &fg::Alphabet::size);

  py::class_<fg::Word>(m, "Word")
      .def(py::init<>())
      .def(py::init(&word_from_pairs), py::arg("syllables"),
           "Reduce a list of (symbol, exponent) pairs.")
      .def_property_readonly("syllables", &word_pairs)
      .def("is_identity", [](const fg::Word& w) { return fg::is_identity(w); })
      .def("__len__", &fg::Word::size)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__mul__", [](const fg::Word& w, std::int64_t n) { return fg::repeat(w, n); })
      .def("__rmul__", [](const fg::Word& w, std::int64_t n) { return fg::repeat(w, n); })
      .def("__xor__", [](const fg::Word& x, const fg::Word& y) { return fg::conjugate(x, y); })
      .def("__hash__", [](const fg::Word& w) { return std::hash<fg::Word>{}(w); })
      .def("__str__", [](const fg::Word& w) { return fg::format(w); })
      .def("__repr__", [](const fg::Word& w) { return "Word('" + fg::format(w) + "')"; });

  py::class_<fg::AbelianWord>(m, "AbelianWord")
      .def_property_readonly("terms",
                             [](const fg::AbelianWord& a) {
                               std::vector<std::pair<std::int64_t, std::int64_t>> out;
                               for (const auto& t : a.terms()) out.emplace_back(t.symbol, t.exponent);
                               return out;
                             })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", [](const fg::AbelianWord& a) { return fg::format(a); });

  py::class_<fg::RandomSpec>(m, "RandomSpec")
      .def(py::init([](std::int64_t count, std::int64_t syllables, std::int64_t max_symbol,
                       std::int64_t max_abs_exponent, std::uint64_t seed) {
             return fg::RandomSpec{count, syllables, max_symbol, max_abs_exponent, seed};
           }),
           py::arg("count") = 7, py::arg("syllables") = 5, py::arg("max_symbol") = 3,
           py::arg("max_abs_exponent") = 4, py::arg("seed") = 0)
      .def_readwrite("count", &fg::RandomSpec::count)
      .def_readwrite("syllables", &fg::RandomSpec::syllables)
      .def_readwrite("max_symbol", &fg::RandomSpec::max_symbol)
      .def_readwrite("max_abs_exponent", &fg::RandomSpec::max_abs_exponent)
      .def_readwrite("seed", &fg::RandomSpec::seed);

  m.def("generator", &fg::generator, py::arg("symbol"), py::arg("exponent") = 1);
  m.def("concat", py::overload_cast<const fg::Word&, const fg::Word&>(&fg::concat));
  m.def("inverse", py::overload_cast<const fg::Word&>(&fg::inverse));
  m.def("repeat", py::overload_cast<const fg::Word&, std::int64_t>(&fg::repeat));
  m.def("conjugate", py::overload_cast<const fg::Word&, const fg::Word&>(&fg::conjugate));
  m.def("commutator", py::overload_cast<const fg::Word&, const fg::Word&>(&fg::commutator));
  m.def("abelianize", py::overload_cast<const fg::Word&>(&fg::abelianize));
  m.def("abelian_sum", &fg::abelian_sum);
  m.def("word_sum", [](const fg::WordVector& xs) { return fg::sum(xs); });
  m.def("alpha", [](const std::vector<std::int64_t>& s) { return fg::alpha(s); });
  m.def("abc", [](const std::vector<std::int64_t>& n) { return fg::abc(n); });

  m.def("format_word",
        py::overload_cast<const fg::Word&, const fg::Alphabet&, bool>(&fg::format),
        py::arg("word"), py::arg("alphabet") = fg::Alphabet::letters(), py::arg("strict") = false);
  m.def("parse_canonical", &fg::parse_canonical, py::arg("text"),
        py::arg("alphabet") = fg::Alphabet::letters());
  m.def("parse_compact", &fg::parse_compact, py::arg("text"));
  m.def("from_matrix", [](std::vector<std::int64_t> symbols, std::vector<std::int64_t> exponents) {
    return fg::from_matrix({std::move(symbols), std::move(exponents)});
  });
  m.def("to_matrix", [](const fg::Word& w) {
    auto mat = fg::to_matrix(w);
    return std::make_pair(mat.symbols, mat.exponents);
  });
  m.def("serialize", [](const fg::WordVector& xs) { return fg::serialize(xs); });
  m.def("deserialize", &fg::deserialize);

  m.def("rfree", &fg::rfree, py::arg("spec"));
  m.def("eval_expression", &fg::eval_expression, py::arg("src"),
        py::arg("bindings") = fg::Bindings{}, py::arg("alphabet") = fg::Alphabet::letters());
}
