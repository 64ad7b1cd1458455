// Python bindings for the core operations: sessions, parsing, the combined
// word problem, normal forms, and the isotropy analyses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isokit/errors.hpp"
#include "isokit/isotropy.hpp"
#include "isokit/session.hpp"

namespace py = pybind11;

using isokit::Session;
using isokit::SessionConfig;
using isokit::TermId;
using isokit::Verdict;

namespace {

py::dict membership_dict(Session& session, const isokit::MembershipVerdict& verdict) {
  py::dict out;
  out["verdict"] = isokit::membership_kind_name(verdict.kind);
  switch (verdict.kind) {
    case isokit::MembershipVerdict::Kind::Member:
      out["inverse"] = session.print(verdict.inverse_witness);
      break;
    case isokit::MembershipVerdict::Kind::RefutedCommutation:
      out["symbol"] = session.signature()[verdict.refuting_symbol].name;
      break;
    case isokit::MembershipVerdict::Kind::InvertibilityUnknown:
      out["bound"] = verdict.search_bound;
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_isokit, m) {
  m.doc() = "word problems and isotropy groups for disjoint unions of equational theories";

  py::register_exception<isokit::ParseError>(m, "ParseError");
  py::register_exception<isokit::AmbiguityError>(m, "AmbiguityError");
  py::register_exception<isokit::IndexSetViolation>(m, "IndexSetViolation");
  py::register_exception<isokit::UnsupportedShapeError>(m, "UnsupportedShapeError");
  static py::exception<isokit::Error> base_error(m, "IsokitError");

  py::class_<Session>(m, "Session")
      .def(py::init([](const std::vector<std::string>& theory_paths, int generators,
                       std::size_t max_term_nodes, std::uint64_t oracle_budget) {
             SessionConfig config;
             config.generators = generators;
             config.max_term_nodes = max_term_nodes;
             config.oracle_budget = oracle_budget;
             return Session::from_files(theory_paths, config);
           }),
           py::arg("theory_paths"), py::arg("generators") = 0,
           py::arg("max_term_nodes") = 10000, py::arg("oracle_budget") = 100000)
      .def_static(
          "from_texts",
          [](const std::vector<std::string>& texts, int generators) {
            SessionConfig config;
            config.generators = generators;
            return Session::from_texts(texts, config);
          },
          py::arg("theory_texts"), py::arg("generators") = 0)
      .def("parse",
           [](Session& s, const std::string& text) { return s.print(s.parse(text)); })
      .def("rank",
           [](Session& s, const std::string& text) { return s.store().rank(s.parse(text)); })
      .def("node_count",
           [](Session& s, const std::string& text) {
             return s.store().node_count(s.parse(text));
           })
      .def("decide",
           [](Session& s, const std::string& lhs, const std::string& rhs) {
             return std::string(
                 isokit::verdict_name(s.decide(s.parse(lhs), s.parse(rhs))));
           })
      .def("normalize",
           [](Session& s, const std::string& text) {
             TermId t = s.parse(text);
             TermId canonical = s.canonical_representative(t);
             py::dict out;
             out["canonical"] = s.print(canonical);
             out["rank_before"] = s.store().rank(t);
             out["rank_after"] = s.store().rank(canonical);
             return out;
           })
      .def("aliens",
           [](Session& s, const std::string& text) {
             std::vector<std::string> out;
             for (TermId alien : isokit::aliens(s.store(), s.parse(text))) {
               out.push_back(s.print(alien));
             }
             return out;
           })
      .def("interpret_class",
           [](Session& s, const std::string& text) {
             return s.registry().interpret(s.parse(text)).value;
           })
      .def("syntactic_class",
           [](Session& s, const std::string& text) {
             return s.registry().class_of(s.parse(text)).value;
           })
      .def("substitute_x",
           [](Session& s, const std::string& text, const std::string& replacement) {
             return s.print(
                 isokit::substitute_x(s.store(), s.parse(text), s.parse(replacement)));
           })
      .def("compose",
           [](Session& s, const std::string& a, const std::string& b) {
             return s.print(isokit::compose(s, s.parse(a), s.parse(b)));
           })
      .def("is_trivial", [](Session& s) { return s.is_trivial(); })
      .def("oracle",
           [](Session& s, const std::string& lhs, const std::string& rhs,
              std::uint64_t budget) {
             auto result = s.oracle(s.parse(lhs), s.parse(rhs), budget);
             return std::string(isokit::verdict_name(result.verdict));
           },
           py::arg("lhs"), py::arg("rhs"), py::arg("budget") = 0)
      .def("check_membership",
           [](Session& s, const std::string& text, std::uint32_t inverse_bound) {
             auto verdict = isokit::is_member(s, s.parse(text), inverse_bound);
             return membership_dict(s, verdict);
           },
           py::arg("term"), py::arg("inverse_bound") = 9)
      .def("enumerate_isotropy",
           [](Session& s, std::uint32_t size_bound, std::uint32_t inverse_bound) {
             auto report = isokit::enumerate_group(s, size_bound, inverse_bound);
             py::dict out;
             out["generators"] = report.generators;
             out["size_bound"] = report.size_bound;
             out["inverse_bound"] = report.inverse_bound;
             out["candidates"] = report.candidates;
             out["classes"] = report.classes;
             out["refuted"] = report.refuted;
             py::list members;
             for (const auto& member : report.members) {
               py::dict entry;
               entry["representative"] = s.print(member.representative);
               entry["inverse"] = s.print(member.inverse_witness);
               members.append(entry);
             }
             out["members"] = members;
             py::list flagged;
             for (const auto& f : report.flagged) {
               py::dict entry;
               entry["representative"] = s.print(f.representative);
               entry["bound"] = f.search_bound;
               flagged.append(entry);
             }
             out["flagged"] = flagged;
             return out;
           },
           py::arg("size_bound") = 7, py::arg("inverse_bound") = 9)
      .def("hypotheses", [](Session& s) {
        auto report = isokit::check_hypotheses(s);
        py::list components;
        for (const auto& component : report.components) {
          py::dict entry;
          entry["name"] = component.name;
          entry["layer"] = isokit::layer_name(component.layer);
          entry["empty"] = component.empty_component;
          entry["status"] = isokit::hypothesis_status_name(component.status);
          py::list symbols;
          for (const auto& symbol : component.symbols) {
            py::dict sym;
            sym["symbol"] = s.signature()[symbol.symbol].name;
            sym["projection"] = symbol.projection.status == Verdict::Equal
                                    ? py::cast(symbol.projection.index)
                                    : py::cast(symbol.projection.status == Verdict::NotEqual
                                                   ? "none"
                                                   : "unknown");
            sym["constant"] = symbol.constant == Verdict::Equal      ? "constant"
                              : symbol.constant == Verdict::NotEqual ? "not-constant"
                                                                     : "unknown";
            symbols.append(sym);
          }
          entry["symbols"] = symbols;
          components.append(entry);
        }
        py::dict out;
        out["all_hold"] = report.all_hold;
        out["components"] = components;
        return out;
      });
}
