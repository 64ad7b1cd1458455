// Command-line front end: load theories, decide equalities, normalize and
// inspect terms, check the isotropy group, and run the rewrite oracle.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isokit/errors.hpp"
#include "isokit/isotropy.hpp"
#include "isokit/session.hpp"

using isokit::ClassId;
using isokit::IndexSet;
using isokit::Layer;
using isokit::Session;
using isokit::SessionConfig;
using isokit::TermId;
using isokit::Verdict;
using json = nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

constexpr int kExitEqual = 0;
constexpr int kExitNotEqual = 1;
constexpr int kExitError = 2;

struct Options {
  std::vector<std::string> theory_paths;
  int generators = 0;
  std::uint32_t size_bound = 7;
  std::uint32_t inverse_bound = 9;
  std::uint64_t oracle_budget = 100000;
  bool json_output = false;
};

json make_report(const Options& opt, const std::string& command) {
  json report;
  report["format_version"] = kFormatVersion;
  report["command"] = command;
  report["generators"] = opt.generators;
  return report;
}

void emit(const Options& opt, const json& report, const std::string& text) {
  if (opt.json_output) {
    std::cout << report.dump() << "\n";
  } else {
    std::cout << text;
  }
}

Session open_session(const Options& opt) {
  SessionConfig config;
  config.generators = opt.generators;
  config.oracle_budget = opt.oracle_budget;
  if (const char* cap = std::getenv("ISOKIT_MAX_TERM_NODES")) {
    config.max_term_nodes = static_cast<std::size_t>(std::strtoull(cap, nullptr, 10));
    if (config.max_term_nodes == 0) {
      throw isokit::Error("ISOKIT_MAX_TERM_NODES must be a positive integer");
    }
  }
  return Session::from_files(opt.theory_paths, config);
}

int run_decide(const Options& opt, const std::string& lhs, const std::string& rhs) {
  Session session = open_session(opt);
  TermId s = session.parse(lhs);
  TermId t = session.parse(rhs);
  Verdict verdict = session.decide(s, t);
  json report = make_report(opt, "decide");
  report["status"] = "ok";
  report["lhs"] = session.print(s);
  report["rhs"] = session.print(t);
  report["verdict"] = isokit::verdict_name(verdict);
  emit(opt, report, std::string(verdict == Verdict::Equal ? "Equal" : "NotEqual") + "\n");
  return verdict == Verdict::Equal ? kExitEqual : kExitNotEqual;
}

int run_normalize(const Options& opt, const std::string& input) {
  Session session = open_session(opt);
  TermId t = session.parse(input);
  TermId canonical = session.canonical_representative(t);
  json report = make_report(opt, "normalize");
  report["status"] = "ok";
  report["input"] = session.print(t);
  report["canonical"] = session.print(canonical);
  report["rank_before"] = session.store().rank(t);
  report["rank_after"] = session.store().rank(canonical);
  emit(opt, report,
       session.print(canonical) + "\nrank " + std::to_string(session.store().rank(t)) +
           " -> " + std::to_string(session.store().rank(canonical)) + "\n");
  return kExitEqual;
}

json alien_tree(Session& session, TermId t) {
  json node;
  node["term"] = session.print(t);
  node["rank"] = session.store().rank(t);
  node["root"] = session.signature()[session.store().head(t)].name;
  node["root_layer"] = isokit::layer_name(session.store().root_layer(t));
  node["aliens"] = json::array();
  for (TermId alien : isokit::aliens(session.store(), t)) {
    node["aliens"].push_back(alien_tree(session, alien));
  }
  return node;
}

void print_alien_tree(Session& session, TermId t, int indent, std::string& out) {
  out += std::string(static_cast<std::size_t>(indent) * 2, ' ');
  out += session.print(t) + "  [rank " + std::to_string(session.store().rank(t)) +
         ", root " + isokit::layer_name(session.store().root_layer(t)) + "]\n";
  for (TermId alien : isokit::aliens(session.store(), t)) {
    print_alien_tree(session, alien, indent + 1, out);
  }
}

int run_inspect(const Options& opt, const std::string& input) {
  Session session = open_session(opt);
  TermId t = session.parse(input);
  json report = make_report(opt, "inspect");
  report["status"] = "ok";
  report["inspect"] = alien_tree(session, t);
  std::string text;
  print_alien_tree(session, t, 0, text);
  emit(opt, report, text);
  return kExitEqual;
}

int run_oracle(const Options& opt, const std::string& lhs, const std::string& rhs) {
  Session session = open_session(opt);
  TermId s = session.parse(lhs);
  TermId t = session.parse(rhs);
  isokit::BruteforceResult result = session.oracle(s, t);
  json report = make_report(opt, "oracle");
  report["status"] = "ok";
  report["verdict"] = isokit::verdict_name(result.verdict);
  report["states"] = result.states;
  emit(opt, report,
       std::string(result.verdict == Verdict::Equal ? "Equal" : "Unknown") + " (" +
           std::to_string(result.states) + " states)\n");
  return result.verdict == Verdict::Equal ? kExitEqual : kExitError;
}

int run_isotropy_check(const Options& opt, const std::string& input) {
  Session session = open_session(opt);
  TermId t = session.parse(input);
  isokit::MembershipVerdict verdict = isokit::is_member(session, t, opt.inverse_bound);
  json report = make_report(opt, "isotropy-check");
  report["status"] = "ok";
  report["term"] = session.print(t);
  report["verdict"] = isokit::membership_kind_name(verdict.kind);
  std::string text;
  switch (verdict.kind) {
    case isokit::MembershipVerdict::Kind::Member:
      report["inverse"] = session.print(verdict.inverse_witness);
      text = "Member, inverse " + session.print(verdict.inverse_witness) + "\n";
      break;
    case isokit::MembershipVerdict::Kind::RefutedCommutation:
      report["symbol"] = session.signature()[verdict.refuting_symbol].name;
      text = "RefutedCommutation: does not commute generically with " +
             session.signature()[verdict.refuting_symbol].name + "\n";
      break;
    case isokit::MembershipVerdict::Kind::RefutedInvertibility:
      text = "RefutedInvertibility\n";
      break;
    case isokit::MembershipVerdict::Kind::InvertibilityUnknown:
      report["bound"] = verdict.search_bound;
      text = "InvertibilityUnknown at bound " + std::to_string(verdict.search_bound) + "\n";
      break;
  }
  emit(opt, report, text);
  return verdict.kind == isokit::MembershipVerdict::Kind::Member ? kExitEqual
         : verdict.kind == isokit::MembershipVerdict::Kind::InvertibilityUnknown
             ? kExitError
             : kExitNotEqual;
}

int run_isotropy_enumerate(const Options& opt) {
  Session session = open_session(opt);
  isokit::GroupReport group =
      isokit::enumerate_group(session, opt.size_bound, opt.inverse_bound);
  json report = make_report(opt, "isotropy-enumerate");
  report["status"] = "ok";
  report["size_bound"] = group.size_bound;
  report["inverse_bound"] = group.inverse_bound;
  report["candidates"] = group.candidates;
  report["classes"] = group.classes;
  report["refuted"] = group.refuted;
  report["members"] = json::array();
  std::string text;
  bool trivial_group = group.members.size() == 1 && group.flagged.empty();
  for (const auto& member : group.members) {
    json m;
    m["class"] = member.cls.value;
    m["representative"] = session.print(member.representative);
    m["inverse"] = session.print(member.inverse_witness);
    report["members"].push_back(m);
  }
  report["flagged"] = json::array();
  for (const auto& flagged : group.flagged) {
    json f;
    f["class"] = flagged.cls.value;
    f["representative"] = session.print(flagged.representative);
    f["bound"] = flagged.search_bound;
    report["flagged"].push_back(f);
  }
  report["trivial_group"] = trivial_group;
  if (trivial_group) {
    text = "group is trivial: {[x]}\n";
  } else {
    text = std::to_string(group.members.size()) + " member class(es):\n";
    for (const auto& member : group.members) {
      text += "  " + session.print(member.representative) + "  (inverse " +
              session.print(member.inverse_witness) + ")\n";
    }
    for (const auto& flagged : group.flagged) {
      text += "  ? " + session.print(flagged.representative) +
              "  (inverse search exhausted at " + std::to_string(flagged.search_bound) +
              ")\n";
    }
  }
  text += "candidates " + std::to_string(group.candidates) + ", classes " +
          std::to_string(group.classes) + ", refuted " + std::to_string(group.refuted) +
          "\n";
  emit(opt, report, text);
  return kExitEqual;
}

int run_isotropy_hypotheses(const Options& opt) {
  Session session = open_session(opt);
  isokit::HypothesisReport hypotheses = isokit::check_hypotheses(session);
  json report = make_report(opt, "isotropy-hypotheses");
  report["status"] = "ok";
  report["all_hold"] = hypotheses.all_hold;
  report["components"] = json::array();
  std::string text;
  for (const auto& component : hypotheses.components) {
    json c;
    c["name"] = component.name;
    c["layer"] = isokit::layer_name(component.layer);
    c["empty"] = component.empty_component;
    c["status"] = isokit::hypothesis_status_name(component.status);
    c["symbols"] = json::array();
    text += component.name + " (" + isokit::layer_name(component.layer) +
            "): " + isokit::hypothesis_status_name(component.status) + "\n";
    for (const auto& symbol : component.symbols) {
      json s;
      const auto& sym = session.signature()[symbol.symbol];
      s["symbol"] = sym.name;
      s["arity"] = sym.arity;
      if (symbol.projection.status == Verdict::Equal) {
        s["projection"] = symbol.projection.index;
      } else {
        s["projection"] = isokit::verdict_name(symbol.projection.status) ==
                                  std::string("not-equal")
                              ? "none"
                              : "unknown";
      }
      s["constant"] = symbol.constant == Verdict::Equal      ? "constant"
                      : symbol.constant == Verdict::NotEqual ? "not-constant"
                                                             : "unknown";
      c["symbols"].push_back(s);
      text += "  " + sym.name + ": projection=" + s["projection"].dump() +
              " constant=" + s["constant"].get<std::string>() + "\n";
    }
    report["components"].push_back(c);
  }
  emit(opt, report, text);
  return hypotheses.all_hold ? kExitEqual : kExitNotEqual;
}

int emit_error(const Options& opt, const std::string& command, const std::string& kind,
               const std::string& message) {
  if (opt.json_output) {
    json report = make_report(opt, command);
    report["status"] = "error";
    report["error"] = kind;
    report["message"] = message;
    std::cout << report.dump() << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word problems and isotropy groups for disjoint unions of equational theories"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--theory", opt.theory_paths, "theory file (repeatable, at most two)")
      ->expected(1, 2);
  app.add_option("--generators", opt.generators, "number of generator constants y1..yn");
  app.add_option("--size-bound", opt.size_bound, "candidate size bound for enumeration");
  app.add_option("--inverse-bound", opt.inverse_bound, "inverse witness size bound");
  app.add_option("--oracle-budget", opt.oracle_budget, "state budget for the rewrite oracle");
  app.add_flag("--json", opt.json_output, "emit machine-readable JSON");

  std::string lhs, rhs, term;

  CLI::App* decide = app.add_subcommand("decide", "decide provable equality");
  decide->add_option("lhs", lhs)->required();
  decide->add_option("rhs", rhs)->required();

  CLI::App* normalize = app.add_subcommand("normalize", "canonical representative and ranks");
  normalize->add_option("term", term)->required();

  CLI::App* inspect = app.add_subcommand("inspect", "rank, root layer, and alien tree");
  inspect->add_option("term", term)->required();

  CLI::App* oracle = app.add_subcommand("oracle", "bounded rewrite search (differential oracle)");
  oracle->add_option("lhs", lhs)->required();
  oracle->add_option("rhs", rhs)->required();

  CLI::App* isotropy = app.add_subcommand("isotropy", "isotropy group analyses");
  isotropy->require_subcommand(1);
  CLI::App* iso_check = isotropy->add_subcommand("check", "membership of one candidate");
  iso_check->add_option("term", term)->required();
  CLI::App* iso_enum = isotropy->add_subcommand("enumerate", "enumerate the group at desk scale");
  CLI::App* iso_hyp = isotropy->add_subcommand("hypotheses", "per-theory hypothesis report");

  CLI11_PARSE(app, argc, argv);

  std::string command = app.get_subcommands().front()->get_name();
  if (command == "isotropy") {
    command += "-" + isotropy->get_subcommands().front()->get_name();
  }

  if (opt.theory_paths.empty()) {
    return emit_error(opt, command, "usage", "at least one --theory file is required");
  }

  try {
    if (decide->parsed()) return run_decide(opt, lhs, rhs);
    if (normalize->parsed()) return run_normalize(opt, term);
    if (inspect->parsed()) return run_inspect(opt, term);
    if (oracle->parsed()) return run_oracle(opt, lhs, rhs);
    if (iso_check->parsed()) return run_isotropy_check(opt, term);
    if (iso_enum->parsed()) return run_isotropy_enumerate(opt);
    if (iso_hyp->parsed()) return run_isotropy_hypotheses(opt);
  } catch (const isokit::ParseError& e) {
    return emit_error(opt, command, "parse", e.what());
  } catch (const isokit::AmbiguityError& e) {
    return emit_error(opt, command, "ambiguity", e.what());
  } catch (const isokit::IndexSetViolation& e) {
    return emit_error(opt, command, "index-set", e.what());
  } catch (const isokit::UnsupportedShapeError& e) {
    return emit_error(opt, command, "unsupported-shape", e.what());
  } catch (const isokit::TermSizeLimitError& e) {
    return emit_error(opt, command, "term-size", e.what());
  } catch (const isokit::Error& e) {
    return emit_error(opt, command, "error", e.what());
  }
  return kExitError;
}
