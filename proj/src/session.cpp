#include "isokit/session.hpp"

#include "isokit/errors.hpp"
#include "isokit/theory_io.hpp"

namespace isokit {

Session Session::from_files(const std::vector<std::string>& paths,
                            const SessionConfig& config) {
  return Session(paths, true, config);
}

Session Session::from_texts(const std::vector<std::string>& texts,
                            const SessionConfig& config) {
  return Session(texts, false, config);
}

Session::Session(std::vector<std::string> inputs, bool from_files,
                 const SessionConfig& config)
    : config_(config), sig_(std::make_unique<Signature>()) {
  if (inputs.empty() || inputs.size() > 2) {
    throw UnsupportedShapeError("a session needs one or two theories");
  }
  BruteforceOptions solver_budget{config_.solver_search_states, 48};
  for (const std::string& input : inputs) {
    Theory theory = from_files ? load_theory_file(input, *sig_, solver_budget)
                               : load_theory(input, *sig_, solver_budget);
    theories_.push_back(std::make_unique<Theory>(std::move(theory)));
  }
  if (theories_.size() == 2 && theories_[0]->layer() == theories_[1]->layer()) {
    throw UnsupportedShapeError("the two theories must occupy distinct layers");
  }
  sig_->declare_generators(config_.generators);
  store_ = std::make_unique<TermStore>(*sig_, config_.max_term_nodes);
  registry_ = std::make_unique<ClassRegistry>(*store_, theory(Layer::S1), theory(Layer::S2),
                                              config_.max_classification_depth);
  for (const auto& th : theories_) {
    all_axioms_.insert(all_axioms_.end(), th->axioms().begin(), th->axioms().end());
  }
}

const Theory* Session::theory(Layer layer) const {
  for (const auto& th : theories_) {
    if (th->layer() == layer) return th.get();
  }
  return nullptr;
}

std::vector<const Theory*> Session::theories() const {
  std::vector<const Theory*> out;
  for (const auto& th : theories_) out.push_back(th.get());
  return out;
}

Verdict Session::decide(TermId s, TermId t, const IndexSet& J) {
  if (!J.is_all()) {
    for (TermId term : {s, t}) {
      for (std::uint32_t index : indeterminates(*store_, term)) {
        if (!J.contains(index)) {
          throw IndexSetViolation("the indeterminate x" +
                                  (index == 0 ? std::string() : std::to_string(index)) +
                                  " is outside the given index set");
        }
      }
    }
  }
  if (trivial_status() == TrivialStatus::Yes) return Verdict::Equal;
  return registry_->interpret(s) == registry_->interpret(t) ? Verdict::Equal
                                                            : Verdict::NotEqual;
}

TrivialStatus Session::trivial_status() {
  if (trivial_computed_) return trivial_;
  trivial_ = TrivialStatus::No;
  for (const auto& th : theories_) {
    Verdict v = th->triviality();
    if (v == Verdict::Equal) {
      trivial_ = TrivialStatus::Yes;
      break;
    }
    if (v == Verdict::Unknown) trivial_ = TrivialStatus::Unknown;
  }
  trivial_computed_ = true;
  return trivial_;
}

bool Session::is_trivial() {
  switch (trivial_status()) {
    case TrivialStatus::Yes: return true;
    case TrivialStatus::No: return false;
    case TrivialStatus::Unknown:
      throw AmbiguityError("the bounded solver cannot certify whether the theory is trivial");
  }
  return false;
}

BruteforceResult Session::oracle(TermId s, TermId t, std::uint64_t budget,
                                 std::uint32_t term_cap) {
  BruteforceOptions options;
  options.max_states = budget == 0 ? config_.oracle_budget : budget;
  options.max_term_nodes = term_cap;
  return decide_bruteforce(*store_, all_axioms_, s, t, options);
}

}  // namespace isokit
