#include "isokit/combine.hpp"

#include <tuple>

#include "isokit/errors.hpp"

namespace isokit {

ClassRegistry::ClassRegistry(TermStore& store, const Theory* layer1, const Theory* layer2,
                             std::size_t max_recursion_depth)
    : store_(store), theories_{layer1, layer2}, max_depth_(max_recursion_depth) {}

const Theory* ClassRegistry::theory(Layer layer) const {
  if (layer == Layer::S1) return theories_[0];
  if (layer == Layer::S2) return theories_[1];
  return nullptr;
}

struct ClassRegistry::DepthGuard {
  explicit DepthGuard(ClassRegistry& r) : reg(r) {
    if (++reg.depth_ > reg.max_depth_) {
      throw InternalError(
          "classification recursion exceeded its depth bound; the rank "
          "recursion should have terminated");
    }
  }
  ~DepthGuard() { --reg.depth_; }
  ClassRegistry& reg;
};

GenTerm ClassRegistry::abstract_aliens(TermId t, Layer layer) {
  if (store_.root_layer(t) != layer) {
    return GenTerm::opaque(class_of(t).value);
  }
  if (store_.pure(t)) {
    return to_gen_term(store_, t);
  }
  std::vector<GenTerm> args;
  args.reserve(store_.args(t).size());
  for (TermId c : store_.args(t)) {
    args.push_back(abstract_aliens(c, layer));
  }
  return GenTerm::app(store_.head(t), std::move(args));
}

Verdict ClassRegistry::approx_equal(Layer layer, const GenTerm& a, const GenTerm& b) const {
  const Theory* th = theory(layer);
  if (!th) {
    // Constant layers (and theory layers with no loaded theory hold no
    // terms): the congruence is syntactic identity.
    return a == b ? Verdict::Equal : Verdict::NotEqual;
  }
  return th->equal(a, b);
}

void ClassRegistry::improve_representative(ClassId c, TermId t, const GenTerm& abstraction) {
  ClassInfo& info = classes_[c.value];
  if (info.representative == t) return;
  auto key = [&](TermId u) {
    return std::tuple<std::uint32_t, std::uint32_t, std::string>(
        store_.rank(u), store_.node_count(u), print_term(store_, u));
  };
  if (key(t) < key(info.representative)) {
    info.representative = t;
    info.abstraction = abstraction;
  }
}

ClassId ClassRegistry::new_class(Layer layer, TermId t, GenTerm abstraction) {
  ClassId c{static_cast<std::uint32_t>(classes_.size())};
  classes_.push_back(ClassInfo{layer, t, std::move(abstraction)});
  return c;
}

ClassId ClassRegistry::classify(TermId t, Layer layer, const GenTerm& abstraction) {
  const Theory* th = theory(layer);
  if (!th) {
    throw InternalError("no theory loaded for layer " + std::string(layer_name(layer)));
  }
  std::size_t li = layer == Layer::S1 ? 0 : 1;
  if (th->has_normal_forms()) {
    std::string key = to_key(*th->normal_form(abstraction));
    auto it = key_index_[li].find(key);
    if (it != key_index_[li].end()) {
      improve_representative(it->second, t, abstraction);
      return it->second;
    }
    ClassId c = new_class(layer, t, abstraction);
    key_index_[li].emplace(std::move(key), c);
    return c;
  }
  auto exact = exact_index_[li].find(abstraction);
  if (exact != exact_index_[li].end()) {
    improve_representative(exact->second, t, abstraction);
    return exact->second;
  }
  for (ClassId c : scan_lists_[li]) {
    Verdict v = th->equal(abstraction, classes_[c.value].abstraction);
    if (v == Verdict::Unknown) {
      throw AmbiguityError(
          "the bounded solver for theory '" + th->name() +
          "' could not decide a class comparison; classification refuses to guess");
    }
    if (v == Verdict::Equal) {
      exact_index_[li].emplace(abstraction, c);
      improve_representative(c, t, abstraction);
      return c;
    }
  }
  ClassId c = new_class(layer, t, abstraction);
  scan_lists_[li].push_back(c);
  exact_index_[li].emplace(abstraction, c);
  return c;
}

ClassId ClassRegistry::class_of(TermId t) {
  auto it = class_memo_.find(t);
  if (it != class_memo_.end()) return it->second;
  DepthGuard guard(*this);

  Layer layer = store_.root_layer(t);
  ClassId result;
  if (layer == Layer::S3 || layer == Layer::S4) {
    SymbolId head = store_.head(t);
    auto cit = constant_classes_.find(head);
    if (cit != constant_classes_.end()) {
      result = cit->second;
    } else {
      result = new_class(layer, t, to_gen_term(store_, t));
      constant_classes_.emplace(head, result);
    }
  } else {
    // Rank recursion: classify aliens first, then compare abstractions
    // within the root layer.
    GenTerm abstraction = abstract_aliens(t, layer);
    result = classify(t, layer, abstraction);
  }
  class_memo_.emplace(t, result);
  return result;
}

ClassId ClassRegistry::interpret_node(TermId node) {
  auto it = interp_memo_.find(node);
  if (it != interp_memo_.end()) return it->second;
  DepthGuard guard(*this);

  ClassId result;
  if (store_.pure(node)) {
    result = class_of(node);
  } else {
    Layer layer = store_.root_layer(node);
    GenTerm abstraction = abstract_aliens(node, layer);
    bool collapsed = false;
    for (TermId alien : aliens(store_, node)) {
      ClassId alien_class = class_of(alien);
      Verdict v = approx_equal(layer, abstraction, GenTerm::opaque(alien_class.value));
      if (v == Verdict::Unknown) {
        throw AmbiguityError(
            "the bounded solver could not decide a collapse test; "
            "interpretation refuses to guess");
      }
      if (v == Verdict::Equal) {
        result = alien_class;  // the node collapses to this alien
        collapsed = true;
        break;
      }
    }
    if (!collapsed) {
      auto cit = class_memo_.find(node);
      if (cit != class_memo_.end()) {
        result = cit->second;
      } else {
        result = classify(node, layer, abstraction);
        class_memo_.emplace(node, result);
      }
    }
  }
  interp_memo_.emplace(node, result);
  return result;
}

ClassId ClassRegistry::interpret(TermId t) {
  auto it = interp_memo_.find(t);
  if (it != interp_memo_.end()) return it->second;

  if (store_.args(t).empty()) {
    ClassId result = class_of(t);
    interp_memo_.emplace(t, result);
    return result;
  }
  DepthGuard guard(*this);
  std::vector<TermId> rep_args;
  rep_args.reserve(store_.args(t).size());
  for (TermId c : store_.args(t)) {
    rep_args.push_back(representative(interpret(c)));
  }
  TermId node = store_.make(store_.head(t), rep_args);
  ClassId result = interpret_node(node);
  interp_memo_.emplace(t, result);
  return result;
}

}  // namespace isokit
