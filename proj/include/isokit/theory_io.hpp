#pragma once

#include <string>
#include <string_view>

#include "isokit/theory.hpp"

namespace isokit {

// Parses a theory description of the form
//
//   (theory <name>
//     (layer 1|2)
//     (ops (<sym> <arity>) ...)
//     (axioms (= <open-term> <open-term>) ...)
//     (solver <kind> (<role> <sym>) ...))
//
// declaring its symbols into `sig` and returning the validated Theory.
// Open-term variables are written ?a, ?b, ... Roles are `op` (alias `mul`),
// `unit`, and `inv`.
Theory load_theory(std::string_view text, Signature& sig,
                   BruteforceOptions search_budget = {20000, 48});

Theory load_theory_file(const std::string& path, Signature& sig,
                        BruteforceOptions search_budget = {20000, 48});

}  // namespace isokit
