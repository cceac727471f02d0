#ifndef SUPREMA_PROBLEM_HPP
#define SUPREMA_PROBLEM_HPP

#include <optional>

#include "suprema/independence.hpp"
#include "suprema/lang.hpp"
#include "suprema/operators.hpp"

namespace suprema {

/// Plant (closed and marked behaviour) plus specification over one alphabet.
struct SynthesisProblem {
  AlphabetPtr alphabet;
  Lang plant_closed;
  Lang plant_marked;
  Lang spec;
  std::optional<IndependenceRelation> independence;
  std::optional<std::size_t> bound;

  /// Throws InvalidInput unless every language is over `alphabet` and the
  /// closed plant language is prefix-closed.
  void validate() const {
    for (const Lang* l : {&plant_closed, &plant_marked, &spec})
      if (!(l->alphabet() == *alphabet))
        throw InvalidInput("problem languages must share the problem alphabet");
    if (!(prefix_closure(plant_closed) == plant_closed))
      throw InvalidInput("the closed plant language must be prefix-closed");
    if (independence && !(*independence->alphabet_ptr() == *alphabet))
      throw InvalidInput("independence relation is over a different alphabet");
  }

  OperatorParams params() const {
    return OperatorParams{alphabet, plant_closed, plant_marked, independence, bound, std::nullopt};
  }

  ClosureOperator op(OperatorTag tag) const { return make_operator({tag, params()}); }
};

}  // namespace suprema

#endif  // SUPREMA_PROBLEM_HPP
