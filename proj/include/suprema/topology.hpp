#ifndef SUPREMA_TOPOLOGY_HPP
#define SUPREMA_TOPOLOGY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "suprema/lang.hpp"

namespace suprema {

/// A self-map on the sublanguages of a carrier M that claims the
/// semi-topological closure axioms:
///   S1  A is contained in A^c
///   S2  (A^c)^c = A^c
///   S3  A^c u B^c is contained in (A u B)^c
///   S4  the empty set is fixed
/// Each operator may carry a dual: another operator on the same carrier
/// whose open sets are exactly this operator's closed sets.
class ClosureOperator {
 public:
  using Apply = std::function<Lang(const Lang&)>;

  ClosureOperator(std::string name, Lang carrier, Apply apply, bool claimed_clopen = false)
      : name_(std::move(name)),
        carrier_(std::move(carrier)),
        apply_(std::move(apply)),
        clopen_(claimed_clopen) {}

  const std::string& name() const { return name_; }
  const Lang& carrier() const { return carrier_; }
  bool claimed_clopen() const { return clopen_; }

  /// Raw application; callers outside this header go through closure().
  Lang apply(const Lang& k) const { return apply_(k); }

  const ClosureOperator* dual() const { return dual_.get(); }

  ClosureOperator with_dual(const ClosureOperator& dual) const {
    ClosureOperator out = *this;
    out.dual_ = std::make_shared<const ClosureOperator>(dual);
    return out;
  }

 private:
  std::string name_;
  Lang carrier_;
  Apply apply_;
  bool clopen_;
  std::shared_ptr<const ClosureOperator> dual_;
};

inline void require_within_carrier(const ClosureOperator& op, const Lang& k) {
  require_same_alphabet(k, op.carrier(), op.name().c_str());
  if (!subset_of(k, op.carrier()))
    throw InvalidInput(op.name() + ": argument is not contained in the carrier");
}

inline Lang closure(const ClosureOperator& op, const Lang& k) {
  require_within_carrier(op, k);
  return op.apply(k);
}

/// M \ (M \ K)^c, the largest open subset of K.
inline Lang interior(const ClosureOperator& op, const Lang& k) {
  require_within_carrier(op, k);
  return difference(op.carrier(), op.apply(difference(op.carrier(), k)));
}

inline bool is_closed(const ClosureOperator& op, const Lang& k) { return closure(op, k) == k; }
inline bool is_open(const ClosureOperator& op, const Lang& k) { return interior(op, k) == k; }

enum class Axiom { extensive, idempotent, union_compatible, preserves_empty, clopen };

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::extensive: return "S1";
    case Axiom::idempotent: return "S2";
    case Axiom::union_compatible: return "S3";
    case Axiom::preserves_empty: return "S4";
    case Axiom::clopen: return "clopen";
  }
  return "?";
}

struct AxiomVerdict {
  Axiom axiom;
  bool passed = true;
  /// One language for S1/S2/S4/clopen, two for S3.
  std::vector<Lang> counterexample;
};

struct AxiomReport {
  std::string op_name;
  std::vector<AxiomVerdict> verdicts;
  std::size_t sample_count = 0;
  /// Whether (A u B)^c = A^c u B^c held on every pair; S3 itself only needs
  /// the inclusion.
  std::optional<bool> s3_equality;

  bool passed() const {
    for (const auto& v : verdicts)
      if (!v.passed) return false;
    return true;
  }

  const AxiomVerdict* find(Axiom a) const {
    for (const auto& v : verdicts)
      if (v.axiom == a) return &v;
    return nullptr;
  }
};

namespace detail {

inline bool axiom_holds(const ClosureOperator& op, Axiom axiom, std::span<const Lang> args) {
  switch (axiom) {
    case Axiom::extensive: return subset_of(args[0], op.apply(args[0]));
    case Axiom::idempotent: {
      Lang once = op.apply(args[0]);
      return op.apply(once) == once;
    }
    case Axiom::union_compatible:
      return subset_of(union_of(op.apply(args[0]), op.apply(args[1])),
                       op.apply(union_of(args[0], args[1])));
    case Axiom::preserves_empty: return op.apply(args[0]).is_empty();
    case Axiom::clopen: {
      Lang closed = op.apply(args[0]);
      return difference(op.carrier(), op.apply(difference(op.carrier(), closed))) == closed;
    }
  }
  return false;
}

}  // namespace detail

/// Re-runs the check that produced `verdict` on its counterexample.
inline bool replay(const ClosureOperator& op, const AxiomVerdict& verdict) {
  return detail::axiom_holds(op, verdict.axiom, verdict.counterexample);
}

inline AxiomReport check_axioms(const ClosureOperator& op, std::span<const Lang> samples,
                                std::span<const std::pair<Lang, Lang>> pair_samples) {
  for (const Lang& k : samples) require_within_carrier(op, k);
  for (const auto& [a, b] : pair_samples) {
    require_within_carrier(op, a);
    require_within_carrier(op, b);
  }
  AxiomReport report{op.name(), {}, samples.size() + pair_samples.size(), true};
  auto run_single = [&](Axiom axiom) {
    AxiomVerdict v{axiom, true, {}};
    for (const Lang& k : samples) {
      if (!detail::axiom_holds(op, axiom, std::span<const Lang>(&k, 1))) {
        v.passed = false;
        v.counterexample = {k};
        break;
      }
    }
    report.verdicts.push_back(std::move(v));
  };
  run_single(Axiom::extensive);
  run_single(Axiom::idempotent);

  AxiomVerdict s3{Axiom::union_compatible, true, {}};
  for (const auto& [a, b] : pair_samples) {
    Lang ca = op.apply(a), cb = op.apply(b);
    Lang lhs = union_of(ca, cb), rhs = op.apply(union_of(a, b));
    if (!subset_of(lhs, rhs)) {
      s3.passed = false;
      s3.counterexample = {a, b};
      break;
    }
    if (!(lhs == rhs)) report.s3_equality = false;
  }
  report.verdicts.push_back(std::move(s3));

  Lang nothing = Lang::empty(op.carrier().alphabet_ptr());
  AxiomVerdict s4{Axiom::preserves_empty, true, {}};
  if (!op.apply(nothing).is_empty()) {
    s4.passed = false;
    s4.counterexample = {nothing};
  }
  report.verdicts.push_back(std::move(s4));
  return report;
}

/// Tests on each sample that its closure is also open.
inline AxiomReport check_clopen(const ClosureOperator& op, std::span<const Lang> samples) {
  for (const Lang& k : samples) require_within_carrier(op, k);
  AxiomReport report{op.name(), {}, samples.size(), std::nullopt};
  AxiomVerdict v{Axiom::clopen, true, {}};
  for (const Lang& k : samples) {
    if (!detail::axiom_holds(op, Axiom::clopen, std::span<const Lang>(&k, 1))) {
      v.passed = false;
      v.counterexample = {k};
      break;
    }
  }
  report.verdicts.push_back(std::move(v));
  return report;
}

}  // namespace suprema

#endif  // SUPREMA_TOPOLOGY_HPP
