#include "liftlab/behavioural.hpp"

#include "liftlab/convex_powerset.hpp"
#include "liftlab/liftings.hpp"
#include "liftlab/spaces.hpp"

namespace liftlab {

const char* to_string(CoalgebraKind kind) {
  switch (kind) {
    case CoalgebraKind::markov_chain:
      return "markov_chain";
    case CoalgebraKind::labelled_markov_chain:
      return "labelled_markov_chain";
    case CoalgebraKind::convex_automaton:
      return "convex_automaton";
  }
  return "unknown";
}

const char* to_string(Construction c) {
  return c == Construction::kantorovich ? "kantorovich" : "wasserstein";
}

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::exact_fixpoint:
      return "exact_fixpoint";
    case StopReason::tolerance:
      return "tolerance";
    case StopReason::max_iterations:
      return "max_iterations";
  }
  return "unknown";
}

void Coalgebra::validate() const {
  const std::size_t n = states.size();
  if (n == 0) throw ValidationError("coalgebra has no states");
  if (kind == CoalgebraKind::convex_automaton) {
    if (choices.size() != n) throw ValidationError("every state needs a convex set of successors");
    for (const auto& a : choices) {
      if (a.carrier_size() != n) throw ValidationError("successor convex set leaves the state space");
    }
    return;
  }
  if (next.size() != n) throw ValidationError("every state needs a successor distribution");
  for (const auto& mu : next) {
    if (mu.size() != n) throw ValidationError("successor distribution leaves the state space");
  }
  if (kind == CoalgebraKind::labelled_markov_chain) {
    if (output.size() != n) throw ValidationError("every state needs an output");
    for (const auto& o : output) {
      if (o < 0 || o > 1) throw ValidationError("outputs must lie in [0,1]");
    }
  }
}

namespace {

void check_modality(const Coalgebra& c, const Modality& m) {
  const bool convex = c.kind == CoalgebraKind::convex_automaton;
  const bool ok = convex ? m.kind == ModalityKind::convex_sup_expectation
                         : m.kind == ModalityKind::expectation || m.kind == ModalityKind::generally;
  if (!ok) {
    throw ValidationError("modality " + m.name() + " does not fit a " + std::string(to_string(c.kind)));
  }
}

}  // namespace

RationalMatrix bdist_step(const Coalgebra& c, const Lifting& lifting, const RationalMatrix& d) {
  c.validate();
  check_modality(c, lifting.modality);
  const std::size_t n = c.states.size();
  const PseudometricSpace space = make_space(c.states, d);
  require_pseudometric(space);

  LiftOptions options;
  options.certify = false;
  RationalMatrix out(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      Rational value;
      if (c.kind == CoalgebraKind::convex_automaton) {
        value = lifting.construction == Construction::wasserstein
                    ? dhk_composite(space, c.choices[u], c.choices[v]).value
                    : dhk_dual(space, c.choices[u], c.choices[v]).value;
      } else {
        const LiftedValue lifted = lifting.construction == Construction::wasserstein
                                       ? wasserstein(lifting.modality, space, c.next[u], c.next[v], options)
                                       : kantorovich(lifting.modality, space, c.next[u], c.next[v], options);
        value = exact_value(lifted.value);
      }
      if (c.kind == CoalgebraKind::labelled_markov_chain) {
        value = std::max(value, Rational(abs(c.output[u] - c.output[v])));
      }
      out(u, v) = out(v, u) = value;
    }
  }
  if (!validate(make_space(c.states, out)).valid()) throw InternalError("iterate is not a pseudometric");
  return out;
}

MetricIterate behavioural_distance(const Coalgebra& c, const Lifting& lifting, std::size_t max_iterations,
                                   double tolerance) {
  c.validate();
  const std::size_t n = c.states.size();
  MetricIterate it;
  it.d = RationalMatrix(n, n);
  const Rational tol(tolerance);
  while (it.iteration < max_iterations) {
    RationalMatrix next = bdist_step(c, lifting, it.d);
    ++it.iteration;
    Rational change(0);
    for (std::size_t i = 0; i < n * n; ++i) {
      const Rational& before = it.d.data()[i];
      const Rational& after = next.data()[i];
      if (after < before) it.monotone = false;
      change = std::max(change, Rational(abs(after - before)));
    }
    it.d = std::move(next);
    if (change == 0) {
      it.converged = true;
      it.reason = StopReason::exact_fixpoint;
      return it;
    }
    if (change < tol) {
      it.converged = true;
      it.reason = StopReason::tolerance;
      return it;
    }
  }
  it.reason = StopReason::max_iterations;
  return it;
}

}  // namespace liftlab
