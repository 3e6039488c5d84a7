#pragma once

#include "liftlab/convex_set.hpp"
#include "liftlab/distributions.hpp"
#include "liftlab/matrix.hpp"
#include "liftlab/modalities.hpp"

#include <string>
#include <vector>

namespace liftlab {

enum class CoalgebraKind { markov_chain, labelled_markov_chain, convex_automaton };

const char* to_string(CoalgebraKind kind);

/// Finite coalgebra; successor structures live on the state space itself.
struct Coalgebra {
  CoalgebraKind kind = CoalgebraKind::markov_chain;
  std::vector<std::string> states;
  std::vector<Distribution> next;   // markov and labelled chains
  std::vector<Rational> output;     // labelled chains, in [0,1]
  std::vector<ConvexSet> choices;   // convex automata

  /// Throws ValidationError when successors have the wrong shape.
  void validate() const;
};

enum class Construction { kantorovich, wasserstein };

const char* to_string(Construction c);

struct Lifting {
  Modality modality;
  Construction construction = Construction::wasserstein;
};

/// One application of the lifted-metric functional:
/// d'(u, v) = lifted distance between the successors of u and v under d
/// (for labelled chains, the max with |out(u) - out(v)|).
RationalMatrix bdist_step(const Coalgebra& c, const Lifting& lifting, const RationalMatrix& d);

enum class StopReason { exact_fixpoint, tolerance, max_iterations };

const char* to_string(StopReason reason);

struct MetricIterate {
  RationalMatrix d;
  std::size_t iteration = 0;  // steps applied
  bool converged = false;     // stopped at an exact repeat or within tolerance
  StopReason reason = StopReason::max_iterations;
  bool monotone = true;       // every iterate dominated its predecessor
};

/// Kleene iteration from the zero pseudometric.
MetricIterate behavioural_distance(const Coalgebra& c, const Lifting& lifting, std::size_t max_iterations = 1000,
                                   double tolerance = 1e-9);

}  // namespace liftlab
