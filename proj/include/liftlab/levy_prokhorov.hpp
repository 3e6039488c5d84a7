#pragma once

#include "liftlab/distributions.hpp"
#include "liftlab/liftings.hpp"
#include "liftlab/spaces.hpp"

namespace liftlab {

/// Binary price functions for a crisp relation.
struct CrispPricePair {
  FuzzyPredicate p;  // on X, values in {0,1}
  FuzzyPredicate q;  // on Y, values in {0,1}
  Rational margin;          // E_nu[q] - E_mu[p]
  Rational transport_cost;  // W_E(r)(mu, nu)
};

/// Two-valued price functions certifying a lower bound on the distance.
struct DualityWitness {
  Rational epsilon;
  Rational a;  // low value; the high value is a + epsilon
  NonexpansivePair pair;
  Rational margin;  // lambda(g)(nu) - lambda(f)(mu) under "generally"
  CrispPricePair crisp;
};

/// inf{eps | mu(A) <= nu(A_eps) + eps for all A}, exact. With `symmetrized`
/// the mirrored condition on nu is imposed as well. Throws GuardError when
/// a support exceeds the subset-enumeration limit.
Rational lp_direct(const PseudometricSpace& space, const Distribution& mu, const Distribution& nu,
                   bool symmetrized = false);

/// The coupling presentation: wasserstein(generally, r, mu, nu) with the
/// optimal threshold and its coupling attached.
LiftedValue ky_fan(const FuzzyRelation& r, const Distribution& mu, const Distribution& nu);

/// Binary (p, q) with q(y) - p(x) <= r(x, y) and E_nu[q] - E_mu[p] >= W_E(r)(mu, nu).
CrispPricePair crisp_price_pair(const CrispRelation& r, const Distribution& mu, const Distribution& nu);

bool verify_crisp_price_pair(const CrispRelation& r, const Distribution& mu, const Distribution& nu,
                             const CrispPricePair& pair);

/// Requires 0 < eps < ky_fan(r, mu, nu); throws ValidationError otherwise.
DualityWitness duality_witness(const FuzzyRelation& r, const Distribution& mu, const Distribution& nu,
                               const Rational& epsilon);

bool verify_duality_witness(const FuzzyRelation& r, const Distribution& mu, const Distribution& nu,
                            const DualityWitness& w);

}  // namespace liftlab
