/// @file seed.hpp
/// @brief Seeds over a multiplicity quiver: cluster values, exchange
///        coefficient strings, and the generalized exchange relation.
///
/// A seed couples a quiver with one scalar value per vertex and one string of
/// exchange coefficients per mutable vertex. The string at a vertex of
/// multiplicity d has d+1 entries p_0..p_d, each a signed monomial in the
/// frozen values, with p_0 = p_d = 1. Mutation at k replaces the value x_k by
///
///   x_k' = (sum_{r=0}^{d} p_r u_>^r v_>^[r] u_<^{d-r} v_<^[d-r]) / x_k,
///
/// where u_> (u_<) is the product of mutable neighbor values with out-edge
/// (in-edge) counts as exponents and v_>^[r] (v_<^[r]) the product of frozen
/// neighbor values with exponents floor(r b / d); the quiver mutates by the
/// modified rule and the string at k reverses. Division is exact field
/// division at numeric values and exact polynomial division in the symbolic
/// ring, where a remainder signals a falsified regularity expectation.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sclab/quiver.hpp"
#include "sclab/value.hpp"

namespace sclab {

/// One exchange coefficient: coeff * prod_i x_i^{powers[i]} over frozen
/// vertex ids i.
struct CoeffMonomial {
  long long coeff = 1;
  std::map<int, long> powers;

  static CoeffMonomial unit() { return CoeffMonomial{}; }
  bool is_unit() const { return coeff == 1 && powers.empty(); }
  /// The coefficient as a scalar, with xs supplying the frozen values.
  Value eval(const std::vector<Value>& xs, const RingSpec& ring) const;
  bool operator==(const CoeffMonomial& o) const {
    return coeff == o.coeff && powers == o.powers;
  }
  bool operator!=(const CoeffMonomial& o) const { return !(*this == o); }
};

/// Entries p_0..p_d of one mutable vertex; unit at both ends.
using CoeffString = std::vector<CoeffMonomial>;

/// Quiver + per-vertex values + per-mutable-vertex strings over one ring.
/// strings[v] is empty at frozen v and has multiplicity(v)+1 entries at
/// mutable v; values[v] is the scalar held at v.
struct Seed {
  GQuiver quiver;
  std::vector<CoeffString> strings;
  std::vector<Value> values;
  RingSpec ring;

  bool operator==(const Seed& o) const {
    return quiver == o.quiver && strings == o.strings && values == o.values;
  }
  bool operator!=(const Seed& o) const { return !(*this == o); }
};

/// Builds a trivial string (all units) for a vertex of multiplicity d.
CoeffString trivial_string(int d);

/// Checks seed consistency: sizes match the quiver, strings sit only at
/// mutable vertices with unit ends and frozen-only support, mutable values
/// are nonzero, value kinds match the ring. Throws Error(ShapeViolation) or
/// Error(RingMismatch) naming the defect.
void validate_seed(const Seed& s);

/// The four tau-monomials at mutable k for one exponent 0 <= r <= d_k:
/// u_gt / u_lt over mutable neighbors (independent of r), v_gt / v_lt the
/// stable monomials with floor(r b / d_k) exponents.
struct TauMonomials {
  Value u_gt, u_lt, v_gt, v_lt;
};
TauMonomials tau_monomials(const Seed& s, int k, int r);

/// The new value at k: the generalized exchange polynomial divided by x_k.
/// Throws Error(ZeroClusterValue) when x_k = 0 at numeric values and
/// Error(NotDivisible) when symbolic division leaves a remainder.
Value generalized_exchange(const Seed& s, int k);

/// Reverses the string at k (p_r -> p_{d-r}); other strings unchanged.
std::vector<CoeffString> coeff_mutate(const std::vector<CoeffString>& strings, int k);

/// The adjacent seed in direction k: new value, mutated quiver, reversed
/// string. Mutating twice at k restores the seed exactly.
Seed mutate(const Seed& s, int k);

/// Left fold of mutate over the index sequence.
Seed apply_sequence(Seed s, const std::vector<int>& ks);

/// Exact Laurent polynomial num / prod x_v^{den[v]}: den exponents are
/// positive and num shares no variable factor with the denominator monomial.
struct LaurentVal {
  Poly num;
  std::map<VarIdx, long long> den;

  bool is_polynomial() const { return den.empty(); }
  /// Evaluation at a dense point; Error(Singular) if the denominator
  /// vanishes there.
  Fp eval_fp(const std::vector<Fp>& point) const;
  bool operator==(const LaurentVal& o) const { return num == o.num && den == o.den; }
  bool operator!=(const LaurentVal& o) const { return !(*this == o); }
};

/// Runs a mutation sequence on a symbolic seed keeping every cluster value
/// as an exact Laurent polynomial in the initial variables; returns the
/// per-vertex values after the walk. A division failure (which would
/// falsify the Laurent property of the exchange) surfaces as
/// Error(NotDivisible).
std::vector<LaurentVal> laurent_orbit_values(const Seed& s, const std::vector<int>& ks);

nlohmann::json seed_to_json(const Seed& s, bool with_values = true);
Seed seed_from_json(const nlohmann::json& j);

}  // namespace sclab
