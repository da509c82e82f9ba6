#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatinv/gauge.hpp"
#include "quatinv/witness.hpp"

namespace quatinv {

// ---- lifts -----------------------------------------------------------------

// Base-field presentation S (arity 0) lifted to F((t)) and tensored with
// Ad<<t>> (squares 1, t; signs +, -) as the last two generators.
ArmaturePresentation lift_ad_t(const ArmaturePresentation& S);
// S lifted to F((t1))((t2)) and tensored with (t1, t2) carrying Int(u) o gamma.
ArmaturePresentation lift_q(const ArmaturePresentation& S, int twist = 0);
// Images of w pushed into `lifted` (whose first generators are those of w's
// source), followed by the standard factor on the two appended generators.
DecompositionWitness lift_witness(const DecompositionWitness& w, PresentationPtr lifted);

// ---- factor exchange over F((t)) ------------------------------------------

// A factor whose squares all have even valuation is presented over F.
bool is_unramified(const WitnessFactor& f);

// Generators i, j of a ramified factor with i^2 = a t and j^2 = b, a, b in F.
// `choice` (0 or 1) selects between the two admissible i.
std::pair<ArmatureElement, ArmatureElement> normalize_ramified(const WitnessFactor& f, int choice = 0);

// Replaces factors p, q by (t^-1 i_p i_q, j_p) and (i_q, j_p j_q). Returns
// nullopt when either factor is unramified.
std::optional<DecompositionWitness> exchange_factors(const DecompositionWitness& w, std::size_t p, std::size_t q,
                                                     int choice_p = 0, int choice_q = 0);

struct ExchangeResult {
  bool identity = false;
  QuatAlg h1, h2;
  int twist1 = 0, twist2 = 0;
  DecompositionWitness witness;  // over the tensor product of the inputs
};
// Involutions are Int(u) o gamma with u a basis element (index 0..3).
ExchangeResult lemma32_exchange(const QuatAlg& H1, int twist1, const QuatAlg& H2, int twist2);

// ---- normalization and descent over F((t)) --------------------------------

enum class Prop31Status { Normalized, Contradiction };

struct Prop31Result {
  Prop31Status status = Prop31Status::Normalized;
  std::size_t exchanges = 0;
  std::vector<std::size_t> split_history;  // split count before and after each exchange
  BaseScalar a_prime;                      // residual factor is Ad<<a' t>>
  // Residual first as (r, s) with r^2 = 1, s^2 = a' t; then the remainder
  // with unit squares. On Contradiction: the state after the exchanges.
  DecompositionWitness witness;
  std::size_t residual_index = 0;
  std::string message;
};
Prop31Result prop31_normalize(const DecompositionWitness& D);

// D as produced by prop31_normalize over a source S (x) Ad<<t>>.
DecompositionWitness thm1_descend(const DecompositionWitness& normalized);

// ---- descent over F((t1))((t2)) -------------------------------------------

struct Lm22Result {
  int zeta1 = 0;
  int zeta2 = 0;
  int twist = 0;
  ClassMask class_i = 0;  // the classes of 1 (x) i and 1 (x) j
  ClassMask class_j = 0;
  ArmaturePresentation residue;  // (E, theta_0)
};
Lm22Result lm22_residue_split(const PresentationPtr& C);

struct Lm23Result {
  int u = 0;                    // basis index used for the conjugation
  LaurentScalar lambda_shifted;  // theta(u)^-1 lambda u^-1
  BaseScalar lambda0;
};
// lambda over F((t1))((t2)); theta_2 = Int(twist) o gamma on (t1, t2).
Lm23Result lm23_hermitian_normalize(const LaurentScalar& lambda, int twist);
// Recomputes the base change in the quaternion algebra and checks that
// lambda_shifted / lambda0 is a square of the tower.
bool lm23_oracle(const LaurentScalar& lambda, int twist, const Lm23Result& r);

DecompositionWitness prop21_descend(const PresentationPtr& C);

// Split factor rewritten as (r, s): r symmetric with r^2 = 1, s skew.
// Throws ContractViolation when no single-class r exists.
WitnessFactor to_ad_form(const WitnessFactor& f);

struct Thm2Result {
  DecompositionWitness witness;  // over the degree-0 residue
  std::vector<BaseScalar> lambdas;
  Lm22Result remainder;
  std::size_t input_split = 0;
};
Thm2Result thm2_descend(const DecompositionWitness& D);

}  // namespace quatinv
