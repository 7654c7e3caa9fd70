#include "conjlab/derivation.hpp"

#include <cmath>

#include "conjlab/errors.hpp"

namespace conjlab {

Morphism identity_morphism(const GroupModel& model, const GroupElement& object) {
  model.require(object);
  return {object, model.identity()};
}

Morphism compose_morphisms(const GroupModel& model, const Morphism& psi, const Morphism& phi) {
  if (phi.target(model) != psi.source(model)) {
    throw UsageError("morphisms are not composable: target " + model.encode(phi.target(model)) +
                     " differs from source " + model.encode(psi.source(model)));
  }
  return {model.multiply(psi.g, phi.h), model.multiply(psi.g, phi.g)};
}

Derivation Derivation::from_potential(Potential potential, TruncationPolicy policy) {
  return Derivation(std::move(potential), policy);
}

Derivation Derivation::inner(GroupRingVector x) { return Derivation(std::move(x), {}); }

const ModelPtr& Derivation::model_ptr() const {
  if (const auto* phi = potential()) return phi->model_ptr();
  return inner_element()->model_ptr();
}

const GroupModel& Derivation::model() const { return *model_ptr(); }

double Derivation::tail_bound(double p) const {
  if (!truncated()) return 0.0;
  const double mass = potential()->tail_mass_bound(policy_.max_index, p);
  return 2.0 * std::pow(mass, 1.0 / p);
}

Evaluation derivation_apply(const Derivation& d, const GroupElement& g) {
  const GroupModel& model = d.model();
  model.require(g);
  if (const auto* x = d.inner_element()) {
    return {x->right_multiply(g) - x->left_multiply(g), true, 0};
  }

  const Potential& phi = *d.potential();
  const std::uint64_t cutoff = d.truncation().max_index;
  const GroupElement g_inv = model.invert(g);
  GroupRingVector out(d.model_ptr());
  auto emit = [&](const GroupElement& t) {
    const Rational coeff = phi.truncated(model.conjugate(g, t), cutoff) - phi.truncated(t, cutoff);
    out.add(model.multiply(g, t), Coefficient(coeff));
  };
  const auto support = phi.support(cutoff);
  for (const auto& [s, value] : support) emit(s);
  // t = g^-1 s g outside S; points already in S were handled above.
  for (const auto& [s, value] : support) {
    const GroupElement t = model.conjugate(g_inv, s);
    if (sgn(phi.truncated(t, cutoff)) == 0) emit(t);
  }
  return {std::move(out), !d.truncated(), d.truncated() ? cutoff : 0};
}

Evaluation derivation_apply_linear(const Derivation& d, const GroupRingVector& a) {
  Evaluation total{GroupRingVector(d.model_ptr()), true, 0};
  for (const auto& [g, c] : a.terms()) {
    Evaluation part = derivation_apply(d, g);
    total.value += part.value.scaled(c);
    total.exact = total.exact && part.exact;
    total.cutoff = std::max(total.cutoff, part.cutoff);
  }
  return total;
}

Coefficient character_from_potential(const Potential& phi, const Morphism& mor) {
  const GroupModel& model = phi.model();
  const GroupElement g_inv = model.invert(mor.g);
  return Coefficient(phi(model.multiply(mor.h, g_inv)) - phi(model.multiply(g_inv, mor.h)));
}

CharacterValue character_from_derivation(const Derivation& d, const Morphism& mor) {
  const Evaluation image = derivation_apply(d, mor.g);
  CharacterValue out{image.value.coefficient(mor.h), true};
  if (d.truncated()) {
    // Only phi(h g^-1) and phi(g^-1 h) feed this coefficient.
    const GroupModel& model = d.model();
    const GroupElement g_inv = model.invert(mor.g);
    const Integer cutoff(static_cast<unsigned long>(d.truncation().max_index));
    for (const auto& point : {model.multiply(mor.h, g_inv), model.multiply(g_inv, mor.h)}) {
      if (auto k = d.potential()->closed_form_index(point); k && *k > cutoff) out.exact = false;
    }
  }
  return out;
}

LeibnizResidual leibniz_check(const Derivation& d, const GroupElement& g, const GroupElement& h) {
  const GroupModel& model = d.model();
  const Evaluation dgh = derivation_apply(d, model.multiply(g, h));
  const Evaluation dg = derivation_apply(d, g);
  const Evaluation dh = derivation_apply(d, h);
  const GroupRingVector residual =
      dgh.value - dg.value.right_multiply(h) - dh.value.left_multiply(g);
  LeibnizResidual out;
  out.l1 = lp_norm(residual, 1.0);
  out.vanishes = residual.is_zero();
  out.exact = dgh.exact && dg.exact && dh.exact;
  out.tail_bound = 3.0 * d.tail_bound(1.0);
  return out;
}

QuasiInnerResult quasi_inner_check(const GroupModel& model, const Character& chi,
                                   std::span<const Morphism> loops) {
  for (const auto& mor : loops) {
    if (!mor.is_loop(model)) {
      throw UsageError("(" + model.encode(mor.h) + ", " + model.encode(mor.g) + ") is not a loop");
    }
  }
  for (const auto& mor : loops) {
    Coefficient value = chi(mor);
    if (!value.is_zero()) return {false, mor, std::move(value)};
  }
  return {};
}

QuasiInnerResult quasi_inner_check(const Derivation& d, std::span<const Morphism> loops) {
  return quasi_inner_check(
      d.model(), [&d](const Morphism& mor) { return character_from_derivation(d, mor).value; },
      loops);
}

QuasiInnerResult quasi_inner_check(const Potential& phi, std::span<const Morphism> loops) {
  return quasi_inner_check(
      phi.model(), [&phi](const Morphism& mor) { return character_from_potential(phi, mor); },
      loops);
}

}  // namespace conjlab
