#pragma once

#include <cstdint>

#include "dcot/types.hpp"

namespace dcot {

enum class CurriculumVariant { Dynamic, Plain, Reverse };

/// Two readings of the ramp argument: Literal evaluates the ramp at t*tau
/// (the printed form), Rescaled at t/tau so the ramp reaches its full height
/// exactly at t = tau. Literal makes gamma nearly inert for small tau.
enum class RampInterpretation { Literal, Rescaled };

/// Time-indexed weight of the cross-modal cost in the dual-view mix.
struct CurriculumSchedule {
  double tau = 0.1;    // switch point, in (0, 1)
  double gamma = 0.2;  // ramp magnitude
  CurriculumVariant variant = CurriculumVariant::Dynamic;
  double sigma_fixed = 0.5;  // Plain variant only, in [0, 1]
  RampInterpretation interpretation = RampInterpretation::Literal;

  void validate() const;  // throws InvalidSpec
};

/// Decay weight G applied to the cross-lingual loss term.
struct LingualWeightSchedule {
  double k = 1.0;
  double epsilon = 10.0;
  double tau = 0.1;

  void validate() const;
};

/// Normalized training progress t = step / total_steps in [0, 1].
struct TrainingClock {
  long step = 0;
  long total_steps = 1;

  double t() const;
};

/// Nonlinear ramp gamma * z / (2 - z) on z in [0, 1].
double curriculum_ramp(double z, double gamma);

/// Cross-modal weight sigma(t) in [0, 1]. Dynamic: ramp below tau, exactly 1
/// above. Plain: constant. Reverse: 1 - dynamic.
double modal_cost_weight(double t, const CurriculumSchedule& sched);

/// Elementwise sigma * modal + (1 - sigma) * lingual.
CostMatrix mix_costs(const CostMatrix& modal, const CostMatrix& lingual,
                     double sigma_val);

/// G(t) = 1 / (1 + k * exp(epsilon * t - 1 / tau)), in (0, 1].
double lingual_loss_weight(double t, const LingualWeightSchedule& sched);

}  // namespace dcot
