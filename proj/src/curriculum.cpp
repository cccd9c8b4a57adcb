#include "dcot/curriculum.hpp"

#include <algorithm>
#include <cmath>

namespace dcot {

void CurriculumSchedule::validate() const {
  if (!(tau > 0.0 && tau < 1.0)) throw InvalidSpec("tau must be in (0, 1)");
  if (!(gamma > 0.0)) throw InvalidSpec("gamma must be positive");
  if (variant == CurriculumVariant::Plain &&
      !(sigma_fixed >= 0.0 && sigma_fixed <= 1.0)) {
    throw InvalidSpec("sigma_fixed must be in [0, 1]");
  }
}

void LingualWeightSchedule::validate() const {
  if (!(k >= 0.0)) throw InvalidSpec("k must be non-negative");
  if (!(tau > 0.0 && tau < 1.0)) throw InvalidSpec("tau must be in (0, 1)");
}

double TrainingClock::t() const {
  if (total_steps < 1 || step < 0 || step > total_steps) {
    throw OutOfRange("clock requires 0 <= step <= total_steps, total >= 1");
  }
  return static_cast<double>(step) / static_cast<double>(total_steps);
}

double curriculum_ramp(double z, double gamma) {
  if (!(z >= 0.0 && z <= 1.0)) throw OutOfRange("ramp argument outside [0, 1]");
  return gamma * z / (2.0 - z);
}

namespace {

double dynamic_weight(double t, const CurriculumSchedule& sched) {
  if (t > sched.tau) return 1.0;
  const double z = sched.interpretation == RampInterpretation::Literal
                       ? t * sched.tau
                       : t / sched.tau;
  return std::clamp(curriculum_ramp(std::min(z, 1.0), sched.gamma), 0.0, 1.0);
}

}  // namespace

double modal_cost_weight(double t, const CurriculumSchedule& sched) {
  if (!(t >= 0.0 && t <= 1.0)) throw OutOfRange("t outside [0, 1]");
  switch (sched.variant) {
    case CurriculumVariant::Plain:
      return std::clamp(sched.sigma_fixed, 0.0, 1.0);
    case CurriculumVariant::Reverse:
      return 1.0 - dynamic_weight(t, sched);
    case CurriculumVariant::Dynamic:
    default:
      return dynamic_weight(t, sched);
  }
}

CostMatrix mix_costs(const CostMatrix& modal, const CostMatrix& lingual,
                     double sigma_val) {
  if (modal.rows() != lingual.rows() || modal.cols() != lingual.cols()) {
    throw DimMismatch("cost matrices must have equal dimensions");
  }
  return sigma_val * modal + (1.0 - sigma_val) * lingual;
}

double lingual_loss_weight(double t, const LingualWeightSchedule& sched) {
  if (!(t >= 0.0 && t <= 1.0)) throw OutOfRange("t outside [0, 1]");
  return 1.0 / (1.0 + sched.k * std::exp(sched.epsilon * t - 1.0 / sched.tau));
}

}  // namespace dcot
