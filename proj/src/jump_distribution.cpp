#include "levystore/jump_distribution.hpp"

#include <cmath>

#include "levystore/errors.hpp"

namespace levystore {

JumpDistribution JumpDistribution::exponential(double mean) {
  if (!(mean > 0.0))
    fail(ErrorCode::invalid_value, "jump_dist.mean: must be > 0");
  return JumpDistribution(Family::exponential, mean, 0.0, 0);
}

JumpDistribution JumpDistribution::deterministic(double value) {
  if (!(value > 0.0))
    fail(ErrorCode::invalid_value, "jump_dist.value: must be > 0");
  return JumpDistribution(Family::deterministic, value, 0.0, 0);
}

JumpDistribution JumpDistribution::erlang(int shape, double mean) {
  if (shape < 1)
    fail(ErrorCode::invalid_value, "jump_dist.shape: must be >= 1");
  if (!(mean > 0.0))
    fail(ErrorCode::invalid_value, "jump_dist.mean: must be > 0");
  return JumpDistribution(Family::erlang, mean, 0.0, shape);
}

JumpDistribution JumpDistribution::uniform(double lo, double hi) {
  if (!(lo >= 0.0))
    fail(ErrorCode::invalid_value, "jump_dist.lo: must be >= 0");
  if (!(hi > lo))
    fail(ErrorCode::invalid_value, "jump_dist.hi: must be > lo");
  return JumpDistribution(Family::uniform, lo, hi, 0);
}

double JumpDistribution::mean() const {
  switch (family_) {
    case Family::exponential:
    case Family::erlang:
      return a_;
    case Family::deterministic:
      return a_;
    case Family::uniform:
      return 0.5 * (a_ + b_);
  }
  return 0.0;
}

double JumpDistribution::second_moment() const {
  switch (family_) {
    case Family::exponential:
      return 2.0 * a_ * a_;
    case Family::deterministic:
      return a_ * a_;
    case Family::erlang: {
      // var = mean^2 / shape
      const double k = static_cast<double>(shape_);
      return a_ * a_ * (k + 1.0) / k;
    }
    case Family::uniform:
      return (a_ * a_ + a_ * b_ + b_ * b_) / 3.0;
  }
  return 0.0;
}

double JumpDistribution::lst(double alpha) const {
  if (alpha < 0.0) fail(ErrorCode::invalid_value, "alpha: must be >= 0");
  if (alpha == 0.0) return 1.0;
  switch (family_) {
    case Family::exponential:
      return 1.0 / (1.0 + alpha * a_);
    case Family::deterministic:
      return std::exp(-alpha * a_);
    case Family::erlang: {
      const double scale = a_ / static_cast<double>(shape_);
      return std::pow(1.0 / (1.0 + alpha * scale), shape_);
    }
    case Family::uniform: {
      // (e^{-a lo} - e^{-a hi}) / (a (hi - lo)), stable for small alpha
      const double span = b_ - a_;
      const double x = alpha * span;
      return std::exp(-alpha * a_) * (-std::expm1(-x)) / x;
    }
  }
  return 1.0;
}

double JumpDistribution::sample(RngStream& rng) const {
  switch (family_) {
    case Family::exponential:
      return rng.exponential(a_);
    case Family::deterministic:
      return a_;
    case Family::erlang: {
      const double scale = a_ / static_cast<double>(shape_);
      double sum = 0.0;
      for (int i = 0; i < shape_; ++i) sum += rng.exponential(scale);
      return sum;
    }
    case Family::uniform:
      return a_ + (b_ - a_) * rng.uniform01();
  }
  return 0.0;
}

const char* family_name(JumpDistribution::Family f) {
  switch (f) {
    case JumpDistribution::Family::exponential: return "exponential";
    case JumpDistribution::Family::deterministic: return "deterministic";
    case JumpDistribution::Family::erlang: return "erlang";
    case JumpDistribution::Family::uniform: return "uniform";
  }
  return "unknown";
}

std::string JumpDistribution::describe() const {
  switch (family_) {
    case Family::exponential:
      return "exponential(mean=" + std::to_string(a_) + ")";
    case Family::deterministic:
      return "deterministic(value=" + std::to_string(a_) + ")";
    case Family::erlang:
      return "erlang(shape=" + std::to_string(shape_) +
             ", mean=" + std::to_string(a_) + ")";
    case Family::uniform:
      return "uniform(lo=" + std::to_string(a_) + ", hi=" + std::to_string(b_) +
             ")";
  }
  return "unknown";
}

}  // namespace levystore
