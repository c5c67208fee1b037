#pragma once

#include <string>

#include "levystore/rng.hpp"

namespace levystore {

// Closed family of positive jump-size laws, also reused as period-duration
// laws by the renewal policies. Every member has a finite positive mean and
// a closed-form Laplace-Stieltjes transform with lst(0) = 1.
class JumpDistribution {
 public:
  enum class Family { exponential, deterministic, erlang, uniform };

  static JumpDistribution exponential(double mean);
  static JumpDistribution deterministic(double value);
  static JumpDistribution erlang(int shape, double mean);
  static JumpDistribution uniform(double lo, double hi);

  Family family() const { return family_; }
  double mean() const;
  double second_moment() const;

  // E exp(-alpha B); alpha >= 0
  double lst(double alpha) const;

  double sample(RngStream& rng) const;

  std::string describe() const;

  bool operator==(const JumpDistribution&) const = default;

  // parameter accessors (meaning depends on family)
  double param_a() const { return a_; }
  double param_b() const { return b_; }
  int shape() const { return shape_; }

 private:
  JumpDistribution(Family f, double a, double b, int shape)
      : family_(f), a_(a), b_(b), shape_(shape) {}

  Family family_;
  double a_ = 0.0;  // mean (exponential, erlang), value (deterministic), lo (uniform)
  double b_ = 0.0;  // hi (uniform)
  int shape_ = 0;   // erlang only
};

const char* family_name(JumpDistribution::Family f);

}  // namespace levystore
