// Space-time profiles: viscous contact wave, smooth approximate
// rarefaction waves, and their superposition.  All derivatives are
// analytic chain-rule formulas; the microrotation component is
// identically zero for every profile.
#pragma once

#include <memory>

#include "mpwave/burgers.hpp"
#include "mpwave/riemann.hpp"
#include "mpwave/selfsimilar.hpp"

namespace mpwave {

// Pointwise profile values with spatial derivatives up to order 2 and the
// first time derivatives.
struct ProfilePoint {
  double V = 0, U = 0, Th = 0;
  double Vx = 0, Ux = 0, Thx = 0;
  double Vxx = 0, Uxx = 0, Thxx = 0;
  double Vt = 0, Ut = 0, Tht = 0;
};

enum class ProfileKind { Constant, Contact, RarefactionMinus, RarefactionPlus, Composite };

namespace detail {
struct ProfileImpl {
  virtual ~ProfileImpl() = default;
  virtual ProfilePoint eval(double t, double x) const = 0;
};
}  // namespace detail

class ProfileField {
 public:
  ProfileField() = default;
  ProfileField(ProfileKind kind, std::shared_ptr<const detail::ProfileImpl> impl)
      : kind_(kind), impl_(std::move(impl)) {}

  ProfilePoint operator()(double t, double x) const { return impl_->eval(t, x); }
  ProfileKind kind() const { return kind_; }
  bool valid() const { return impl_ != nullptr; }

 private:
  ProfileKind kind_ = ProfileKind::Constant;
  std::shared_ptr<const detail::ProfileImpl> impl_;
};

// Constant-state profile.
ProfileField constant_profile(const ThermoState& s);

// Viscous contact wave between two states satisfying the contact
// conditions (equal velocity and pressure) within `tol`:
//   Theta^c(t,x) = theta(x/sqrt(1+t)),  V^c = R Theta^c / p,
//   U^c = u_ref + kappa (gamma-1)/(gamma R) Theta^c_x / Theta^c.
ProfileField contact_wave(const GasParams& g, const ThermoState& left,
                          const ThermoState& right,
                          const SelfSimilarProfile& prof, double tol = 1e-8);

// Contact wave between the middle states of a solved pattern.
ProfileField contact_wave(const GasParams& g, const WavePattern& pat,
                          const SelfSimilarProfile& prof);

// Smooth approximate rarefaction wave of the given family connecting
// `anchor` (the end state the curve is anchored at) and `mid` (the middle
// state).  Uses the time-shifted Burgers solution w(t+1, x).
ProfileField smooth_rarefaction(const GasParams& g, const ThermoState& anchor,
                                const ThermoState& mid, Family fam);

// Superposition of the three component waves minus the duplicated middle
// constants.
ProfileField composite(const GasParams& g, const WavePattern& pat,
                       const ProfileField& contact,
                       const ProfileField& rar_minus,
                       const ProfileField& rar_plus);

// Convenience bundle: everything built from one pattern.
struct CompositeWave {
  WavePattern pattern;
  SelfSimilarProfile selfsimilar;
  ProfileField contact;
  ProfileField rar_minus;
  ProfileField rar_plus;
  ProfileField field;  // the superposition
};

struct ProfileOptions {
  double Xi = 0.0;  // <=0: default truncation
  int bvp_n = 4001;
  double tol = 1e-10;
};

CompositeWave build_composite(const GasParams& g, const WavePattern& pat,
                              const ProfileOptions& opt = {});

}  // namespace mpwave
