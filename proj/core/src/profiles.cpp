#include "mpwave/profiles.hpp"

#include <cmath>
#include <sstream>

namespace mpwave {

namespace {

using detail::ProfileImpl;

struct ConstantImpl final : ProfileImpl {
  ThermoState s;
  explicit ConstantImpl(const ThermoState& st) : s(st) {}
  ProfilePoint eval(double, double) const override {
    ProfilePoint p;
    p.V = s.v;
    p.U = s.u;
    p.Th = s.theta;
    return p;
  }
};

struct ContactImpl final : ProfileImpl {
  SelfSimilarProfile prof;
  double u_ref, p, R, k1;  // k1 = kappa (gamma-1) / (gamma R)

  ContactImpl(const GasParams& g, double u_ref_, double p_,
              SelfSimilarProfile pr)
      : prof(std::move(pr)),
        u_ref(u_ref_),
        p(p_),
        R(g.R),
        k1(g.kappa * (g.gamma - 1.0) / (g.gamma * g.R)) {}

  ProfilePoint eval(double t, double x) const override {
    const double th = prof.eval(t, x);
    const double thx = prof.eval_x(t, x);
    const double thxx = prof.eval_xx(t, x);
    const double thxxx = prof.eval_xxx(t, x);
    const double tht = prof.eval_t(t, x);
    const double thxt = prof.eval_xt(t, x);

    ProfilePoint q;
    q.Th = th;
    q.Thx = thx;
    q.Thxx = thxx;
    q.Tht = tht;
    const double c = R / p;  // V = c Theta, exactly R Theta / V = p
    q.V = c * th;
    q.Vx = c * thx;
    q.Vxx = c * thxx;
    q.Vt = c * tht;
    const double r = thx / th;
    q.U = u_ref + k1 * r;
    q.Ux = k1 * (thxx / th - r * r);
    q.Uxx = k1 * (thxxx / th - 3.0 * thxx * thx / (th * th) +
                  2.0 * r * r * r);
    q.Ut = k1 * (thxt / th - thx * tht / (th * th));
    return q;
  }
};

struct RarefactionImpl final : ProfileImpl {
  BurgersProfile burgers;
  double gamma, v_a, u_a, th_a, lam_a;
  Family fam;

  RarefactionImpl(const GasParams& g, const ThermoState& anchor, Family f,
                  double w_l, double w_r)
      : burgers(w_l, w_r),
        gamma(g.gamma),
        v_a(anchor.v),
        u_a(anchor.u),
        th_a(anchor.theta),
        lam_a(char_speed(g, anchor.v, anchor.theta, f)),
        fam(f) {}

  ProfilePoint eval(double t, double x) const override {
    // Time shift: the Burgers solution is sampled at t+1.
    const auto b = burgers.values(t + 1.0, x);

    // Invert lambda(V) = w:  |lambda| = |lambda_a| (v_a/V)^{(gamma+1)/2}.
    const double V = v_a * std::pow(std::abs(lam_a / b.w), 2.0 / (gamma + 1.0));
    const double lam1 = -(gamma + 1.0) / (2.0 * V) * b.w;         // dlambda/dV
    const double lam2 = (gamma + 1.0) * (gamma + 3.0) / (4.0 * V * V) * b.w;

    ProfilePoint q;
    q.V = V;
    q.Vx = b.wx / lam1;
    q.Vt = b.wt / lam1;
    q.Vxx = (b.wxx - lam2 * q.Vx * q.Vx) / lam1;

    // dU/dV = -lambda(V) along the curve.
    const double qexp = (1.0 - gamma) / 2.0;
    q.U = u_a - lam_a * std::pow(v_a, (gamma + 1.0) / 2.0) *
                    (std::pow(V, qexp) - std::pow(v_a, qexp)) / qexp;
    q.Ux = -b.w * q.Vx;
    q.Ut = -b.w * q.Vt;
    q.Uxx = -lam1 * q.Vx * q.Vx - b.w * q.Vxx;

    // Isentropic temperature.
    q.Th = th_a * std::pow(v_a / V, gamma - 1.0);
    const double f = (1.0 - gamma) * q.Th / V;
    q.Thx = f * q.Vx;
    q.Tht = f * q.Vt;
    q.Thxx = (1.0 - gamma) *
             ((q.Thx * q.Vx + q.Th * q.Vxx) / V - q.Th * q.Vx * q.Vx / (V * V));
    return q;
  }
};

struct CompositeImpl final : ProfileImpl {
  ProfileField rm, c, rp;
  double off_v, off_u, off_th;

  CompositeImpl(ProfileField rm_, ProfileField c_, ProfileField rp_,
                double ov, double ou, double ot)
      : rm(std::move(rm_)), c(std::move(c_)), rp(std::move(rp_)),
        off_v(ov), off_u(ou), off_th(ot) {}

  ProfilePoint eval(double t, double x) const override {
    const ProfilePoint a = rm(t, x), b = c(t, x), d = rp(t, x);
    ProfilePoint q;
    q.V = a.V + b.V + d.V - off_v;
    q.U = a.U + b.U + d.U - off_u;
    q.Th = a.Th + b.Th + d.Th - off_th;
    q.Vx = a.Vx + b.Vx + d.Vx;
    q.Ux = a.Ux + b.Ux + d.Ux;
    q.Thx = a.Thx + b.Thx + d.Thx;
    q.Vxx = a.Vxx + b.Vxx + d.Vxx;
    q.Uxx = a.Uxx + b.Uxx + d.Uxx;
    q.Thxx = a.Thxx + b.Thxx + d.Thxx;
    q.Vt = a.Vt + b.Vt + d.Vt;
    q.Ut = a.Ut + b.Ut + d.Ut;
    q.Tht = a.Tht + b.Tht + d.Tht;
    return q;
  }
};

}  // namespace

ProfileField constant_profile(const ThermoState& s) {
  s.validate();
  return {ProfileKind::Constant, std::make_shared<ConstantImpl>(s)};
}

ProfileField contact_wave(const GasParams& g, const ThermoState& left,
                          const ThermoState& right,
                          const SelfSimilarProfile& prof, double tol) {
  left.validate();
  right.validate();
  const double pl = pressure(g, left.v, left.theta);
  const double pr = pressure(g, right.v, right.theta);
  if (std::abs(left.u - right.u) > tol * (1.0 + std::abs(left.u)) ||
      std::abs(pl - pr) > tol * pl) {
    std::ostringstream os;
    os << "contact_wave: end states violate the contact conditions "
       << "(du=" << right.u - left.u << ", dp=" << pr - pl << ")";
    throw std::invalid_argument(os.str());
  }
  return {ProfileKind::Contact,
          std::make_shared<ContactImpl>(g, left.u, pl, prof)};
}

ProfileField contact_wave(const GasParams& g, const WavePattern& pat,
                          const SelfSimilarProfile& prof) {
  return {ProfileKind::Contact,
          std::make_shared<ContactImpl>(g, pat.mid_left.u, pat.p_mid, prof)};
}

ProfileField smooth_rarefaction(const GasParams& g, const ThermoState& anchor,
                                const ThermoState& mid, Family fam) {
  anchor.validate();
  mid.validate();
  const double s_a = entropy(g, anchor.v, anchor.theta);
  const double s_m = entropy(g, mid.v, mid.theta);
  if (std::abs(s_a - s_m) > 1e-8 * (1.0 + std::abs(s_a)))
    throw std::invalid_argument(
        "smooth_rarefaction: mid state is not on the anchor's isentrope");

  const double lam_a = char_speed(g, anchor.v, anchor.theta, fam);
  const double lam_m = char_speed(g, mid.v, mid.theta, fam);
  const double w_l = std::min(lam_a, lam_m);
  const double w_r = std::max(lam_a, lam_m);
  const ProfileKind kind = fam == Family::minus ? ProfileKind::RarefactionMinus
                                                : ProfileKind::RarefactionPlus;
  return {kind, std::make_shared<RarefactionImpl>(g, anchor, fam, w_l, w_r)};
}

ProfileField composite(const GasParams&, const WavePattern& pat,
                       const ProfileField& contact,
                       const ProfileField& rar_minus,
                       const ProfileField& rar_plus) {
  return {ProfileKind::Composite,
          std::make_shared<CompositeImpl>(
              rar_minus, contact, rar_plus, pat.mid_left.v + pat.mid_right.v,
              pat.mid_left.u + pat.mid_right.u,
              pat.mid_left.theta + pat.mid_right.theta)};
}

CompositeWave build_composite(const GasParams& g, const WavePattern& pat,
                              const ProfileOptions& opt) {
  CompositeWave w;
  w.pattern = pat;
  w.selfsimilar =
      solve_selfsimilar(g, pat.mid_left.theta, pat.mid_right.theta, pat.p_mid,
                        opt.Xi, opt.bvp_n, opt.tol);
  w.contact = contact_wave(g, pat, w.selfsimilar);
  w.rar_minus = smooth_rarefaction(g, pat.end.left, pat.mid_left, Family::minus);
  w.rar_plus = smooth_rarefaction(g, pat.end.right, pat.mid_right, Family::plus);
  w.field = composite(g, pat, w.contact, w.rar_minus, w.rar_plus);
  return w;
}

}  // namespace mpwave
