#include "hcncov/coverage_analytic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <mutex>

#include "hcncov/errors.hpp"
#include "hcncov/parallel.hpp"
#include "hcncov/serving_distance.hpp"

namespace hcncov::cov {

namespace {

// Tolerance ladder: outermost integrals are the loosest, innermost kernels
// the tightest, so nested error never dominates the reported digits.
quad::QuadConfig outer_cfg()
{
   return {1e-6, 1e-9, 2000, false};
}
quad::QuadConfig mid_cfg()
{
   return {1e-7, 1e-14, 2000, false};
}
quad::QuadConfig kern_cfg()
{
   return {1e-8, 1e-15, 2000, false};
}

// Integral of a gap kernel over [a, inf). Consumers integrate the result at
// mid/outer tolerance, so this runs one notch tighter: the kernel's own
// quadrature noise would otherwise sit exactly at the consumers' error floor
// and stall their subdivision. Kinks live at or below `split`; beyond it the
// kernel is smooth and the rational tail map converges quickly.
template <class F>
double gap_kernel_integral(F&& dk, double a, double split,
                           std::initializer_list<double> kinks, double tail_hint)
{
   double head = 0.0;
   if(a < split)
      head = quad::integrate_segments(dk, quad::breakpoints(a, split, kinks), kern_cfg()).value;
   return head
        + quad::integrate_semi_infinite(dk, std::max(a, split), kern_cfg(), tail_hint).value;
}

std::atomic<long> g_clamp_count{0};
std::once_flag g_clamp_warned;

double clamp_probability(double x)
{
   if(x > 1.0 + 1e-9 || x < -1e-9) {
      g_clamp_count.fetch_add(1, std::memory_order_relaxed);
      std::call_once(g_clamp_warned, [&] {
         std::cerr << "hcncov: coverage evaluator produced " << x
                   << "; clamping into [0, 1] (expected only for upper bounds)\n";
      });
   }
   return std::clamp(x, 0.0, 1.0);
}

double sinc(double x)
{
   return x == 0.0 ? 1.0 : std::sin(M_PI * x) / (M_PI * x);
}

// Exponent of the full-plane small-cell Laplace factor.
double fullplane_exponent(double s, const NetworkParams& p)
{
   if(s <= 0.0) return 0.0;
   return M_PI * p.lambda2 * std::pow(s * p.P2, 2.0 / p.alpha) / sinc(2.0 / p.alpha);
}

// int_0^r0 2 pi lambda2 r / (1 + r^alpha/(s P2)) dr.
double head_exponent(double r0, double s, const NetworkParams& p)
{
   if(r0 <= 0.0 || s <= 0.0) return 0.0;
   const double c = s * p.P2;
   if(p.alpha == 4.0) {
      const double rc = std::sqrt(c);
      return M_PI * p.lambda2 * rc * std::atan(r0 * r0 / rc);
   }
   auto kern = [&](double r) {
      return 2.0 * M_PI * p.lambda2 * r / (1.0 + std::pow(r, p.alpha) / c);
   };
   return quad::integrate(kern, 0.0, r0, kern_cfg()).value;
}

// Laplace factor of the small-cell field outside b(0, r0); r0 = 0 gives the
// full plane.
double annulus_factor(double r0, double s, const NetworkParams& p)
{
   return std::exp(-(fullplane_exponent(s, p) - head_exponent(r0, s, p)));
}

// int_z1^inf (1 - zeta(s, v)) v dv for the macro field beyond the serving
// distance.
double macro_tail_exponent(double s, double z1, const NetworkParams& p)
{
   if(s <= 0.0) return 0.0;
   const double c = s * p.P1;
   if(p.alpha == 4.0) {
      const double rc = std::sqrt(c);
      return 0.5 * rc * (0.5 * M_PI - std::atan(z1 * z1 / rc));
   }
   auto kern = [&](double v) {
      const double t = std::pow(v, p.alpha);
      if(std::isinf(t)) return 0.0;
      return c * v / (t + c);
   };
   const double hint = std::max(std::max(z1, 1.0), std::pow(c, 1.0 / p.alpha));
   return quad::integrate_semi_infinite(kern, z1, mid_cfg(), hint).value;
}

// Shared kernel of f_removed / g_removed over a radial window (lo, hi).
double removed_exponent(double s, double z1, double lo, double hi, const NetworkParams& p)
{
   if(!(hi > lo) || s <= 0.0) return 0.0;
   const double c = s * p.P2;
   auto kern      = [&](double r) {
      const double u  = (r * r + z1 * z1 - p.D * p.D) / (2.0 * z1 * r);
      const double th = std::acos(std::clamp(u, -1.0, 1.0));
      return 2.0 * p.lambda2 * th * r / (1.0 + std::pow(r, p.alpha) / c);
   };
   return quad::integrate(kern, lo, hi, kern_cfg()).value;
}

void check_gamma(SirThreshold g)
{
   if(!(g.gamma > 0.0) || !std::isfinite(g.gamma))
      throw InvalidParams("SirThreshold: gamma must be positive and finite");
}

} // namespace

SirThreshold SirThreshold::from_db(double db)
{
   return {std::pow(10.0, db / 10.0)};
}

double zeta(LaplaceArg s, double v, double P, double alpha)
{
   if(v <= 0.0) return 0.0;
   const double t = std::pow(v, alpha);
   if(std::isinf(t)) return 1.0;
   return t / (t + s.s * P);
}

double g1_hat(LaplaceArg s, double lambda2, double P2, double alpha)
{
   NetworkParams p;
   p.lambda2 = lambda2;
   p.P2      = P2;
   p.alpha   = alpha;
   return std::exp(-fullplane_exponent(s.s, p));
}

double g1_inside(LaplaceArg s, double z1, const NetworkParams& p)
{
   validate(p);
   if(!(z1 > 0.0 && z1 < p.D))
      throw DomainError("g1_inside: requires 0 < z1 < D");
   return annulus_factor(p.D - z1, s.s, p);
}

double f_removed(LaplaceArg s, double z1, const NetworkParams& p)
{
   validate(p);
   if(!(z1 > 0.0)) throw DomainError("f_removed: requires z1 > 0");
   return removed_exponent(s.s, z1, std::abs(z1 - p.D), z1 + p.D, p);
}

double g_removed(LaplaceArg s, double z1, double z2hat, const NetworkParams& p)
{
   validate(p);
   if(!(z1 > 0.0) || z2hat < 0.0)
      throw DomainError("g_removed: requires z1 > 0 and z2hat >= 0");
   const double lo = std::max(z2hat, std::abs(z1 - p.D));
   const double hi = std::max(z2hat, z1 + p.D);
   return removed_exponent(s.s, z1, lo, hi, p);
}

// -- memoized hole correction -------------------------------------------------

namespace detail {

HoleCorrectionTable::HoleCorrectionTable(LaplaceArg s, double z2hat, const NetworkParams& p)
    : p_(p), s_(s), z2hat_(z2hat)
{
   onset_ = std::abs(z2hat - p.D);
   far_   = z2hat + p.D;
   if(p.D <= 0.0 || s.s <= 0.0) {
      trivial_ = true;
      return;
   }
   auto direct = [&](double v) { return g_removed(s_, v, z2hat_, p_); };

   const double width = far_ - onset_;
   if(width > 1e-9 * std::max(1.0, far_)) {
      has_window_ = true;
      constexpr int n = 96;
      std::vector<double> x(n), y(n);
      for(int i = 0; i < n; ++i) {
         x[i] = onset_ + width * i / (n - 1.0);
         y[i] = direct(std::max(x[i], 1e-300));
      }
      window_ = quad::CubicSpline(std::move(x), std::move(y));
   }

   scale_ = std::max({far_, std::pow(s.s * p.P2, 1.0 / p.alpha), 1.0});
   constexpr int m = 160;
   std::vector<double> u(m), y(m);
   for(int i = 0; i < m; ++i) {
      u[i] = i / (m - 1.0);
      if(i + 1 == m)
         y[i] = 0.0;  // exact limit: the window recedes to infinity
      else {
         const double v = far_ + scale_ * u[i] / (1.0 - u[i]);
         y[i]           = direct(std::max(v, 1e-300));
      }
   }
   tail_ = quad::CubicSpline(std::move(u), std::move(y));
}

double HoleCorrectionTable::operator()(double v) const
{
   if(trivial_) return 0.0;
   if(v <= onset_) {
      if(z2hat_ >= p_.D) return 0.0;  // window not yet reached
      return g_removed(s_, std::max(v, 1e-300), z2hat_, p_);
   }
   if(has_window_ && v <= far_) return std::max(0.0, window_(v));
   const double t = (v - far_) / ((v - far_) + scale_);
   return std::max(0.0, tail_(t));
}

} // namespace detail

// -- macro tier ---------------------------------------------------------------

namespace {

double macro_lower_raw(double gamma, const NetworkParams& p)
{
   const double z1max = dist::z1_truncation_radius(p.lambda1);
   auto integrand     = [&](double z1) {
      const LaplaceArg s{gamma * std::pow(z1, p.alpha) / p.P1};
      const double g1 = annulus_factor(z1 < p.D ? p.D - z1 : 0.0, s.s, p);
      const double g2 = std::exp(removed_exponent(s.s, z1, std::abs(z1 - p.D), z1 + p.D, p));
      const double g3 = std::exp(-2.0 * M_PI * p.lambda1 * macro_tail_exponent(s.s, z1, p));
      return g1 * g2 * g3 * dist::pdf_z1(z1, p.lambda1);
   };
   const auto pts = quad::breakpoints(0.0, z1max, {p.D});
   return quad::integrate_segments(integrand, pts, outer_cfg()).value;
}

// Nonnegative difference between carving every macro's disc out of the macro
// interferer field and carving none of them: upper = lower + gap.
double macro_gap_raw(double gamma, const NetworkParams& p)
{
   if(p.D <= 0.0) return 0.0;
   const double z1max = dist::z1_truncation_radius(p.lambda1);
   auto integrand     = [&](double z1) {
      const LaplaceArg s{gamma * std::pow(z1, p.alpha) / p.P1};
      const double g1 = annulus_factor(z1 < p.D ? p.D - z1 : 0.0, s.s, p);
      const double g2 = std::exp(removed_exponent(s.s, z1, std::abs(z1 - p.D), z1 + p.D, p));
      const double g3 = std::exp(-2.0 * M_PI * p.lambda1 * macro_tail_exponent(s.s, z1, p));
      auto dk         = [&](double v) {
         const double f = removed_exponent(s.s, v, std::abs(v - p.D), v + p.D, p);
         return std::expm1(f) * zeta(s, v, p.P1, p.alpha) * v;
      };
      const double hint = std::max({z1, std::pow(s.s * p.P1, 1.0 / p.alpha),
                                    std::pow(s.s * p.P2, 1.0 / p.alpha) + p.D, 1.0});
      const double df   = gap_kernel_integral(dk, z1, p.D, {}, hint);
      const double gain = std::expm1(2.0 * M_PI * p.lambda1 * std::max(0.0, df));
      return g1 * g2 * g3 * gain * dist::pdf_z1(z1, p.lambda1);
   };
   const auto pts = quad::breakpoints(0.0, z1max, {p.D});
   return quad::integrate_segments(integrand, pts, outer_cfg()).value;
}

// Small-cell tier, z2hat-outer form of the double integral. gap_pass = false
// gives the closest-hole value; gap_pass = true gives the nonnegative extra
// mass from carving every hole out of the macro interferer field.
double small_raw(double gamma, const NetworkParams& p, bool gap_pass)
{
   const double z1max = dist::z1_truncation_radius(p.lambda1);
   const double z2max = std::sqrt(p.D * p.D + std::log(1e18) / (M_PI * p.lambda2));

   auto outer = [&](double z2hat) {
      const LaplaceArg s{gamma * std::pow(z2hat, p.alpha) / p.P2};
      const double z1_lo = std::max(0.0, p.D - z2hat);
      if(z1_lo >= z1max) return 0.0;
      const double g1 = annulus_factor(z2hat, s.s, p);
      const detail::HoleCorrectionTable gtab(s, z2hat, p);
      const double hint = std::max({std::pow(s.s * p.P1, 1.0 / p.alpha), z2hat + p.D, 1.0});

      auto inner = [&](double z1) {
         const double w = macro_tail_exponent(s.s, z1, p);
         double val     = std::exp(gtab(z1)) * zeta(s, z1, p.P1, p.alpha)
                      * std::exp(-2.0 * M_PI * p.lambda1 * w)
                      * dist::pdf_z2hat(z2hat, {p, z1}) * dist::pdf_z1(z1, p.lambda1);
         if(gap_pass && val != 0.0) {
            auto dk = [&](double v) { return std::expm1(gtab(v)) * zeta(s, v, p.P1, p.alpha) * v; };
            const double dg = gap_kernel_integral(dk, z1, z2hat + p.D,
                                                  {std::abs(z2hat - p.D)}, hint);
            val *= std::expm1(2.0 * M_PI * p.lambda1 * std::max(0.0, dg));
         }
         return val;
      };
      const auto pts = quad::breakpoints(z1_lo, z1max,
                                         {std::abs(z2hat - p.D), p.D, z2hat + p.D});
      return g1 * quad::integrate_segments(inner, pts, mid_cfg()).value;
   };

   const auto opts = quad::breakpoints(0.0, z2max, {p.D});
   return quad::integrate_segments(outer, opts, outer_cfg()).value;
}

} // namespace

double macro_coverage_lower(SirThreshold g, const NetworkParams& p)
{
   check_gamma(g);
   validate(p);
   return clamp_probability(macro_lower_raw(g.gamma, p));
}

double macro_coverage_upper(SirThreshold g, const NetworkParams& p)
{
   check_gamma(g);
   validate(p);
   return clamp_probability(macro_lower_raw(g.gamma, p) + macro_gap_raw(g.gamma, p));
}

double small_coverage_closest_hole(SirThreshold g, const NetworkParams& p)
{
   check_gamma(g);
   validate(p);
   return clamp_probability(small_raw(g.gamma, p, false));
}

double small_coverage_all_holes(SirThreshold g, const NetworkParams& p)
{
   check_gamma(g);
   validate(p);
   return clamp_probability(small_raw(g.gamma, p, false) + small_raw(g.gamma, p, true));
}

std::pair<CoverageCurve, CoverageCurve> macro_coverage_curves(
    std::span<const double> gammas_db, const NetworkParams& p, unsigned threads)
{
   validate(p);
   const std::size_t n = gammas_db.size();
   CoverageCurve lower{{gammas_db.begin(), gammas_db.end()}, std::vector<double>(n),
                       CurveMethod::MacroLower, {}};
   CoverageCurve upper{lower.gammas_db, std::vector<double>(n), CurveMethod::MacroUpper, {}};
   parallel_for(n, threads, [&](std::size_t i) {
      const double gamma = db_to_linear(gammas_db[i]);
      const double lo    = macro_lower_raw(gamma, p);
      const double gap   = macro_gap_raw(gamma, p);
      lower.values[i]    = clamp_probability(lo);
      upper.values[i]    = clamp_probability(lo + gap);
   });
   return {std::move(lower), std::move(upper)};
}

std::pair<CoverageCurve, CoverageCurve> small_coverage_curves(
    std::span<const double> gammas_db, const NetworkParams& p, unsigned threads)
{
   validate(p);
   const std::size_t n = gammas_db.size();
   CoverageCurve closest{{gammas_db.begin(), gammas_db.end()}, std::vector<double>(n),
                         CurveMethod::SmallClosestHole, {}};
   CoverageCurve all{closest.gammas_db, std::vector<double>(n), CurveMethod::SmallAllHoles, {}};
   parallel_for(n, threads, [&](std::size_t i) {
      const double gamma = db_to_linear(gammas_db[i]);
      const double base  = small_raw(gamma, p, false);
      const double gap   = small_raw(gamma, p, true);
      closest.values[i]  = clamp_probability(base);
      all.values[i]      = clamp_probability(base + gap);
   });
   return {std::move(closest), std::move(all)};
}

long clamp_warning_count()
{
   return g_clamp_count.load();
}

} // namespace hcncov::cov
