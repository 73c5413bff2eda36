#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "hcncov/errors.hpp"

// Adaptive one-dimensional quadrature built on the 15-point Gauss-Kronrod
// rule with worst-interval bisection, plus a rational map for semi-infinite
// domains. Integrands must be finite at every interior abscissa; integrands
// on [a, inf) must decay at least like r^(1-alpha) with alpha > 2.

namespace hcncov::quad {

struct QuadConfig {
   double rel_tol       = 1e-8;
   double abs_tol       = 1e-12;
   int max_subdivisions = 2000;
   bool tail_probe      = true;  // decay check in integrate_semi_infinite
};

struct QuadResult {
   double value = 0.0;
   double error = 0.0;   // absolute error estimate
   int subdivisions = 0;
};

namespace detail {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd abscissae.
inline constexpr std::array<double, 8> kXgk = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr std::array<double, 8> kWgk = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278};
inline constexpr std::array<double, 4> kWg = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
   double a = 0.0, b = 0.0;
   double value = 0.0;
   double error = 0.0;
};

template <class F>
Panel gk15(F& f, double a, double b)
{
   const double centr  = 0.5 * (a + b);
   const double hlgth  = 0.5 * (b - a);
   const double dhlgth = std::abs(hlgth);

   std::array<double, 7> fv1{}, fv2{};
   const double fc = f(centr);
   double resg     = fc * kWg[3];
   double resk     = fc * kWgk[7];
   double resabs   = std::abs(resk);
   for(int j = 0; j < 3; ++j) {
      const int jtw     = 2 * j + 1;
      const double absc = hlgth * kXgk[jtw];
      fv1[jtw]          = f(centr - absc);
      fv2[jtw]          = f(centr + absc);
      const double fsum = fv1[jtw] + fv2[jtw];
      resg += kWg[j] * fsum;
      resk += kWgk[jtw] * fsum;
      resabs += kWgk[jtw] * (std::abs(fv1[jtw]) + std::abs(fv2[jtw]));
   }
   for(int j = 0; j < 4; ++j) {
      const int jtwm1   = 2 * j;
      const double absc = hlgth * kXgk[jtwm1];
      fv1[jtwm1]        = f(centr - absc);
      fv2[jtwm1]        = f(centr + absc);
      const double fsum = fv1[jtwm1] + fv2[jtwm1];
      resk += kWgk[jtwm1] * fsum;
      resabs += kWgk[jtwm1] * (std::abs(fv1[jtwm1]) + std::abs(fv2[jtwm1]));
   }
   if(!std::isfinite(resk))
      throw Error("quadrature: non-finite integrand sample");

   const double reskh = resk * 0.5;
   double resasc      = kWgk[7] * std::abs(fc - reskh);
   for(int j = 0; j < 7; ++j)
      resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

   Panel p;
   p.a     = a;
   p.b     = b;
   p.value = resk * hlgth;
   resabs *= dhlgth;
   resasc *= dhlgth;
   double abserr = std::abs((resk - resg) * hlgth);
   if(resasc != 0.0 && abserr != 0.0)
      abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
   const double eps   = std::numeric_limits<double>::epsilon();
   const double uflow = std::numeric_limits<double>::min();
   if(resabs > uflow / (50.0 * eps)) abserr = std::max(eps * 50.0 * resabs, abserr);
   p.error = abserr;
   return p;
}

} // namespace detail

template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadConfig& cfg = {})
{
   if(!(std::isfinite(a) && std::isfinite(b)))
      throw ArgumentOutOfRange("integrate: endpoints must be finite");
   if(b <= a) return {};

   auto& fn = f;
   std::vector<detail::Panel> panels;
   panels.push_back(detail::gk15(fn, a, b));

   QuadResult out;
   int subdivisions = 0;
   for(;;) {
      double total = 0.0, err = 0.0;
      for(const auto& p : panels) {
         total += p.value;
         err += p.error;
      }
      out.value        = total;
      out.error        = err;
      out.subdivisions = subdivisions;
      if(err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) return out;

      std::size_t worst = 0;
      for(std::size_t i = 1; i < panels.size(); ++i)
         if(panels[i].error > panels[worst].error) worst = i;
      const double pa = panels[worst].a, pb = panels[worst].b;
      const double mid = 0.5 * (pa + pb);
      // Cannot refine below floating-point resolution; report what we have.
      if(!(mid > pa && mid < pb)) return out;
      if(subdivisions >= cfg.max_subdivisions)
         throw MaxSubdivisionsExceeded("integrate: subdivision limit reached", total, err);
      panels[worst] = detail::gk15(fn, pa, mid);
      panels.push_back(detail::gk15(fn, mid, pb));
      ++subdivisions;
   }
}

// Integral over [a, inf) via the rational substitution r = a + S*t/(1-t).
// S is a characteristic decay scale; pass scale_hint when the integrand's
// support is far from a, otherwise max(1, |a|) is used. Tail probes at
// a + S*{1e3..1e6} guard against non-decaying integrands.
template <class F>
QuadResult integrate_semi_infinite(F&& f, double a, const QuadConfig& cfg = {},
                                   double scale_hint = 0.0)
{
   if(!std::isfinite(a)) throw ArgumentOutOfRange("integrate_semi_infinite: bad lower limit");
   const double S = scale_hint > 0.0 ? scale_hint : std::max(1.0, std::abs(a));

   if(cfg.tail_probe) {
      const double p0 = std::abs(f(a + S * 1e3));
      const double p1 = std::abs(f(a + S * 1e4));
      const double p2 = std::abs(f(a + S * 1e5));
      const double p3 = std::abs(f(a + S * 1e6));
      const double head = std::max(p0, p1);
      const double tail = std::max(p2, p3);
      if(tail > cfg.abs_tol && tail >= head * (1.0 - 1e-9))
         throw NonDecayingIntegrand("integrate_semi_infinite: tail probes do not decrease");
   }

   auto& fn = f;
   auto g   = [&fn, a, S](double t) {
      if(t >= 1.0) return 0.0;
      const double om = 1.0 - t;
      return fn(a + S * t / om) * S / (om * om);
   };
   return integrate(g, 0.0, 1.0, cfg);
}

// Sorted unique breakpoints clipped to [lo, hi], always including lo and hi.
// Used to split integrands at known kinks before handing them to integrate().
inline std::vector<double> breakpoints(double lo, double hi, std::initializer_list<double> candidates)
{
   std::vector<double> pts{lo, hi};
   for(double c : candidates)
      if(c > lo && c < hi) pts.push_back(c);
   std::sort(pts.begin(), pts.end());
   pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
   return pts;
}

template <class F>
QuadResult integrate_segments(F&& f, const std::vector<double>& pts, const QuadConfig& cfg = {})
{
   QuadResult out;
   for(std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const auto r = integrate(f, pts[i], pts[i + 1], cfg);
      out.value += r.value;
      out.error += r.error;
      out.subdivisions += r.subdivisions;
   }
   return out;
}

// Natural cubic spline through strictly increasing nodes; used to memoize
// expensive inner integrands on a fixed grid. Queries are clamped to the
// node range.
class CubicSpline {
 public:
   CubicSpline() = default;

   CubicSpline(std::vector<double> x, std::vector<double> y)
       : x_(std::move(x)), y_(std::move(y))
   {
      const std::size_t n = x_.size();
      if(n < 2 || y_.size() != n)
         throw ArgumentOutOfRange("CubicSpline: need at least two nodes, matching sizes");
      for(std::size_t i = 0; i + 1 < n; ++i)
         if(!(x_[i] < x_[i + 1]))
            throw ArgumentOutOfRange("CubicSpline: nodes must be strictly increasing");
      m_.assign(n, 0.0);
      if(n == 2) return;

      // Thomas solve of the tridiagonal system for interior second derivatives.
      std::vector<double> diag(n, 2.0), rhs(n, 0.0), sub(n, 0.0);
      for(std::size_t i = 1; i + 1 < n; ++i) {
         const double h0 = x_[i] - x_[i - 1];
         const double h1 = x_[i + 1] - x_[i];
         sub[i]          = h0 / (h0 + h1);
         rhs[i] = 6.0 / (h0 + h1) * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
      }
      for(std::size_t i = 2; i + 1 < n; ++i) {
         const double w = sub[i] / diag[i - 1];
         diag[i] -= w * (1.0 - sub[i - 1]);
         rhs[i] -= w * rhs[i - 1];
      }
      for(std::size_t i = n - 2; i >= 1; --i) {
         const double upper = 1.0 - sub[i];
         m_[i] = (rhs[i] - upper * (i + 2 < n ? m_[i + 1] : 0.0)) / diag[i];
         if(i == 1) break;
      }
   }

   double operator()(double v) const
   {
      if(v <= x_.front()) return y_.front();
      if(v >= x_.back()) return y_.back();
      const auto it       = std::upper_bound(x_.begin(), x_.end(), v);
      const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
      const double h      = x_[i + 1] - x_[i];
      const double t0     = x_[i + 1] - v;
      const double t1     = v - x_[i];
      return m_[i] * t0 * t0 * t0 / (6.0 * h) + m_[i + 1] * t1 * t1 * t1 / (6.0 * h)
             + (y_[i] / h - m_[i] * h / 6.0) * t0 + (y_[i + 1] / h - m_[i + 1] * h / 6.0) * t1;
   }

   double front() const { return x_.front(); }
   double back() const { return x_.back(); }

 private:
   std::vector<double> x_, y_, m_;
};

} // namespace hcncov::quad
