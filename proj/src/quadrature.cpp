#include "levykit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace levykit {

namespace {

// Kronrod 15-point nodes on [-1,1] and weights; the embedded Gauss 7-point
// rule uses the even-indexed nodes.
constexpr double kx[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,                0.207784955007898,
    0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double kw[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double gw[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

struct Panel {
    double value, error;
};

Panel gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fk = 0.0, fg = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(c + h * kx[i]);
        fk += kw[i] * v;
        if (i % 2 == 1) fg += gw[i / 2] * v;
    }
    Panel p;
    p.value = fk * h;
    const double diff = std::fabs(fk - fg) * h;
    // standard QUADPACK error sharpening
    p.error = diff < 1.0 ? 200.0 * diff * std::sqrt(diff) : diff;
    return p;
}

void adapt(const Integrand& f, double a, double b, double tol, int depth,
           QuadResult& out) {
    Panel p = gk15(f, a, b);
    out.evals += 15;
    if (!std::isfinite(p.value)) {
        out.value = p.value;
        out.converged = false;
        return;
    }
    if (p.error <= tol || depth <= 0) {
        out.value += p.value;
        out.error += p.error;
        if (p.error > tol && depth <= 0) out.converged = false;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth - 1, out);
    if (!std::isfinite(out.value)) return;
    adapt(f, m, b, 0.5 * tol, depth - 1, out);
}

}  // namespace

double one_minus_cos(double u) {
    const double s = std::sin(0.5 * u);
    return 2.0 * s * s;
}

double cosh_minus_one(double u) {
    u = std::fabs(u);
    if (u > 710.0) return std::numeric_limits<double>::infinity();
    if (u < 1e-4) {
        const double u2 = u * u;
        return u2 * (0.5 + u2 * (1.0 / 24.0 + u2 / 720.0));
    }
    return std::cosh(u) - 1.0;
}

QuadResult integrate(const Integrand& f, double a, double b, double abs_tol,
                     double rel_tol, int max_depth) {
    QuadResult out;
    if (a == b) return out;
    // First pass to scale the relative tolerance.
    Panel probe = gk15(f, a, b);
    out.evals = 15;
    if (!std::isfinite(probe.value)) {
        out.value = probe.value;
        out.converged = false;
        return out;
    }
    const double tol = std::max(abs_tol, rel_tol * std::fabs(probe.value));
    if (probe.error <= tol) {
        out.value = probe.value;
        out.error = probe.error;
        return out;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, max_depth, out);
    if (std::isfinite(out.value)) adapt(f, m, b, 0.5 * tol, max_depth, out);
    return out;
}

QuadResult integrate_singular_lower(const Integrand& f, double a, double b,
                                    double abs_tol, double rel_tol) {
    QuadResult out;
    if (b <= a) return out;
    double hi = b;
    double lo = a + 0.5 * (b - a);
    for (int k = 0; k < 1000; ++k) {
        QuadResult part = integrate(f, lo, hi, abs_tol * 0.1, rel_tol * 0.1);
        out.value += part.value;
        out.error += part.error;
        out.evals += part.evals;
        if (!std::isfinite(out.value)) {
            out.converged = false;
            return out;
        }
        const double panel = std::fabs(part.value);
        if (k > 4 && panel < std::max(abs_tol, rel_tol * std::fabs(out.value)))
            return out;
        hi = lo;
        lo = a + 0.5 * (lo - a);
        if (hi - a < 1e-300) return out;
    }
    out.converged = false;
    return out;
}

QuadResult integrate_upper_tail(const Integrand& f, double a, double width0,
                                double abs_tol, double rel_tol) {
    QuadResult out;
    double lo = a;
    double w = width0;
    for (int k = 0; k < 2000; ++k) {
        QuadResult part = integrate(f, lo, lo + w, abs_tol * 0.1, rel_tol * 0.1);
        out.value += part.value;
        out.error += part.error;
        out.evals += part.evals;
        if (!std::isfinite(out.value)) {
            out.converged = false;
            return out;
        }
        if (k > 1 && std::fabs(part.value) <
                         std::max(abs_tol, rel_tol * std::fabs(out.value)))
            return out;
        lo += w;
        w *= 2.0;
    }
    out.converged = false;
    return out;
}

namespace {

// Filon-Simpson weights; series below theta = 1/8 where the closed forms
// cancel catastrophically
void filon_weights(double theta, double& alpha, double& beta, double& gamma) {
    if (theta < 0.125) {
        const double t2 = theta * theta;
        alpha = theta * t2 * (2.0 / 45.0 - t2 * (2.0 / 315.0 - t2 * (2.0 / 4725.0)));
        beta = 2.0 / 3.0 + t2 * (2.0 / 15.0 + t2 * (-4.0 / 105.0 + t2 * (2.0 / 567.0)));
        gamma = 4.0 / 3.0 + t2 * (-2.0 / 15.0 + t2 * (1.0 / 210.0 + t2 * (-1.0 / 11340.0)));
        return;
    }
    const double s = std::sin(theta), c = std::cos(theta);
    const double t2 = theta * theta, t3 = t2 * theta;
    alpha = 1.0 / theta + s * c / t2 - 2.0 * s * s / t3;
    beta = 2.0 * ((1.0 + c * c) / t2 - 2.0 * s * c / t3);
    gamma = 4.0 * (s / t3 - c / t2);
}

double filon_pass(const Integrand& g, double a, double b, double omega,
                  std::size_t half_panels, double& envelope_l1) {
    const std::size_t n = 2 * half_panels;  // even number of subintervals
    const double h = (b - a) / static_cast<double>(n);
    double alpha, beta, gamma;
    filon_weights(omega * h, alpha, beta, gamma);
    double even = 0.0, odd = 0.0;
    envelope_l1 = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double x = a + h * static_cast<double>(i);
        const double gv = g(x);
        envelope_l1 += std::fabs(gv) * h;
        const double v = gv * std::cos(omega * x);
        if (i % 2 == 0)
            even += (i == 0 || i == n) ? 0.5 * v : v;
        else
            odd += v;
    }
    const double boundary = g(b) * std::sin(omega * b) - g(a) * std::sin(omega * a);
    return h * (alpha * boundary + beta * even + gamma * odd);
}

}  // namespace

namespace {

QuadResult filon_range(const Integrand& g, double a, double b, double omega,
                       double abs_tol, double rel_tol) {
    QuadResult out;
    double scale = 0.0;
    double prev = filon_pass(g, a, b, omega, 16, scale);
    out.evals = 33;
    for (std::size_t half = 32; half <= (1u << 11); half *= 2) {
        const double cur = filon_pass(g, a, b, omega, half, scale);
        out.evals += static_cast<long>(2 * half + 1);
        const double diff = std::fabs(cur - prev);
        prev = cur;
        // the summation noise floor scales with the envelope's L1 mass
        const double floor = std::max(
            abs_tol, std::max(rel_tol * std::fabs(cur), 5e-16 * scale));
        if (diff <= floor) {
            out.value = cur;
            out.error = diff;
            return out;
        }
    }
    out.value = prev;
    out.converged = false;
    return out;
}

}  // namespace

QuadResult filon_cos(const Integrand& g, double a, double b, double omega,
                     double abs_tol, double rel_tol) {
    omega = std::fabs(omega);
    QuadResult out;
    if (a == b) return out;
    // geometric blocks keep the envelope's variation per block bounded
    double width = (b - a) / 256.0;
    double lo = a;
    while (lo < b) {
        const double hi = std::min(b, lo + width);
        QuadResult part = filon_range(g, lo, hi, omega, 0.125 * abs_tol, rel_tol);
        out.value += part.value;
        out.error += part.error;
        out.evals += part.evals;
        out.converged = out.converged && part.converged;
        lo = hi;
        width *= 2.0;
    }
    return out;
}

QuadResult integrate_oscillatory(const Integrand& f, double a, double b,
                                 double omega, double abs_tol, double rel_tol) {
    omega = std::fabs(omega);
    const double half_period = omega > 0 ? M_PI / omega : (b - a);
    if (half_period >= b - a) return integrate(f, a, b, abs_tol, rel_tol);

    const long npanels = static_cast<long>(std::ceil((b - a) / half_period));
    QuadResult out;
    const double width = (b - a) / static_cast<double>(npanels);
    // per-panel tolerance; panels where the envelope has decayed contribute
    // nothing and exit on the first estimate
    const double ptol = abs_tol / static_cast<double>(npanels);
    for (long i = 0; i < npanels; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = i + 1 == npanels ? b : lo + width;
        QuadResult part = integrate(f, lo, hi, ptol, rel_tol, 24);
        out.value += part.value;
        out.error += part.error;
        out.evals += part.evals;
        out.converged = out.converged && part.converged;
        if (!std::isfinite(out.value)) {
            out.converged = false;
            return out;
        }
    }
    return out;
}

}  // namespace levykit
