#include "sdirac/complexfn.hpp"

#include <cmath>
#include <cstdio>

#include "sdirac/errors.hpp"
#include "sdirac/tolerances.hpp"

namespace sdirac {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set). Accurate to
// ~1e-14 relative on the right half-plane.
constexpr double lanczos_g = 607.0 / 128.0;
constexpr double lanczos_c[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

Complex lanczos_log_gamma(Complex z) {
    // requires Re z > 0; evaluated via Gamma(z) = Gamma(z+1)/z for stability
    z -= 1.0;
    Complex sum = lanczos_c[0];
    for (int k = 1; k < 15; ++k) sum += lanczos_c[k] / (z + static_cast<double>(k));
    Complex t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * PI) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// log(sin(pi z)) with the branch handled through the exponential form, so
// the reflection formula stays accurate for large |Im z|.
Complex log_sin_pi(Complex z) {
    const Complex iz = I * (PI * z);
    if (z.imag() > 0.0)
        return -I * (PI / 2.0) - std::log(2.0) - iz + std::log(std::exp(2.0 * iz) - 1.0);
    return -I * (PI / 2.0) - std::log(2.0) + iz + std::log(1.0 - std::exp(-2.0 * iz));
}

bool near_nonpositive_integer(Complex z, double guard, int* which = nullptr) {
    if (z.real() > 0.5) return false;
    const double rn = std::round(z.real());
    if (rn > 0.0) return false;
    if (std::abs(z.real() - rn) <= guard && std::abs(z.imag()) <= guard) {
        if (which) *which = static_cast<int>(-rn);
        return true;
    }
    return false;
}

} // namespace

Complex log_gamma_right_half(Complex z) {
    if (!(z.real() > 0.0)) throw DomainError("log_gamma_right_half: Re z must be positive");
    return lanczos_log_gamma(z);
}

Complex gamma_complex(Complex z) {
    int k = 0;
    if (near_nonpositive_integer(z, tol::gamma_pole_guard, &k)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "gamma_complex: pole at z = -%d", k);
        throw PoleError(buf);
    }
    if (z.real() >= 0.5) return std::exp(lanczos_log_gamma(z));
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
    return std::exp(std::log(PI) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z));
}

namespace {

// ascending series I_nu(z) = sum_k (z/2)^{nu+2k} / (k! Gamma(nu+k+1)),
// nu = order (half-integer), evaluated in a cancellation-free way
Complex bessel_i_series(double nu, Complex z) {
    const Complex zh = 0.5 * z;
    const Complex zh2 = zh * zh;
    // leading coefficient (z/2)^nu / Gamma(nu+1)
    Complex term = std::exp(nu * std::log(zh) - lanczos_log_gamma(Complex{nu + 1.0, 0.0}));
    Complex sum = term;
    for (int k = 1; k <= tol::bessel_max_terms; ++k) {
        term *= zh2 / (static_cast<double>(k) * (nu + static_cast<double>(k)));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
    }
    throw ConvergenceError("bessel_i_half_order: ascending series did not converge");
}

} // namespace

namespace {

// shared driver: scaled == true computes I_nu(z) e^{-z}
Complex bessel_i_half_impl(HalfInt order, Complex z, bool scaled) {
    if (order.is_integer() || order.twice < 1)
        throw DomainError("bessel_i_half_order: order must be a half-integer >= 1/2");
    if (z == Complex{0.0, 0.0})
        throw DomainError("bessel_i_half_order: z = 0");

    const double nu = order.value();
    const double az = std::abs(z);

    if (az < tol::bessel_series_cut * std::max(1.0, nu) || az < 2.0) {
        const Complex i = bessel_i_series(nu, z);
        return scaled ? i * std::exp(-z) : i;
    }

    // elementary start I_{-1/2}, I_{+1/2}, then upward recurrence
    // I_{nu+1} = I_{nu-1} - (2 nu / z) I_nu  (stable for |z| >~ nu);
    // the recurrence is linear, so the e^{-z} scaling rides along
    const Complex pref = std::sqrt(2.0 / (PI * z));
    Complex im, ic;
    if (scaled) {
        // cosh(z) e^{-z} = (1 + e^{-2z})/2, sinh(z) e^{-z} = (1 - e^{-2z})/2
        const Complex e2 = std::exp(-2.0 * z);
        im = pref * 0.5 * (1.0 + e2);
        ic = pref * 0.5 * (1.0 - e2);
    } else {
        im = pref * std::cosh(z);
        ic = pref * std::sinh(z);
    }
    int twice_nu = 1;
    while (twice_nu < order.twice) {
        const Complex next = im - (static_cast<double>(twice_nu) / z) * ic;
        im = ic;
        ic = next;
        twice_nu += 2;
    }
    return ic;
}

} // namespace

Complex bessel_i_half_order(HalfInt order, Complex z) {
    return bessel_i_half_impl(order, z, false);
}

Complex bessel_i_half_order_scaled(HalfInt order, Complex z) {
    return bessel_i_half_impl(order, z, true);
}

Complex bessel_i_scaled(double nu, Complex z) {
    if (nu < 0.0) throw DomainError("bessel_i_scaled: order >= 0");
    if (z == Complex{0.0, 0.0}) return nu == 0.0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    const double az = std::abs(z);
    if (az < 30.0 || az < 1.5 * nu) return bessel_i_series(nu, z) * std::exp(-z);

    // large-|z| expansion, both exponential branches, scaled by e^{-z}:
    // I_nu(z) e^{-z} = P(z)/sqrt(2 pi z) + e^{-2z -+ (nu+1/2) pi i} Q(z)/sqrt(2 pi z)
    const double mu4 = 4.0 * nu * nu;
    Complex termP{1.0, 0.0}, sumP = termP;
    Complex termQ{1.0, 0.0}, sumQ = termQ;
    double bestP = 1.0;
    for (int k = 1; k <= 50; ++k) {
        const double num = mu4 - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        termP *= -num / (8.0 * k) / z;
        termQ *= num / (8.0 * k) / z;
        if (std::abs(termP) > bestP) break; // divergent tail of the asymptotic series
        bestP = std::abs(termP);
        sumP += termP;
        sumQ += termQ;
        if (std::abs(termP) < 1e-17 * std::abs(sumP)) break;
    }
    const double sgn = (z.imag() >= 0.0) ? 1.0 : -1.0;
    const Complex reflect = std::exp(-2.0 * z - sgn * I * (nu + 0.5) * PI);
    return (sumP + reflect * sumQ) / std::sqrt(2.0 * PI * z);
}

Complex sph_bessel_i(int l, Complex z) {
    if (l < 0) throw DomainError("sph_bessel_i: l >= 0");
    if (std::abs(z) < 1e-8) {
        // i_l(z) ~ z^l / (2l+1)!!
        double dfact = 1.0;
        for (int k = 2 * l + 1; k > 1; k -= 2) dfact *= k;
        return std::pow(z, l) / dfact * (1.0 + z * z / (2.0 * (2.0 * l + 3.0)));
    }
    return std::sqrt(PI / (2.0 * z)) * bessel_i_half_order(HalfInt{2 * l + 1}, z);
}

Complex sph_bessel_k(int l, Complex z) {
    if (l < 0) throw DomainError("sph_bessel_k: l >= 0");
    if (!(z.real() > 0.0)) throw DomainError("sph_bessel_k: Re z > 0 required");
    // k_l(z) = (pi/2) e^{-z}/z * sum_{k<=l} (l+k)! / (k! (l-k)! (2z)^k)
    Complex sum = 0.0;
    double coef = 1.0;
    for (int k = 0; k <= l; ++k) {
        if (k > 0) coef *= static_cast<double>((l + k) * (l - k + 1)) / k;
        sum += coef * std::pow(2.0 * z, -k);
    }
    return 0.5 * PI * std::exp(-z) / z * sum;
}

Complex kummer_m(Complex a, Complex b, Complex x) {
    int k0 = 0;
    if (near_nonpositive_integer(b, tol::gamma_pole_guard, &k0))
        throw PoleError("kummer_m: b is a non-positive integer");
    Complex term{1.0, 0.0};
    Complex sum = term;
    int small_run = 0;
    for (int k = 0; k < tol::kummer_max_terms; ++k) {
        const double dk = static_cast<double>(k);
        term *= (a + dk) * x / ((b + dk) * (dk + 1.0));
        sum += term;
        // two consecutive small terms, so a lone near-zero factor (a+k)
        // cannot end the series prematurely
        if (std::abs(term) <= tol::kummer_rel_eps * std::abs(sum)) {
            if (++small_run >= 2 && k > 3) return sum;
        } else {
            small_run = 0;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "kummer_m: series not converged after %d terms (|a|=%.3g, |b|=%.3g, |x|=%.3g)",
                  tol::kummer_max_terms, std::abs(a), std::abs(b), std::abs(x));
    throw ConvergenceError(buf);
}

Complex whittaker_m(Complex nu, Complex rho, Complex x) {
    const Complex b = 1.0 + 2.0 * rho;
    if (near_nonpositive_integer(b, tol::gamma_pole_guard))
        throw PoleError("whittaker_m: 1+2rho is a non-positive integer");
    const Complex a = rho - nu + 0.5;
    return std::exp(-0.5 * x) * std::pow(x, rho + 0.5) * kummer_m(a, b, x);
}

namespace {

// Tricomi U(a,b,x) through the two-Kummer combination. Valid away from
// integer b; the caller handles the logarithmic case.
Complex tricomi_u_generic(Complex a, Complex b, Complex x) {
    const Complex t1 = gamma_complex(1.0 - b) / gamma_complex(a - b + 1.0) * kummer_m(a, b, x);
    const Complex t2 = gamma_complex(b - 1.0) / gamma_complex(a) * std::pow(x, 1.0 - b) *
                       kummer_m(a - b + 1.0, 2.0 - b, x);
    return t1 + t2;
}

// asymptotic 2F0 expansion of U(a,b,x) for large |x|, truncated at the
// smallest term
Complex tricomi_u_asymptotic(Complex a, Complex b, Complex x, int* terms_used) {
    Complex term{1.0, 0.0};
    Complex sum = term;
    double best = std::abs(term);
    Complex best_sum = sum;
    for (int k = 0; k < tol::w_asymptotic_max_terms; ++k) {
        const double dk = static_cast<double>(k);
        term *= -(a + dk) * (a - b + 1.0 + dk) / ((dk + 1.0) * x);
        sum += term;
        const double at = std::abs(term);
        if (at < best) {
            best = at;
            best_sum = sum;
        } else if (at > 10.0 * best) {
            break; // divergent tail reached
        }
        if (at <= 1e-16 * std::abs(sum)) {
            best_sum = sum;
            break;
        }
        if (terms_used) *terms_used = k + 1;
    }
    return std::pow(x, -a) * best_sum;
}

// U(a, n+eps, x): the a -> non-positive-integer case degenerates to the
// polynomial branch; the generic combination handles it through the Gamma
// poles as long as we stay off exact integers, which the caller guarantees
// by the rho perturbation.
Complex tricomi_u(Complex a, Complex b, Complex x, WhittakerInfo* info) {
    if (std::abs(x) > tol::w_asymptotic_cut) {
        if (info) info->asymptotic_used = true;
        int t = 0;
        Complex u = tricomi_u_asymptotic(a, b, x, &t);
        if (info) info->terms = t;
        return u;
    }
    // Gamma(a) pole: a = -n means W reduces to the polynomial (bound-state)
    // branch, where the second term vanishes; take the surviving term.
    int npole = 0;
    if (near_nonpositive_integer(a, tol::gamma_pole_guard, &npole)) {
        return gamma_complex(1.0 - b) / gamma_complex(a - b + 1.0) * kummer_m(a, b, x);
    }
    if (near_nonpositive_integer(a - b + 1.0, tol::gamma_pole_guard, &npole)) {
        return gamma_complex(b - 1.0) / gamma_complex(a) * std::pow(x, 1.0 - b) *
               kummer_m(a - b + 1.0, 2.0 - b, x);
    }
    return tricomi_u_generic(a, b, x);
}

} // namespace

Complex whittaker_w(Complex nu, Complex rho, Complex x, WhittakerInfo* info) {
    if (!(x.real() > 0.0))
        throw DomainError("whittaker_w: x must lie in the right half-plane");

    WhittakerInfo local;
    WhittakerInfo* wi = info ? info : &local;

    const Complex b = 1.0 + 2.0 * rho;
    const double bn = std::round(b.real());
    const bool log_case =
        std::abs(b.real() - bn) <= tol::w_log_guard && std::abs(b.imag()) <= tol::w_log_guard;

    Complex u;
    if (log_case) {
        wi->logarithmic_case = true;
        // limit through rho +- delta; averaging cancels the O(delta) term
        const double d = tol::w_log_delta;
        const Complex rp = rho + d, rm = rho - d;
        const Complex up = tricomi_u(rp - nu + 0.5, 1.0 + 2.0 * rp, x, wi);
        const Complex um = tricomi_u(rm - nu + 0.5, 1.0 + 2.0 * rm, x, wi);
        // the e^{-x/2} x^{rho+1/2} prefactor uses the perturbed rho as well,
        // so each branch is an exact Whittaker W value
        const Complex wp = std::exp(-0.5 * x) * std::pow(x, rp + 0.5) * up;
        const Complex wm = std::exp(-0.5 * x) * std::pow(x, rm + 0.5) * um;
        return 0.5 * (wp + wm);
    }
    u = tricomi_u(rho - nu + 0.5, b, x, wi);
    return std::exp(-0.5 * x) * std::pow(x, rho + 0.5) * u;
}

double assoc_laguerre(int n, double alpha, double x) {
    if (n < 0) throw DomainError("assoc_laguerre: n >= 0");
    if (!(alpha > -1.0)) throw DomainError("assoc_laguerre: alpha > -1");
    if (n == 0) return 1.0;
    double lm = 1.0;              // L_0
    double lc = 1.0 + alpha - x;  // L_1
    for (int k = 1; k < n; ++k) {
        const double ln = ((2.0 * k + 1.0 + alpha - x) * lc - (k + alpha) * lm) / (k + 1.0);
        lm = lc;
        lc = ln;
    }
    return lc;
}

double assoc_legendre(int l, int m, double x) {
    if (m < 0 || m > l) throw DomainError("assoc_legendre: need 0 <= m <= l");
    // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, then upward in l
    double pmm = 1.0;
    if (m > 0) {
        const double somx2 = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
        double fact = 1.0;
        for (int i = 1; i <= m; ++i) {
            pmm *= -fact * somx2;
            fact += 2.0;
        }
    }
    if (l == m) return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

Complex spherical_harmonic(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l) throw DomainError("spherical_harmonic: need |m| <= l");
    const int am = std::abs(m);
    // sqrt((2l+1)/(4 pi) * (l-|m|)!/(l+|m|)!)
    double logfac = 0.0;
    for (int k = l - am + 1; k <= l + am; ++k) logfac += std::log(static_cast<double>(k));
    const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * PI) * std::exp(-logfac));
    const double plm = assoc_legendre(l, am, std::cos(theta));
    Complex y = norm * plm * std::exp(I * (am * phi));
    if (m < 0) {
        y = std::conj(y);
        if (am % 2 == 1) y = -y;
    }
    return y;
}

} // namespace sdirac
