#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sdirac/errors.hpp"

namespace sdirac {

// Physical constants of a run. Defaults are natural units m = m0 = c = hbar = 1.
// The mass parameter m sets the Schroedinger reduction H_SUSY = H_D^2 / (2 m c^2);
// m0 is the rest mass entering M0 = m0 c^2.
struct PhysicalParams {
    double m = 1.0;
    double m0 = 1.0;
    double c = 1.0;
    double hbar = 1.0;

    double M0() const { return m0 * c * c; }
    double rest_energy_sq() const { return M0() * M0(); }
    // a = 1/(2 m c^2), the scale relating H_D^2 to H_SUSY
    double a() const { return 1.0 / (2.0 * m * c * c); }

    void validate() const {
        if (!(m > 0.0) || !(c > 0.0) || !(hbar > 0.0) || m0 < 0.0)
            throw DomainError("PhysicalParams: require m > 0, c > 0, hbar > 0, m0 >= 0");
    }
};

// Sampled superpotential for models supplied numerically. Grids must match
// across value/first/second derivative.
struct SampledFunction {
    std::vector<double> x;   // abscissae, strictly increasing
    std::vector<double> u;   // U(x)
    std::vector<double> du;  // U'(x)
    std::vector<double> d2u; // U''(x)

    void validate() const {
        if (x.size() < 2 || x.size() != u.size() || x.size() != du.size() || x.size() != d2u.size())
            throw DomainError("SampledFunction: component sizes disagree or too few samples");
        for (std::size_t i = 1; i < x.size(); ++i)
            if (!(x[i] > x[i - 1])) throw DomainError("SampledFunction: abscissae must increase");
    }

    // linear interpolation; clamped at the ends
    double eval(const std::vector<double>& f, double xv) const;
    double value(double xv) const { return eval(u, xv); }
    double deriv(double xv) const { return eval(du, xv); }
    double deriv2(double xv) const { return eval(d2u, xv); }
};

struct FreeDirac {};
struct FreeDiracBrokenSusy {};        // supersymmetric representation, M0 = 0
struct DiracOscillator { double omega = 1.0; };
struct LinearSuperpotential { double gamma = 1.0; };
struct RadialSuperpotential { SampledFunction U; };
struct Witten1D { SampledFunction U; };          // one-dimensional, x on the full line
struct DiracOscillator1D { double omega = 1.0; };

using ModelSpec = std::variant<FreeDirac, FreeDiracBrokenSusy, DiracOscillator,
                               LinearSuperpotential, RadialSuperpotential,
                               Witten1D, DiracOscillator1D>;

inline bool is_spherical(const ModelSpec& ms) {
    return std::holds_alternative<FreeDirac>(ms) || std::holds_alternative<DiracOscillator>(ms) ||
           std::holds_alternative<LinearSuperpotential>(ms) ||
           std::holds_alternative<RadialSuperpotential>(ms);
}

inline bool is_one_dimensional(const ModelSpec& ms) {
    return std::holds_alternative<Witten1D>(ms) || std::holds_alternative<DiracOscillator1D>(ms);
}

std::string model_name(const ModelSpec& ms);

void validate(const ModelSpec& ms);

enum class SusyStatus { Unbroken, Broken };

struct SusyClassification {
    SusyStatus status = SusyStatus::Broken;
    int zero_mode_sector = 0; // +1, -1, or 0 for none
    std::string degeneracy_note;

    bool unbroken() const { return status == SusyStatus::Unbroken; }
};

} // namespace sdirac
