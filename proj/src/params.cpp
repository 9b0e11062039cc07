#include "sdirac/params.hpp"

#include <algorithm>
#include <cmath>

namespace sdirac {

double SampledFunction::eval(const std::vector<double>& f, double xv) const {
    if (xv <= x.front()) return f.front();
    if (xv >= x.back()) return f.back();
    const auto it = std::upper_bound(x.begin(), x.end(), xv);
    const std::size_t i = static_cast<std::size_t>(it - x.begin());
    const double t = (xv - x[i - 1]) / (x[i] - x[i - 1]);
    return (1.0 - t) * f[i - 1] + t * f[i];
}

std::string model_name(const ModelSpec& ms) {
    struct Visitor {
        std::string operator()(const FreeDirac&) const { return "free"; }
        std::string operator()(const FreeDiracBrokenSusy&) const { return "free-broken"; }
        std::string operator()(const DiracOscillator&) const { return "dirac-oscillator"; }
        std::string operator()(const LinearSuperpotential&) const { return "linear"; }
        std::string operator()(const RadialSuperpotential&) const { return "radial-superpotential"; }
        std::string operator()(const Witten1D&) const { return "witten-1d"; }
        std::string operator()(const DiracOscillator1D&) const { return "dirac-oscillator-1d"; }
    };
    return std::visit(Visitor{}, ms);
}

void validate(const ModelSpec& ms) {
    if (const auto* osc = std::get_if<DiracOscillator>(&ms)) {
        if (!(osc->omega > 0.0)) throw DomainError("DiracOscillator: omega > 0");
    } else if (const auto* lin = std::get_if<LinearSuperpotential>(&ms)) {
        if (!(lin->gamma > 0.0)) throw DomainError("LinearSuperpotential: gamma > 0");
    } else if (const auto* rad = std::get_if<RadialSuperpotential>(&ms)) {
        rad->U.validate();
        if (rad->U.x.front() < 0.0) throw DomainError("RadialSuperpotential: r >= 0");
    } else if (const auto* wit = std::get_if<Witten1D>(&ms)) {
        wit->U.validate();
    } else if (const auto* osc1 = std::get_if<DiracOscillator1D>(&ms)) {
        if (!(osc1->omega > 0.0)) throw DomainError("DiracOscillator1D: omega > 0");
    }
}

} // namespace sdirac
