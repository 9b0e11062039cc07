#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdirac/oracles.hpp"

namespace sdirac {

// Named verification jobs grouped into the CLI suites
// {algebra, spectra, kernels, intertwining, limits, all}. Every tolerance is
// pinned here; the acceptance binary and `verify` both run these.

VerificationReport verify_algebra_on_grids(const PhysicalParams& p);      // free, broken, oscillator
VerificationReport verify_spectral_map(const PhysicalParams& p);          // H_D eigenvalues vs map
VerificationReport verify_closed_vs_fd_spectra(const PhysicalParams& p);  // closed forms vs FD
VerificationReport verify_intertwining(const PhysicalParams& p);          // SUSY maps + annihilation
VerificationReport verify_kernel_poles(const PhysicalParams& p);          // pole scans vs spectra
VerificationReport verify_promotor_quadrature(const PhysicalParams& p);   // quadrature vs kernels
VerificationReport verify_free_green(const PhysicalParams& p);            // (H_D - z) residual, Yukawa
VerificationReport verify_residue_identity(const PhysicalParams& p);      // residue = -u0 u0
VerificationReport verify_angular_suite(const PhysicalParams& p);         // orthonormality, flip, kappa
VerificationReport verify_appendix_c_spectrum(const PhysicalParams& p);   // 1D Dirac oscillator
VerificationReport verify_nonrelativistic_limit(const PhysicalParams& p); // c -> inf order
VerificationReport verify_broken_susy(const PhysicalParams& p);           // broken free realisation

struct SuiteRun {
    std::vector<VerificationReport> reports;
    bool pass() const {
        for (const auto& r : reports)
            if (!r.pass()) return false;
        return true;
    }
};

/// Run one of {algebra, spectra, kernels, intertwining, limits, all}.
/// `model_filter` (a model_name string) restricts the algebra suite to one
/// model. Jobs run concurrently when `parallel`; reports are merged in a
/// fixed order regardless.
SuiteRun run_suite(const std::string& suite, const std::optional<std::string>& model_filter,
                   const PhysicalParams& p, bool parallel);

std::string suite_report_json(const SuiteRun& run);

} // namespace sdirac
