#pragma once

#include <stdexcept>
#include <string>

namespace lfkit {

// All recoverable numerical failures carry a short machine-readable code
// so the CLI can serialize them without string matching.
class numeric_error : public std::runtime_error {
public:
    numeric_error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct pole_error : numeric_error {
    explicit pole_error(const std::string& what) : numeric_error("PoleAtOne", what) {}
};

struct pole_in_disc_error : numeric_error {
    explicit pole_in_disc_error(const std::string& what) : numeric_error("PoleInDisc", what) {}
};

struct precision_error : numeric_error {
    explicit precision_error(const std::string& what) : numeric_error("PrecisionUnreachable", what) {}
};

struct outside_convergence_error : numeric_error {
    explicit outside_convergence_error(const std::string& what) : numeric_error("OutsideConvergence", what) {}
};

struct zero_on_contour_error : numeric_error {
    explicit zero_on_contour_error(const std::string& what) : numeric_error("ZeroOnContour", what) {}
};

struct phase_step_error : numeric_error {
    explicit phase_step_error(const std::string& what) : numeric_error("PhaseStepTooLarge", what) {}
};

struct degenerate_seed_error : numeric_error {
    explicit degenerate_seed_error(const std::string& what) : numeric_error("DegenerateSeed", what) {}
};

struct step_collapse_error : numeric_error {
    explicit step_collapse_error(const std::string& what) : numeric_error("StepCollapse", what) {}
};

struct insufficient_arc_error : numeric_error {
    explicit insufficient_arc_error(const std::string& what) : numeric_error("InsufficientArc", what) {}
};

struct foreign_zero_error : numeric_error {
    explicit foreign_zero_error(const std::string& what) : numeric_error("ForeignZeroInPatch", what) {}
};

struct branch_assembly_error : numeric_error {
    explicit branch_assembly_error(const std::string& what) : numeric_error("BranchAssemblyFailed", what) {}
};

struct inverse_not_found_error : numeric_error {
    explicit inverse_not_found_error(const std::string& what) : numeric_error("InverseNotFound", what) {}
};

struct not_injective_error : numeric_error {
    explicit not_injective_error(const std::string& what) : numeric_error("NotInjective", what) {}
};

struct region_unresolved_error : numeric_error {
    explicit region_unresolved_error(const std::string& what) : numeric_error("RegionUnresolved", what) {}
};

struct factor_vanishes_error : numeric_error {
    explicit factor_vanishes_error(const std::string& what) : numeric_error("FactorVanishes", what) {}
};

struct tangent_undefined_error : numeric_error {
    explicit tangent_undefined_error(const std::string& what) : numeric_error("TangentUndefined", what) {}
};

struct parse_error : numeric_error {
    explicit parse_error(const std::string& what) : numeric_error("ParseError", what) {}
};

struct config_error : numeric_error {
    config_error(std::string code, const std::string& what) : numeric_error(std::move(code), what) {}
};

}  // namespace lfkit
