#pragma once

// Verification pipelines behind the CLI commands. Each appends named checks
// to a VerificationReport; algebraic failures become failed checks with
// witnesses, while SpecError and CapError propagate to the caller.

#include <vector>

#include "kernatom/action.hpp"
#include "kernatom/homomorphism.hpp"
#include "kernatom/limits.hpp"
#include "kernatom/linear.hpp"
#include "kernatom/report.hpp"
#include "kernatom/spec_io.hpp"

namespace kernatom {

void check_homomorphism(VerificationReport& report, const Homomorphism& f, const Limits& limits);
void check_action(VerificationReport& report, const GroupAction& action, const Limits& limits);
void check_linear_system(VerificationReport& report, const ExactMatrix& m, const Vector& b,
                         const std::vector<Vector>& samples, const Limits& limits);

// Ten deterministic coefficient tuples of length dimension: all zeros, all
// ones, then pseudo-random entries drawn from limits.seed.
std::vector<Vector> default_coefficient_samples(const Field& field, std::size_t dimension, const Limits& limits);

VerificationReport verify_group_spec(const spec::SpecFile& file, const Limits& limits);
VerificationReport verify_hom_spec(const spec::SpecFile& file, const Limits& limits);
VerificationReport verify_action_spec(const spec::SpecFile& file, const Limits& limits);
VerificationReport solve_spec(const spec::SpecFile& file, const Limits& limits);

// Dispatches on the spec kind.
VerificationReport run_spec(const spec::SpecFile& file, const Limits& limits);

}  // namespace kernatom
