#pragma once

#include <string>
#include <vector>

#include "flatspin/complexes.hpp"
#include "flatspin/constructors.hpp"
#include "flatspin/equivalence.hpp"

namespace flatspin {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct VerificationReport {
    FamilySpec spec;
    std::vector<CheckResult> checks;

    bool overall() const;
    std::string case_id() const; // e.g. "polar g=3 k=1"
};

// Eigenvalue of the family automorphism acting on the eigenform: the
// derivative of the flat rotation.
Cyclo family_eigenvalue(const FamilySpec& spec);

// order of the family automorphism: 2g+2, 2g+1, 4g
unsigned family_symmetry_order(const FamilySpec& spec);

// All checks for one (family, g, k): stratum, eigenvalue symmetry and its
// order, hyperellipticity with 2g+2 fixed points, rotation partners,
// n-gon similarities, diagonal-triangulation quotients, billiard unfolding.
VerificationReport verify_case(const FamilySpec& spec);

std::vector<VerificationReport> verify_range(const std::vector<Family>& families, unsigned g_min,
                                             unsigned g_max);

// The hyperelliptic involution of the refined diagonal surface at the
// polygon-presentation level (rotates every rhombus cell group to itself),
// and the fan rotation (shifts rhombus group i to i+1).
struct DiagonalSymmetries {
    PresentationSymmetry involution;
    PresentationSymmetry rotation;
};
DiagonalSymmetries diagonal_symmetries(const DiagonalTriangulation& t, const Cyclo& eigenvalue);

} // namespace flatspin
