#pragma once

#include "flatspin/surface.hpp"

namespace flatspin {

enum class Family { Apolar, Polar, Dipolar };

const char* family_name(Family f);

struct FamilySpec {
    Family family;
    unsigned genus; // g >= 2
    unsigned k;     // 1 <= k <= g
};

// Fan of N unit rhombi with angle 2*pi*k/N at the shared vertex O, chained
// cyclically; coordinates in Q(zeta_N). Requires 1 <= k < (N+1)/2.
TranslationSurface spingon(unsigned n, unsigned k);

// Fan of N unit rhombi with angle pi*(2k-1)/N at O; the open ends close up
// across the half turn. Coordinates in Q(zeta_2N). Requires 1 <= k <= N/2.
TranslationSurface half_spingon(unsigned n, unsigned k);

// Regular n-gon (n even) with opposite sides identified.
TranslationSurface regular_ngon(unsigned n);

// Regular n-gon together with its half-turn image, sides glued to their
// rotational images. Any n >= 3; for even n the image polygon coincides with
// the original as a point set, which is fine (the surface is abstract).
TranslationSurface double_ngon(unsigned n);

// Billiard unfolding of the right triangle with angles
// (pi/2, pi*a/M, pi*b/M), 2(a+b) == M: reflected copies are identified when
// their linear parts agree, and boundary edges are glued by translation.
// Result lives over Q(zeta_2M).
TranslationSurface unfold_right_triangle(unsigned a, unsigned b, unsigned m);

// Theorem-level dispatch: Apolar -> spingon(2g+2, k), Polar -> spingon(2g+1, k),
// Dipolar -> half_spingon(2g, k).
TranslationSurface build_family(const FamilySpec& spec);

// N of the family member: 2g+2, 2g+1 or 2g.
unsigned family_n(const FamilySpec& spec);

// Triangle parameters (a, b, M) of the family's billiard table.
struct TriangleAngles {
    unsigned a, b, m;
};
TriangleAngles family_triangle(const FamilySpec& spec);

} // namespace flatspin
