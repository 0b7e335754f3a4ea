#pragma once

namespace adjoint::fixtures {

// Invariant polynomial of the B3 subadjoint Chow hypersurface, listed
// term by term in the reference order.
inline constexpr const char* kB3InvariantText =
    "+4*u12^6 +1*u11^2*u12^4 +12*u13^2*u12^4 +1*u22^2*u12^4 +12*u23^2*u12^4 -8*u33^2*u12^4 "
    "-10*u11*u22*u12^4 +8*u11*u33*u12^4 +8*u22*u33*u12^4 -36*u11*u13*u23*u12^3 "
    "-36*u13*u22*u23*u12^3 +72*u13*u23*u33*u12^3 +12*u13^4*u12^2 +12*u23^4*u12^2 +4*u33^4*u12^2 "
    "-2*u11*u22^3*u12^2 -8*u11*u33^3*u12^2 -8*u22*u33^3*u12^2 +2*u11^2*u13^2*u12^2 "
    "+8*u11^2*u22^2*u12^2 +20*u13^2*u22^2*u12^2 +20*u11^2*u23^2*u12^2 -84*u13^2*u23^2*u12^2 "
    "+2*u22^2*u23^2*u12^2 -2*u11*u22*u23^2*u12^2 +2*u11^2*u33^2*u12^2 +20*u13^2*u33^2*u12^2 "
    "+2*u22^2*u33^2*u12^2 +20*u23^2*u33^2*u12^2 +20*u11*u22*u33^2*u12^2 -2*u11^3*u22*u12^2 "
    "-2*u11*u13^2*u22*u12^2 +2*u11^3*u33*u12^2 +2*u22^3*u33*u12^2 -2*u11*u13^2*u33*u12^2 "
    "-10*u11*u22^2*u33*u12^2 -38*u11*u23^2*u33*u12^2 -2*u22*u23^2*u33*u12^2 "
    "-10*u11^2*u22*u33*u12^2 -38*u13^2*u22*u33*u12^2 +72*u11*u13*u23^3*u12 "
    "-36*u13*u22*u23^3*u12 -8*u13*u23*u33^3*u12 +12*u11*u13*u23*u33^2*u12 "
    "+12*u13*u22*u23*u33^2*u12 -36*u11*u13^3*u23*u12 -8*u13*u22^3*u23*u12 "
    "+12*u11*u13*u22^2*u23*u12 -8*u11^3*u13*u23*u12 +72*u13^3*u22*u23*u12 "
    "+12*u11^2*u13*u22*u23*u12 -36*u13*u23^3*u33*u12 -36*u13^3*u23*u33*u12 "
    "+12*u13*u22^2*u23*u33*u12 +12*u11^2*u13*u23*u33*u12 -48*u11*u13*u22*u23*u33*u12 +4*u13^6 "
    "+4*u23^6 +1*u11^2*u13^4 +1*u11^2*u22^4 +4*u13^2*u22^4 -8*u11^2*u23^4 +12*u13^2*u23^4 "
    "+1*u22^2*u23^4 +8*u11*u22*u23^4 +1*u11^2*u33^4 +1*u22^2*u33^4 -2*u11*u22*u33^4 "
    "-2*u11^3*u22^3 -8*u11*u13^2*u22^3 -2*u11^3*u33^3 -2*u22^3*u33^3 -2*u11*u13^2*u33^3 "
    "+2*u11*u22^2*u33^3 +2*u11*u23^2*u33^3 -2*u22*u23^2*u33^3 +2*u11^2*u22*u33^3 "
    "+2*u13^2*u22*u33^3 +1*u11^4*u22^2 -8*u13^4*u22^2 +2*u11^2*u13^2*u22^2 +4*u11^4*u23^2 "
    "+12*u13^4*u23^2 +2*u11*u22^3*u23^2 +20*u11^2*u13^2*u23^2 +2*u11^2*u22^2*u23^2 "
    "+20*u13^2*u22^2*u23^2 -8*u11^3*u22*u23^2 -38*u11*u13^2*u22*u23^2 +1*u11^4*u33^2 "
    "+1*u13^4*u33^2 +1*u22^4*u33^2 +1*u23^4*u33^2 +2*u11*u22^3*u33^2 +8*u11^2*u13^2*u33^2 "
    "-6*u11^2*u22^2*u33^2 +2*u13^2*u22^2*u33^2 +2*u11^2*u23^2*u33^2 +2*u13^2*u23^2*u33^2 "
    "+8*u22^2*u23^2*u33^2 -10*u11*u22*u23^2*u33^2 +2*u11^3*u22*u33^2 -10*u11*u13^2*u22*u33^2 "
    "+8*u11*u13^4*u22 +2*u11^3*u13^2*u22 -10*u11*u13^4*u33 -2*u11*u22^4*u33 +8*u11*u23^4*u33 "
    "-10*u22*u23^4*u33 +2*u11^2*u22^3*u33 -8*u13^2*u22^3*u33 -2*u11^3*u13^2*u33 "
    "+2*u11^3*u22^2*u33 +20*u11*u13^2*u22^2*u33 -8*u11^3*u23^2*u33 -2*u22^3*u23^2*u33 "
    "-2*u11*u13^2*u23^2*u33 -10*u11*u22^2*u23^2*u33 +20*u11^2*u22*u23^2*u33 "
    "-2*u13^2*u22*u23^2*u33 -2*u11^4*u22*u33 +8*u13^4*u22*u33 -10*u11^2*u13^2*u22*u33 ";

}  // namespace adjoint::fixtures
