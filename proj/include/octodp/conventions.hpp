#pragma once

namespace octodp {

// Which side of a lifted configuration is read off. Subdivisions induced by
// heights (coefficient valuations, representative weights) take the lower
// hull; initial terms of the toric ideal take the highest weight. The two
// agree: the w-highest monomial of a binomial is a non-face of the lower hull
// subdivision for w. Initial monomials of E_A for the same w are the lowest.
enum class HullSide { Lower, Upper };
enum class InitialTerm { Lowest, Highest };

inline constexpr HullSide kSubdivisionHull = HullSide::Lower;
inline constexpr InitialTerm kToricInitialTerm = InitialTerm::Highest;
inline constexpr InitialTerm kPrincipalDeterminantInitialTerm = InitialTerm::Lowest;

}  // namespace octodp
