#ifndef LCPS_ORACLE_HPP
#define LCPS_ORACLE_HPP

#include "lcps/core.hpp"

namespace lcps {

inline constexpr Pos kOracleMaxLength = 20;

/*
 * Exhaustive LCPS: walks every position subset of x from largest to
 * smallest and returns the first whose induced string is a palindrome that
 * also embeds in y. Exponential in |x|; ground truth for tests only.
 *
 * Throws InputTooLarge when |x| > kOracleMaxLength.
 */
CpsResult brute_force_lcps(const Seq& x, const Seq& y);

} // namespace lcps

#endif // LCPS_ORACLE_HPP
