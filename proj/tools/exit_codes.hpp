#ifndef CRN_TOOLS_EXIT_CODES_HPP
#define CRN_TOOLS_EXIT_CODES_HPP

namespace crn::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnsettled = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitBadInput = 4;

}  // namespace crn::tools

#endif
