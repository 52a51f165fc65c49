#ifndef XWB_SELFTEST_HPP
#define XWB_SELFTEST_HPP

#include <iosfwd>

namespace xwb {

// Minimal-parameter property suites, one per module; used by `--selftest`.
bool selftest_coeffring(std::ostream& log);
bool selftest_latmat(std::ostream& log);
bool selftest_isocrystal(std::ostream& log);
bool selftest_weyl(std::ostream& log);
bool selftest_braid(std::ostream& log);
bool selftest_dlspace(std::ostream& log);
bool selftest_all(std::ostream& log);

}  // namespace xwb

#endif
