#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bss {

/// Entry point of the `bss` tool. Returns 0 on success, 1 when an analysis
/// is falsified, 2 on a usage error.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bss
