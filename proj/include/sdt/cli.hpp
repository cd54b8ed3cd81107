#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdt::cli {

// Runs one command; args excludes the program name. File arguments of "-"
// (the default) read from in; results land on out, errors on err. Returns
// the process exit code: 0 success, 1 domain failure, 2 usage.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace sdt::cli
