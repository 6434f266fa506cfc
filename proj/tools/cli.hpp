#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mediankit::cli {

// Exit codes: 0 property holds / success, 1 property fails (witness in
// the report), 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

} // namespace mediankit::cli
