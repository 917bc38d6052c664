// Command-line front end; exposed as a library function so tests can drive it
// in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pim {

struct RunConfig {
    long precision = 64;  // decimal digits, >= 32
    int jobs = 1;
    std::string cache_dir;
    std::string format = "text";  // text | json | csv
};

// argv without the program name.  Returns the process exit status:
// 0 ok, 1 certificate/check failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pim
