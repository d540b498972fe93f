#include "betatrace/errors.hpp"

#include <cstdio>

namespace betatrace {

void log_warning(const std::string& message) {
    std::fprintf(stderr, "warning: %s\n", message.c_str());
}

}  // namespace betatrace
