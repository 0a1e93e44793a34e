#include "chebfilter/csv.hpp"

#include <cstdio>

namespace chebfilter {

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
}

}  // namespace chebfilter
