#include "srcid/field.hpp"

#include <cstdio>

namespace srcid {

std::string to_string(const Complex& x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", x.real(), x.imag());
    return buf;
}

}  // namespace srcid
