#pragma once

#include <sstream>
#include <string>

namespace kadv::csv {

/// Shortest round-trip-safe text for a double (17 significant digits).
inline std::string num(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

} // namespace kadv::csv
