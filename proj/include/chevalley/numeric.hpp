// Exact arithmetic aliases used throughout the library.  No floating point
// is used anywhere; every quantity is an arbitrary-precision integer or
// rational.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevalley {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Throws unless r is an integer.
inline Int to_int(const Rat& r) {
    if (!is_integer(r)) {
        std::ostringstream os;
        os << "expected integer, got " << r;
        throw std::domain_error(os.str());
    }
    return num(r);
}

// Parity of an exact integer (sign-safe: (-3) mod 2 == 1).
inline int parity(const Int& n) { return n % 2 == 0 ? 0 : 1; }

inline std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string to_string(const Int& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

// Parses "n" or "p/q".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

}  // namespace chevalley
