#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tatekit {

using Int = boost::multiprecision::cpp_int;

/* Error taxonomy: construction-time validation failures throw; verification
   failures that the spec treats as data end up in reports instead. */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

inline Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/* g = a*x + b*y with g = gcd(a,b) >= 0 */
inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, xx = 0;
    Int old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

inline Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd(a, b);
    Int l = (a / g) * b;
    return l < 0 ? -l : l;
}

/* remainder in [0, |m|), for m != 0 */
inline Int mod_floor(const Int& a, const Int& m) {
    Int mm = m < 0 ? -m : m;
    Int r = a % mm;
    if (r < 0) r += mm;
    return r;
}

inline Int abs_int(const Int& a) { return a < 0 ? -a : a; }

} // namespace tatekit
