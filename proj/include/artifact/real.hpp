#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>

namespace artifact {

// Arbitrary-precision real. Variable precision, set globally in decimal
// digits; expression templates off so values behave like plain numbers.
using real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline void set_precision(unsigned digits10) { real::default_precision(digits10); }
inline unsigned precision() { return real::default_precision(); }

// Raise working precision for a scope, restore on exit.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10) : saved_(precision()) { set_precision(digits10); }
    ~PrecisionGuard() { set_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline std::string to_decimal(const real& x, unsigned digits10) {
    return x.str(digits10);
}

} // namespace artifact
