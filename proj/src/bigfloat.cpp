#include "pim/bigfloat.hpp"

#include <cstdlib>
#include <vector>

namespace pim {

std::string Real::str(long digits) const {
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant = mant.substr(1);
    }
    long ex = static_cast<long>(e);  // value = 0.mant * 10^ex
    if (ex > 0 && ex <= digits) {
        while (static_cast<long>(mant.size()) < ex) mant += '0';
        std::string frac = mant.substr(static_cast<size_t>(ex));
        return sign + mant.substr(0, static_cast<size_t>(ex)) + (frac.empty() ? "" : "." + frac);
    }
    if (ex <= 0 && ex > -5) {
        return sign + "0." + std::string(static_cast<size_t>(-ex), '0') + mant;
    }
    return sign + mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(ex - 1);
}

}  // namespace pim
