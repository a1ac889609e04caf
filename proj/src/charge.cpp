#include "satforge/charge.hpp"

namespace satforge {

std::string to_string(const Charge& c) {
    const auto den = boost::multiprecision::denominator(c);
    const auto num = boost::multiprecision::numerator(c);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace satforge
