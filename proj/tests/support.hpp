#ifndef SDEPTHKIT_TESTS_SUPPORT_HPP
#define SDEPTHKIT_TESTS_SUPPORT_HPP

#include <string>

#include "sdepthkit/io.hpp"
#include "sdepthkit/monomial.hpp"

namespace testing_support {

inline sdepthkit::MonomialIdeal ideal(std::size_t n, const std::string& text) {
  return sdepthkit::parse_ideal(text, sdepthkit::RingContext(n));
}

inline sdepthkit::Monomial mono(std::size_t n, const std::string& text) {
  return sdepthkit::parse_monomial(text, sdepthkit::RingContext(n));
}

// A primary pair in six variables whose quotient has sdepth 1.
inline sdepthkit::MonomialIdeal six_var_q() { return ideal(6, "x1^2, x2^2, x3^2, x4^2, x1*x2*x4, x1*x3*x4"); }
inline sdepthkit::MonomialIdeal six_var_q2() { return ideal(6, "x4^2, x5, x6"); }

}  // namespace testing_support

#endif
