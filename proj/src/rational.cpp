#include "goldman/rational.hpp"

namespace goldman {

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(boost::multiprecision::cpp_int(text));
    }
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("bad rational '" + text + "'");
  }
}

}  // namespace goldman
