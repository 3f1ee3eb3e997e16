#include "jspec/rational.hpp"

#include <stdexcept>

namespace jspec {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace jspec
