#include "humbert/rational.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace humbert {

ExtRat::ExtRat(long num, long den) : finite_(true), q_(num, den) {
  if (den == 0) throw std::invalid_argument("ExtRat: zero denominator");
  q_.canonicalize();
}

ExtRat ExtRat::infinity() {
  ExtRat v;
  v.finite_ = false;
  return v;
}

const mpq_class& ExtRat::value() const {
  if (!finite_) throw std::domain_error("ExtRat: value() on infinity");
  return q_;
}

bool ExtRat::operator<(const ExtRat& o) const {
  if (!finite_) return false;           // inf is maximal
  if (!o.finite_) return true;
  return q_ < o.q_;
}

std::string ExtRat::str() const {
  if (!finite_) return "inf";
  return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const ExtRat& v) {
  return os << v.str();
}

ExtRat parse_ext_rat(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return ExtRat::infinity();
  return ExtRat(parse_rational(text));
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class accepts "p/q" and "p" but also whitespace-laden forms; be strict.
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
          c == '/')) {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  q.canonicalize();
  return q;
}

std::vector<mpq_class> parse_rational_csv(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

}  // namespace humbert
