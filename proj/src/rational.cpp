#include "semispace/rational.hpp"

#include <cctype>
#include <sstream>

#include "semispace/errors.hpp"

namespace semispace {

namespace {

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigRational rat_parse(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw InputError("malformed rational: \"" + text + "\"");
  }
  mpz_class n(num), d(den);
  if (d == 0) throw InputError("zero denominator in rational: \"" + text + "\"");
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double rat_to_double(const BigRational& value) { return value.get_d(); }

QVector qvec_from_ints(const std::vector<long>& entries) {
  QVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

std::string qvec_to_string(const QVector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << rat_to_string(v[i]);
  }
  out << ")";
  return out.str();
}

bool qvec_is_zero(const QVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

BigRational dot(const QVector& a, const QVector& b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace semispace
