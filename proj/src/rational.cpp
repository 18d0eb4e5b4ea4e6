#include "kstab/rational.hpp"

#include <cctype>

#include "kstab/errors.hpp"

namespace kstab {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  std::size_t slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    if (t.empty()) throw InputError("malformed rational '" + s + "'");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw InputError("malformed rational '" + s + "'");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw InputError("malformed rational '" + s + "'");
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

QVec parse_rat_vec(const std::vector<std::string>& parts) {
  QVec v;
  v.reserve(parts.size());
  for (const auto& p : parts) v.push_back(parse_rat(p));
  return v;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec vec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vec_scale(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool lex_less(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

QVec primitive(const QVec& a) {
  if (vec_is_zero(a)) return a;
  Int l = 1;
  for (const auto& x : a) {
    Int d = x.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  Int g = 0;
  std::vector<Int> scaled;
  scaled.reserve(a.size());
  for (const auto& x : a) {
    Rat y = x * Rat(l);
    scaled.push_back(y.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.back().get_mpz_t());
  }
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(scaled[i] / g);
  return r;
}

QVec primitive_signed(const QVec& a) {
  QVec r = primitive(a);
  for (const auto& x : r) {
    if (x > 0) return r;
    if (x < 0) return vec_scale(-1, r);
  }
  return r;
}

std::vector<long> to_long_vec(const QVec& a) {
  std::vector<long> r;
  r.reserve(a.size());
  for (const auto& x : a) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p())
      throw InputError("vector entry is not a machine integer");
    r.push_back(x.get_num().get_si());
  }
  return r;
}

QVec from_long_vec(const std::vector<long>& a) {
  QVec r;
  r.reserve(a.size());
  for (long x : a) r.emplace_back(static_cast<signed long>(x));
  return r;
}

}  // namespace kstab
