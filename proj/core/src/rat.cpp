#include "assoc/rat.hpp"

#include <cctype>

#include "assoc/errors.hpp"

namespace assoc {

Rat rat(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'", 1, 0);
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, slash + 1);
  if (!s.empty() && s.front() == '-') n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

RatVec parse_ratvec(std::string_view text) {
  RatVec out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(parse_rat(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur.push_back(c);
  }
  flush();
  return out;
}

std::string str(const Rat& x) { return x.get_str(); }

std::string str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

Rat sum(const RatVec& v, std::size_t begin, std::size_t end) {
  Rat s = 0;
  for (std::size_t i = begin; i < end && i < v.size(); ++i) s += v[i];
  return s;
}

Rat sum(const RatVec& v) { return sum(v, 0, v.size()); }

RatVec affine(const Rat& t, const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw DomainError("affine: length mismatch");
  RatVec out(x.size());
  Rat s = 1 - t;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = t * x[i] + s * y[i];
  return out;
}

RatVec reversed(const RatVec& v) { return RatVec(v.rbegin(), v.rend()); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

}  // namespace assoc
