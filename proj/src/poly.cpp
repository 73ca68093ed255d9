#include "eisen/poly.hpp"

#include <algorithm>
#include <cctype>

namespace eisen {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::from_i64(std::span<const long> coeffs) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

Integer height(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("height of the zero polynomial");
  Integer h = 0;
  for (const auto& c : f.coeffs()) {
    if (mpz_cmpabs(c.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(c);
  }
  return h;
}

Integer length(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("length of the zero polynomial");
  Integer sum = 0;
  for (const auto& c : f.coeffs()) sum += abs(c);
  return sum;
}

Integer evaluate(const IntPoly& f, const Integer& x) {
  const auto& a = f.coeffs();
  Integer acc = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    acc *= x;
    acc += a[i];
  }
  return acc;
}

IntPoly taylor_shift(const IntPoly& f, const Integer& s) {
  std::vector<Integer> a = f.coeffs();
  if (s == 0) return IntPoly(std::move(a));
  const std::size_t n = a.size() - 1;
  // After pass k, a[k] holds the k-th Taylor coefficient at s.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = n; i-- > k;) {
      mpz_addmul(a[i].get_mpz_t(), a[i + 1].get_mpz_t(), s.get_mpz_t());
    }
  }
  return IntPoly(std::move(a));
}

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) throw DomainError("derivative of a constant polynomial");
  std::vector<Integer> d(f.degree());
  for (std::size_t i = 1; i <= f.degree(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view tok) {
  tok = trim(tok);
  std::string_view digits = tok;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("malformed coefficient '" + std::string(tok) + "'");
  }
  Integer v(std::string(digits), 10);
  return tok.front() == '-' ? Integer(-v) : v;
}

}  // namespace

IntPoly parse_poly(std::string_view text) {
  std::vector<Integer> coeffs;
  if (trim(text).empty()) throw std::invalid_argument("empty coefficient list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coeffs.push_back(parse_integer(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

std::string format_poly(const IntPoly& f) {
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += f[i].get_str();
  }
  return out;
}

std::string pretty_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.degree() + 1; i-- > 0;) {
    const Integer& c = f[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || i == 0) {
      out += mag.get_str();
      if (i > 0) out += '*';
    }
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace eisen
