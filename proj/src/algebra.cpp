#include "eisen/algebra.hpp"

#include <utility>

namespace eisen {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntMatrix: ragged initializer");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("sylvester_matrix: zero polynomial");
  const std::size_t m = f.degree();
  const std::size_t k = g.degree();
  if (m == 0 && k == 0) throw DomainError("sylvester_matrix: both polynomials constant");
  IntMatrix s(m + k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = f[m - i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= k; ++i) s(k + r, r + i) = g[k - i];
  }
  return s;
}

Integer resultant_sylvester(const IntPoly& f, const IntPoly& g) { return determinant(sylvester_matrix(f, g)); }

namespace {

using Coeffs = std::vector<Integer>;

std::size_t deg(const Coeffs& a) { return a.size() - 1; }

void trim(Coeffs& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Integer content(const Coeffs& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void divexact_all(Coeffs& a, const Integer& d) {
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

Integer pow_ui(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, with deg a >= deg b >= 1.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const std::size_t db = deg(b);
  const Integer& lb = b.back();
  std::size_t steps = deg(a) - db + 1;
  while (!(a.size() == 1 && a[0] == 0) && deg(a) >= db) {
    const Integer la = a.back();
    const std::size_t shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    a.pop_back();
    if (a.empty()) a.emplace_back(0);
    trim(a);
    --steps;
  }
  if (steps > 0) {
    const Integer scale = pow_ui(lb, steps);
    for (auto& c : a) c *= scale;
  }
  return a;
}

}  // namespace

Integer resultant_subresultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant: zero polynomial");
  if (f.degree() == 0 && g.degree() == 0) throw DomainError("resultant: both polynomials constant");
  if (g.degree() == 0) return pow_ui(g[0], f.degree());
  if (f.degree() == 0) return pow_ui(f[0], g.degree());

  Coeffs a = f.coeffs();
  Coeffs b = g.coeffs();
  int s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
  }
  const Integer ca = content(a);
  const Integer cb = content(b);
  divexact_all(a, ca);
  divexact_all(b, cb);
  const Integer t = pow_ui(ca, deg(b)) * pow_ui(cb, deg(a));
  Integer gg = 1;
  Integer h = 1;
  while (true) {
    const std::size_t delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
    Coeffs r = pseudo_remainder(a, b);
    if (r.size() == 1 && r[0] == 0) return 0;
    a = std::move(b);
    b = std::move(r);
    divexact_all(b, gg * pow_ui(h, delta));
    gg = a.back();
    // h <- g^delta / h^(delta - 1)
    if (delta != 0) {
      Integer num = pow_ui(gg, delta);
      Integer den = pow_ui(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (deg(b) == 0) break;
  }
  // h <- h^(1 - deg a) * lc(b)^(deg a)
  const std::size_t da = deg(a);
  Integer num = pow_ui(b.back(), da);
  if (da >= 1) {
    Integer den = pow_ui(h, da - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    h *= num;
  }
  return s * t * h;
}

namespace {

Discriminant discriminant_from(const IntPoly& f, const Integer& res) {
  const std::size_t n = f.degree();
  Integer d;
  if (!mpz_divisible_p(res.get_mpz_t(), f.leading().get_mpz_t())) {
    throw std::logic_error("discriminant: Res(f, f') not divisible by the leading coefficient");
  }
  mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return {d};
}

void require_degree_two(const IntPoly& f, const char* what) {
  if (f.is_zero() || f.degree() < 2) throw DomainError(std::string(what) + ": degree must be at least 2");
}

}  // namespace

Discriminant discriminant(const IntPoly& f) {
  require_degree_two(f, "discriminant");
  return discriminant_from(f, resultant_subresultant(f, derivative(f)));
}

Discriminant discriminant_via_sylvester(const IntPoly& f) {
  require_degree_two(f, "discriminant");
  return discriminant_from(f, resultant_sylvester(f, derivative(f)));
}

Integer mahler_bound(const IntPoly& f) {
  require_degree_two(f, "mahler_bound");
  const unsigned long n = f.degree();
  return pow_ui(Integer(n), n) * pow_ui(length(f), 2 * n - 2);
}

Integer max_shift_bound(const IntPoly& f) {
  require_degree_two(f, "max_shift_bound");
  const unsigned long n = f.degree();
  // Smallest c with c^(n-1) >= n^n.
  const Integer nn = pow_ui(Integer(n), n);
  Integer c;
  const bool exact = mpz_root(c.get_mpz_t(), nn.get_mpz_t(), n - 1) != 0;
  if (!exact) c += 1;
  const Integer l = length(f);
  return c * l * l;
}

}  // namespace eisen
