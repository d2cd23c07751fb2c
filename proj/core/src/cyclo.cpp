#include "holonomy/cyclo.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "holonomy/error.hpp"
#include "holonomy/modp.hpp"

namespace holo {

namespace {

// dense integer polynomials, low-to-high, no trailing zeros
IntVec poly_trim(IntVec a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

IntVec poly_mul(const IntVec& a, const IntVec& b) {
  if (a.empty() || b.empty()) return {};
  IntVec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic divisor
IntVec poly_divexact(IntVec num, const IntVec& den) {
  num = poly_trim(num);
  check_internal(!den.empty() && den.back() == 1, "divisor must be monic");
  if (num.empty()) return {};
  check_internal(num.size() >= den.size(), "inexact polynomial division");
  IntVec q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + den.size() - 1];
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  check_internal(poly_trim(num).empty(), "inexact polynomial division");
  return q;
}

// remainder modulo a monic polynomial
IntVec poly_mod(IntVec a, const IntVec& m) {
  std::size_t deg = m.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    Int c = a[i];
    for (std::size_t j = 0; j < m.size(); ++j) a[i - deg + j] -= c * m[j];
  }
  a.resize(deg);
  return a;
}

unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

IntVec cyclotomic_polynomial(unsigned e) {
  static std::map<unsigned, IntVec> cache;
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  // x^e - 1 divided by the product of Phi_d over proper divisors d
  IntVec num(e + 1);
  num[0] = -1;
  num[e] = 1;
  IntVec den{1};
  for (unsigned d = 1; d < e; ++d)
    if (e % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  IntVec phi = poly_divexact(num, den);
  cache[e] = phi;
  return phi;
}

CycField cyclotomic_field(unsigned e) {
  check(e >= 1, ErrorKind::validation, "cyclotomic order must be positive");
  return CycField{e, euler_phi(e), cyclotomic_polynomial(e)};
}

CycInt cyc_zero(const CycField& f) { return CycInt(f.degree); }

CycInt cyc_one(const CycField& f) {
  CycInt r(f.degree);
  r[0] = 1;
  return r;
}

CycInt cyc_root_power(const CycField& f, long k) {
  long e = static_cast<long>(f.order);
  k %= e;
  if (k < 0) k += e;
  IntVec x(static_cast<std::size_t>(k) + 1);
  x.back() = 1;
  return poly_mod(std::move(x), f.modulus);
}

CycInt cyc_add(const CycInt& a, const CycInt& b) {
  CycInt r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

CycInt cyc_sub(const CycInt& a, const CycInt& b) {
  CycInt r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

CycInt cyc_scale(const Int& c, const CycInt& a) {
  CycInt r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

CycInt cyc_mul(const CycField& f, const CycInt& a, const CycInt& b) {
  IntVec prod = poly_mul(poly_trim(a), poly_trim(b));
  IntVec r = poly_mod(std::move(prod), f.modulus);
  r.resize(f.degree);
  return r;
}

CycInt cyc_conj(const CycField& f, const CycInt& a) {
  CycInt r = cyc_zero(f);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    r = cyc_add(r, cyc_scale(a[j], cyc_root_power(f, -static_cast<long>(j))));
  }
  return r;
}

bool cyc_is_rational(const CycInt& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

CycRat cycr_from_int(const CycInt& a) {
  CycRat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

CycRat cycr_add(const CycRat& a, const CycRat& b) { return a + b; }
CycRat cycr_sub(const CycRat& a, const CycRat& b) { return a - b; }
CycRat cycr_scale(const Rat& c, const CycRat& a) { return c * a; }

CycRat cycr_mul(const CycField& f, const CycRat& a, const CycRat& b) {
  // clear denominators and reuse the integer path
  Int da = common_denominator(a), db = common_denominator(b);
  CycInt ia(a.size()), ib(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat x = a[i] * Rat(da);
    ia[i] = x.get_num();
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    Rat x = b[i] * Rat(db);
    ib[i] = x.get_num();
  }
  CycInt prod = cyc_mul(f, ia, ib);
  CycRat r(prod.size());
  Rat scale = Rat(1) / Rat(da * db);
  for (std::size_t i = 0; i < prod.size(); ++i) r[i] = Rat(prod[i]) * scale;
  return r;
}

CycRat cycr_conj(const CycField& f, const CycRat& a) {
  CycRat r(f.degree);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    CycInt pw = cyc_root_power(f, -static_cast<long>(j));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += a[j] * Rat(pw[i]);
  }
  return r;
}

bool cycr_is_zero(const CycRat& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

bool cycr_is_rational(const CycRat& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

std::uint64_t cyc_reduce_mod(const CycField& f, const CycInt& a,
                             std::uint64_t root, std::uint64_t ell) {
  std::uint64_t r = 0, pw = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int c = a[i] % Int(static_cast<unsigned long>(ell));
    if (c < 0) c += static_cast<unsigned long>(ell);
    r = addmod(r, mulmod(c.get_ui(), pw, ell), ell);
    pw = mulmod(pw, root, ell);
  }
  return r;
}

// ---- factorization of Phi_e mod p ------------------------------------------

namespace {

using FpPoly = std::vector<std::uint64_t>;  // low-to-high, over F_p

FpPoly fp_trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
  a = fp_trim(std::move(a));
  std::size_t deg = m.size() - 1;
  std::uint64_t lead_inv = invmod(m.back(), p);
  while (a.size() > deg) {
    std::uint64_t c = mulmod(a.back(), lead_inv, p);
    std::size_t off = a.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j)
      a[off + j] = submod(a[off + j], mulmod(c, m[j], p), p);
    a = fp_trim(std::move(a));
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  a = fp_trim(std::move(a));
  b = fp_trim(std::move(b));
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

FpPoly fp_powmod_x(std::uint64_t exp_base, std::uint64_t exp_pow,
                   const FpPoly& m, std::uint64_t p) {
  // y^(exp_base^exp_pow) mod m via repeated exponentiation
  FpPoly x{0, 1};
  FpPoly r = fp_mod(x, m, p);
  for (std::uint64_t i = 0; i < exp_pow; ++i) {
    // raise to exp_base-th power
    FpPoly base = r;
    FpPoly acc{1};
    std::uint64_t e = exp_base;
    while (e) {
      if (e & 1) acc = fp_mod(fp_mul(acc, base, p), m, p);
      base = fp_mod(fp_mul(base, base, p), m, p);
      e >>= 1;
    }
    r = std::move(acc);
  }
  return r;
}

bool fp_irreducible(const FpPoly& m, std::uint64_t p) {
  std::size_t d = m.size() - 1;
  FpPoly x{0, 1};
  FpPoly xq = fp_powmod_x(p, d, m, p);
  FpPoly diff = xq;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = submod(diff[1], 1, p);
  if (!fp_trim(diff).empty()) return false;
  std::size_t dd = d;
  for (std::size_t r = 2; r <= dd; ++r) {
    if (dd % r != 0) continue;
    while (dd % r == 0) dd /= r;
    FpPoly xr = fp_powmod_x(p, d / r, m, p);
    FpPoly f = xr;
    f.resize(std::max<std::size_t>(f.size(), 2), 0);
    f[1] = submod(f[1], 1, p);
    if (fp_gcd(f, m, p).size() > 1) return false;
  }
  return true;
}

// Elements of F_{p^d} = F_p[y]/(m), fixed length d.
struct Fq {
  std::vector<std::uint64_t> c;
};

struct FqContext {
  std::uint64_t p;
  std::size_t d;
  FpPoly m;

  Fq zero() const { return Fq{std::vector<std::uint64_t>(d, 0)}; }
  Fq one() const {
    Fq r = zero();
    if (d > 0) r.c[0] = 1 % p;
    return r;
  }
  Fq from_scalar(std::uint64_t s) const {
    Fq r = zero();
    r.c[0] = s % p;
    return r;
  }
  Fq mul(const Fq& a, const Fq& b) const {
    FpPoly r = fp_mod(fp_mul(a.c, b.c, p), m, p);
    r.resize(d, 0);
    return Fq{r};
  }
  Fq add(const Fq& a, const Fq& b) const {
    Fq r = zero();
    for (std::size_t i = 0; i < d; ++i) r.c[i] = addmod(a.c[i], b.c[i], p);
    return r;
  }
  Fq sub(const Fq& a, const Fq& b) const {
    Fq r = zero();
    for (std::size_t i = 0; i < d; ++i) r.c[i] = submod(a.c[i], b.c[i], p);
    return r;
  }
  Fq pow(Fq a, Int e) const {
    Fq r = one();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  bool is_one(const Fq& a) const {
    if (a.c[0] != 1 % p) return false;
    for (std::size_t i = 1; i < d; ++i)
      if (a.c[i] != 0) return false;
    return true;
  }
  bool is_scalar(const Fq& a) const {
    for (std::size_t i = 1; i < d; ++i)
      if (a.c[i] != 0) return false;
    return true;
  }
};

std::vector<std::uint64_t> prime_factors_u64(Int n) {
  std::vector<std::uint64_t> f;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      f.push_back(p.get_ui());
      while (n % p == 0) n /= p;
    }
  if (n > 1) f.push_back(n.get_ui());
  return f;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> factor_cyclotomic_mod_p(
    unsigned e, std::uint64_t p) {
  check(is_prime_u64(p), ErrorKind::validation, "p must be prime");
  unsigned ep = e;
  while (ep % p == 0) ep /= static_cast<unsigned>(p);
  if (ep == 1) return {{submod(0, 1, p), 1}};  // (x - 1)

  // d = multiplicative order of p mod ep
  std::size_t d = 1;
  std::uint64_t acc = p % ep;
  while (acc != 1 % ep) {
    acc = acc * p % ep;
    ++d;
  }

  if (d == 1) {
    // all primitive ep-th roots lie in F_p
    std::vector<std::vector<std::uint64_t>> factors;
    std::vector<bool> used(ep, false);
    for (std::uint64_t r = 1; r < p; ++r) {
      // order of r must be exactly ep
      if (powmod(r, ep, p) != 1) continue;
      bool primitive = true;
      for (std::uint64_t q : prime_factors_u64(Int(ep)))
        if (powmod(r, ep / q, p) == 1) {
          primitive = false;
          break;
        }
      if (primitive) factors.push_back({submod(0, r, p), 1});
    }
    (void)used;
    std::sort(factors.begin(), factors.end());
    check_internal(factors.size() == euler_phi(ep),
                   "wrong number of linear factors");
    return factors;
  }

  // build F_{p^d}: lexicographically first irreducible monic of degree d
  FqContext F;
  F.p = p;
  F.d = d;
  {
    std::vector<std::uint64_t> counter(d, 0);
    bool found = false;
    while (!found) {
      FpPoly m(counter.begin(), counter.end());
      m.push_back(1);
      if (fp_irreducible(m, p)) {
        F.m = m;
        found = true;
        break;
      }
      std::size_t i = 0;
      while (i < d && ++counter[i] == p) counter[i++] = 0;
      check_internal(i < d, "no irreducible polynomial found");
    }
  }

  // primitive ep-th root of unity in F_{p^d}
  Int q = 1;
  for (std::size_t i = 0; i < d; ++i) q *= static_cast<unsigned long>(p);
  Int group = q - 1;
  check_internal(group % ep == 0, "ep does not divide p^d - 1");
  auto factors_g = prime_factors_u64(Int(ep));
  Fq zeta = F.zero();
  {
    bool found = false;
    std::vector<std::uint64_t> counter(d, 0);
    while (!found) {
      std::size_t i = 0;
      while (i < d && ++counter[i] == p) counter[i++] = 0;
      check_internal(i < d, "no primitive root found");
      Fq z{std::vector<std::uint64_t>(counter.begin(), counter.end())};
      Fq w = F.pow(z, group / ep);
      bool primitive = !F.is_one(w) || ep == 1;
      if (primitive)
        for (std::uint64_t r : factors_g)
          if (F.is_one(F.pow(w, Int(ep / r)))) {
            primitive = false;
            break;
          }
      if (primitive) {
        zeta = w;
        found = true;
      }
    }
  }

  // Frobenius orbits of primitive residues k mod ep give the factors
  std::vector<bool> done(ep, false);
  std::vector<std::vector<std::uint64_t>> factors;
  for (std::uint64_t k = 1; k < ep; ++k) {
    if (done[k] || std::gcd(k, static_cast<std::uint64_t>(ep)) != 1) continue;
    std::vector<std::uint64_t> orbit;
    std::uint64_t j = k;
    do {
      orbit.push_back(j);
      done[j] = true;
      j = j * p % ep;
    } while (j != k);
    // product of (x - zeta^j) over the orbit, coefficients in F_{p^d}
    std::vector<Fq> poly{F.one()};
    for (std::uint64_t jj : orbit) {
      Fq root = F.pow(zeta, Int(static_cast<unsigned long>(jj)));
      std::vector<Fq> next(poly.size() + 1, F.zero());
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = F.add(next[i + 1], poly[i]);
        next[i] = F.sub(next[i], F.mul(root, poly[i]));
      }
      poly = std::move(next);
    }
    std::vector<std::uint64_t> coeffs;
    for (const Fq& c : poly) {
      check_internal(F.is_scalar(c), "factor coefficients not in F_p");
      coeffs.push_back(c.c[0]);
    }
    factors.push_back(std::move(coeffs));
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace holo
