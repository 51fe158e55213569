#include <algorithm>
#include <map>
#include <random>

#include "adk/upoly.hpp"

namespace adk {

namespace {

// ------------------------------------------------------------ shared bits

FieldElem elem_pow_mpz(const FieldElem& a, mpz_class e) {
  FieldElem r = a.field()->one();
  FieldElem b = a;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

void push_factor(std::vector<UFactor>& out, const UPoly& f, unsigned mult) {
  for (auto& uf : out) {
    if (uf.factor == f) {
      uf.multiplicity += mult;
      return;
    }
  }
  out.push_back({f, mult});
}

void sort_factors(std::vector<UFactor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const UFactor& a, const UFactor& b) {
    return UPoly::cmp(a.factor, b.factor) < 0;
  });
}

// --------------------------------------------------- finite-field machinery

FieldElem random_elem(const FieldPtr& f, std::mt19937_64& rng) {
  if (f->kind() == Field::Kind::Prime)
    return f->from_residue(rng() % f->p());
  std::vector<FieldElem> coeffs;
  for (unsigned k = 0; k < f->degree(); ++k) coeffs.push_back(random_elem(f->base(), rng));
  return f->from_coeffs(std::move(coeffs));
}

// a^(1/p) in F_q is a^(q/p).
FieldElem pth_root(const FieldElem& a) {
  mpz_class e = a.field()->size() / static_cast<unsigned long>(a.field()->characteristic());
  return elem_pow_mpz(a, e);
}

// f(x) = g(x^p) -> g, coefficientwise p-th roots.
UPoly pth_root_poly(const UPoly& f) {
  const unsigned long p = static_cast<unsigned long>(f.field()->characteristic());
  std::vector<FieldElem> g;
  for (size_t k = 0; k * p <= static_cast<size_t>(f.degree()); ++k)
    g.push_back(pth_root(f.coeff(k * p)));
  return UPoly(f.field(), std::move(g));
}

// Squarefree decomposition of a monic nonconstant f over a finite field.
std::vector<std::pair<UPoly, unsigned>> squarefree_finite(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  UPoly d = f.derivative();
  if (d.is_zero()) {
    for (auto& [g, m] : squarefree_finite(pth_root_poly(f)))
      out.emplace_back(g, m * static_cast<unsigned>(f.field()->characteristic()));
    return out;
  }
  UPoly c = UPoly::gcd(f, d);
  UPoly w = (f / c).monic();
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly y = UPoly::gcd(w, c);
    UPoly z = (w / y).monic();
    if (z.degree() > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = (c / y).monic();
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_finite(pth_root_poly(c)))
      out.emplace_back(g, m * static_cast<unsigned>(f.field()->characteristic()));
  }
  return out;
}

// Distinct-degree split of a monic squarefree f: list of (product, degree).
std::vector<std::pair<UPoly, unsigned>> distinct_degree(const UPoly& f) {
  const mpz_class q = f.field()->size();
  std::vector<std::pair<UPoly, unsigned>> out;
  UPoly v = f;
  UPoly h = UPoly::var(f.field()) % v;
  unsigned d = 0;
  while (v.degree() >= 2 * static_cast<long>(d + 1)) {
    ++d;
    h = h.pow_mod(q, v);
    UPoly g = UPoly::gcd(h - UPoly::var(f.field()), v);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      v = (v / g).monic();
      h = h % v;
    }
  }
  if (v.degree() > 0) out.emplace_back(v, static_cast<unsigned>(v.degree()));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting: f monic squarefree, every
// irreducible factor of degree d.
void equal_degree(const UPoly& f, unsigned d, std::vector<UPoly>& out, std::mt19937_64& rng) {
  if (f.degree() == static_cast<long>(d)) {
    out.push_back(f);
    return;
  }
  const FieldPtr& k = f.field();
  const mpz_class q = k->size();
  for (;;) {
    std::vector<FieldElem> rc;
    for (long i = 0; i < f.degree(); ++i) rc.push_back(random_elem(k, rng));
    UPoly r(k, std::move(rc));
    if (r.degree() < 1) continue;
    UPoly g;
    if (k->characteristic() == 2) {
      // trace map over F_2: r + r^2 + ... + r^(2^(m-1)), m = [F_{q^d} : F_2]
      unsigned m = k->absolute_degree() * d;
      UPoly cur = r % f;
      UPoly acc = cur;
      for (unsigned i = 1; i < m; ++i) {
        cur = (cur * cur) % f;
        acc = acc + cur;
      }
      g = UPoly::gcd(acc, f);
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d);
      e = (e - 1) / 2;
      UPoly b = r.pow_mod(e, f);
      g = UPoly::gcd(b - UPoly::constant(k->one()), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, out, rng);
      equal_degree((f / g).monic(), d, out, rng);
      return;
    }
  }
}

std::vector<UFactor> factor_finite(const UPoly& monic_f) {
  std::mt19937_64 rng(0x51ab5eedULL);
  std::vector<UFactor> out;
  for (auto& [part, mult] : squarefree_finite(monic_f)) {
    for (auto& [prod, d] : distinct_degree(part)) {
      std::vector<UPoly> irr;
      equal_degree(prod, d, irr, rng);
      for (auto& g : irr) push_factor(out, g, mult);
    }
  }
  return out;
}

// --------------------------------------------------------- integer helpers

using ZP = std::vector<mpz_class>; // dense, low degree first, trimmed

void zp_trim(ZP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long zp_deg(const ZP& a) { return static_cast<long>(a.size()) - 1; }

ZP zp_mul(const ZP& a, const ZP& b) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zp_trim(r);
  return r;
}

ZP zp_sub(ZP a, const ZP& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  zp_trim(a);
  return a;
}

ZP zp_scale(ZP a, const mpz_class& c) {
  for (auto& x : a) x *= c;
  zp_trim(a);
  return a;
}

// Exact division over Z; false when not divisible.
bool zp_divexact(const ZP& num, const ZP& den, ZP& quot) {
  if (den.empty()) return false;
  ZP r = num;
  quot.assign(num.size(), mpz_class(0));
  while (zp_deg(r) >= zp_deg(den)) {
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), den.back().get_mpz_t());
    if (rem != 0) return false;
    size_t shift = r.size() - den.size();
    quot[shift] = q;
    for (size_t i = 0; i < den.size(); ++i) r[shift + i] -= q * den[i];
    zp_trim(r);
    if (!r.empty() && r.size() > shift + den.size() - 1) return false;
  }
  if (!r.empty()) return false;
  zp_trim(quot);
  return true;
}

mpz_class zp_content(const ZP& a) {
  mpz_class c = 0;
  for (const auto& x : a) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  return c;
}

ZP zp_primitive(const ZP& a) {
  mpz_class c = zp_content(a);
  if (c == 0) return a;
  if (a.back() < 0) c = -c;
  ZP r = a;
  for (auto& x : r) x /= c;
  return r;
}

ZP zp_mod(const ZP& a, const mpz_class& m, bool symmetric) {
  ZP r = a;
  for (auto& x : r) {
    x %= m;
    if (x < 0) x += m;
    if (symmetric && 2 * x > m) x -= m;
  }
  zp_trim(r);
  return r;
}

UPoly zp_to_fp(const ZP& a, const FieldPtr& fp) {
  std::vector<FieldElem> c;
  c.reserve(a.size());
  for (const auto& x : a) c.push_back(fp->from_mpz(x));
  return UPoly(fp, std::move(c));
}

ZP fp_to_zp(const UPoly& a, bool symmetric, const mpz_class& p) {
  ZP r;
  for (const auto& c : a.coeffs()) {
    mpz_class x(static_cast<unsigned long>(c.residue()));
    if (symmetric && 2 * x > p) x -= p;
    r.push_back(x);
  }
  zp_trim(r);
  return r;
}

// Rational UPoly -> primitive integer polynomial (content dropped).
ZP upoly_to_primitive_zp(const UPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rat().get_den().get_mpz_t());
  ZP z;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c.rat() * den;
    z.push_back(mpz_class(v.get_num()));
  }
  zp_trim(z);
  return zp_primitive(z);
}

UPoly zp_to_monic_q(const ZP& a) {
  FieldPtr q = Field::rationals();
  std::vector<FieldElem> c;
  for (const auto& x : a) c.push_back(q->from_mpz(x));
  return UPoly(q, std::move(c)).monic();
}

// ----------------------------------------------------------- Hensel lifting

// Lift f == g*h (mod p) to (mod target), g monic. Inputs g0, h0, s, t over
// F_p with s*g0 + t*h0 == 1. Returns integer polynomials with coefficients
// reduced symmetrically mod target.
void hensel_pair(const ZP& f, const UPoly& g0, const UPoly& h0, const UPoly& s, const UPoly& t,
                 const mpz_class& p, const mpz_class& target, ZP& g, ZP& h) {
  const FieldPtr& fp = g0.field();
  g = fp_to_zp(g0, true, p);
  h = fp_to_zp(h0, true, p);
  mpz_class m = p;
  while (m < target) {
    // delta = (f - g*h)/m  (exact over Z), reduced mod p
    ZP diff = zp_sub(f, zp_mul(g, h));
    for (auto& x : diff) x /= m;
    UPoly delta = zp_to_fp(diff, fp);
    auto [qq, dg] = (t * delta).divrem(g0);
    UPoly dh = s * delta + qq * h0;
    ZP zg = fp_to_zp(dg, true, p);
    ZP zh = fp_to_zp(dh, true, p);
    g = zp_sub(g, zp_scale(zg, -m));
    h = zp_sub(h, zp_scale(zh, -m));
    m *= p;
    g = zp_mod(g, m, true);
    h = zp_mod(h, m, true);
  }
}

// ------------------------------------------------- Zassenhaus over Z / Q

std::vector<ZP> zassenhaus(ZP G);

// Factor a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZP> factor_squarefree_z(ZP G) {
  std::vector<ZP> out;
  // peel powers of x
  size_t xpow = 0;
  while (!G.empty() && G[0] == 0) {
    G.erase(G.begin());
    ++xpow;
  }
  for (size_t i = 0; i < xpow; ++i) out.push_back(ZP{mpz_class(0), mpz_class(1)});
  if (zp_deg(G) < 1) return out;

  // rational root extraction: candidates num/den with num | G(0), den | lc(G)
  auto small_divisors = [](const mpz_class& n, std::vector<mpz_class>& divs) -> bool {
    mpz_class a = abs(n);
    if (a == 0) return false;
    std::vector<std::pair<mpz_class, unsigned>> pf;
    mpz_class rem = a;
    for (mpz_class d = 2; d * d <= rem && d < 1000000; ++d) {
      unsigned e = 0;
      while (rem % d == 0) {
        rem /= d;
        ++e;
      }
      if (e) pf.emplace_back(d, e);
    }
    if (rem > 1) {
      if (rem > 1000000 * mpz_class(1000000)) return false; // give up, Zassenhaus will handle
      pf.emplace_back(rem, 1);
    }
    divs = {mpz_class(1)};
    for (auto& [d, e] : pf) {
      size_t n0 = divs.size();
      mpz_class dp = 1;
      for (unsigned i = 1; i <= e; ++i) {
        dp *= d;
        for (size_t j = 0; j < n0; ++j) divs.push_back(divs[j] * dp);
      }
    }
    return true;
  };
  // One pass over all candidates suffices: the input is squarefree, so each
  // rational root corresponds to a distinct linear factor.
  std::vector<mpz_class> nums, dens;
  if (zp_deg(G) >= 1 && small_divisors(G[0], nums) && small_divisors(G.back(), dens)) {
    for (const auto& nu : nums) {
      for (const auto& de : dens) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), nu.get_mpz_t(), de.get_mpz_t());
        if (g != 1) continue;
        for (int sign = 1; sign >= -1; sign -= 2) {
          // root sign*nu/de  <->  factor (de*x - sign*nu)
          ZP lin{-sign * nu, de};
          ZP quot;
          if (zp_divexact(G, lin, quot)) {
            out.push_back(zp_primitive(lin));
            G = quot;
          }
          if (zp_deg(G) < 1) break;
        }
        if (zp_deg(G) < 1) break;
      }
      if (zp_deg(G) < 1) break;
    }
  }
  if (zp_deg(G) < 1) return out;
  if (zp_deg(G) <= 3) {
    // degree 2 or 3 with no rational root is irreducible; degree 1 trivially
    out.push_back(zp_primitive(G));
    return out;
  }
  // Eisenstein scan
  for (unsigned long pe : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul,
                           41ul, 43ul, 47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul, 83ul, 89ul, 97ul}) {
    mpz_class p(pe);
    if (G.back() % p == 0) continue;
    bool all = true;
    for (size_t i = 0; i + 1 < G.size(); ++i)
      if (G[i] % p != 0) {
        all = false;
        break;
      }
    if (all && G[0] % (p * p) != 0) {
      out.push_back(zp_primitive(G));
      return out;
    }
  }
  for (auto& f : zassenhaus(std::move(G))) out.push_back(std::move(f));
  return out;
}

std::vector<ZP> zassenhaus(ZP G) {
  const long n = zp_deg(G);
  // choose a prime: lc unchanged, image squarefree
  mpz_class p = 2;
  FieldPtr fp;
  std::vector<UPoly> modular;
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (G.back() % p == 0) continue;
    fp = Field::prime(p.get_ui());
    UPoly gbar = zp_to_fp(G, fp);
    if (UPoly::gcd(gbar, gbar.derivative()).degree() != 0) continue;
    modular.clear();
    for (auto& uf : factor_finite(gbar.monic())) modular.push_back(uf.factor);
    break;
  }
  if (modular.size() == 1) return {zp_primitive(G)};
  std::sort(modular.begin(), modular.end(),
            [](const UPoly& a, const UPoly& b) { return UPoly::cmp(a, b) < 0; });

  // coefficient bound and lifting target
  mpz_class maxc = 0;
  for (const auto& c : G)
    if (abs(c) > maxc) maxc = abs(c);
  mpz_class bound = abs(G.back()) * maxc * (n + 1);
  bound <<= static_cast<unsigned>(n + 1);
  mpz_class target = p;
  while (target < 2 * bound + 1) target *= p;

  // sequential pair lifting: G == h_0 * h_1 * ... * h_{r-2} * R (mod target)
  std::vector<ZP> lifted;
  ZP cur = G;
  for (size_t i = 0; i + 1 < modular.size(); ++i) {
    UPoly g0 = modular[i];
    UPoly curbar = zp_to_fp(cur, fp);
    UPoly h0 = (curbar / g0);
    auto [one, s, t] = UPoly::xgcd(g0, h0);
    // squarefree image: g0 and h0 are coprime
    FieldElem inv = one.coeff(0).inverse();
    s = s.scaled(inv);
    t = t.scaled(inv);
    ZP gl, hl;
    hensel_pair(cur, g0, h0, s, t, p, target, gl, hl);
    lifted.push_back(gl);
    cur = hl;
  }
  lifted.push_back(cur);

  // recombination
  std::vector<ZP> out;
  std::vector<size_t> avail(lifted.size());
  for (size_t i = 0; i < avail.size(); ++i) avail[i] = i;
  ZP rem = G;
  size_t card = 1;
  while (2 * card <= avail.size()) {
    // all cardinality-card subsets of avail
    std::vector<size_t> comb(card);
    for (size_t i = 0; i < card; ++i) comb[i] = i;
    bool removed = false;
    for (;;) {
      ZP cand{rem.back()};
      for (size_t i = 0; i < card; ++i) cand = zp_mul(cand, lifted[avail[comb[i]]]);
      cand = zp_primitive(zp_mod(cand, target, true));
      ZP quot;
      if (zp_divexact(rem, cand, quot)) {
        out.push_back(cand);
        rem = quot;
        std::vector<size_t> navail;
        for (size_t i = 0, j = 0; i < avail.size(); ++i) {
          if (j < card && comb[j] == i)
            ++j;
          else
            navail.push_back(avail[i]);
        }
        avail = std::move(navail);
        removed = true;
        break;
      }
      // next combination
      long k = static_cast<long>(card) - 1;
      while (k >= 0 && comb[k] == avail.size() - card + k) --k;
      if (k < 0) break;
      ++comb[k];
      for (size_t j = k + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!removed) ++card;
  }
  if (zp_deg(rem) >= 1) out.push_back(zp_primitive(rem));
  return out;
}

std::vector<UFactor> factor_rationals(const UPoly& f) {
  std::vector<UFactor> out;
  std::vector<std::pair<UPoly, unsigned>> parts;

  // squarefree split by multiplicity peeling along the gcd chain:
  // at step m, factors of multiplicity exactly m in f appear with
  // exponent 1 in g and not at all in gcd(g, g').
  UPoly g = f.monic();
  unsigned m = 1;
  while (g.degree() > 0) {
    UPoly gd = UPoly::gcd(g, g.derivative());
    UPoly sqf = (g / gd).monic();
    UPoly drop = UPoly::gcd(sqf, gd);
    UPoly exact = (sqf / drop).monic();
    if (exact.degree() > 0) parts.emplace_back(exact, m);
    g = gd;
    ++m;
  }

  for (auto& [part, mult] : parts) {
    ZP z = upoly_to_primitive_zp(part);
    for (auto& zf : factor_squarefree_z(std::move(z))) push_factor(out, zp_to_monic_q(zf), mult);
  }
  return out;
}

} // namespace

UFactorization factor_univariate(const UPoly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
  const FieldPtr& k = f.field();
  UFactorization res;
  res.unit = f.lc();
  if (f.degree() == 0) return res;
  if (k->is_finite()) {
    res.factors = factor_finite(f.monic());
  } else if (k->kind() == Field::Kind::Rational) {
    res.factors = factor_rationals(f);
  } else {
    fail(Errc::ExtensionFactorizationUnsupported,
         "factorization over " + k->describe() + " is not supported");
  }
  sort_factors(res.factors);
  return res;
}

std::vector<std::pair<FieldElem, unsigned>> roots_in_field(const UPoly& f) {
  std::vector<std::pair<FieldElem, unsigned>> roots;
  for (const auto& uf : factor_univariate(f).factors) {
    if (uf.factor.degree() == 1) roots.emplace_back(-uf.factor.coeff(0), uf.multiplicity);
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return FieldElem::cmp(a.first, b.first) < 0;
  });
  return roots;
}

bool is_irreducible(const UPoly& f) {
  if (f.is_zero() || f.degree() < 1) return false;
  auto fact = factor_univariate(f);
  return fact.factors.size() == 1 && fact.factors[0].multiplicity == 1;
}

} // namespace adk
