#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "util.hpp"

using namespace adk;
using testutil::random_elem;

namespace {

UPoly up(const std::string& s, const FieldPtr& f) { return parse_upoly(s, f); }

UPoly remultiply(const UFactorization& fac, const FieldPtr& f) {
  UPoly r = UPoly::constant(fac.unit);
  for (const auto& uf : fac.factors) r = r * uf.factor.pow(uf.multiplicity);
  (void)f;
  return r;
}

} // namespace

TEST_CASE("field construction and selection strings") {
  auto q = Field::rationals();
  CHECK(q->describe() == "q");
  auto f5 = Field::prime(5);
  CHECK(f5->describe() == "fp:5");
  CHECK(f5->size() == 5);
  CHECK_THROWS_AS(Field::prime(6), Error);
  CHECK(same_field(Field::parse_spec("fp:5"), f5));
  auto f25 = Field::parse_spec("ext:fp:5:t^2+2");
  CHECK(f25->size() == 25);
  CHECK(f25->describe() == "ext:fp:5:t^2+2");
  // t^2+t = t(t+1) is reducible over F4
  CHECK_THROWS_AS(Field::parse_spec("ext:ext:fp:2:t^2+t+1:t^2+t"), Error);
  // t^2 + t + a with a the F4 generator: irreducible, gives F16
  auto f4 = Field::parse_spec("ext:fp:2:t^2+t+1");
  UPoly g(f4, {f4->generator(), f4->one(), f4->one()});
  auto f16 = Field::extension(f4, g);
  CHECK(f16->size() == 16);
}

TEST_CASE("extension modulus is checked where factorization is supported") {
  auto f2 = Field::prime(2);
  CHECK_THROWS_AS(Field::extension(f2, up("t^2", f2)), Error);
  try {
    Field::extension(f2, up("t^2", f2));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ReducibleModulus);
  }
  // (F5, t^2+2) -> 25 elements, gen^2 = -2
  auto f5 = Field::prime(5);
  auto f25 = Field::extension(f5, up("t^2+2", f5));
  CHECK(f25->size() == 25);
  CHECK(f25->generator() * f25->generator() == f25->from_int(-2));
  // (Q, t^2-2) -> Q(sqrt 2), gen^2 = 2
  auto q = Field::rationals();
  auto qs2 = Field::extension(q, up("t^2-2", q));
  CHECK(qs2->generator() * qs2->generator() == qs2->from_int(2));
  CHECK(qs2->modulus_verified());
  // over a Q-extension the modulus is taken on faith and flagged
  auto tower = Field::extension(qs2, up("t^2-3", qs2));
  CHECK_FALSE(tower->modulus_verified());
  CHECK(tower->generator() * tower->generator() == tower->from_int(3));
}

TEST_CASE("factor_univariate spec examples") {
  auto q = Field::rationals();
  // t^2 - 1 over Q -> (t-1)(t+1)
  auto fac = factor_univariate(up("t^2-1", q));
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].factor == up("t-1", q));
  CHECK(fac.factors[1].factor == up("t+1", q));
  CHECK(fac.unit.is_one());

  // t^2 + 1 over F5: oracle = exhaustive root search mod 5
  auto f5 = Field::prime(5);
  UPoly g = up("t^2+1", f5);
  std::vector<FieldElem> roots_by_search;
  for (const FieldElem& a : f5->all_elements())
    if (g.eval(a).is_zero()) roots_by_search.push_back(a);
  REQUIRE(roots_by_search.size() == 2);
  CHECK(roots_by_search[0] == f5->from_int(2)); // 2^2 = -1
  CHECK(roots_by_search[1] == f5->from_int(3));
  auto gfac = factor_univariate(g);
  REQUIRE(gfac.factors.size() == 2);
  for (const auto& uf : gfac.factors) {
    REQUIRE(uf.factor.degree() == 1);
    FieldElem root = -uf.factor.coeff(0);
    CHECK(g.eval(root).is_zero());
  }

  // t^2 - 2 over Q: irreducible by the rational root test
  auto h = factor_univariate(up("t^2-2", q));
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0].factor == up("t^2-2", q));
  CHECK(h.factors[0].multiplicity == 1);

  CHECK_THROWS_AS(factor_univariate(UPoly(q)), Error);
  auto qs2 = Field::extension(q, up("t^2-2", q));
  CHECK_THROWS_AS(factor_univariate(up("t^2-3", qs2)), Error);
  try {
    factor_univariate(up("t^2-3", qs2));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ExtensionFactorizationUnsupported);
  }
}

TEST_CASE("field axioms hold exactly on the catalog") {
  auto q = Field::rationals();
  auto f5 = Field::prime(5);
  auto f7 = Field::prime(7);
  auto f7i = Field::extension(f7, up("t^2+1", f7));
  auto qs2 = Field::extension(q, up("t^2-2", q));
  std::mt19937_64 rng(7);
  for (const FieldPtr& k : {q, f5, f7i, qs2}) {
    for (int it = 0; it < 200; ++it) {
      FieldElem a = random_elem(k, rng), b = random_elem(k, rng), c = random_elem(k, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == k->zero());
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == k->one());
        CHECK((a.inverse()).inverse() == a);
      }
      CHECK(a * k->one() == a);
    }
  }
}

TEST_CASE("factorization re-multiplies to the input") {
  auto q = Field::rationals();
  auto f5 = Field::prime(5);
  std::mt19937_64 rng(11);
  for (const FieldPtr& k : {q, f5}) {
    for (int it = 0; it < 100; ++it) {
      std::vector<FieldElem> cs;
      unsigned deg = 1 + rng() % 6;
      for (unsigned j = 0; j <= deg; ++j) cs.push_back(random_elem(k, rng));
      UPoly f(k, std::move(cs));
      if (f.is_zero()) continue;
      auto fac = factor_univariate(f);
      CHECK(remultiply(fac, k) == f);
      for (const auto& uf : fac.factors) {
        CHECK(uf.factor.lc().is_one());
        CHECK(is_irreducible(uf.factor));
      }
    }
  }
}

TEST_CASE("degree <= 4 splits after at most two guided extensions") {
  // exhaustively over F2 with a true exhaustive-roots check
  auto f2 = Field::prime(2);
  std::vector<UPoly> polys;
  for (unsigned deg = 2; deg <= 4; ++deg) {
    for (unsigned mask = 0; mask < (1u << deg); ++mask) {
      std::vector<FieldElem> cs;
      for (unsigned j = 0; j < deg; ++j) cs.push_back(f2->from_int((mask >> j) & 1));
      cs.push_back(f2->one());
      polys.emplace_back(f2, std::move(cs));
    }
  }
  for (const UPoly& f : polys) {
    FieldPtr k = f2;
    UPoly cur = f;
    for (int step = 0; step < 2; ++step) {
      UPoly largest(k);
      for (const auto& uf : factor_univariate(cur).factors)
        if (uf.factor.degree() >= 2 &&
            (largest.is_zero() || uf.factor.degree() > largest.degree()))
          largest = uf.factor;
      if (largest.is_zero()) break;
      k = Field::extension(k, largest);
      cur = cur.embedded(k);
    }
    // exhaustive roots in the final field, counted with multiplicity
    cur = f.embedded(k);
    uint64_t count = 0;
    for (const FieldElem& a : k->all_elements()) {
      UPoly rem = cur;
      UPoly lin(k, {-a, k->one()});
      while (!rem.is_zero() && rem.degree() >= 1 && rem.eval(a).is_zero()) {
        rem = rem / lin;
        ++count;
      }
    }
    CHECK(count == static_cast<uint64_t>(f.degree()));
  }

  // over F5 every monic polynomial of degree <= 4: verified via linear
  // factorization over the final field plus exact re-multiplication
  auto f5 = Field::prime(5);
  std::vector<UPoly> polys5;
  for (unsigned deg = 2; deg <= 4; ++deg) {
    unsigned total = 1;
    for (unsigned j = 0; j < deg; ++j) total *= 5;
    for (unsigned code = 0; code < total; ++code) {
      unsigned c = code;
      std::vector<FieldElem> cs;
      for (unsigned j = 0; j < deg; ++j) {
        cs.push_back(f5->from_int(c % 5));
        c /= 5;
      }
      cs.push_back(f5->one());
      polys5.emplace_back(f5, std::move(cs));
    }
  }
  for (const UPoly& f : polys5) {
    FieldPtr k = f5;
    UPoly cur = f;
    for (int step = 0; step < 2; ++step) {
      UPoly largest(k);
      for (const auto& uf : factor_univariate(cur).factors)
        if (uf.factor.degree() >= 2 &&
            (largest.is_zero() || uf.factor.degree() > largest.degree()))
          largest = uf.factor;
      if (largest.is_zero()) break;
      k = Field::extension(k, largest);
      cur = cur.embedded(k);
    }
    auto fac = factor_univariate(f.embedded(k));
    UPoly re = UPoly::constant(fac.unit);
    for (const auto& uf : fac.factors) {
      CHECK(uf.factor.degree() == 1);
      re = re * uf.factor.pow(uf.multiplicity);
    }
    CHECK(re == f.embedded(k));
  }
}

TEST_CASE("rational factorization stress: recombination and non-monic inputs") {
  auto q = Field::rationals();
  // t^4 + 1 is irreducible over Q but splits modulo every prime: the
  // recombination step must reassemble the modular quadratics
  auto f1 = factor_univariate(up("t^4+1", q));
  REQUIRE(f1.factors.size() == 1);
  CHECK(f1.factors[0].factor.degree() == 4);
  // Sophie Germain: t^4 + 4 = (t^2 - 2t + 2)(t^2 + 2t + 2), no rational roots
  auto f2 = factor_univariate(up("t^4+4", q));
  REQUIRE(f2.factors.size() == 2);
  CHECK(f2.factors[0].factor == up("t^2-2*t+2", q));
  CHECK(f2.factors[1].factor == up("t^2+2*t+2", q));
  // two quadratic irrationals
  auto f3 = factor_univariate(up("(t^2-2)*(t^2-3)", q));
  REQUIRE(f3.factors.size() == 2);
  CHECK(f3.factors[0].factor == up("t^2-3", q));
  CHECK(f3.factors[1].factor == up("t^2-2", q));
  // repeated factors through the squarefree split
  auto f4 = factor_univariate(up("(t^2-2)^2*(t-1)^3", q));
  REQUIRE(f4.factors.size() == 2);
  CHECK(f4.factors[0].multiplicity == 3);
  CHECK(f4.factors[1].factor == up("t^2-2", q));
  CHECK(f4.factors[1].multiplicity == 2);
  // non-monic with rational roots: 6t^2 + t - 2 = (2t - 1)(3t + 2) up to unit
  auto f5 = factor_univariate(up("6*t^2+t-2", q));
  REQUIRE(f5.factors.size() == 2);
  CHECK(f5.unit == q->from_int(6));
  CHECK(f5.factors[0].factor == up("t-1/2", q));
  CHECK(f5.factors[1].factor == up("t+2/3", q));
  // a sextic product mixing everything
  UPoly big = up("(t^4+1)*(t-2)*(t^2-2)", q).scaled(q->from_mpq(mpq_class(-3, 7)));
  auto f6 = factor_univariate(big);
  UPoly re = UPoly::constant(f6.unit);
  for (const auto& uf : f6.factors) re = re * uf.factor.pow(uf.multiplicity);
  CHECK(re == big);
  CHECK(f6.factors.size() == 3);
}

TEST_CASE("element canonical order and rendering") {
  auto q = Field::rationals();
  CHECK(q->from_mpq(mpq_class(2, 4)).str() == "1/2");
  CHECK(q->from_int(-3).str() == "-3");
  CHECK(FieldElem::cmp(q->from_int(-1), q->from_int(1)) < 0);
  auto f25 = Field::parse_spec("ext:fp:5:t^2+2");
  CHECK(f25->generator().str() == "t");
  CHECK((f25->generator() + f25->one()).str() == "t + 1");
  CHECK(parse_elem("t^2", f25) == f25->from_int(3));
  auto all = f25->all_elements();
  CHECK(all.size() == 25);
  for (size_t k = 1; k < all.size(); ++k) CHECK(FieldElem::cmp(all[k - 1], all[k]) < 0);
}
