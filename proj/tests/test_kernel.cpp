#include "helpers.hpp"

#include "qvol/kernel.hpp"

#include <doctest.h>

#include <thread>

using namespace qvol;
using namespace qvol::test;

namespace {

UniPoly uni(GenFamily f, std::initializer_list<std::pair<unsigned, RingElem>> terms) {
  UniPoly p(f);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

// Value of a BiPoly / UniPoly with L1 = 0: the constant-in-L1 part.
bool vanishes_at_zero(const BiPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (e.first == 0) return false;
  return true;
}

bool odd_in_L1_even_in_Lj(const BiPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (e.first % 2 == 0 || e.second % 2 == 1) return false;
  return true;
}

const GenFamily QZ = GenFamily::QZeta;
const GenFamily QO = GenFamily::QZetaOdd;
const GenFamily PI = GenFamily::PiSq;

}  // namespace

TEST_CASE("s_k polynomials") {
  CHECK(schur_s_symbolic(0, QZ) == konst(QZ, 1));
  CHECK(schur_s_symbolic(-2, QZ).is_zero());
  CHECK(schur_s_symbolic(1, QZ) == zq(1));
  CHECK(schur_s_symbolic(2, QZ) == R(1, 2) * (zq(2) + zq(1, 2)));
  CHECK(schur_s_symbolic(3, QZ) == R(1, 6) * (R(2) * zq(3) + R(3) * zq(1) * zq(2) + zq(1, 3)));
  // numeric instance: p_m = 1 for all m gives s_k = 1 (exp(-log(1-t)) = 1/(1-t))
  std::vector<Rat> ones(10, Rat(1));
  for (int k = 0; k <= 9; ++k) CHECK(schur_s<Rat>(k, ones, Rat(1)) == 1);
  // p_1 = x, others 0: s_k = x^k / k!
  std::vector<Rat> p(8, Rat(0));
  p[0] = 3;
  CHECK(schur_s<Rat>(4, p, Rat(1)) == R(81, 24));
}

TEST_CASE("b streams") {
  for (Flavor f : {Flavor::QClassical, Flavor::QSuper, Flavor::WpClassical, Flavor::WpSuper})
    CHECK(b_stream(f, 0) == konst(ring_family(f), 1));
  CHECK(b_stream(Flavor::QClassical, 1) == R(4) * zq(1));
  CHECK(b_stream(Flavor::QClassical, 2) == R(8) * (zq(1, 2) + zq(2)));
  CHECK(b_stream(Flavor::WpClassical, 1) == R(2, 3) * pi2());
  CHECK(b_stream(Flavor::QSuper, 1) == R(16) * zodd(1));
  CHECK(b_stream(Flavor::WpSuper, 1) == R(2) * pi2());
  CHECK(b_stream(Flavor::WpSuper, 2) == R(10, 3) * pi2(2));
  // 2 pi z / sin(2 pi z) = 1 + (2/3) pi^2 z^2 + (14/45) pi^4 z^4 + ...  (x/sin x = 1 + x^2/6 + 7x^4/360)
  CHECK(b_stream(Flavor::WpClassical, 2) == R(7 * 16, 360) * pi2(2));
  for (Flavor f : {Flavor::QClassical, Flavor::QSuper, Flavor::WpClassical, Flavor::WpSuper})
    for (unsigned n = 1; n <= 8; ++n) CHECK(ring_weight(b_stream(f, n)) == 2 * n);
}

TEST_CASE("stream-limit compatibility up to n = 8") {
  const auto even = classical_images(QZ, 8);
  const auto odd = classical_images(QO, 8);
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(ring_substitute(b_stream(Flavor::QClassical, n), PI, even) == b_stream(Flavor::WpClassical, n));
    CHECK(ring_substitute(b_stream(Flavor::QSuper, n), PI, odd) == b_stream(Flavor::WpSuper, n));
  }
}

TEST_CASE("WP streams: series inversion agrees with the zeta route") {
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(b_stream(Flavor::WpClassical, n) == b_stream_via_zeta(Flavor::WpClassical, n));
    CHECK(b_stream(Flavor::WpSuper, n) == b_stream_via_zeta(Flavor::WpSuper, n));
  }
}

TEST_CASE("b streams extend consistently under concurrent access") {
  std::vector<std::thread> ts;
  std::vector<RingElem> got(6, RingElem(QZ));
  for (int t = 0; t < 6; ++t) ts.emplace_back([&, t] { got[t] = b_stream(Flavor::QClassical, 12 - t % 3); });
  for (auto& t : ts) t.join();
  for (int t = 0; t < 6; ++t) CHECK(got[t] == b_stream(Flavor::QClassical, 12 - t % 3));
}

TEST_CASE("F polynomials") {
  CHECK(f_poly(Flavor::QClassical, 0) == uni(QZ, {{2, konst(QZ, R(1, 2))}, {0, R(4) * zq(1)}}));
  CHECK(f_poly(Flavor::WpClassical, 0) == uni(PI, {{2, konst(PI, R(1, 2))}, {0, R(2, 3) * pi2()}}));
  CHECK(f_poly(Flavor::QSuper, 0) == uni(QO, {{1, konst(QO, 1)}}));
  CHECK(f_poly(Flavor::QSuper, 1) == uni(QO, {{3, konst(QO, 1)}, {1, R(96) * zodd(1)}}));
  CHECK(f_poly(Flavor::QClassical, 1) ==
        uni(QZ, {{4, konst(QZ, R(1, 4))}, {2, R(12) * zq(1)}, {0, R(48) * (zq(1, 2) + zq(2))}}));
}

TEST_CASE("F polynomial parity, degree and weight for k <= 8") {
  for (unsigned k = 0; k <= 8; ++k) {
    for (Flavor f : {Flavor::QClassical, Flavor::WpClassical}) {
      const UniPoly p = f_poly(f, k);
      CHECK(p.is_even());
      CHECK(p.degree() == static_cast<int>(2 * k + 2));
      CHECK(total_weight(p) == 2 * k + 2);
    }
    for (Flavor f : {Flavor::QSuper, Flavor::WpSuper}) {
      const UniPoly p = f_poly(f, k);
      CHECK(p.is_odd());
      CHECK(p.degree() == static_cast<int>(2 * k + 1));
      CHECK(total_weight(p) == 2 * k + 1);
      CHECK(p.coeff(0).is_zero());
    }
  }
}

TEST_CASE("R integrals") {
  BiPoly expect(QZ);
  expect.add_term({3, 0}, konst(QZ, R(1, 6)));
  expect.add_term({1, 2}, konst(QZ, R(1, 2)));
  expect.add_term({1, 0}, R(4) * zq(1));
  CHECK(r_integral(Flavor::QClassical, 0) == expect);
  BiPoly sup(QO);
  sup.add_term({1, 0}, konst(QO, 1));
  CHECK(r_integral(Flavor::QSuper, 0) == sup);
  for (Flavor f : {Flavor::QClassical, Flavor::QSuper, Flavor::WpClassical, Flavor::WpSuper})
    for (unsigned k = 0; k <= 4; ++k) {
      CHECK(vanishes_at_zero(r_integral(f, k)));
      CHECK(odd_in_L1_even_in_Lj(r_integral(f, k)));
    }
}

TEST_CASE("D integrals") {
  UniPoly expect(QZ);
  expect.add_term(5, konst(QZ, R(1, 120)));
  expect.add_term(3, R(4, 6) * zq(1));
  expect.add_term(1, R(8) * (zq(1, 2) + zq(2)));
  CHECK(d_integral(Flavor::QClassical, 0, 0) == expect);
  UniPoly sup(QO);
  sup.add_term(3, konst(QO, R(1, 6)));
  sup.add_term(1, R(16) * zodd(1));
  CHECK(d_integral(Flavor::QSuper, 0, 0) == sup);
  for (Flavor f : {Flavor::QClassical, Flavor::QSuper, Flavor::WpClassical, Flavor::WpSuper})
    for (unsigned i = 0; i <= 4; ++i)
      for (unsigned j = 0; j <= 4; ++j) {
        const UniPoly d = d_integral(f, i, j);
        CHECK(d.is_odd());
        CHECK(d.coeff(0).is_zero());
        CHECK(d == d_integral(f, j, i));
      }
}

TEST_CASE("V_{1,1} base case") {
  CHECK(v11_base(Flavor::QClassical) ==
        poly(QZ, 1, {{{1}, konst(QZ, R(1, 48))}, {{0}, R(1, 2) * zq(1)}}));
  CHECK(v11_base(Flavor::WpClassical) ==
        poly(PI, 1, {{{1}, konst(PI, R(1, 48))}, {{0}, R(1, 12) * pi2()}}));
  CHECK(substitute(v11_base(Flavor::QClassical), PI, classical_images(QZ, 1)) == v11_base(Flavor::WpClassical));
  CHECK_THROWS_AS(v11_base(Flavor::QSuper), std::invalid_argument);
}

TEST_CASE("flavor names") {
  for (Flavor f : {Flavor::QClassical, Flavor::QSuper, Flavor::WpClassical, Flavor::WpSuper})
    CHECK(parse_flavor(flavor_name(f)) == f);
  CHECK_THROWS_AS(parse_flavor("mirzakhani"), UsageError);
  CHECK(limit_flavor(Flavor::QSuper) == Flavor::WpSuper);
}
