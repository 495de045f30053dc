#include "helpers.hpp"

#include "qvol/volume.hpp"

#include <doctest.h>

#include <thread>

using namespace qvol;
using namespace qvol::test;

namespace {

const GenFamily QZ = GenFamily::QZeta;
const GenFamily PI = GenFamily::PiSq;

VolumePoly v12(GenFamily f, const RingElem& l2, const RingElem& c) {
  // (1/192)(L1^2+L2^2)^2 + l2 (L1^2+L2^2) + c
  return poly(f, 2,
              {{{2, 0}, konst(f, R(1, 192))},
               {{1, 1}, konst(f, R(1, 96))},
               {{0, 2}, konst(f, R(1, 192))},
               {{1, 0}, l2},
               {{0, 1}, l2},
               {{0, 0}, c}});
}

VolumePoly v04(GenFamily f, const RingElem& c) {
  return poly(f, 4,
              {{{1, 0, 0, 0}, konst(f, R(1, 2))},
               {{0, 1, 0, 0}, konst(f, R(1, 2))},
               {{0, 0, 1, 0}, konst(f, R(1, 2))},
               {{0, 0, 0, 1}, konst(f, R(1, 2))},
               {{0, 0, 0, 0}, c}});
}

std::vector<std::pair<unsigned, unsigned>> stable_up_to(unsigned level) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned g = 0; 2 * g <= level + 1; ++g)
    for (unsigned n = 1; 2 * g + n <= level + 2; ++n)
      if (2 * static_cast<long>(g) - 2 + n >= 1) out.emplace_back(g, n);
  return out;
}

}  // namespace

TEST_CASE("golden q-volumes") {
  CHECK(volume(Flavor::QClassical, 0, 3) == VolumePoly::constant(QZ, 3, 1));
  CHECK(volume(Flavor::QClassical, 1, 1) == poly(QZ, 1, {{{1}, konst(QZ, R(1, 48))}, {{0}, R(1, 2) * zq(1)}}));
  CHECK(volume(Flavor::QClassical, 0, 4) == v04(QZ, R(12) * zq(1)));
  CHECK(volume(Flavor::QClassical, 1, 2) == v12(QZ, R(1, 2) * zq(1), R(5) * zq(2) + R(7) * zq(1, 2)));
}

TEST_CASE("golden WP volumes") {
  CHECK(volume(Flavor::WpClassical, 0, 3) == VolumePoly::constant(PI, 3, 1));
  CHECK(volume(Flavor::WpClassical, 1, 1) == poly(PI, 1, {{{1}, konst(PI, R(1, 48))}, {{0}, R(1, 12) * pi2()}}));
  CHECK(volume(Flavor::WpClassical, 0, 4) == v04(PI, R(2) * pi2()));
  CHECK(volume(Flavor::WpClassical, 1, 2) == v12(PI, R(1, 12) * pi2(), R(1, 4) * pi2(2)));
}

TEST_CASE("V^WP_{2,1} matches the published expansion") {
  // L^8/442368 + 29 pi^2 L^6/138240 + 139 pi^4 L^4/23040 + 169 pi^6 L^2/2880 + 29 pi^8/192
  const VolumePoly expect = poly(PI, 1,
                                 {{{4}, konst(PI, R(1, 442368))},
                                  {{3}, R(29, 138240) * pi2()},
                                  {{2}, R(139, 23040) * pi2(2)},
                                  {{1}, R(169, 2880) * pi2(3)},
                                  {{0}, R(29, 192) * pi2(4)}});
  CHECK(volume(Flavor::WpClassical, 2, 1) == expect);
}

TEST_CASE("V^WP_{g,1} vanishes at L = 2 pi i") {
  // homogeneous, so each term is c * pi^{w} * (L^2/pi^2)^a; evaluate at L^2/pi^2 = -4
  for (unsigned g = 2; g <= 4; ++g) {
    const VolumePoly v = volume(Flavor::WpClassical, g, 1);
    Rat sum = 0;
    for (const auto& [e, c] : v.terms())
      for (const auto& [m, coeff] : c.terms()) sum += coeff * pow(R(-4), static_cast<long>(e[0]));
    CHECK(sum == 0);
  }
}

TEST_CASE("unstable input is rejected") {
  CHECK_THROWS_AS(volume(Flavor::QClassical, 0, 2), UsageError);
  CHECK_THROWS_AS(volume(Flavor::QClassical, 0, 1), UsageError);
  CHECK_THROWS_AS(volume(Flavor::QClassical, 2, 0), UsageError);
  CHECK_THROWS_AS(volume(Flavor::QSuper, 1, 1), std::invalid_argument);
}

TEST_CASE("symmetry and homogeneity up to level 5") {
  for (auto [g, n] : stable_up_to(5))
    for (Flavor f : {Flavor::QClassical, Flavor::WpClassical}) {
      CAPTURE(g);
      CAPTURE(n);
      const VolumePoly v = volume(f, g, n);
      CHECK(check_symmetry(v));
      CHECK(check_homogeneity(v, classical_weight(g, n)));
    }
  CHECK(check_symmetry(VolumePoly(QZ, 3)));
}

TEST_CASE("symmetry and homogeneity checks reject bad input") {
  const VolumePoly lopsided = poly(QZ, 2, {{{1, 0}, konst(QZ, 1)}});
  CHECK_FALSE(check_symmetry(lopsided));
  CHECK(check_homogeneity(volume(Flavor::QClassical, 0, 4), 2));
  CHECK_FALSE(check_homogeneity(volume(Flavor::QClassical, 0, 4), 4));
  const VolumePoly mixed = poly(QZ, 1, {{{1}, konst(QZ, 1)}, {{0}, zq(2)}});
  CHECK_FALSE(check_homogeneity(mixed, 2));
  CHECK_THROWS_AS(classical_limit(mixed), std::invalid_argument);
}

TEST_CASE("classical limit of the q-volumes") {
  CHECK(classical_limit(volume(Flavor::QClassical, 1, 1)) == volume(Flavor::WpClassical, 1, 1));
  CHECK(classical_limit(volume(Flavor::QClassical, 0, 4)) == v04(PI, R(2) * pi2()));
  CHECK(classical_limit(volume(Flavor::QClassical, 0, 3)) == VolumePoly::constant(PI, 3, 1));
  for (auto [g, n] : stable_up_to(5)) {
    CAPTURE(g);
    CAPTURE(n);
    CHECK(classical_limit(volume(Flavor::QClassical, g, n)) == volume(Flavor::WpClassical, g, n));
  }
}

TEST_CASE("top-degree terms carry no zeta values and agree across flavors") {
  for (auto [g, n] : stable_up_to(5)) {
    const VolumePoly a = constant_ring_part(volume(Flavor::QClassical, g, n));
    const VolumePoly b = constant_ring_part(volume(Flavor::WpClassical, g, n));
    REQUIRE(a.terms().size() == b.terms().size());
    auto it = b.terms().begin();
    for (const auto& [e, c] : a.terms()) {
      CHECK(e == it->first);
      CHECK(c.constant_term() == it->second.constant_term());
      ++it;
    }
  }
}

TEST_CASE("memoization is transparent to evaluation order") {
  VolumeEngine first(Flavor::QClassical), second(Flavor::QClassical);
  const VolumePoly a12 = first.volume(1, 2);
  const VolumePoly a04 = first.volume(0, 4);
  const VolumePoly b04 = second.volume(0, 4);
  const VolumePoly b12 = second.volume(1, 2);
  CHECK(a12 == b12);
  CHECK(a04 == b04);
  CHECK(a12 == volume(Flavor::QClassical, 1, 2));
}

TEST_CASE("every recursion right side divides exactly by L1") {
  VolumeEngine e(Flavor::QClassical);
  for (auto [g, n] : stable_up_to(5)) e.volume(g, n);
  // every stable key except the two base cases went through the checked division
  CHECK(e.divisions_checked() == e.cached() - 2);
}

TEST_CASE("concurrent callers see one deterministic result") {
  VolumeEngine e(Flavor::QClassical);
  std::vector<VolumePoly> got(8, VolumePoly(QZ, 1));
  std::vector<std::thread> ts;
  for (int t = 0; t < 8; ++t) ts.emplace_back([&, t] { got[t] = e.volume(2, 1 + t % 2); });
  for (auto& t : ts) t.join();
  for (int t = 0; t < 8; ++t) CHECK(got[t] == volume(Flavor::QClassical, 2, 1 + t % 2));
  VolumeEngine serial(Flavor::QClassical);
  serial.volume(2, 1);
  serial.volume(2, 2);
  CHECK(e.divisions_checked() == serial.divisions_checked());
}
