#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealkit/frobenius.hpp"
#include "idealkit/session.hpp"

using namespace idealkit;

namespace {

RingPresentation gf_plane(unsigned long p) {
  RingPresentation r;
  r.field = Field::prime(p);
  r.variables = {"x", "y"};
  r.declared_dim = 2;
  return r;
}

IdealHandle make_ideal(const RingPresentation& r,
                       const std::vector<std::string>& gens) {
  IdealHandle h;
  h.ring = r;
  for (auto& s : gens)
    h.gens.push_back(parse_polynomial(s, r.variables, r.field));
  return h;
}

// Brute-force least N with m^N inside (x^q, y^q), staying monomial.
long brute_nu_of_m(long q, const MonomialIdeal& bracket) {
  for (long N = 1;; ++N) {
    bool in = true;
    for (auto& g : power(max_ideal(2), static_cast<int>(N)).gens)
      if (!bracket.contains(g)) { in = false; break; }
    if (in) return N;
  }
}

}  // namespace

TEST_CASE("bracket powers") {
  auto gf2 = gf_plane(2);
  IdealHandle m = make_ideal(gf2, {"x", "y"});
  auto b4 = bracket_power(m, 4);
  CHECK(b4.gens == make_ideal(gf2, {"x^4", "y^4"}).gens);

  auto gf5 = gf_plane(5);
  IdealHandle J = make_ideal(gf5, {"x^2", "y^3"});
  CHECK(bracket_power(J, 5).gens == make_ideal(gf5, {"x^10", "y^15"}).gens);
  CHECK(bracket_power(J, 1).gens == J.gens);

  CHECK_THROWS_AS(bracket_power(J, 3), std::invalid_argument);  // not 5^e
  RingPresentation q = gf2;
  q.field = Field::rationals();
  CHECK_THROWS_AS(bracket_power(make_ideal(q, {"x", "y"}), 2),
                  std::invalid_argument);
}

TEST_CASE("nu examples") {
  auto gf5 = gf_plane(5);
  IdealHandle m = make_ideal(gf5, {"x", "y"});
  CHECK(nu(m, m, 1) == 9);  // 2*5 - 1
  CHECK(nu(m, m, 1) ==
        brute_nu_of_m(5, minimalize(2, {Monomial({5, 0}), Monomial({0, 5})})));

  IdealHandle J = make_ideal(gf5, {"x^2", "y^3"});
  CHECK(nu(m, J, 0) == 4);  // the Loewy length of (x^2, y^3)
  CHECK(nu(J, J, 0) == 1);
  CHECK_THROWS_AS(nu(m, J, -1), std::invalid_argument);
}

TEST_CASE("nu ladders for the maximal ideal, several characteristics") {
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    auto r = gf_plane(p);
    IdealHandle m = make_ideal(r, {"x", "y"});
    NuSequence seq = fthreshold_estimate(m, m, 3);
    long q = 1;
    for (int e = 0; e <= 3; ++e) {
      CHECK(seq.entries.at(e) == 2 * q - 1);
      Q expected = Q(2) - Q(1, q);
      expected.canonicalize();
      CHECK(seq.estimates.at(e) == expected);
      q *= static_cast<long>(p);
    }
    REQUIRE(seq.closed_form.has_value());
    CHECK(*seq.closed_form == 2);  // ll(m) + 1
    CHECK(seq.bracket_ok);
  }
}

TEST_CASE("nu ladder for a non-maximal parameter ideal") {
  auto gf5 = gf_plane(5);
  IdealHandle m = make_ideal(gf5, {"x", "y"});
  IdealHandle J = make_ideal(gf5, {"x^2", "y^3"});
  NuSequence seq = fthreshold_estimate(m, J, 2);
  CHECK(seq.entries.at(0) == 4);
  REQUIRE(seq.closed_form.has_value());
  CHECK(*seq.closed_form == 5);  // ll(J) + 1
  CHECK(seq.bracket_ok);
  // The estimates approach 5 from below inside the monotone bracket:
  // 5 - nu_e/5^e lies in [0, 2(1 - 1/5^e)] once e >= 1.
  long q = 1;
  for (int e = 0; e <= 2; ++e) {
    Q gap = Q(5) - seq.estimates.at(e);
    CHECK(gap >= 0);
    if (e >= 1) CHECK(gap <= Q(2) * (Q(1) - Q(1, q)));
    q *= 5;
  }

  NuSequence single = fthreshold_estimate(m, J, 0);
  CHECK(single.entries.size() == 1);
  CHECK(single.entries.at(0) == 4);
}

TEST_CASE("ladder monotonicity invariants") {
  auto gf3 = gf_plane(3);
  IdealHandle m = make_ideal(gf3, {"x", "y"});
  for (auto J : {make_ideal(gf3, {"x^2", "y^3"}),
                 make_ideal(gf3, {"x^3", "y^3"}),
                 make_ideal(gf3, {"x", "y^4"})}) {
    NuSequence seq = fthreshold_estimate(m, J, 2);
    const long p = 3;
    for (int e = 0; e < 2; ++e) {
      CHECK(seq.entries.at(e + 1) >= p * seq.entries.at(e));
      CHECK(seq.estimates.at(e + 1) >= seq.estimates.at(e));
    }
    // (ll(J)+1) - nu_e/p^e stays in [0, d(1 - 1/p^e)] for e >= 1.
    REQUIRE(seq.closed_form.has_value());
    long q = 1;
    for (int e = 0; e <= 2; ++e) {
      Q gap = Q(*seq.closed_form) - seq.estimates.at(e);
      CHECK(gap >= 0);
      if (e >= 1) CHECK(gap <= Q(2) * (Q(1) - Q(1, q)));
      q *= p;
    }
  }
}

TEST_CASE("hmtw bound in dimension two") {
  auto gf5 = gf_plane(5);
  auto v = check_hmtw_dim2(make_ideal(gf5, {"x^2", "y^3"}));
  CHECK(v.lhs == Q(6));
  CHECK(v.rhs == Q(25, 4));
  CHECK(v.holds);

  auto veq = check_hmtw_dim2(make_ideal(gf5, {"x", "y"}));
  CHECK(veq.lhs == Q(1));
  CHECK(veq.rhs == Q(1));
  CHECK(veq.holds);

  for (int a = 1; a <= 5; ++a) {
    auto va = check_hmtw_dim2(make_ideal(
        gf5, {"x^" + std::to_string(a), "y^" + std::to_string(a)}));
    CHECK(va.lhs == Q(static_cast<long>(a) * a));
    CHECK(va.rhs == va.lhs);  // equality at (x^a, y^a)
    CHECK(va.holds);
  }

  // Exhaustive sweep (x^a, y^b), a, b <= 5: no violations.
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      auto vb = check_hmtw_dim2(make_ideal(
          gf5, {"x^" + std::to_string(a), "y^" + std::to_string(b)}));
      CHECK(vb.holds);
    }

  CHECK_THROWS_AS(check_hmtw_dim2(make_ideal(gf5, {"x", "y", "x+y"})),
                  std::invalid_argument);
}

TEST_CASE("loewy length of the closure bound") {
  auto gf5 = gf_plane(5);
  auto v = check_crll(make_ideal(gf5, {"x^2", "y^3"}));
  CHECK(v.lhs == Q(3));
  CHECK(v.rhs == Q(3));
  CHECK(v.holds);

  auto v1 = check_crll(make_ideal(gf5, {"x", "y"}));
  CHECK(v1.lhs == Q(1));
  CHECK(v1.rhs == Q(1));
  CHECK(v1.holds);

  auto gf7 = gf_plane(7);
  auto v2 = check_crll(make_ideal(gf7, {"x^3", "y^3"}));
  CHECK(v2.lhs == Q(3));  // closure is m^3
  CHECK(v2.rhs == Q(3));  // ceil((6 - 3)/1)
  CHECK(v2.holds);
}

TEST_CASE("characteristic-free reading of the threshold bound") {
  RingPresentation qxy;
  qxy.field = Field::rationals();
  qxy.variables = {"x", "y"};
  qxy.declared_dim = 2;
  auto v = check_charfree_bound(make_ideal(qxy, {"x^2", "y^3"}));
  CHECK(v.lhs == Q(6));
  CHECK(v.rhs == Q(25, 4));  // ((2 + 4 - 1)/2)^2
  CHECK(v.holds);

  RingPresentation qxyz;
  qxyz.field = Field::rationals();
  qxyz.variables = {"x", "y", "z"};
  qxyz.declared_dim = 3;
  auto v3 = check_charfree_bound(make_ideal(qxyz, {"x^2", "y^2", "z^2"}));
  CHECK(v3.lhs == Q(8));
  CHECK(v3.rhs == Q(8));  // ((3 + 4 - 1)/3)^3 = 8
  CHECK(v3.holds);

  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      auto vb = check_charfree_bound(make_ideal(
          qxy, {"x^" + std::to_string(a), "y^" + std::to_string(b)}));
      CHECK(vb.holds);
    }
}
