#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealkit/hilbert.hpp"
#include "idealkit/session.hpp"

using namespace idealkit;

namespace {

RingPresentation make_ring(const std::vector<std::string>& vars,
                           const std::vector<std::string>& rels, int dim) {
  RingPresentation r;
  r.field = Field::rationals();
  r.variables = vars;
  for (auto& s : rels)
    r.relations.push_back(parse_polynomial(s, vars, r.field));
  r.declared_dim = dim;
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

IdealHandle handle_of(const RingPresentation& r, const MonomialIdeal& I) {
  IdealHandle h;
  h.ring = r;
  for (auto& g : I.gens) h.gens.push_back(poly_from_monomial(g));
  return h;
}

const RingPresentation kQxy = make_ring({"x", "y"}, {}, 2);

}  // namespace

TEST_CASE("minimal generator counts") {
  auto quintic = make_ring({"x", "y", "z"}, {"x^2+y^5+z^5"}, 2);
  CHECK(mu(make_ideal(quintic, {"x", "y^3", "y^2*z", "y*z^2", "z^3"})) == 5);

  auto qxyz = make_ring({"x", "y", "z"}, {}, 3);
  CHECK(mu(make_ideal(qxyz, {"x", "y", "z"})) == 3);

  auto e8 = make_ring({"x", "y", "z"}, {"x^2+y^3+z^5"}, 2);
  CHECK(mu(make_ideal(e8, {"x", "y^2", "y*z^2", "z^4"})) == 4);

  // Redundant generators do not inflate mu.
  CHECK(mu(make_ideal(kQxy, {"x", "y", "x+y", "x^2"})) == 2);
}

TEST_CASE("loewy length examples") {
  auto quadric = make_ring({"x", "y", "z"}, {"x^2+y^2"}, 2);
  CHECK(loewy_length(make_ideal(quadric, {"x", "z^4"})) == 5);

  for (int k = 1; k <= 4; ++k) {
    auto mk = power(max_ideal(2), k);
    CHECK(loewy_length(handle_of(kQxy, mk)) == k);
  }

  auto e8 = make_ring({"x", "y", "z"}, {"x^2+y^3+z^5"}, 2);
  CHECK(loewy_length(make_ideal(e8, {"x", "y^2", "y*z^2", "z^4"})) == 4);
}

TEST_CASE("order examples") {
  auto e8 = make_ring({"x", "y", "z"}, {"x^2+y^3+z^5"}, 2);
  CHECK(ord(make_ideal(e8, {"x", "y^2", "y*z^2", "z^4"})) == 1);

  for (int k = 1; k <= 4; ++k)
    CHECK(ord(handle_of(kQxy, power(max_ideal(2), k))) == k);

  CHECK(ord(make_ideal(kQxy, {"x^2", "x*y", "y^5"})) == 2);
}

TEST_CASE("m-fullness examples") {
  auto m2 = is_m_full(make_ideal(kQxy, {"x^2", "x*y", "y^2"}));
  CHECK(m2.m_full);
  CHECK(m2.witness == parse_polynomial("x+y", {"x", "y"}, kQxy.field));

  auto sq = is_m_full(make_ideal(kQxy, {"x^2", "y^2"}), 5, 0);
  CHECK_FALSE(sq.m_full);
  CHECK(sq.tried.size() == 5);

  CHECK(is_m_full(make_ideal(kQxy, {"x", "y"})).m_full);
}

TEST_CASE("integral-closure verdicts") {
  CHECK(is_integrally_closed(make_ideal(kQxy, {"x^2", "y^3"})) ==
        std::optional<bool>(false));
  CHECK(is_integrally_closed(make_ideal(kQxy, {"x^2", "x*y", "y^2"})) ==
        std::optional<bool>(true));
  auto quadric = make_ring({"x", "y", "z"}, {"x^2+y^2"}, 2);
  CHECK_FALSE(
      is_integrally_closed(make_ideal(quadric, {"x", "z^4"})).has_value());
}

TEST_CASE("section rings") {
  auto qxyz = make_ring({"x", "y", "z"}, {}, 3);
  auto sec = section_ring(qxyz, parse_polynomial("z", qxyz.variables,
                                                 qxyz.field));
  CHECK(sec.declared_dim == 2);
  REQUIRE(sec.relations.size() == 1);
  CHECK(sec.relations[0] ==
        parse_polynomial("z", qxyz.variables, qxyz.field));
  CHECK_THROWS(section_ring(
      qxyz, parse_polynomial("z^2", qxyz.variables, qxyz.field)));

  // Rational double point: every general hyperplane section of the
  // x^2+y^3+z^5 ring still has multiplicity 2.
  auto e8 = make_ring({"x", "y", "z"}, {"x^2+y^3+z^5"}, 2);
  for (int idx : {0, 1, 2}) {
    Polynomial z = linear_form_candidate(e8, idx, 0);
    RingPresentation s = section_ring(e8, z);
    CHECK(s.declared_dim == 1);
    IdealHandle m = make_ideal(s, {"x", "y", "z"});
    CHECK(multiplicity(m) == 2);
  }
}

TEST_CASE("ord is bounded by loewy length") {
  for (auto& I : enumerate_integrally_closed(2, 8)) {
    IdealHandle h = handle_of(kQxy, I);
    CHECK(ord(h) <= loewy_length(h));
  }
  auto quadric = make_ring({"x", "y", "z"}, {"x^2+y^2"}, 2);
  auto e8 = make_ring({"x", "y", "z"}, {"x^2+y^3+z^5"}, 2);
  for (auto h : {make_ideal(quadric, {"x", "z^4"}),
                 make_ideal(e8, {"x", "y^2", "y*z^2", "z^4"}),
                 make_ideal(e8, {"x", "y", "z^2"})})
    CHECK(ord(h) <= loewy_length(h));
}

TEST_CASE("powers: loewy subadditive, ord additive in the regular case") {
  for (auto& I : enumerate_integrally_closed(2, 8)) {
    IdealHandle h = handle_of(kQxy, I);
    int ll = loewy_length(h), o = ord(h);
    for (int n = 2; n <= 3; ++n) {
      IdealHandle hn = handle_of(kQxy, power(I, n));
      CHECK(loewy_length(hn) <= n * ll);
      CHECK(ord(hn) == n * o);
    }
  }
}

TEST_CASE("larger ideals need no more generators than m-full ones") {
  auto family = enumerate_integrally_closed(2, 8);
  std::vector<bool> mfull;
  for (auto& I : family)
    mfull.push_back(is_m_full(handle_of(kQxy, I)).m_full);
  auto contains_ideal = [](const MonomialIdeal& big,
                           const MonomialIdeal& small) {
    for (auto& g : small.gens)
      if (!big.contains(g)) return false;
    return true;
  };
  for (size_t i = 0; i < family.size(); ++i) {
    if (!mfull[i]) continue;
    long mu_i = mu(handle_of(kQxy, family[i]));
    for (auto& J : family) {
      if (!contains_ideal(J, family[i])) continue;
      CHECK(mu(handle_of(kQxy, J)) <= mu_i);
    }
  }
}

TEST_CASE("integrally closed implies m-full in the enumerated family") {
  for (auto& I : enumerate_integrally_closed(2, 8)) {
    auto r = is_m_full(handle_of(kQxy, I));
    CHECK(r.m_full);
    CHECK_FALSE(r.witness.is_zero());
  }
}

TEST_CASE("mu = ord + 1 exactly characterizes m-fullness here") {
  for (auto& I : enumerate_integrally_closed(2, 8)) {
    IdealHandle h = handle_of(kQxy, I);
    REQUIRE(is_m_full(h).m_full);
    CHECK(mu(h) == ord(h) + 1);
  }
  // ...and a non-m-full ideal violating the formula.
  IdealHandle sq = make_ideal(kQxy, {"x^2", "y^2"});
  CHECK_FALSE(is_m_full(sq).m_full);
  CHECK(mu(sq) == 2);
  CHECK(ord(sq) + 1 == 3);
}

TEST_CASE("linear form candidates are linear, deterministic, nonzero") {
  auto qxyz = make_ring({"x", "y", "z"}, {}, 3);
  Polynomial first = linear_form_candidate(qxyz, 0, 0);
  CHECK(first == parse_polynomial("x+y+z", qxyz.variables, qxyz.field));
  for (int i = 0; i < 8; ++i) {
    Polynomial z = linear_form_candidate(qxyz, i, 123);
    CHECK_FALSE(z.is_zero());
    CHECK(z.degree() == 1);
    CHECK(z.order() == 1);
    CHECK(z == linear_form_candidate(qxyz, i, 123));
  }
  CHECK(linear_form_candidate(qxyz, 3, 1) != linear_form_candidate(qxyz, 3, 2));
}
