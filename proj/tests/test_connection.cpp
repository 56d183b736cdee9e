#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcurv/connection.hpp"

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace tcurv;

namespace {

// the connection table as printed by the source, including its two entries
// that contradict torsion-freeness (nabla_{e3} e1 = -e1, nabla_{e3} e2 = -e2)
Connection printed_table_connection(const Rational& eps) {
  Connection conn = Connection::zero(3);
  conn.gamma(2, 0, 0) = -eps;      // nabla_e1 e1 = -eps e3
  conn.gamma(2, 1, 1) = -eps;      // nabla_e2 e2 = -eps e3
  conn.gamma(0, 0, 2) = Rational(1);   // nabla_e1 e3 = e1
  conn.gamma(1, 1, 2) = Rational(1);   // nabla_e2 e3 = e2
  conn.gamma(0, 2, 0) = Rational(-1);  // nabla_e3 e1 = -e1  (divergent entry)
  conn.gamma(1, 2, 1) = Rational(-1);  // nabla_e3 e2 = -e2  (divergent entry)
  return conn;
}

}  // namespace

TEST_CASE("koszul connection of the bundled example") {
  for (const Rational& eps : {Rational(1), Rational(-1)}) {
    CAPTURE(eps.str());
    FrameSpec f = fixtures::e3_frame(eps);
    Connection conn = koszul_connection(f);

    CHECK(conn.gamma(2, 0, 0) == -eps);       // nabla_e1 e1 = -eps e3
    CHECK(conn.gamma(0, 0, 2) == Rational(1));  // nabla_e1 e3 = e1
    CHECK(conn.gamma(2, 1, 1) == -eps);       // nabla_e2 e2 = -eps e3
    CHECK(conn.gamma(1, 1, 2) == Rational(1));  // nabla_e2 e3 = e2
    for (int k = 0; k < 3; ++k) {
      CHECK(conn.gamma(k, 2, 2) == Rational(0));  // nabla_e3 e3 = 0
      // torsion-freeness forces nabla_e3 e1 = nabla_e3 e2 = 0, against the
      // printed table
      CHECK(conn.gamma(k, 2, 0) == Rational(0));
      CHECK(conn.gamma(k, 2, 1) == Rational(0));
    }
    CHECK(conn.gamma(0, 0, 1) == Rational(0));  // nabla_e1 e2 = 0
    CHECK(conn.gamma(2, 1, 0) == Rational(0));  // nabla_e2 e1 = 0
  }
}

TEST_CASE("abelian frame has a flat connection") {
  Connection conn = koszul_connection(fixtures::abelian_frame(3));
  CHECK(conn.gamma.is_zero());
}

TEST_CASE("invalid frames are refused with the validation report") {
  FrameSpec f = fixtures::abelian_frame(3);
  f.set_bracket(0, 1, 2, Rational(1));
  f.set_bracket(1, 2, 0, Rational(1));
  f.set_bracket(0, 2, 0, Rational(1));  // breaks jacobi
  try {
    koszul_connection(f);
    FAIL("expected invalid_frame_error");
  } catch (const invalid_frame_error& e) {
    const CheckResult* jac = e.report().find("jacobi");
    REQUIRE(jac != nullptr);
    CHECK(!jac->pass);
  }
}

TEST_CASE("koszul output has zero torsion and metricity defects") {
  fixtures::Rng rng(99);
  std::vector<FrameSpec> frames = {fixtures::e3_frame(Rational(1)),
                                   fixtures::e3_frame(Rational(-1)),
                                   fixtures::heisenberg_frame(), fixtures::abelian_frame(3)};
  for (int iter = 0; iter < 10; ++iter) frames.push_back(rng.almost_abelian_frame(3));
  frames.push_back(rng.almost_abelian_frame(4));
  for (const auto& f : frames) {
    Connection conn = koszul_connection(f);
    CHECK(torsion_defect(f, conn).is_zero());
    CHECK(metricity_defect(f, conn).is_zero());
  }
}

TEST_CASE("the printed table fails the torsion test") {
  FrameSpec f = fixtures::e3_frame(Rational(1));
  Connection paper = printed_table_connection(Rational(1));
  Tensor defect = torsion_defect(f, paper);
  CHECK(!defect.is_zero());
  // T(e3,e1) = nabla_e3 e1 - nabla_e1 e3 - [e3,e1] = -e1 - e1 + e1 = -e1
  CHECK(defect(0, 2, 0) == Rational(-1));
  // it is not metric-compatible either: nabla_e3 g(e1,e1) picks up
  // 2 g(nabla_e3 e1, e1) = -2
  Tensor mdefect = metricity_defect(f, paper);
  CHECK(!mdefect.is_zero());
  CHECK(mdefect(2, 0, 0) == Rational(-2));
}

TEST_CASE("metricity defect witnesses a non-compatible connection") {
  FrameSpec f = fixtures::abelian_frame(3);
  Connection conn = Connection::zero(3);
  conn.gamma(0, 0, 0) = Rational(1);
  Tensor defect = metricity_defect(f, conn);
  CHECK(defect(0, 0, 0) == Rational(2));

  Connection zero = Connection::zero(3);
  CHECK(torsion_defect(f, zero).is_zero());
  CHECK(metricity_defect(f, zero).is_zero());
}

TEST_CASE("koszul is the unique solution of the defining linear system") {
  fixtures::Rng rng(123);
  std::vector<FrameSpec> frames = {fixtures::e3_frame(Rational(1)),
                                   fixtures::e3_frame(Rational(-1)),
                                   fixtures::heisenberg_frame()};
  for (int iter = 0; iter < 5; ++iter) frames.push_back(rng.almost_abelian_frame(3));
  frames.push_back(rng.almost_abelian_frame(4));
  for (const auto& f : frames) {
    auto solved = oracle::solve_connection(f);
    REQUIRE(solved.has_value());
    Connection conn = koszul_connection(f);
    CHECK(*solved == conn.gamma);
  }
}
