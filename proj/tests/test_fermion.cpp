#include <bit>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest/doctest.h>

#include "geovqe/errors.hpp"
#include "geovqe/fermion.hpp"
#include "geovqe/state.hpp"
#include "support/dense_oracles.hpp"

using namespace geovqe;

namespace {

Eigen::MatrixXcd dense_single_gen(int i, int a, int n) {
  const Eigen::MatrixXcd m =
      oracle::ladder_matrix(a, true, n) * oracle::ladder_matrix(i, false, n);
  return cplx(0.0, 1.0) * (m - m.adjoint().eval());
}

Eigen::MatrixXcd dense_double_gen(int i, int j, int a, int b, int n) {
  const Eigen::MatrixXcd m =
      oracle::ladder_matrix(a, true, n) * oracle::ladder_matrix(b, true, n) *
      oracle::ladder_matrix(j, false, n) * oracle::ladder_matrix(i, false, n);
  return cplx(0.0, 1.0) * (m - m.adjoint().eval());
}

}  // namespace

TEST_SUITE("fermion") {

TEST_CASE("jw_ladder: 1-mode creation operator") {
  // a_0^dag on one mode = (X - iY)/2 = |1><0|.
  const PauliSum ad = jw_ladder(0, true, 1);
  REQUIRE(ad.size() == 2);
  CHECK(ad.terms()[0].string == PauliString::from_label("X"));
  CHECK(ad.terms()[0].coeff == cplx(0.5));
  CHECK(ad.terms()[1].string == PauliString::from_label("Y"));
  CHECK(ad.terms()[1].coeff == cplx(0.0, -0.5));
  CHECK(oracle::max_abs_diff(oracle::dense_sum(ad), oracle::ladder_matrix(0, true, 1)) ==
        0.0);
}

TEST_CASE("jw_ladder matches the occupation-basis oracle for all modes up to 6") {
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p < n; ++p)
      for (bool dagger : {false, true}) {
        const Eigen::MatrixXcd got = oracle::dense_sum(jw_ladder(p, dagger, n));
        const Eigen::MatrixXcd want = oracle::ladder_matrix(p, dagger, n);
        CHECK(oracle::max_abs_diff(got, want) <= 1e-12);
      }
}

TEST_CASE("canonical anticommutation relations") {
  const int n = 4;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      // {a_p, a_q^dag} = delta_pq I.
      const PauliSum ap = jw_ladder(p, false, n);
      const PauliSum aqd = jw_ladder(q, true, n);
      const PauliSum anti = ap * aqd + aqd * ap;
      if (p == q) {
        REQUIRE(anti.size() == 1);
        CHECK(anti.terms()[0].string.is_identity());
        CHECK(std::abs(anti.terms()[0].coeff - cplx(1.0)) <= 1e-12);
      } else {
        CHECK(anti.empty());
      }
      // {a_p, a_q} = 0 always; p == q gives nilpotency.
      const PauliSum aq = jw_ladder(q, false, n);
      CHECK((ap * aq + aq * ap).empty());
    }
}

TEST_CASE("single excitation generator: structure and dense agreement") {
  const ExcitationGenerator g = single_excitation_generator(0, 1, 2);
  CHECK(g.kind == ExcitationGenerator::Kind::single);
  CHECK(g.description() == "s:0->1");
  REQUIRE(g.op.size() == 2);
  for (const auto& t : g.op.terms()) CHECK(std::abs(std::abs(t.coeff) - 0.5) <= 1e-15);
  CHECK(g.op.is_hermitian());
  CHECK(g.op.mutually_commuting());
  CHECK(oracle::max_abs_diff(oracle::dense_sum(g.op), dense_single_gen(0, 1, 2)) <=
        1e-12);

  // All singles on up to 6 modes match the ladder-matrix oracle.
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a) {
        if (i == a) continue;
        const ExcitationGenerator gen = single_excitation_generator(i, a, n);
        CHECK(oracle::max_abs_diff(oracle::dense_sum(gen.op), dense_single_gen(i, a, n)) <=
              1e-12);
      }
}

TEST_CASE("double excitation generator: structure and dense agreement") {
  const ExcitationGenerator g = double_excitation_generator(0, 1, 2, 3, 4);
  CHECK(g.kind == ExcitationGenerator::Kind::pair);
  CHECK(g.description() == "d:(0,1)->(2,3)");
  REQUIRE(g.op.size() == 8);
  for (const auto& t : g.op.terms()) CHECK(std::abs(std::abs(t.coeff) - 0.125) <= 1e-15);
  CHECK(g.op.is_hermitian());
  CHECK(g.op.mutually_commuting());

  // Every valid (i<j) -> (a<b) on up to 6 modes against the oracle.
  for (int n = 4; n <= 6; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) {
            if (a == i || a == j || b == i || b == j) continue;
            const ExcitationGenerator gen = double_excitation_generator(i, j, a, b, n);
            CHECK(oracle::max_abs_diff(oracle::dense_sum(gen.op),
                                       dense_double_gen(i, j, a, b, n)) <= 1e-12);
          }

  CHECK_THROWS_AS((void)double_excitation_generator(1, 0, 2, 3, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)double_excitation_generator(0, 1, 3, 2, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)double_excitation_generator(0, 1, 1, 3, 4),
                  std::invalid_argument);
}

TEST_CASE("generators commute with the total number operator") {
  const MoleculeSpec spec{6, 2, "n6"};
  const OperatorPool pool = build_pool(spec);
  const PauliSum nop = number_operator(6);
  for (const auto& gen : pool.generators) CHECK(commutator(gen.op, nop).empty());
}

TEST_CASE("build_pool: spin-conserving enumeration for (4, 2)") {
  const OperatorPool pool = build_pool({4, 2, "h2"});
  REQUIRE(pool.size() == 3);
  CHECK(pool.generators[0].description() == "s:0->2");
  CHECK(pool.generators[1].description() == "s:1->3");
  CHECK(pool.generators[2].description() == "d:(0,1)->(2,3)");

  PoolOptions all;
  all.spin_conserving = false;
  const OperatorPool full = build_pool({4, 2, "h2"}, all);
  CHECK(full.size() == 5);  // 4 singles + 1 double

  // Deterministic: two builds agree term for term.
  const OperatorPool again = build_pool({4, 2, "h2"});
  REQUIRE(again.size() == pool.size());
  for (std::size_t j = 0; j < pool.size(); ++j) CHECK(again.op(j) == pool.op(j));
}

TEST_CASE("build_pool: (6, 2) counts and edge cases") {
  CHECK(build_pool({6, 2, ""}).size() == 8);  // 4 singles + 4 spin-balanced doubles
  CHECK(build_pool({4, 4, ""}).size() == 0);  // no virtuals
  CHECK(build_pool({4, 0, ""}).size() == 0);  // no occupied
  CHECK(build_pool({8, 4, ""}).size() == 26);
}

TEST_CASE("hf_reference is the lowest-index determinant") {
  const StateVector hf = hf_reference({4, 2, "h2"});
  CHECK(hf.amplitude(3) == cplx(1.0));
  CHECK(hf.norm() == 1.0);
  CHECK(hf_reference({3, 0, ""}).amplitude(0) == cplx(1.0));

  // <N> on the determinant equals the electron count, and stays conserved
  // under pool rotations.
  const MoleculeSpec spec{6, 4, ""};
  const StateVector ref = hf_reference(spec);
  const PauliSum nop = number_operator(6);
  CHECK(expectation(nop, ref) == doctest::Approx(4.0).epsilon(1e-12));
  const OperatorPool pool = build_pool(spec);
  StateVector s = ref;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  for (int step = 0; step < 50; ++step)
    s = apply_exp_generator(s, pool.op(rng() % pool.size()), angle(rng));
  CHECK(expectation(nop, s) == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("number operator diagonal") {
  const PauliSum nop = number_operator(3);
  const Eigen::MatrixXcd d = oracle::dense_sum(nop);
  for (int b = 0; b < 8; ++b) {
    CHECK(d(b, b).real() == doctest::Approx(std::popcount(unsigned(b))).epsilon(1e-14));
    for (int c = 0; c < 8; ++c)
      if (c != b) CHECK(std::abs(d(b, c)) == 0.0);
  }
}

TEST_CASE("uccsd_ansatz: one zero angle per pool operator") {
  const MoleculeSpec spec{4, 2, "h2"};
  const Ansatz a = uccsd_ansatz(spec);
  REQUIRE(a.size() == 3);
  for (std::size_t t = 0; t < a.size(); ++t) {
    CHECK(a.elements[t].pool_index == static_cast<int>(t));
    CHECK(a.elements[t].theta == 0.0);
  }
  CHECK(uccsd_ansatz({8, 4, "h4"}).size() == 26);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((MoleculeSpec{0, 0, ""}.validate()), ValidationError);
  CHECK_THROWS_AS((MoleculeSpec{4, 5, ""}.validate()), ValidationError);
  CHECK_THROWS_AS((MoleculeSpec{4, -1, ""}.validate()), ValidationError);
  MoleculeSpec{4, 0, ""}.validate();
}

}  // TEST_SUITE
