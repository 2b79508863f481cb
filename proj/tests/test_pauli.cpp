#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <doctest/doctest.h>

#include "geovqe/errors.hpp"
#include "geovqe/pauli.hpp"
#include "support/dense_oracles.hpp"

using namespace geovqe;

namespace {

// All 4^n strings on n qubits.
std::vector<PauliString> all_strings(int n) {
  std::vector<PauliString> out;
  const std::uint64_t lim = 1ull << n;
  for (std::uint64_t x = 0; x < lim; ++x)
    for (std::uint64_t z = 0; z < lim; ++z) out.emplace_back(n, x, z);
  return out;
}

PauliSum from_label_sum(int n, std::initializer_list<std::pair<cplx, const char*>> terms) {
  std::vector<PauliTerm> v;
  for (const auto& [c, l] : terms) v.push_back({c, PauliString::from_label(l)});
  return PauliSum(n, std::move(v));
}

}  // namespace

TEST_SUITE("pauli") {

TEST_CASE("label round trip and letter placement") {
  const PauliString s = PauliString::from_label("XIZY");
  CHECK(s.n_qubits == 4);
  CHECK(s.letter_at(0) == 'X');
  CHECK(s.letter_at(1) == 'I');
  CHECK(s.letter_at(2) == 'Z');
  CHECK(s.letter_at(3) == 'Y');
  CHECK(s.label() == "XIZY");
  CHECK(s.weight() == 3);
  CHECK(PauliString::identity(3).label() == "III");
  CHECK(PauliString::identity(3).weight() == 0);
  CHECK_THROWS_AS((void)PauliString::from_label(""), ValidationError);
  CHECK_THROWS_AS((void)PauliString::from_label("XQ"), ValidationError);
  CHECK_THROWS_AS((void)PauliString::from_label("xz"), ValidationError);
}

TEST_CASE("symplectic encoding matches 2x2 matrices") {
  // The (x, z) bit pair per qubit must reproduce the textbook matrices.
  CHECK(oracle::max_abs_diff(oracle::dense_string(PauliString::from_label("X")),
                             oracle::pauli_letter('X')) == 0.0);
  CHECK(oracle::max_abs_diff(oracle::dense_string(PauliString::from_label("Y")),
                             oracle::pauli_letter('Y')) == 0.0);
  CHECK(oracle::max_abs_diff(oracle::dense_string(PauliString::from_label("Z")),
                             oracle::pauli_letter('Z')) == 0.0);
  // Qubit 0 is the least significant bit: X on qubit 0 of 2 flips bit 0,
  // i.e. maps basis column 0 -> row 1.
  const Eigen::MatrixXcd xi = oracle::dense_from_label("XI");
  CHECK(xi(1, 0) == cplx(1.0, 0.0));
  CHECK(xi(0, 1) == cplx(1.0, 0.0));
  CHECK(xi(2, 3) == cplx(1.0, 0.0));
}

TEST_CASE("product: worked examples") {
  // X (x) I times Y (x) I = i Z (x) I.
  auto [phase, st] = pauli_mul(PauliString::from_label("XI"), PauliString::from_label("YI"));
  CHECK(phase == cplx(0.0, 1.0));
  CHECK(st == PauliString::from_label("ZI"));

  // Z X = i Y on one qubit.
  auto zx = pauli_mul(PauliString::from_label("Z"), PauliString::from_label("X"));
  CHECK(zx.phase == cplx(0.0, 1.0));
  CHECK(zx.string == PauliString::from_label("Y"));

  // P^2 = I with unit phase, for every 2-qubit P.
  for (const auto& p : all_strings(2)) {
    auto sq = pauli_mul(p, p);
    CHECK(sq.phase == cplx(1.0, 0.0));
    CHECK(sq.string.is_identity());
  }
}

TEST_CASE("product: exhaustive dense agreement on 1 and 2 qubits") {
  for (int n : {1, 2}) {
    for (const auto& a : all_strings(n)) {
      const Eigen::MatrixXcd da = oracle::dense_string(a);
      for (const auto& b : all_strings(n)) {
        auto [phase, st] = pauli_mul(a, b);
        const Eigen::MatrixXcd lhs = phase * oracle::dense_string(st);
        const Eigen::MatrixXcd rhs = da * oracle::dense_string(b);
        // Phases are exact eighth... fourth roots of unity, so demand equality.
        CHECK(oracle::max_abs_diff(lhs, rhs) == 0.0);
      }
    }
  }
}

TEST_CASE("product: random 3- and 4-qubit pairs against the dense oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(trial % 2);
    const PauliString a = oracle::random_string(n, rng);
    const PauliString b = oracle::random_string(n, rng);
    auto [phase, st] = pauli_mul(a, b);
    const Eigen::MatrixXcd lhs = phase * oracle::dense_string(st);
    const Eigen::MatrixXcd rhs = oracle::dense_string(a) * oracle::dense_string(b);
    CHECK(oracle::max_abs_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("product phases are fourth roots of unity and associative") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliString a = oracle::random_string(3, rng);
    const PauliString b = oracle::random_string(3, rng);
    const PauliString c = oracle::random_string(3, rng);
    auto ab = pauli_mul(a, b);
    CHECK(std::abs(std::abs(ab.phase) - 1.0) == 0.0);
    auto ab_c = pauli_mul(ab.string, c);
    auto bc = pauli_mul(b, c);
    auto a_bc = pauli_mul(a, bc.string);
    CHECK(ab.phase * ab_c.phase == bc.phase * a_bc.phase);
    CHECK(ab_c.string == a_bc.string);
  }
}

TEST_CASE("commutes_with matches the dense commutator") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const PauliString a = oracle::random_string(3, rng);
    const PauliString b = oracle::random_string(3, rng);
    const Eigen::MatrixXcd da = oracle::dense_string(a);
    const Eigen::MatrixXcd db = oracle::dense_string(b);
    const bool dense_commutes = oracle::max_abs_diff(da * db, db * da) <= 1e-12;
    CHECK(a.commutes_with(b) == dense_commutes);
    CHECK(a.commutes_with(b) == b.commutes_with(a));
  }
  CHECK(PauliString::from_label("XX").commutes_with(PauliString::from_label("YY")));
  CHECK_FALSE(PauliString::from_label("XI").commutes_with(PauliString::from_label("ZI")));
}

TEST_CASE("canonical form: merging, cancellation, pruning") {
  const PauliString x = PauliString::from_label("X");

  // {1 X, 2 X} -> {3 X}
  PauliSum merged(1, {{cplx(1.0), x}, {cplx(2.0), x}});
  REQUIRE(merged.size() == 1);
  CHECK(merged.terms()[0].coeff == cplx(3.0));
  CHECK(merged.terms()[0].string == x);

  // {1 X, -1 X} -> {}
  PauliSum cancelled(1, {{cplx(1.0), x}, {cplx(-1.0), x}});
  CHECK(cancelled.empty());

  // Coefficients at or below the prune tolerance vanish.
  PauliSum tiny(1, {{cplx(1e-13), PauliString::from_label("Z")}});
  CHECK(tiny.empty());
  PauliSum kept(1, {{cplx(1e-11), PauliString::from_label("Z")}});
  CHECK(kept.size() == 1);
}

TEST_CASE("canonical form is order independent and idempotent") {
  std::mt19937_64 rng(14);
  std::vector<PauliTerm> terms;
  for (int t = 0; t < 12; ++t) {
    std::normal_distribution<double> g;
    terms.push_back({cplx(g(rng), g(rng)), oracle::random_string(3, rng)});
  }
  // Duplicate a few strings so merging actually happens.
  terms.push_back({cplx(0.25), terms[0].string});
  terms.push_back({cplx(-0.5), terms[3].string});

  const PauliSum a(3, terms);
  std::shuffle(terms.begin(), terms.end(), rng);
  const PauliSum b(3, terms);
  CHECK(a == b);

  // Rebuilding from the canonical terms changes nothing.
  CHECK(PauliSum(3, a.terms()) == a);

  // Sorted by (x_mask, z_mask), no duplicates.
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto& p = a.terms()[i - 1].string;
    const auto& q = a.terms()[i].string;
    CHECK(std::pair(p.x_mask, p.z_mask) < std::pair(q.x_mask, q.z_mask));
  }
}

TEST_CASE("sum arithmetic against the dense oracle") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const PauliSum a = oracle::random_hermitian(3, 6, rng);
    const PauliSum b = oracle::random_hermitian(3, 6, rng);
    const Eigen::MatrixXcd da = oracle::dense_sum(a);
    const Eigen::MatrixXcd db = oracle::dense_sum(b);
    CHECK(oracle::max_abs_diff(oracle::dense_sum(a + b), da + db) <= 1e-12);
    CHECK(oracle::max_abs_diff(oracle::dense_sum(a - b), da - db) <= 1e-12);
    CHECK(oracle::max_abs_diff(oracle::dense_sum(a * b), da * db) <= 1e-12);
    const cplx s(0.7, -0.3);
    CHECK(oracle::max_abs_diff(oracle::dense_sum(a * s), s * da) <= 1e-12);
  }
}

TEST_CASE("sums of mismatched qubit counts are rejected") {
  const PauliSum a = PauliSum::identity(2);
  const PauliSum b = PauliSum::identity(3);
  CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
  CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
}

TEST_CASE("hermiticity and adjoint") {
  const PauliSum h = from_label_sum(2, {{cplx(0.5), "XI"}, {cplx(-1.25), "ZZ"}});
  CHECK(h.is_hermitian());
  CHECK(h.adjoint() == h);

  const PauliSum g = from_label_sum(2, {{cplx(0.0, 0.5), "XY"}});
  CHECK_FALSE(g.is_hermitian());
  CHECK(g.adjoint() == from_label_sum(2, {{cplx(0.0, -0.5), "XY"}}));

  std::mt19937_64 rng(16);
  const PauliSum r = oracle::random_hermitian(3, 8, rng);
  const Eigen::MatrixXcd d = oracle::dense_sum(r);
  CHECK(oracle::max_abs_diff(d, d.adjoint()) <= 1e-12);
  CHECK(oracle::max_abs_diff(oracle::dense_sum(r.adjoint()), d.adjoint()) <= 1e-12);
}

TEST_CASE("commutator: worked examples") {
  const PauliSum z = PauliSum::single(1, 1.0, PauliString::from_label("Z"));
  const PauliSum x = PauliSum::single(1, 1.0, PauliString::from_label("X"));

  CHECK(commutator(z, z).empty());
  // [Z, X] = 2i Y.
  const PauliSum zx = commutator(z, x);
  REQUIRE(zx.size() == 1);
  CHECK(zx.terms()[0].string == PauliString::from_label("Y"));
  CHECK(std::abs(zx.terms()[0].coeff - cplx(0.0, 2.0)) == 0.0);
}

TEST_CASE("commutator: antisymmetry and dense agreement") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const PauliSum a = oracle::random_hermitian(3, 5, rng);
    const PauliSum b = oracle::random_hermitian(3, 5, rng);
    CHECK(commutator(a, b) == commutator(b, a) * cplx(-1.0));
    const Eigen::MatrixXcd da = oracle::dense_sum(a);
    const Eigen::MatrixXcd db = oracle::dense_sum(b);
    CHECK(oracle::max_abs_diff(oracle::dense_sum(commutator(a, b)), da * db - db * da) <=
          1e-12);
  }
}

TEST_CASE("mutually_commuting") {
  CHECK(from_label_sum(2, {{cplx(1.0), "XX"}, {cplx(1.0), "YY"}}).mutually_commuting());
  CHECK_FALSE(
      from_label_sum(2, {{cplx(1.0), "XI"}, {cplx(1.0), "ZI"}}).mutually_commuting());
  CHECK(PauliSum(3).mutually_commuting());
  // XY and YX anticommute with each other? No: they commute (two
  // anticommuting sites). XY vs YY differ on qubit 0 only -> anticommute.
  CHECK(from_label_sum(2, {{cplx(1.0), "XY"}, {cplx(1.0), "YX"}}).mutually_commuting());
  CHECK_FALSE(
      from_label_sum(2, {{cplx(1.0), "XY"}, {cplx(1.0), "YY"}}).mutually_commuting());
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(PauliString(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(PauliString(65, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(PauliString(2, 0b100, 0), std::invalid_argument);  // bit above n
  CHECK_THROWS_AS(PauliSum(2, {{cplx(1.0), PauliString::from_label("XXX")}}),
                  std::invalid_argument);
}

}  // TEST_SUITE
