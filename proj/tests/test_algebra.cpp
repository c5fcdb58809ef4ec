#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matchfield/errors.hpp"
#include "matchfield/pideal.hpp"
#include "matchfield/golden.hpp"
#include "matchfield/reproduce.hpp"
#include "matchfield/sagbi.hpp"
#include "matchfield/swaps.hpp"
#include "matchfield/xpoly.hpp"
#include "test_util.hpp"

using namespace mf;

namespace {

ExponentMatrix exp_of(int n, std::initializer_list<std::pair<int, int>> cells) {
  ExponentMatrix m = ExponentMatrix::zero(n);
  for (auto [r, c] : cells) m.at(r, c) += 1;
  return m;
}

}  // namespace

TEST_CASE("pluecker forms") {
  // P24 on n=4: x12 x24 - x14 x22
  XPolynomial p24 = plucker_form(4, Subset(4, {2, 4}));
  XPolynomial expected;
  expected.add_term(exp_of(4, {{1, 2}, {2, 4}}), 1);
  expected.add_term(exp_of(4, {{1, 4}, {2, 2}}), -1);
  CHECK(p24 == expected);

  XPolynomial single = plucker_form(5, Subset(5, {3}));
  XPolynomial xs;
  xs.add_term(exp_of(5, {{1, 3}}), 1);
  CHECK(single == xs);

  CHECK_THROWS(plucker_form(3, Subset(3, {1, 2, 3})));  // not a proper subset
  CHECK(plucker_form(4, Subset(4, {1, 2, 3})).terms().size() == 6);
}

TEST_CASE("signed monomial map") {
  MatchingField b3 = MatchingField::block(4, 3);

  auto [s24, e24] = phi(b3, {Subset(4, {2, 4})});
  CHECK(s24 == -1);
  CHECK(e24 == exp_of(4, {{1, 4}, {2, 2}}));

  auto [s_empty, e_empty] = phi(b3, {});
  CHECK(s_empty == 1);
  CHECK(e_empty == ExponentMatrix::zero(4));

  // product of the P13 and P24 reports
  auto [s, e] = phi(b3, {Subset(4, {1, 3}), Subset(4, {2, 4})});
  CHECK(s == -1);
  CHECK(e == exp_of(4, {{1, 1}, {2, 3}, {1, 4}, {2, 2}}));
}

TEST_CASE("degree-2 kernels of the n=3 fields") {
  for (const auto& row : golden::n3_table()) {
    MatchingField field = MatchingField::block(3, row.ell);
    auto kernel = degree2_kernel(field);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel.front() == parse_binomial(row.generator, 3));
  }
  // the printed ideal generator text round-trips through our printer
  MatchingField b2 = MatchingField::block(3, 2);
  auto kernel = degree2_kernel(b2);
  CHECK(kernel.front().to_string(b2) == "P1P32 + P3P12");  // {2,3} reads (3,2) under B_2
}

TEST_CASE("degree-2 kernel of the n=4 example has ten generators") {
  MatchingField b3 = MatchingField::block(4, 3);
  auto kernel = degree2_kernel(b3);
  CHECK(kernel.size() == 10);

  // spot checks straight from the printed generating set
  auto contains = [&](const std::string& text) {
    SignedBinomial b = parse_binomial(text, 4);
    for (const auto& g : kernel)
      if (g == b) return true;
    return false;
  };
  CHECK(contains("P23 P134 - P13 P234"));
  CHECK(contains("P4 P23 + P2 P43"));
  CHECK(contains("P2 P13 - P1 P23"));
  CHECK(contains("P4 P12 + P1 P42"));
  // the disputed printed row has a repeated factor and is not a kernel
  // element; the computed replacement differs in one variable
  CHECK_FALSE(contains("P13 P42 - P12 P42"));
  CHECK(contains("P13 P42 - P12 P43"));
}

TEST_CASE("kernel binomials are exactly the row-wise equal two-column pairs") {
  for (int n : {3, 4}) {
    for (int ell = 0; ell <= n; ++ell) {
      MatchingField field = MatchingField::block(n, ell);
      auto kernel = degree2_kernel(field);
      size_t pairs = 0;
      auto monomials = degree2_monomials(n);
      for (size_t i = 0; i < monomials.size(); ++i) {
        for (size_t j = i + 1; j < monomials.size(); ++j) {
          Tableau a(n, {field.column(monomials[i].factors[0]),
                        field.column(monomials[i].factors[1])});
          Tableau b(n, {field.column(monomials[j].factors[0]),
                        field.column(monomials[j].factors[1])});
          if (row_wise_equal(a, b)) ++pairs;
        }
      }
      CHECK(kernel.size() == pairs);
      for (const auto& g : kernel) {
        Tableau a(n, {field.column(g.lead.factors[0]), field.column(g.lead.factors[1])});
        Tableau b(n, {field.column(g.tail.factors[0]), field.column(g.tail.factors[1])});
        CHECK(row_wise_equal(a, b));
      }
    }
  }
}

TEST_CASE("initial forms") {
  WeightVector w0 = weight_vector(weight_matrix_block(3, 0));
  MatchingField diag = MatchingField::diagonal(3);

  PPolynomial i3;  // P1 P23 - P2 P13 + P3 P12
  i3.emplace(PMonomial({Subset(3, {1}), Subset(3, {2, 3})}), Rat(1));
  i3.emplace(PMonomial({Subset(3, {2}), Subset(3, {1, 3})}), Rat(-1));
  i3.emplace(PMonomial({Subset(3, {3}), Subset(3, {1, 2})}), Rat(1));

  PPolynomial in0 = initial_form(w0, i3);
  CHECK(in0.size() == 2);
  CHECK(in0.count(PMonomial({Subset(3, {1}), Subset(3, {2, 3})})));
  CHECK(in0.count(PMonomial({Subset(3, {2}), Subset(3, {1, 3})})));
  CHECK(to_string(in0, diag) == "P1P23 - P2P13");

  WeightVector w2 = weight_vector(weight_matrix_block(3, 2));
  PPolynomial in2 = initial_form(w2, i3);
  CHECK(in2.size() == 2);
  CHECK(in2.count(PMonomial({Subset(3, {1}), Subset(3, {2, 3})})));
  CHECK(in2.count(PMonomial({Subset(3, {3}), Subset(3, {1, 2})})));

  PPolynomial mono;
  mono.emplace(PMonomial({Subset(3, {2}), Subset(3, {1, 3})}), Rat(5));
  CHECK(initial_form(w0, mono) == mono);
}

TEST_CASE("lifting kernel binomials to Pluecker relations") {
  // ell = 0: the lift of P1 P23 - P2 P13 is the full three-term relation
  {
    MatchingField field = MatchingField::block(3, 0);
    WeightVector w = weight_vector(weight_matrix_block(3, 0));
    auto kernel = degree2_kernel(field);
    REQUIRE(kernel.size() == 1);
    PPolynomial g = lift_to_plucker_relation(kernel.front(), w, 3);
    REQUIRE(g.size() == 3);
    CHECK(g.at(PMonomial({Subset(3, {1}), Subset(3, {2, 3})})) ==
          -g.at(PMonomial({Subset(3, {2}), Subset(3, {1, 3})})));
    CHECK(g.at(PMonomial({Subset(3, {1}), Subset(3, {2, 3})})) ==
          g.at(PMonomial({Subset(3, {3}), Subset(3, {1, 2})})));
  }
  // ell = 2: same relation up to sign, different initial pair
  {
    MatchingField field = MatchingField::block(3, 2);
    WeightVector w = weight_vector(weight_matrix_block(3, 2));
    auto kernel = degree2_kernel(field);
    REQUIRE(kernel.size() == 1);
    PPolynomial g = lift_to_plucker_relation(kernel.front(), w, 3);
    CHECK(g.size() == 3);
  }
  // every generator for n=4, ell=3 lifts
  {
    MatchingField field = MatchingField::block(4, 3);
    WeightVector w = weight_vector(weight_matrix_block(4, 3));
    for (const auto& b : degree2_kernel(field)) CHECK_NOTHROW(lift_to_plucker_relation(b, w, 4));
  }
}

TEST_CASE("degree-2 initial algebra dimensions") {
  CHECK(dim_degree2_initial_algebra(MatchingField::block(3, 0)) == 20);
  CHECK(dim_degree2_initial_algebra(MatchingField::block(2, 0)) == 3);
  CHECK(dim_degree2_initial_algebra(MatchingField::block(2, 1)) == 3);

  const size_t base4 = dim_degree2_initial_algebra(MatchingField::block(4, 0));
  for (int ell = 1; ell <= 4; ++ell)
    CHECK(dim_degree2_initial_algebra(MatchingField::block(4, ell)) == base4);
}

TEST_CASE("dimension equals the exact Pluecker coefficient rank") {
  for (int n = 2; n <= 4; ++n) {
    size_t rank = plucker_degree2_rank(n);
    for (int ell = 0; ell <= n; ++ell)
      CHECK(dim_degree2_initial_algebra(MatchingField::block(n, ell)) == rank);
  }
}

TEST_CASE("grassmannian restriction") {
  // k = 2, n = 4, diagonal: a single collision pair
  MatchingField diag = MatchingField::diagonal(4);
  auto kernel = degree2_kernel(diag, 2);
  REQUIRE(kernel.size() == 1);
  CHECK(kernel.front() == parse_binomial("P13 P24 - P14 P23", 4));

  // k = 1: no relations, all monomials distinct
  CHECK(dim_degree2_initial_algebra(diag, 1) == 10);  // C(5,2) pairs of 4 variables
  CHECK(degree2_kernel(diag, 1).empty());

  // restricted kernels embed into the full kernel
  MatchingField b2 = MatchingField::block(5, 2);
  auto full = degree2_kernel(b2);
  for (int k = 1; k <= 4; ++k) {
    for (const auto& b : degree2_kernel(b2, k))
      CHECK(std::find(full.begin(), full.end(), b) != full.end());
  }
}

TEST_CASE("sagbi certificates at small size") {
  SagbiReport r31 = sagbi_certificate_degree2(3, 1);
  CHECK(r31.quadratic_generation);
  CHECK(r31.dim_equal);
  CHECK(r31.lifts_exist);
  CHECK(r31.certified());

  for (int ell = 0; ell <= 4; ++ell) {
    SagbiReport rep = sagbi_certificate_degree2(4, ell);
    CHECK(rep.certified());
  }

  for (int ell = 0; ell <= 2; ++ell) CHECK(sagbi_certificate_degree2(2, ell).certified());
}

TEST_CASE("the explicit counterexample field fails quadratic generation") {
  MatchingField field = testutil::example31_field();
  SagbiReport rep = sagbi_certificate_degree2(field, nullptr);
  CHECK_FALSE(rep.quadratic_generation);
  CHECK_FALSE(rep.certified());
  CHECK_FALSE(rep.lifts_checked);
}

TEST_CASE("reproduce targets for the worked examples") {
  CHECK(reproduce("example-2-2").exit_code == 0);
  CHECK(reproduce("example-2-3").exit_code == 0);
  CHECK(reproduce("nonsense").exit_code == 64);
}
