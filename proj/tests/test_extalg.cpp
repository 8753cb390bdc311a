#include <doctest.h>

#include <random>

#include "gts/extalg.hpp"
#include "paper_cases.hpp"

using namespace gts;
using namespace gts::testing;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<PresentedModule<PF>> example_modules() {
  return {cyclic_mod_x(2),      cyclic_mod_x(3),           rank_two_char_two(false),          rank_two_char_two(true),
          rank_two_char_three(), rank_three_nine_variables(false), rank_three_nine_variables(true),
          rank_three_char_three(false)};
}

}  // namespace

TEST_CASE("symmetric powers of a presented module") {
  auto M = rank_two_char_three();
  auto R = M.base();
  auto s0 = sym_power(M, 0);
  CHECK(s0.module.rank == 1);
  CHECK(s0.module.relations.empty());

  auto s1 = sym_power(M, 1);
  CHECK(s1.module.rank == 2);
  CHECK(s1.module.relations == M.relations);

  // (s m1 - t m2)·m1 = s m1^2 - t m1 m2 and (s m1 - t m2)·m2 = s m1 m2 - t m2^2
  auto s2 = sym_power(M, 2);
  CHECK(s2.monomials == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
  REQUIRE(s2.module.relations.size() == 2);
  CHECK(s2.module.relations[0] == V(R, {"s", "-t", "0"}));
  CHECK(s2.module.relations[1] == V(R, {"0", "s", "-t"}));

  for (const auto& N : example_modules())
    for (std::size_t k = 0; k <= 3; ++k) CHECK(sym_power(N, k).module.rank == binom(N.rank + k - 1, k));
}

TEST_CASE("degreewise checks on symmetric algebras") {
  // B = A[x,y]/(sx - ty) over F3[s,t]: the degree-1 piece fails surjectivity in degree 3
  auto b = algebra_degreewise_check(rank_two_char_three(), 3, {1});
  REQUIRE(b.degrees.size() == 1);
  CHECK(b.degrees[0].report.surjective->verdict == Verdict::Fails);
  CHECK(b.algebra_not_surjective);

  // B = F_p[x]/(x): injectivity fails in degree p
  for (unsigned p : {2u, 3u, 5u}) {
    auto a = algebra_degreewise_check(cyclic_mod_x(p), p, {1});
    CHECK(a.degrees[0].report.injective->verdict == Verdict::Fails);
    CHECK(a.algebra_not_injective);
    CHECK_FALSE(a.algebra_not_surjective);
  }

  auto R = make_ring(PF(2), {"s", "t"});
  PresentedModule<PF> free{make_quotient_ring(R), 2, {}};
  auto f = algebra_degreewise_check(free, 2, {0, 1, 2, 3});
  CHECK(f.degrees.size() == 4);
  for (const auto& d : f.degrees) {
    CHECK(d.report.injective->verdict == Verdict::Holds);
    CHECK(d.report.surjective->verdict == Verdict::Holds);
  }
  CHECK_FALSE(f.algebra_not_injective);
  CHECK_FALSE(f.algebra_not_surjective);
}

TEST_CASE("the diagonal submodule is the span of the orbit sums") {
  for (unsigned p : {2u, 3u}) {
    auto R = make_ring(PF(p), {"s"});
    for (std::size_t m = 1; m <= 4; ++m) {
      Submodule<PF> D(R, m * m, diagonal_generators(R, m));
      TensorSetup<PF> S(PresentedModule<PF>{make_quotient_ring(R), m, {}}, 2);
      CHECK(submodule_equal(D, Submodule<PF>(R, m * m, S.orbit_elements())).equal);
    }
  }
  auto Q = make_ring(QF(), {"s"});
  for (std::size_t m = 1; m <= 4; ++m) {
    Submodule<QF> D(Q, m * m, diagonal_generators(Q, m));
    TensorSetup<QF> S(PresentedModule<QF>{make_quotient_ring(Q), m, {}}, 2);
    CHECK(submodule_equal(D, Submodule<QF>(Q, m * m, S.orbit_elements())).equal);
  }
}

TEST_CASE("polarization identity") {
  std::mt19937 rng(9);
  auto R2 = make_ring(PF(2), {"s", "t"});
  auto R3 = make_ring(PF(3), {"s", "t", "u"});
  auto Q = make_ring(QF(), {"s", "t"});
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t m = 1 + trial % 4;
    CHECK(polarization_identity(random_element(R2, m, rng), random_element(R2, m, rng)));
    CHECK(polarization_identity(random_element(R3, m, rng), random_element(R3, m, rng)));
    CHECK(polarization_identity(random_element(Q, m, rng), random_element(Q, m, rng)));
  }
}

TEST_CASE("kernel of TS^2 -> ∧^2 is the image of Γ^2") {
  for (const auto& M : example_modules()) {
    CAPTURE(M.description());
    auto r = wedge_kernel_check(M);
    CHECK(r.holds());
  }
  auto R = make_ring(PF(2), {"s", "t"});
  auto free = wedge_kernel_check(PresentedModule<PF>{make_quotient_ring(R), 2, {}});
  CHECK(free.holds());
  CHECK_FALSE(free.kernel_is_proper);

  auto b1 = wedge_kernel_check(rank_three_nine_variables(true));
  CHECK(b1.holds());
  CHECK(b1.kernel_is_proper);
  CHECK_FALSE(wedge_kernel_check(rank_three_nine_variables(false)).kernel_is_proper);
}

TEST_CASE("obstruction to a TS^2-module structure on ∧^2") {
  auto M = rank_three_nine_variables(true);
  auto R = M.base();
  auto ob = ts_module_structure_obstruction(M);
  REQUIRE(ob.found());
  CHECK(ob.eta->verified);
  CHECK_FALSE(ob.eta->certificate.is_zero());
  TensorSetup<PF> S(M, 2);
  CHECK(S.L().contains(ob.eta->element));
  ModElement<PF> u(R, 9);
  u[1] = P(R, "x1*z2 + y2*z1");
  CHECK(S.TS_plus_N().contains(ob.eta->element - u));

  auto Rf = make_ring(PF(2), {"s", "t"});
  for (std::size_t m = 1; m <= 3; ++m) {
    auto none = ts_module_structure_obstruction(PresentedModule<PF>{make_quotient_ring(Rf), m, {}});
    CHECK_FALSE(none.found());
    CHECK(none.message.find("no obstruction") == 0);
  }

  std::mt19937 rng(31);
  for (unsigned p : {2u, 3u}) {
    auto R2 = make_ring(PF(p), {"s", "t"});
    for (int trial = 0; trial < 15; ++trial) {
      PresentedModule<PF> two{make_quotient_ring(R2), 2, {random_element(R2, 2, rng), random_element(R2, 2, rng)}};
      CHECK_FALSE(ts_module_structure_obstruction(two).found());
    }
  }
}
