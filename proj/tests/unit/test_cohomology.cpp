#include <gtest/gtest.h>

#include <numeric>

#include "cohomex/cohomology/bar_complex.hpp"
#include "cohomex/cohomology/engine.hpp"
#include "cohomex/cohomology/oracles.hpp"
#include "cohomex/errors.hpp"
#include "cohomex/group/constructions.hpp"
#include "cohomex/group/subgroups.hpp"
#include "oracles.hpp"

using namespace cohomex;

namespace {

FiniteGroup dihedral(std::uint32_t n) {
  return FiniteGroup(2 * n, oracle::dihedral_table(n), {{"r", 1}, {"s", n}}, "dihedral");
}

AbelianGroupInvariants inv(std::size_t free, std::vector<std::uint64_t> t) {
  return AbelianGroupInvariants::from_cyclic_orders(free, t);
}

const CoefficientSpec kInt = CoefficientSpec::integral();

std::vector<BigInt> unit(std::size_t n, std::size_t i) {
  std::vector<BigInt> v(n, 0);
  v[i] = 1;
  return v;
}

/// Lifts a local cochain to integers in [0, p^k).
std::vector<BigInt> lift(const LocalCochain& z) {
  std::vector<BigInt> out;
  for (auto v : z.values) out.push_back(from_u64(v));
  return out;
}

}  // namespace

TEST(BarComplex, GeneratorCounts) {
  const FiniteGroup trivial = cyclic_group(1);
  auto t = bar_complex(trivial, kInt, 3);
  EXPECT_EQ(t.counts, (std::vector<std::uint64_t>{1, 0, 0, 0}));

  auto z2 = bar_complex(cyclic_group(2), kInt, 3);
  EXPECT_EQ(z2.counts, (std::vector<std::uint64_t>{1, 1, 1, 1}));

  auto d8 = bar_complex(dihedral(4), kInt, 4);
  EXPECT_EQ(d8.counts, (std::vector<std::uint64_t>{1, 7, 49, 343, 2401}));
  for (std::size_t n = 0; n + 1 < d8.differentials.size(); ++n) {
    EXPECT_TRUE((d8.differentials[n + 1] * d8.differentials[n]).is_zero()) << n;
  }
}

TEST(BarComplex, DifferentialMatchesDefinition) {
  // Brute-force coboundary of every basis cochain, evaluated tuple by tuple.
  const FiniteGroup g = dihedral(3);
  BarComplex bar(g);
  for (unsigned n = 0; n <= 2; ++n) {
    const auto d = bar.differential(n);
    const std::uint64_t rows = bar.generator_count(n + 1);
    const std::uint64_t cols = bar.generator_count(n);
    for (std::uint64_t c = 0; c < cols; ++c) {
      for (std::uint64_t r = 0; r < rows; ++r) {
        const auto t = bar.decode(n + 1, r);
        auto f = [&](const std::vector<ElementId>& s) -> long long {
          for (auto x : s) {
            if (x == 0) return 0;
          }
          return bar.encode(s) == c ? 1 : 0;
        };
        long long v = f(std::vector<ElementId>(t.begin() + 1, t.end()));
        for (unsigned i = 1; i <= n; ++i) {
          std::vector<ElementId> s;
          for (unsigned a = 0; a + 1 < i; ++a) s.push_back(t[a]);
          s.push_back(g.mul(t[i - 1], t[i]));
          for (unsigned a = i + 1; a <= n; ++a) s.push_back(t[a]);
          v += (i % 2 ? -1 : 1) * f(s);
        }
        v += ((n + 1) % 2 ? -1 : 1) * f(std::vector<ElementId>(t.begin(), t.end() - 1));
        ASSERT_EQ(d.at(static_cast<Index>(r), static_cast<Index>(c)), BigInt(static_cast<long>(v)))
            << n << " " << r << " " << c;
      }
    }
  }
}

TEST(BarComplex, Budget) {
  const FiniteGroup g = dihedral(4);
  EXPECT_THROW(bar_complex(g, kInt, 9, 1000), ResourceLimitError);
  auto z6 = bar_complex(cyclic_group(6), CoefficientSpec::modular(3), 2);
  for (const auto& t : z6.differentials[1].triplets()) {
    EXPECT_GE(t.value, 0);
    EXPECT_LT(t.value, 3);
  }
}

TEST(Oracles, Examples) {
  EXPECT_EQ(cyclic_oracle(5, kInt, 4), inv(0, {5}));
  EXPECT_EQ(cyclic_oracle(5, kInt, 7), inv(0, {}));
  EXPECT_EQ(cyclic_oracle(5, kInt, 0), inv(1, {}));
  EXPECT_EQ(cyclic_oracle(6, CoefficientSpec::modular(6), 3), inv(0, {6}));
  EXPECT_EQ(cyclic_oracle(6, CoefficientSpec::modular(4), 3), inv(0, {2}));
  EXPECT_EQ(kunneth_oracle({2}, 2), inv(0, {2}));
  EXPECT_EQ(kunneth_oracle({2, 2}, 3), inv(0, {2}));
  EXPECT_EQ(kunneth_oracle({2, 2, 2}, 2), inv(0, {2, 2, 2}));
  EXPECT_EQ(kunneth_oracle({2, 2}, 0), inv(1, {}));
  EXPECT_EQ(kunneth_oracle({2, 2}, 1), inv(0, {}));
  EXPECT_THROW(kunneth_oracle({}, 1), PreconditionError);
}

TEST(Engine, CyclicGroupsMatchClosedForm) {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    CohomologyEngine e(cyclic_group(n));
    const unsigned top = n <= 6 ? 6 : 4;
    for (unsigned d = 0; d <= top; ++d) {
      EXPECT_EQ(e.cohomology(d, kInt), cyclic_oracle(n, kInt, d)) << n << " " << d;
      for (std::uint64_t m : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{4}, n}) {
        if (m < 2) continue;
        const auto c = CoefficientSpec::modular(m);
        EXPECT_EQ(e.cohomology(d, c), cyclic_oracle(n, c, d)) << n << " mod " << m << " " << d;
      }
    }
  }
}

TEST(Engine, ProductsMatchKunneth) {
  const std::vector<std::vector<std::uint64_t>> cases = {{2, 2}, {2, 4}, {2, 2, 2}, {3, 3}};
  for (const auto& orders : cases) {
    FiniteGroup g = cyclic_group(orders[0]);
    for (std::size_t i = 1; i < orders.size(); ++i) g = direct_product(g, cyclic_group(orders[i]));
    CohomologyEngine e(std::move(g));
    const unsigned top = e.group().order() <= 8 ? 5 : 4;
    for (unsigned d = 0; d <= top; ++d) {
      EXPECT_EQ(e.cohomology(d, kInt), kunneth_oracle(orders, d)) << orders.size() << " " << d;
    }
  }
}

TEST(Engine, DihedralAgainstExactSmithForm) {
  EngineOptions opts;
  opts.exact_check_rows = 3000;
  CohomologyEngine e(dihedral(4), opts);
  EXPECT_EQ(e.cohomology(0, kInt), inv(1, {}));
  EXPECT_EQ(e.cohomology(1, kInt), inv(0, {}));
  EXPECT_EQ(e.cohomology(2, kInt), inv(0, {2, 2}));
  EXPECT_EQ(e.cohomology(3, kInt), inv(0, {2}));
  CohomologyEngine s3(dihedral(3), opts);
  EXPECT_EQ(s3.cohomology(2, kInt), inv(0, {2}));
  EXPECT_EQ(s3.cohomology(3, kInt), inv(0, {}));
  EXPECT_EQ(s3.cohomology(4, kInt), inv(0, {6}));
}

TEST(Engine, UniversalCoefficients) {
  CohomologyEngine e(dihedral(4));
  for (unsigned d = 0; d <= 3; ++d) {
    for (std::uint64_t m : {2, 4, 6}) {
      EXPECT_EQ(e.cohomology(d, CoefficientSpec::modular(m)),
                universal_coefficients(e.cohomology(d, kInt), e.cohomology(d + 1, kInt), m))
          << d << " " << m;
    }
  }
}

TEST(Engine, PrecisionEscalation) {
  EngineOptions opts;
  opts.initial_precision = 1;
  CohomologyEngine e(cyclic_group(8), opts);
  EXPECT_EQ(e.cohomology(2, kInt), inv(0, {8}));
  EXPECT_GT(e.precision(2), 3u);
}

TEST(Engine, DeadlineAndBudget) {
  EngineOptions opts;
  opts.max_generators = 100;
  CohomologyEngine e(dihedral(4), opts);
  EXPECT_NO_THROW(e.cohomology(1, kInt));
  EXPECT_THROW(e.cohomology(3, kInt), ResourceLimitError);
  EngineOptions late;
  late.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CohomologyEngine f(dihedral(4), late);
  EXPECT_THROW(f.cohomology(2, kInt), ResourceLimitError);
}

TEST(Engine, CoordinatesOfRepresentatives) {
  CohomologyEngine e(direct_product(cyclic_group(2), cyclic_group(4)));
  for (unsigned d = 1; d <= 4; ++d) {
    const auto pres = e.presentation(d, kInt);
    for (std::size_t i = 0; i < pres.basis.size(); ++i) {
      auto z = e.representative(d, kInt, i);
      EXPECT_EQ(e.local_coordinates(d, kInt, z), unit(pres.basis.size(), i));
    }
    const auto mod = CoefficientSpec::modular(4);
    const auto mp = e.presentation(d, mod);
    for (std::size_t i = 0; i < mp.basis.size(); ++i) {
      auto z = e.representative(d, mod, i);
      auto x = lift(z);
      for (auto& v : x) v %= 4;
      EXPECT_EQ(e.coordinates(d, mod, x), unit(mp.basis.size(), i)) << d << " " << i;
    }
  }
}

TEST(Engine, CoordinatesAddCoboundaries) {
  CohomologyEngine e(cyclic_group(4));
  const BarComplex& bar = e.bar();
  const auto d1 = bar.differential(1);
  // A cocycle of Z/4 in degree 2: the carry cocycle f(a, b) = [a + b >= 4].
  std::vector<BigInt> carry(9);
  for (std::uint64_t t = 0; t < 9; ++t) {
    auto ab = bar.decode(2, t);
    carry[t] = ab[0] + ab[1] >= 4 ? 1 : 0;
  }
  const auto x = e.coordinates(2, kInt, carry);
  EXPECT_EQ(element_order(x, e.presentation(2, kInt).orders()), 4);
  // Add 3 times the carry plus a coboundary: coordinate scales, coboundary vanishes.
  std::vector<BigInt> h{5, -2, 7};
  std::vector<BigInt> y(9);
  for (std::uint64_t r = 0; r < 9; ++r) {
    y[r] = 3 * carry[r];
    for (const auto& [c, v] : d1.row(static_cast<Index>(r))) y[r] += v * h[c];
  }
  auto expect = x;
  for (auto& v : expect) v = v * 3 % 4;
  EXPECT_EQ(e.coordinates(2, kInt, y), expect);
  auto broken = carry;
  broken[0] += 1;
  EXPECT_THROW(e.coordinates(2, kInt, broken), InvariantViolation);
}

TEST(Restriction, IdentityAlongWholeGroup) {
  const FiniteGroup d8 = dihedral(4);
  CohomologyEngine g(d8);
  const Subgroup all = whole_group(d8);
  CohomologyEngine h(subgroup_as_group(d8, all));
  for (unsigned d = 1; d <= 4; ++d) {
    auto r = restriction(g, h, all, d, kInt);
    ASSERT_EQ(r.rows(), r.cols());
    EXPECT_EQ(r.image_order(), g.cohomology(d, kInt).torsion_order()) << d;
  }
  CohomologyEngine z4(cyclic_group(4));
  CohomologyEngine z4b(cyclic_group(4));
  const Subgroup w = whole_group(z4.group());
  for (unsigned d = 1; d <= 4; ++d) {
    auto r = restriction(z4, z4b, w, d, kInt);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      for (std::size_t j = 0; j < r.cols(); ++j) EXPECT_EQ(r.entries[i][j], i == j ? 1 : 0);
    }
  }
}

TEST(Restriction, CyclicToIndexTwo) {
  const FiniteGroup z4 = cyclic_group(4);
  CohomologyEngine g(z4);
  const ElementId two = z4.pow(z4.generators()[0].element, 2);
  const Subgroup h = generate_subgroup(z4, std::vector<ElementId>{two});
  CohomologyEngine e(subgroup_as_group(z4, h));
  auto r = restriction(g, e, h, 2, kInt);
  EXPECT_EQ(r.image_order(), 2);
  // Odd degree: zero map into zero.
  EXPECT_EQ(restriction(g, e, h, 3, kInt).rows(), 0u);
  // H^1(Z/4; Z/2) -> H^1(Z/2; Z/2) kills the surjection Z/4 -> Z/2.
  EXPECT_TRUE(restriction(g, e, h, 1, CoefficientSpec::modular(2)).is_zero());
}

TEST(Restriction, DihedralCenterIsZeroInDegreeTwo) {
  const FiniteGroup d8 = dihedral(4);
  CohomologyEngine g(d8);
  const Subgroup z = center(d8);
  ASSERT_EQ(z.order(), 2u);
  CohomologyEngine e(subgroup_as_group(d8, z));
  EXPECT_TRUE(restriction(g, e, z, 2, kInt).is_zero());
  EXPECT_FALSE(restriction(g, e, z, 4, kInt).is_zero());
  EXPECT_THROW(g.restriction(e, std::vector<ElementId>{0, 1}, 2, kInt), PreconditionError);
}

TEST(Bockstein, CyclicGroups) {
  for (std::uint64_t n : {2, 3, 4, 6}) {
    CohomologyEngine e(cyclic_group(n));
    for (unsigned i = 0; i <= 2; ++i) {
      auto b = e.bockstein(2 * i + 1, n);
      EXPECT_EQ(b.image_order(), n) << n << " " << i;
      EXPECT_TRUE(e.bockstein(2 * i, n).is_zero());
    }
    // H^0(Z/n; Z/n) -> H^1(Z/n) = 0.
    EXPECT_EQ(e.bockstein(0, n).rows(), 0u);
  }
}

TEST(Bockstein, ImageIsTorsionOfOrderDividingM) {
  std::vector<FiniteGroup> groups;
  groups.push_back(dihedral(4));
  groups.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
  groups.push_back(dihedral(3));
  for (auto& g : groups) {
    CohomologyEngine e(std::move(g));
    for (std::uint64_t m : {2, 4, 3, 6}) {
      for (unsigned n = 0; n <= 3; ++n) {
        auto b = e.bockstein(n, m);
        const auto target = e.presentation(n + 1, kInt).orders();
        EXPECT_EQ(b.image_order(), torsion_subgroup_order(target, from_u64(m)))
            << e.group().descriptor() << " m=" << m << " n=" << n;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          auto col = b.column(j);
          for (auto& v : col) v *= static_cast<unsigned long>(m);
          EXPECT_EQ(element_order(col, target), 1);
        }
      }
    }
  }
}

TEST(Bockstein, VanishesOnReductions) {
  CohomologyEngine e(dihedral(4));
  const auto mod = CoefficientSpec::modular(4);
  for (unsigned n = 1; n <= 3; ++n) {
    const auto pres = e.presentation(n, kInt);
    auto b = e.bockstein(n, 4);
    for (std::size_t i = 0; i < pres.basis.size(); ++i) {
      auto x = lift(e.representative(n, kInt, i));
      for (auto& v : x) v %= 4;
      EXPECT_TRUE(element_order(b.apply(e.coordinates(n, mod, x)), b.target_orders) == 1);
    }
  }
}

TEST(Bockstein, NaturalWithRespectToRestriction) {
  const FiniteGroup d8 = dihedral(4);
  CohomologyEngine g(d8);
  std::vector<Subgroup> subs = {center(d8)};
  subs.push_back(generate_subgroup(d8, std::vector<ElementId>{1}));
  subs.push_back(generate_subgroup(d8, std::vector<ElementId>{2, 4}));
  for (const auto& h : subs) {
    CohomologyEngine e(subgroup_as_group(d8, h));
    for (std::uint64_t m : {2, 4}) {
      const auto mod = CoefficientSpec::modular(m);
      for (unsigned n = 0; n <= 3; ++n) {
        auto lhs = restriction(g, e, h, n + 1, kInt).compose(g.bockstein(n, m));
        auto rhs = e.bockstein(n, m).compose(restriction(g, e, h, n, mod));
        EXPECT_EQ(lhs, rhs) << h.order() << " " << m << " " << n;
      }
    }
  }
}

TEST(GeneratorRestriction, Examples) {
  {
    const FiniteGroup z4 = cyclic_group(4);
    CohomologyEngine g(z4);
    const Subgroup w = whole_group(z4);
    CohomologyEngine c(subgroup_as_group(z4, w));
    auto r = generator_restricting_classes(g, c, w, 2);
    EXPECT_FALSE(r.partial);
    EXPECT_EQ(r.examined, 4);
    ASSERT_EQ(r.classes.size(), 2u);
    for (const auto& k : r.classes) EXPECT_EQ(k.order, 4);
  }
  {
    const FiniteGroup d8 = dihedral(4);
    CohomologyEngine g(d8);
    const Subgroup z = center(d8);
    CohomologyEngine c(subgroup_as_group(d8, z));
    EXPECT_TRUE(generator_restricting_classes(g, c, z, 2).classes.empty());
    EXPECT_THROW(generator_restricting_classes(g, c, z, 3), PreconditionError);
  }
  {
    const FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
    CohomologyEngine g(v4);
    const Subgroup first = generate_subgroup(v4, std::vector<ElementId>{v4.generators()[0].element});
    CohomologyEngine c(subgroup_as_group(v4, first));
    auto r = generator_restricting_classes(g, c, first, 2);
    EXPECT_EQ(r.classes.size(), 2u);
    for (const auto& k : r.classes) EXPECT_EQ(k.order, 2);
  }
  {
    const FiniteGroup z4 = cyclic_group(4);
    CohomologyEngine g(z4);
    const Subgroup h = generate_subgroup(z4, std::vector<ElementId>{z4.pow(z4.generators()[0].element, 2)});
    CohomologyEngine c(subgroup_as_group(z4, h));
    auto r = generator_restricting_classes(g, c, h, 2);
    ASSERT_FALSE(r.classes.empty());
    for (const auto& k : r.classes) EXPECT_EQ(k.order, 4);
    EXPECT_THROW(generator_restricting_classes(g, c, h, 2, 2), ResourceLimitError);
    auto s = generator_restricting_classes(g, c, h, 2, 2, true);
    EXPECT_TRUE(s.partial);
    EXPECT_EQ(s.examined, 2);
  }
}
