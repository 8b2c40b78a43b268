// Copyright 2026 The pncodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pncodes/spectra.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "pncodes/errors.hpp"
#include "support.hpp"

namespace pncodes {
namespace {

FunctionTable zero_table(const Field& f) {
  return FunctionTable(f, Codomain::kPrime, std::vector<std::uint32_t>(f.q(), 0));
}

TEST(Walsh, ZeroFunction) {
  const Field f = Field::create(5, 2);
  const FunctionTable z = zero_table(f);
  EXPECT_EQ(walsh(z, 0), CycInt::constant(5, 25));
  for (std::uint32_t a = 1; a < f.q(); ++a) EXPECT_TRUE(walsh(z, a).is_zero());
}

TEST(Walsh, HistogramMatchesNaiveAndReference) {
  for (auto [p, m] : ref::small_fields()) {
    if (p * m > 12) continue;
    const Field f = Field::create(p, m);
    ref::Gen gen(p * 100 + m);
    for (int i = 0; i < 3; ++i) {
      const FunctionTable g = gen.prime_table(f);
      const auto spectrum = walsh_spectrum(g);
      for (std::uint32_t a = 0; a < f.q(); ++a) {
        const CycInt want = ref::walsh_ref(g, a);
        EXPECT_EQ(walsh(g, a), want);
        EXPECT_EQ(walsh_naive(g, a), want);
        EXPECT_EQ(spectrum[a], want);
      }
    }
  }
}

TEST(Walsh, SumOverValueDistribution) {
  const Field f = Field::create(7, 2);
  ref::Gen gen(17);
  for (int i = 0; i < 20; ++i) {
    const FunctionTable g = gen.prime_table(f);
    EXPECT_EQ(walsh(g, 0), CycInt::from_histogram(7, value_distribution(g).counts));
  }
}

TEST(Bent, Examples) {
  const Field f9 = Field::create(3, 2);
  const FunctionTable sq = compile(PNSpec::square(), f9);
  const FunctionTable g = component_function(sq, 1, 0, 0);
  for (std::uint32_t a = 0; a < 9; ++a) {
    EXPECT_EQ(walsh(g, a).abs_square(), CycInt::constant(3, 9));
  }
  EXPECT_TRUE(is_bent(g));
  EXPECT_FALSE(is_bent(component_function(sq, 0, 1, 0)));
  EXPECT_FALSE(is_bent(zero_table(f9)));

  const Field f243 = Field::create(3, 5);
  const FunctionTable cm = compile(PNSpec::coulter_matthews(3), f243);
  for (std::uint32_t a : {1u, 2u, 100u, 242u}) {
    EXPECT_TRUE(is_bent(component_function(cm, a, 0, 0))) << a;
  }
}

TEST(Profile, RoundTripsEveryValue) {
  const Field f = Field::create(3, 3);
  const FunctionTable g = component_function(compile(PNSpec::square(), f), 1, 0, 0);
  const SpectralProfile prof = spectral_profile(g);
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    EXPECT_EQ(recompose_walsh({prof.sign[a], prof.dual[a]}, 3, 3), prof.walsh[a]);
  }
  EXPECT_TRUE(is_weakly_regular(prof).has_value());
  EXPECT_THROW(spectral_profile(zero_table(f)), DomainError);
}

TEST(Profile, MixedSignsAreNotWeaklyRegular) {
  SpectralProfile prof;
  prof.p = 3;
  prof.m = 2;
  prof.sign = {1, -1, 1};
  EXPECT_EQ(is_weakly_regular(prof), std::nullopt);
  prof.sign = {1, 1, 1};
  EXPECT_EQ(is_weakly_regular(prof), 1);
}

TEST(Classifier, ExamplesFromTheShapes) {
  const DistributionClassifier c32(3, 2);
  EXPECT_EQ(c32.classify(std::vector<std::uint64_t>{5, 2, 2}),
            (DistributionClass{DistributionShape::kEvenPlus, 0}));
  EXPECT_EQ(c32.classify(std::vector<std::uint64_t>{2, 2, 5}),
            (DistributionClass{DistributionShape::kEvenPlus, 2}));
  EXPECT_EQ(c32.classify(std::vector<std::uint64_t>{1, 4, 4}),
            (DistributionClass{DistributionShape::kEvenMinus, 0}));
  EXPECT_EQ(c32.classify(std::vector<std::uint64_t>{9, 0, 0}),
            (DistributionClass{DistributionShape::kConstant, 0}));
  EXPECT_EQ(c32.classify(std::vector<std::uint64_t>{3, 3, 3}).shape, DistributionShape::kBalanced);
  EXPECT_EQ(c32.classify(std::vector<std::uint64_t>{4, 3, 2}).shape, DistributionShape::kOther);

  const DistributionClassifier c33(3, 3);
  EXPECT_EQ(c33.classify(std::vector<std::uint64_t>{9, 12, 6}),
            (DistributionClass{DistributionShape::kOddPlus, 0}));
  EXPECT_EQ(c33.classify(std::vector<std::uint64_t>{9, 6, 12}),
            (DistributionClass{DistributionShape::kOddMinus, 0}));
  for (const auto& shape : {DistributionClass{DistributionShape::kOddPlus, 1},
                            DistributionClass{DistributionShape::kOddMinus, 2}}) {
    EXPECT_EQ(c33.classify(c33.expected(shape)), shape);
  }
}

// Every bent component lands in a shape of the right parity, and adding a
// linear term keeps the sign family.
TEST(Classifier, ParityAndLinearShiftsOnCatalogFunctions) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
    const Field f = Field::create(p, m);
    const FunctionTable pi = compile(PNSpec::square(), f);
    for (std::uint32_t a = 1; a < f.q(); a += (f.q() > 100 ? 7 : 1)) {
      const DistributionClass base =
          classify_value_distribution(value_distribution(component_function(pi, a, 0, 0)), p, m);
      for (std::uint32_t b = 0; b < f.q(); b += (f.q() > 100 ? 5 : 1)) {
        const DistributionClass c = classify_value_distribution(
            value_distribution(component_function(pi, a, b, 0)), p, m);
        ASSERT_TRUE(c.positive() || c.negative()) << p << " " << m << " " << a << " " << b;
        const bool even_shape = c.shape == DistributionShape::kEvenPlus ||
                                c.shape == DistributionShape::kEvenMinus;
        EXPECT_EQ(even_shape, m % 2 == 0);
        if (m % 2 == 0) EXPECT_EQ(c.positive(), base.positive());
      }
    }
  }
}

TEST(SpectralReport, EvenDegreeSquares) {
  for (std::uint32_t m : {2u, 4u}) {
    const Field f = Field::create(3, m);
    const PNSpectralReport r = pn_spectral_report(compile(PNSpec::square(), f));
    EXPECT_TRUE(r.weakly_regular_pn);
    for (std::uint32_t a = 1; a < f.q(); ++a) EXPECT_EQ(r.dual_at_zero[a], 0u);
    EXPECT_FALSE(r.dual_at_zero_surjective);
    EXPECT_TRUE(r.sign_sum.is_zero());
    EXPECT_EQ(r.plus_signs, (f.q() - 1) / 2);
    EXPECT_EQ(r.minus_signs, (f.q() - 1) / 2);
    EXPECT_TRUE(r.walsh_zero_sum.is_zero());
  }
}

TEST(SpectralReport, OddDegreeCatalog) {
  const Field f = Field::create(3, 5);
  for (const PNSpec& s : {PNSpec::coulter_matthews(3), PNSpec::do_monomial(1)}) {
    const PNSpectralReport r = pn_spectral_report(compile(s, f));
    EXPECT_TRUE(r.weakly_regular_pn);
    for (std::uint32_t a = 1; a < f.q(); ++a) EXPECT_EQ(r.dual_at_zero[a], 0u);
    EXPECT_TRUE(r.sign_sum.is_zero());
  }
}

// Two zeros of Pi make the Walsh-at-zero sum equal q.
TEST(SpectralReport, WalshZeroSumCountsZeros) {
  const Field f = Field::create(3, 2);
  const PNSpectralReport r =
      pn_spectral_report(compile(parse_expression("x^2 + 1", {}, f), f));
  EXPECT_EQ(r.walsh_zero_sum, CycInt::constant(3, 9));
}

}  // namespace
}  // namespace pncodes
