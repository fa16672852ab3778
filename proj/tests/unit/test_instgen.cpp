#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "binomial.hpp"
#include "hangar/instgen.hpp"
#include "hangar/io.hpp"

namespace hangar {
namespace {

using instgen::GeneratorConfig;

double max_gap(std::vector<double> etas) {
  std::sort(etas.begin(), etas.end());
  double g = 0.0;
  for (std::size_t i = 1; i < etas.size(); ++i) g = std::max(g, etas[i] - etas[i - 1]);
  return g;
}

std::vector<double> etas_of(const Instance& inst) {
  std::vector<double> out;
  for (const auto& f : inst.future) out.push_back(f.eta);
  return out;
}

TEST(Rng, SplitMixReferenceValue) {
  // First output of the reference SplitMix64 generator seeded with 0.
  EXPECT_EQ(instgen::splitmix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(Rng, UniformIntCoversRangeOnly) {
  instgen::StreamRng rng(7, 1);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) {
    const long v = rng.uniform_int(3, 7);
    ASSERT_GE(v, 3);
    ASSERT_LE(v, 7);
    ++hits[static_cast<std::size_t>(v - 3)];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Rng, StreamsAreIndependentOfEachOther) {
  instgen::StreamRng a(42, 1), b(42, 2), a2(42, 1);
  const auto x = a.next();
  EXPECT_NE(x, b.next());
  EXPECT_EQ(x, a2.next());
}

TEST(Generate, Deterministic) {
  GeneratorConfig cfg;
  cfg.n = 25;
  cfg.seed = 99;
  cfg.n_current = 1;
  cfg.congestion = 0.3;
  EXPECT_EQ(io::instance_to_json(instgen::generate(cfg)), io::instance_to_json(instgen::generate(cfg)));
  cfg.seed = 100;
  EXPECT_NE(io::instance_to_json(instgen::generate(cfg)), io::instance_to_json(instgen::generate({})));
}

TEST(Generate, EtaWithinHorizon) {
  GeneratorConfig cfg;
  cfg.n = 10;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    cfg.seed = seed;
    for (const auto& f : instgen::generate(cfg).future) {
      EXPECT_GE(f.eta, 0.0);
      EXPECT_LE(f.eta, 800.0);
    }
  }
}

TEST(Generate, EmptyInstance) {
  GeneratorConfig cfg;
  cfg.n = 0;
  const auto inst = instgen::generate(cfg);
  EXPECT_TRUE(inst.future.empty());
  EXPECT_TRUE(inst.current.empty());
  EXPECT_EQ(inst.label, "Inst-0-1");
}

TEST(Generate, LabelsAndHighRejection) {
  GeneratorConfig cfg;
  cfg.n = 5;
  cfg.seed = 3;
  const auto base = instgen::generate(cfg);
  cfg.congestion = 0.2;
  cfg.high_rejection = true;
  const auto hi = instgen::generate(cfg);
  EXPECT_EQ(base.label, "Inst-5-3");
  EXPECT_EQ(hi.label, "Inst-5-3-C+");
  for (std::size_t i = 0; i < base.future.size(); ++i) {
    EXPECT_DOUBLE_EQ(*hi.future[i].p_rej, 10.0 * *base.future[i].p_rej);
    EXPECT_EQ(hi.future[i].width, base.future[i].width);
  }
}

TEST(Generate, VipFractionAndSlackAtTwoHundred) {
  GeneratorConfig cfg;
  cfg.n = 200;
  cfg.seed = 2024;
  const auto inst = instgen::generate(cfg);
  std::size_t vips = 0;
  for (const auto& f : inst.future) {
    vips += f.vip;
    const double slack = f.etd - f.eta - f.service;
    EXPECT_GE(slack, 24.0);
    EXPECT_LE(slack, 72.0);
    EXPECT_GE(f.service, 100.0);
    EXPECT_LE(f.service, 400.0);
    if (f.vip) {
      EXPECT_GE(*f.p_rej, 1500);
      EXPECT_LE(*f.p_rej, 2000);
      EXPECT_EQ(*f.p_arr, 30.0);
      EXPECT_EQ(f.p_dep, 60.0);
    } else {
      EXPECT_GE(*f.p_rej, 700);
      EXPECT_LE(*f.p_rej, 1200);
      EXPECT_EQ(*f.p_arr, 10.0);
      EXPECT_EQ(f.p_dep, 20.0);
    }
    EXPECT_EQ(*f.p_rej, std::floor(*f.p_rej));
  }
  const double frac = static_cast<double>(vips) / 200.0;
  EXPECT_GE(frac, 0.14);
  EXPECT_LE(frac, 0.26);
}

TEST(Binomial, IntervalMatchesNormalApproximation) {
  const auto [lo, hi] = testing::binomial_interval(500, 0.2, 0.999);
  // Normal approximation: 100 +- 3.29 * sqrt(80) = [70.6, 129.4].
  EXPECT_NEAR(lo, 71, 2);
  EXPECT_NEAR(hi, 129, 2);
}

TEST(Generate, CongestionShrinksLargestGap) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    GeneratorConfig cfg;
    cfg.n = 3 + seed % 5;
    cfg.seed = seed;
    const auto base = instgen::generate(cfg);
    cfg.congestion = 0.2;
    const auto congested = instgen::generate(cfg);
    EXPECT_LT(max_gap(etas_of(congested)), max_gap(etas_of(base))) << seed;
    // Only ETAs (and ETDs through them) change.
    for (std::size_t i = 0; i < base.future.size(); ++i) {
      EXPECT_EQ(base.future[i].service, congested.future[i].service);
      EXPECT_NEAR(base.future[i].etd - base.future[i].eta,
                  congested.future[i].etd - congested.future[i].eta, 1e-9);
    }
  }
}

TEST(Generate, CompressArrivalsKeepsFirst) {
  const auto out = instgen::compress_arrivals({50, 10, 30}, 0.5);
  EXPECT_EQ(out, (std::vector<double>{30, 10, 20}));
  EXPECT_TRUE(instgen::compress_arrivals({}, 0.5).empty());
}

TEST(Generate, CurrentsPlacedInsideAndSeparated) {
  GeneratorConfig cfg;
  cfg.n = 4;
  cfg.n_current = 1;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    cfg.seed = seed;
    const auto inst = instgen::generate(cfg);
    ASSERT_EQ(inst.current.size(), 1u);
    EXPECT_EQ(*inst.current[0].x_init, 5.0);
    EXPECT_EQ(*inst.current[0].y_init, 5.0);
    EXPECT_EQ(inst.current[0].id, "C01");
  }
}

TEST(Generate, CatalogDoesNotFit) {
  GeneratorConfig cfg;
  cfg.model_catalog = {{24, 22}, {60, 20}};
  EXPECT_THROW(instgen::generate(cfg), instgen::CatalogDoesNotFit);
}

TEST(Generate, PlacementImpossible) {
  GeneratorConfig cfg;
  cfg.model_catalog = {{45, 48}};
  cfg.n_current = 2;
  EXPECT_THROW(instgen::generate(cfg), instgen::PlacementImpossible);
}

TEST(Generate, InvalidConfig) {
  GeneratorConfig cfg;
  cfg.vip_prob = 1.5;
  EXPECT_THROW(instgen::generate(cfg), instgen::InvalidConfig);
  cfg.vip_prob = 0.2;
  cfg.congestion = 0.0;
  EXPECT_THROW(instgen::generate(cfg), instgen::InvalidConfig);
}

}  // namespace
}  // namespace hangar
