#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gapart/enumerate.hpp"
#include "gapart/injections.hpp"
#include "gapart/verify.hpp"

using gapart::ClassLabel;
using gapart::Family;
using gapart::GapParams;
using gapart::Partition;

namespace {

const Partition kExample1{{9, 7}, {15, 3}, {16, 2}, {20, 9}, {30, 8}, {40, 2}, {80, 1}, {97, 5}};
const Partition kExample2{{10, 1}, {11, 3}, {20, 7}, {28, 2}, {31, 7}, {46, 9}, {52, 3}, {65, 4}};
const Partition kExample3{{4, 2}, {7, 2}, {11, 2}, {13, 2}, {16, 2}, {19, 2}, {32, 2}, {55, 1}, {58, 3}, {61, 4}, {76, 5}};
const Partition kExample4{{4, 6}, {7, 5}, {12, 4}, {18, 3}, {25, 3}, {42, 5}, {73, 5}, {109, 3}};
const Partition kExample5{{6, 2}, {9, 5}, {12, 8}, {17, 4}, {35, 6}, {42, 5}, {73, 5}, {105, 1}, {106, 1}};

using Aux = std::map<std::string, std::int64_t>;

// Random members of a single C class, built from the class definition rather
// than by filtering, so rare classes get real coverage.
class ClassGenerator {
 public:
  ClassGenerator(const GapParams& params, std::uint64_t seed) : params_(params), rng_(seed) {}

  // No multiple of s, no part k, at least one j in [s+1, 2s^2+5s-1] with f_j >= s.
  Partition c2() {
    Partition p;
    const auto small = non_multiples(params_.c_low(), gapart::thresholds::small_part_cap(params_.s()));
    p.add(pick(small), params_.s() + static_cast<std::int64_t>(rng_() % 3));
    sprinkle(p, non_multiples(params_.c_low(), params_.high()), 6);
    top_up(p);
    return p;
  }

  // No multiple of s, no part k, every small part below multiplicity s.
  Partition c3() {
    Partition p;
    for (auto v : non_multiples(params_.c_low(), gapart::thresholds::small_part_cap(params_.s()))) {
      if (rng_() % 2) p.add(v, static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(params_.s())));
    }
    top_up(p);
    return p;
  }

 private:
  std::vector<std::int64_t> non_multiples(std::int64_t lo, std::int64_t hi) const {
    std::vector<std::int64_t> out;
    for (auto v = lo; v <= hi; ++v) {
      if (v % params_.s() != 0 && v != params_.k()) out.push_back(v);
    }
    return out;
  }

  std::int64_t pick(const std::vector<std::int64_t>& values) { return values[rng_() % values.size()]; }

  void sprinkle(Partition& p, const std::vector<std::int64_t>& values, int count) {
    for (int i = static_cast<int>(rng_() % static_cast<std::uint64_t>(count)); i > 0; --i) p.add(pick(values));
  }

  // Adds large non-multiples until the weight reaches the strong-regime threshold.
  void top_up(Partition& p) {
    const auto large = non_multiples(gapart::thresholds::large_part_floor(params_.s()), params_.high());
    const auto floor = static_cast<std::uint64_t>(gapart::thresholds::strong_min_weight(params_.s()));
    while (p.weight() < floor || rng_() % 4 == 0) p.add(pick(large));
  }

  GapParams params_;
  std::mt19937_64 rng_;
};

}  // namespace

TEST(Classify, ExamplesC) {
  EXPECT_EQ(classify_C(kExample1, GapParams::make(110, 3, 112)), (ClassLabel{Family::C, 1}));
  EXPECT_EQ(classify_C(kExample2, GapParams::make(103, 3, 103)), (ClassLabel{Family::C, 2}));
  EXPECT_EQ(classify_C(kExample3, GapParams::make(105, 3, 105)), (ClassLabel{Family::C, 3}));
  EXPECT_EQ(classify_C(kExample4, GapParams::make(108, 3, 109)), (ClassLabel{Family::C, 4}));
  EXPECT_EQ(classify_C(kExample5, GapParams::make(103, 3, 105)), (ClassLabel{Family::C, 5}));
  EXPECT_EQ(classify_C(Partition{{8, 2}, {2, 2}}, GapParams::make(8, 1, 8)), (ClassLabel{Family::C, 4}));
  EXPECT_THROW(classify_C(Partition{{1, 2}}, GapParams::make(8, 1, 8)), gapart::PreconditionError);
  EXPECT_THROW(classify_C(Partition{}, GapParams::make(8, 1, 8)), gapart::PreconditionError);
}

TEST(Classify, ExamplesF) {
  const auto p1 = GapParams::make(110, 3, 112);
  EXPECT_EQ(classify_F(Partition{{3, 3}, {9, 6}, {15, 3}, {16, 2}, {20, 9}, {30, 8}, {40, 2}, {80, 1}, {97, 5}}, p1),
            (ClassLabel{Family::F, 1}));
  EXPECT_EQ(classify_F(Partition{{1, 12}, {2, 4}}, GapParams::make(8, 1, 8)), (ClassLabel{Family::F, 4}));
  EXPECT_EQ(classify_F(Partition{{2, 1}, {5, 1}, {7, 1}}, GapParams::make(37, 2, 37)), std::nullopt);
  EXPECT_THROW(classify_F(Partition{{3, 1}}, GapParams::make(37, 2, 37)), gapart::PreconditionError);
  EXPECT_THROW(classify_F(Partition{{1, 3}}, GapParams::make(7, 1, 7)), gapart::PreconditionError);
}

TEST(Classify, FClassesAreDisjointOnAllOfF) {
  for (auto k : {8, 9}) {
    const auto params = GapParams::make(8, 1, k);
    for (std::int64_t n = 1; n <= 40; ++n) {
      for (const auto& beta : enumerate_F(params, n)) {
        ASSERT_LE(gapart::matching_F_classes(beta, params).size(), 1u) << beta.to_string();
      }
    }
  }
}

TEST(TwoThreeSplit, Decomposition) {
  EXPECT_EQ(gapart::two_three_split(4), (std::pair<std::int64_t, std::int64_t>{2, 0}));
  EXPECT_EQ(gapart::two_three_split(5), (std::pair<std::int64_t, std::int64_t>{1, 1}));
  EXPECT_EQ(gapart::two_three_split(12), (std::pair<std::int64_t, std::int64_t>{6, 0}));
  for (std::int64_t m = 2; m < 200; ++m) {
    const auto [x, y] = gapart::two_three_split(m);
    EXPECT_EQ(2 * x + 3 * y, m);
    EXPECT_TRUE(y == 0 || y == 1);
    EXPECT_GE(x, 0);
  }
  EXPECT_THROW(gapart::two_three_split(1), gapart::PreconditionError);
}

TEST(Phi1, Examples) {
  const auto params = GapParams::make(110, 3, 112);
  const auto t = phi1(kExample1, params);
  EXPECT_EQ(t.output, (Partition{{3, 3}, {9, 6}, {15, 3}, {16, 2}, {20, 9}, {30, 8}, {40, 2}, {80, 1}, {97, 5}}));
  EXPECT_EQ(t.aux, (Aux{{"a", 3}}));
  EXPECT_EQ(psi1(t.output, params).output, kExample1);

  const auto small = phi1(Partition{{9, 2}, {2, 1}}, GapParams::make(8, 1, 8));
  EXPECT_EQ(small.output, (Partition{{1, 2}, {9, 2}}));
  EXPECT_EQ(small.aux, (Aux{{"a", 2}}));
}

TEST(Phi2, Examples) {
  const auto params = GapParams::make(103, 3, 103);
  const auto t = phi2(kExample2, params);
  EXPECT_EQ(t.output, (Partition{{3, 1}, {10, 1}, {20, 7}, {28, 2}, {30, 1}, {31, 7}, {46, 9}, {52, 3}, {65, 4}}));
  EXPECT_EQ(t.aux, (Aux{{"j", 11}}));
  const auto back = psi2(t.output, params);
  EXPECT_EQ(back.output, kExample2);
  EXPECT_EQ(back.aux, (Aux{{"i", 10}}));
}

TEST(Phi3, Examples) {
  const auto params = GapParams::make(105, 3, 105);
  const auto t = phi3(kExample3, params);
  EXPECT_EQ(t.output, (Partition{{3, 1}, {4, 6}, {6, 6}, {7, 2}, {11, 2}, {13, 2}, {16, 2}, {19, 2}, {32, 2}, {58, 3},
                                 {61, 4}, {76, 5}}));
  EXPECT_EQ(t.aux, (Aux{{"c", 18}, {"d", 1}, {"j", 55}, {"x", 6}, {"y", 0}}));
  const auto back = psi3(t.output, params);
  EXPECT_EQ(back.output, kExample3);
  EXPECT_EQ(back.aux, (Aux{{"i", 4}, {"w", 55}}));
}

TEST(Phi4, Examples) {
  const auto params = GapParams::make(108, 3, 109);
  const auto t = phi4(kExample4, params);
  EXPECT_EQ(t.output, (Partition{{3, 102}, {4, 6}, {7, 8}, {12, 4}, {18, 3}, {25, 3}, {42, 5}, {73, 5}}));
  EXPECT_EQ(t.aux, (Aux{{"r", 36}, {"t", 1}}));
  EXPECT_EQ(psi4(t.output, params).output, kExample4);

  const auto small = phi4(Partition{{8, 2}, {2, 2}}, GapParams::make(8, 1, 8));
  EXPECT_EQ(small.output, (Partition{{1, 12}, {2, 4}}));
}

TEST(Phi5, Examples) {
  const auto params = GapParams::make(103, 3, 105);
  const auto t = phi5(kExample5, params);
  EXPECT_EQ(t.output, (Partition{{3, 31}, {6, 4}, {9, 5}, {12, 8}, {17, 4}, {35, 6}, {42, 5}, {73, 5}, {106, 1}}));
  EXPECT_EQ(t.aux, (Aux{{"r", 35}, {"t", 0}}));
  EXPECT_EQ(psi5(t.output, params).output, kExample5);

  const auto small = phi5(Partition{{8, 1}, {2, 6}}, GapParams::make(8, 1, 8));
  EXPECT_EQ(small.output, (Partition{{1, 4}, {2, 8}}));
}

TEST(Phi5, NonzeroRemainderBranch) {
  // k = 38 = 19*2 + 0 and k = 39 = 19*2 + 1 at s = 2.
  const auto params = GapParams::make(37, 2, 39);
  Partition alpha{{39, 1}, {5, 30}, {3, 1}};
  const auto t = phi5(alpha, params);
  EXPECT_EQ(t.aux, (Aux{{"r", 19}, {"t", 1}}));
  EXPECT_EQ(t.output, (Partition{{2, 15}, {3, 1}, {4, 1}, {5, 31}}));
  EXPECT_EQ(psi5(t.output, params).output, alpha);
}

TEST(Phi, DispatchesTheWorkedExamples) {
  EXPECT_EQ(phi(kExample1, GapParams::make(110, 3, 112)).label.index, 1);
  EXPECT_EQ(phi(kExample2, GapParams::make(103, 3, 103)).label.index, 2);
  EXPECT_EQ(phi(kExample3, GapParams::make(105, 3, 105)).label.index, 3);
  EXPECT_EQ(phi(kExample4, GapParams::make(108, 3, 109)).label.index, 4);
  EXPECT_EQ(phi(kExample5, GapParams::make(103, 3, 105)).label.index, 5);
}

TEST(Phi, PreconditionErrors) {
  // Below the weight threshold for s = 2 (151).
  EXPECT_THROW(phi(Partition{{5, 2}}, GapParams::make(37, 2, 37)), gapart::PreconditionError);
  try {
    phi(Partition{{5, 2}}, GapParams::make(37, 2, 37));
  } catch (const gapart::PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("n >= 2s^5+8s^4+s^3-14s^2+3s+1"), std::string::npos);
  }
  // L below 2s^3+5s^2+1.
  try {
    phi(Partition{{5, 40}}, GapParams::make(36, 2, 36));
    FAIL();
  } catch (const gapart::PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("L >= 2s^3+5s^2+1"), std::string::npos);
  }
  EXPECT_THROW(phi(Partition{{1, 20}}, GapParams::make(8, 1, 8)), gapart::PreconditionError);
  // Calling a branch on the wrong class.
  EXPECT_THROW(phi2(kExample1, GapParams::make(110, 3, 112)), gapart::PreconditionError);
  EXPECT_THROW(phi1(kExample4, GapParams::make(108, 3, 109)), gapart::PreconditionError);
}

TEST(Psi, RejectsPartitionsOutsideTheImage) {
  const auto params = GapParams::make(8, 1, 8);
  // F4 member whose g_s is not a multiple of r-2 = 6.
  EXPECT_THROW(psi4(Partition{{1, 13}, {2, 1}}, params), gapart::PreconditionError);
  // F1 members with s*g_s = k.
  EXPECT_NO_THROW(psi1(Partition{{1, 2}, {9, 2}}, params));
  EXPECT_THROW(psi1(Partition{{1, 8}, {9, 1}}, params), gapart::PreconditionError);
  EXPECT_THROW(psi1(Partition{{1, 9}, {8, 1}}, GapParams::make(8, 1, 9)), gapart::PreconditionError);
  // Wrong class entirely.
  EXPECT_THROW(psi2(Partition{{1, 12}, {2, 4}}, params), gapart::PreconditionError);
  try {
    psi(Partition{{2, 1}, {5, 1}, {7, 1}}, GapParams::make(37, 2, 37));
    FAIL();
  } catch (const gapart::PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("not in characterized image"), std::string::npos);
  }
}

TEST(Injection, ExhaustiveSmallRegime) {
  for (auto k : {8, 9}) {
    const auto params = GapParams::make(8, 1, k);
    for (std::int64_t n = 1; n <= 60; ++n) {
      std::set<Partition> images;
      std::size_t domain = 0;
      gapart::for_each_C(params, n, [&](const gapart::PartitionView& view) {
        const auto alpha = view.to_partition();
        const auto check = gapart::check_injection(alpha, params);
        ASSERT_TRUE(check.ok()) << check.failure;
        const int label = check.label->index;
        ASSERT_TRUE(label == 1 || label == 4 || label == 5);
        images.insert(check.image);
        ++domain;
      });
      ASSERT_EQ(images.size(), domain) << "n=" << n;
    }
  }
}

TEST(Injection, GeneratedClassTwoAndThreeMembers) {
  for (const auto& params : {GapParams::make(37, 2, 37), GapParams::make(37, 2, 38), GapParams::make(37, 2, 39),
                             GapParams::make(100, 3, 100), GapParams::make(102, 3, 103)}) {
    ClassGenerator gen(params, static_cast<std::uint64_t>(params.k() * 131 + params.s()));
    for (int i = 0; i < 400; ++i) {
      const auto a = gen.c2();
      ASSERT_EQ(classify_C(a, params).index, 2) << a.to_string();
      const auto ca = gapart::check_injection(a, params);
      ASSERT_TRUE(ca.ok()) << ca.failure;
      const auto b = gen.c3();
      ASSERT_EQ(classify_C(b, params).index, 3) << b.to_string();
      const auto cb = gapart::check_injection(b, params);
      ASSERT_TRUE(cb.ok()) << cb.failure;
    }
  }
}

TEST(Injection, SampledStrongRegime) {
  for (auto k : {37, 38, 39}) {
    const auto summary = gapart::verify_sample(GapParams::make(37, 2, k), 151, 153, 7, 500);
    EXPECT_TRUE(summary.ok()) << (summary.failure_samples.empty() ? "" : summary.failure_samples.front());
    EXPECT_EQ(summary.checked, 1500u);
  }
}

TEST(Injection, CountingCorollary) {
  for (auto k : {37, 38, 39}) {
    const auto report = gapart::scan_inequality(GapParams::make(37, 2, k), 151, 600);
    EXPECT_TRUE(report.violations.empty());
  }
}
