/*
   Copyright 2026 The qboson Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>
#include <omp.h>

#include "qboson/errors.hpp"
#include "qboson/qgas.hpp"
#include "qboson/sweep.hpp"

using namespace qboson;
using namespace qboson::sweep;

namespace {

TEST(MakeGridTest, InclusiveAndCorrectlyRounded) {
  const auto g = make_grid(0.2, 2.0, 0.01);
  ASSERT_EQ(g.size(), 181u);
  EXPECT_EQ(g.front(), 0.2);
  EXPECT_EQ(g[80], 1.0);
  EXPECT_EQ(g[10], 0.3);
  EXPECT_EQ(g.back(), 2.0);
  const auto q = make_grid(0.6, 1.5, 0.005);
  EXPECT_EQ(q.size(), 181u);
  EXPECT_EQ(q[80], 1.0);
  // Non-decimal steps fall back to start + i*step.
  const auto odd = make_grid(0.0, 1.0, 0.3);
  ASSERT_EQ(odd.size(), 4u);
  EXPECT_DOUBLE_EQ(odd[3], 0.9);
  EXPECT_EQ(make_grid(1.0, 1.0, 0.1).size(), 1u);
}

TEST(MakeGridTest, Validation) {
  EXPECT_THROW((void)make_grid(1.0, 0.0, 0.1), DomainError);
  EXPECT_THROW((void)make_grid(0.0, 1.0, 0.0), DomainError);
  EXPECT_THROW((void)make_grid(0.0, 1.0, -0.1), DomainError);
  EXPECT_THROW((void)make_grid(0.0, 1e9, 1e-9), DomainError);
  EXPECT_THROW((void)make_grid(0.0, std::nan(""), 0.1), DomainError);
}

class SweepBackendTest : public ::testing::Test {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

TEST_F(SweepBackendTest, ParallelMatchesSerialBitForBit) {
  const Deformation d(1.05);
  const auto ts = make_grid(0.2, 2.0, 0.01);
  auto cv = [&](double t) { return qgas::heat_capacity(qgas::GasPoint::at_temperature(d, t)); };
  const auto serial = map_grid(ts, cv, Backend::serial);
  const auto parallel = map_grid(ts, cv, Backend::parallel);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i], parallel[i]) << i;
  }
}

TEST_F(SweepBackendTest, LowestIndexErrorIsRethrown) {
  const auto xs = make_grid(0.0, 99.0, 1.0);
  auto f = [](double x) -> double {
    if (x == 17.0) throw std::runtime_error("first");
    if (x >= 40.0) throw std::logic_error("later");
    return x;
  };
  for (auto backend : {Backend::serial, Backend::parallel}) {
    try {
      (void)map_grid(xs, f, backend);
      FAIL() << "expected an exception";
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "first");
    }
  }
}

TEST(SweepTest, NonDefaultConstructibleResults) {
  struct Wrapped {
    explicit Wrapped(double v) : value(v) {}
    double value;
  };
  const auto out = map_grid(make_grid(1.0, 3.0, 1.0), [](double x) { return Wrapped(2 * x); });
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[2].value, 6.0);
  EXPECT_GE(parallel_threads(), 1);
}

}  // namespace
