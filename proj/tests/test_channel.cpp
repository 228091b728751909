// Copyright 2026 The swipt-ee Authors
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


#include <algorithm>
#include <complex>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "swipt/channel.hpp"
#include "swipt/error.hpp"
#include "swipt/seeding.hpp"

using namespace swipt;
using cd = std::complex<double>;

namespace {

ChannelMatrix from_rows(std::initializer_list<std::initializer_list<cd>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  ComplexMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const cd& v : row) m(i, j++) = v;
    ++i;
  }
  return ChannelMatrix(m);
}

}  // namespace

TEST_CASE("generate_rayleigh is deterministic per seed") {
  const auto a = generate_rayleigh(1, 1, 7);
  const auto b = generate_rayleigh(1, 1, 7);
  CHECK(a(0, 0) == b(0, 0));
  CHECK(generate_rayleigh(1, 1, 8)(0, 0) != a(0, 0));
}

TEST_CASE("generate_rayleigh shape and finiteness") {
  const auto h = generate_rayleigh(8, 8, 123);
  CHECK(h.n_rx() == 8);
  CHECK(h.n_tx() == 8);
  CHECK(h.entries().allFinite());
  CHECK_THROWS_AS(generate_rayleigh(0, 4, 1), InvalidArgument);
  CHECK_THROWS_AS(generate_rayleigh(4, 0, 1), InvalidArgument);
}

TEST_CASE("generate_rayleigh has unit average power") {
  // 10^4 draws of a 4x4 matrix.
  double sum = 0.0;
  const int draws = 10000;
  for (int s = 0; s < draws; ++s) sum += generate_rayleigh(4, 4, derive_seed(99, s)).squared_frobenius_norm();
  CHECK(sum / (16.0 * draws) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("generate_rayleigh real and imaginary parts are balanced") {
  double re = 0.0, im = 0.0, cross = 0.0;
  for (int s = 0; s < 4000; ++s) {
    const auto h = generate_rayleigh(2, 2, derive_seed(5, s));
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        re += h(r, c).real() * h(r, c).real();
        im += h(r, c).imag() * h(r, c).imag();
        cross += h(r, c).real() * h(r, c).imag();
      }
  }
  const double n = 16000.0;
  CHECK(re / n == doctest::Approx(0.5).epsilon(0.05));
  CHECK(im / n == doctest::Approx(0.5).epsilon(0.05));
  CHECK(std::abs(cross / n) < 0.02);
}

TEST_CASE("select_rows") {
  SUBCASE("full set of the identity") {
    const auto h = from_rows({{1, 0}, {0, 1}});
    const auto s = select_rows(h, AntennaSet({0, 1}));
    CHECK(s.entries() == h.entries());
  }
  SUBCASE("single row") {
    const auto h = from_rows({{1, 2}, {3, 4}, {cd(5, 1), 6}});
    const auto s = select_rows(h, AntennaSet({2}));
    CHECK(s.n_rx() == 1);
    CHECK(s(0, 0) == cd(5, 1));
    CHECK(s(0, 1) == cd(6, 0));
  }
  SUBCASE("row deletion") {
    const auto h = generate_rayleigh(8, 8, 3);
    const auto s = select_rows(h, AntennaSet({0, 1, 2, 4, 5, 6, 7}));
    REQUIRE(s.n_rx() == 7);
    CHECK(s.entries().row(3) == h.entries().row(4));
    CHECK(s.entries().row(2) == h.entries().row(2));
  }
  SUBCASE("out of range") {
    const auto h = generate_rayleigh(3, 2, 3);
    CHECK_THROWS_AS(select_rows(h, AntennaSet({1, 3})), InvalidArgument);
  }
}

TEST_CASE("AntennaSet validation") {
  CHECK_THROWS_AS(AntennaSet(std::vector<int>{}), InvalidArgument);
  CHECK_THROWS_AS(AntennaSet({2, 1}), InvalidArgument);
  CHECK_THROWS_AS(AntennaSet({1, 1}), InvalidArgument);
  CHECK_THROWS_AS(AntennaSet({-1, 0}), InvalidArgument);
  CHECK(AntennaSet({0, 2, 3}).to_string() == "0;2;3");
  CHECK(AntennaSet::all(3) == AntennaSet({0, 1, 2}));
}

TEST_CASE("eigen_channels known values") {
  SUBCASE("identity") {
    const auto g = eigen_channels(from_rows({{1, 0}, {0, 1}}));
    REQUIRE(g.count() == 2);
    CHECK(g[0] == doctest::Approx(1.0));
    CHECK(g[1] == doctest::Approx(1.0));
  }
  SUBCASE("single row") {
    const auto g = eigen_channels(from_rows({{3, 4}}));
    REQUIRE(g.count() == 1);
    CHECK(g[0] == doctest::Approx(25.0));
  }
  SUBCASE("wide and tall truncate to min dimension") {
    CHECK(eigen_channels(generate_rayleigh(3, 5, 1)).count() == 3);
    CHECK(eigen_channels(generate_rayleigh(5, 3, 1)).count() == 3);
  }
}

TEST_CASE("eigen_channels trace identity and ordering") {
  for (int s = 0; s < 50; ++s) {
    const auto h = generate_rayleigh(4, 4, derive_seed(17, s));
    const auto g = eigen_channels(h);
    CHECK(g.sum() == doctest::Approx(h.squared_frobenius_norm()).epsilon(1e-9));
    CHECK(std::is_sorted(g.gains().rbegin(), g.gains().rend()));
    for (double v : g.gains()) CHECK(v >= 0.0);
  }
}

TEST_CASE("eigen_channels of a selection follow the selected rows") {
  for (int s = 0; s < 30; ++s) {
    const auto h = generate_rayleigh(6, 4, derive_seed(21, s));
    const AntennaSet chi({0, 2, 5});
    const auto sub = select_rows(h, chi);
    CHECK(eigen_channels(sub).sum() == doctest::Approx(sub.squared_frobenius_norm()).epsilon(1e-9));
  }
}

TEST_CASE("eigen_channels are invariant to row order") {
  const auto h = generate_rayleigh(4, 4, 77);
  ComplexMatrix perm(4, 4);
  const int order[4] = {2, 0, 3, 1};
  for (int r = 0; r < 4; ++r) perm.row(r) = h.entries().row(order[r]);
  const auto a = eigen_channels(h);
  const auto b = eigen_channels(ChannelMatrix(perm));
  for (int i = 0; i < 4; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-10));
}

TEST_CASE("removing a row never increases the largest gain or the channel count") {
  for (int s = 0; s < 30; ++s) {
    const auto h = generate_rayleigh(5, 4, derive_seed(31, s));
    const auto full = eigen_channels(h);
    const auto less = eigen_channels(select_rows(h, AntennaSet({0, 1, 3, 4})));
    CHECK(less.count() <= full.count());
    CHECK(less.max() <= full.max() * (1 + 1e-12));
  }
}

TEST_CASE("EigenChannels rejects bad gains and sorts") {
  CHECK_THROWS_AS(EigenChannels({1.0, -0.5}), InvalidArgument);
  CHECK_THROWS_AS(EigenChannels({std::nan("")}), InvalidArgument);
  const EigenChannels g({1.0, 3.0, 2.0});
  CHECK(g.gains() == std::vector<double>{3.0, 2.0, 1.0});
}

TEST_CASE("frobenius_row_norms") {
  const auto id = frobenius_row_norms(from_rows({{1, 0}, {0, 1}}));
  CHECK(id == std::vector<double>{1.0, 1.0});
  const auto one = frobenius_row_norms(from_rows({{cd(1, 1), cd(1, -1)}}));
  CHECK(one[0] == doctest::Approx(4.0));
  const auto h = generate_rayleigh(5, 3, 4);
  const auto n = frobenius_row_norms(h);
  CHECK(std::accumulate(n.begin(), n.end(), 0.0) ==
        doctest::Approx(h.squared_frobenius_norm()).epsilon(1e-12));
}

TEST_CASE("channel dump round trip is exact") {
  const auto h = generate_rayleigh(3, 4, 2024);
  std::stringstream ss;
  write_channel(ss, h);
  const auto back = read_channel(ss);
  CHECK(back.entries() == h.entries());
  std::istringstream bad("2 2\n1 0 0 1\n");
  CHECK_THROWS_AS(read_channel(bad), InvalidArgument);
}
