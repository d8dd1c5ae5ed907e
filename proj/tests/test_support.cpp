// chanest: learned OFDM channel estimation and sample-complexity analysis
// Copyright (C) 2026 The chanest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <stdexcept>

#include "chanest/errors.hpp"
#include "chanest/plot.hpp"
#include "chanest/rng.hpp"
#include "chanest/stats.hpp"
#include "chanest/table.hpp"

using namespace chanest;

TEST_CASE("running statistics match a two-pass computation") {
  Rng rng(1);
  std::vector<double> x(1001);
  for (double& v : x) v = 3.0 + rng.normal();
  RunningStats all, left, right;
  for (std::size_t i = 0; i < x.size(); ++i) {
    all.add(x[i]);
    (i < 400 ? left : right).add(x[i]);
  }
  left.merge(right);
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double var = ss / static_cast<double>(x.size() - 1);
  CHECK(all.mean() == doctest::Approx(mean).epsilon(1e-13));
  CHECK(all.variance() == doctest::Approx(var).epsilon(1e-12));
  CHECK(left.count() == 1001);
  CHECK(left.mean() == doctest::Approx(mean).epsilon(1e-13));
  CHECK(left.variance() == doctest::Approx(var).epsilon(1e-12));
  CHECK(all.std_error() == doctest::Approx(std::sqrt(var / 1001.0)));
  RunningStats empty;
  CHECK(empty.variance() == 0.0);
  empty.merge(all);
  CHECK(empty.mean() == all.mean());
}

TEST_CASE("parallel_for covers every index and forwards exceptions") {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(100, 3, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(10, 2, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
  CHECK(default_workers() >= 1);
}

TEST_CASE("derived streams are independent and reproducible") {
  Rng a = Rng::derive(1, StreamPurpose::Training, 2, 3);
  Rng b = Rng::derive(1, StreamPurpose::Training, 2, 3);
  Rng c = Rng::derive(1, StreamPurpose::Evaluation, 2, 3);
  const double va = a.uniform();
  CHECK(va == b.uniform());
  CHECK(va != c.uniform());
  Rng d(7);
  double power = 0.0;
  for (int i = 0; i < 100000; ++i) power += std::norm(d.complex_normal(2.0));
  CHECK(power / 100000.0 == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("CSV formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333");
  CHECK(format_number(1234567.0) == "1234567");
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  Table t;
  t.columns = {"name", "k", "v"};
  t.add_row({std::string("x,y"), std::int64_t{4}, 0.25});
  CHECK(t.to_csv() == "name,k,v\r\n\"x,y\",4,0.25\r\n");
  CHECK(t.number(0, "v") == 0.25);
  CHECK(t.text(0, "name") == "x,y");
  CHECK_THROWS_AS(t.add_row({0.0}), InvalidArgument);
  CHECK_THROWS_AS(t.column("missing"), InvalidArgument);
}

TEST_CASE("text files round trip") {
  const auto path = std::filesystem::temp_directory_path() / "chanest_text_roundtrip.txt";
  write_text_file(path, "a\r\nb\n");
  CHECK(read_text_file(path) == "a\r\nb\n");
  std::filesystem::remove(path);
}

TEST_CASE("SVG output") {
  PlotSpec spec{"t & u", "x", "y", true, {{"one", {1, 2, 3}, {0.1, 0.01, 0.001}}, {"two", {1, 3}, {1, 2}}}};
  const std::string svg = render_svg(spec);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("t &amp; u") != std::string::npos);
  std::size_t lines = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++lines;
  CHECK(lines == 2);
  CHECK(svg.find("two") != std::string::npos);
}
