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

#include "swipt/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "swipt/error.hpp"

namespace swipt {

namespace {

constexpr double kGainClamp = 1e-12;

// 53-bit uniform in (0, 1].
double uniform_open_closed(std::mt19937_64& eng) {
  return (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

ChannelMatrix::ChannelMatrix(ComplexMatrix entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.cols() < 1) {
    throw InvalidArgument("channel matrix must have at least one row and column");
  }
  if (!entries_.allFinite()) {
    throw InvalidArgument("channel matrix has non-finite entries");
  }
}

AntennaSet::AntennaSet(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw InvalidArgument("antenna set must be non-empty");
  if (indices_.front() < 0) throw InvalidArgument("negative antenna index");
  for (size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1]) {
      throw InvalidArgument("antenna indices must be strictly increasing");
    }
  }
}

AntennaSet AntennaSet::all(int n) {
  if (n < 1) throw InvalidArgument("antenna count must be >= 1");
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  return AntennaSet(std::move(idx));
}

std::string AntennaSet::to_string() const {
  std::string s;
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) s += ';';
    s += std::to_string(indices_[i]);
  }
  return s;
}

EigenChannels::EigenChannels(std::vector<double> gains) : gains_(std::move(gains)) {
  for (double g : gains_) {
    if (!std::isfinite(g) || g < 0.0) {
      throw InvalidArgument("eigen-channel gains must be finite and >= 0");
    }
  }
  std::sort(gains_.begin(), gains_.end(), std::greater<>());
}

double EigenChannels::sum() const {
  double s = 0.0;
  for (double g : gains_) s += g;
  return s;
}

ChannelMatrix generate_rayleigh(int n_rx, int n_tx, std::uint64_t seed) {
  if (n_rx < 1 || n_tx < 1) {
    throw InvalidArgument("generate_rayleigh: dimensions must be >= 1");
  }
  std::mt19937_64 eng(seed);
  ComplexMatrix h(n_rx, n_tx);
  // Row-major fill so the draw order matches the dump format.
  for (int r = 0; r < n_rx; ++r) {
    for (int c = 0; c < n_tx; ++c) {
      // |h|^2 = -ln(u) ~ Exp(1) with a uniform phase: CN(0, 1).
      const double radius = std::sqrt(-std::log(uniform_open_closed(eng)));
      const double phase = 2.0 * std::numbers::pi * uniform_open_closed(eng);
      h(r, c) = std::polar(radius, phase);
    }
  }
  return ChannelMatrix(std::move(h));
}

ChannelMatrix select_rows(const ChannelMatrix& h, const AntennaSet& chi) {
  ComplexMatrix sub(chi.size(), h.n_tx());
  int out = 0;
  for (int r : chi.indices()) {
    if (r >= h.n_rx()) {
      throw InvalidArgument("select_rows: antenna index " + std::to_string(r) +
                            " out of range for " + std::to_string(h.n_rx()) +
                            " receive antennas");
    }
    sub.row(out++) = h.entries().row(r);
  }
  return ChannelMatrix(std::move(sub));
}

EigenChannels eigen_channels(const ChannelMatrix& h_chi) {
  const ComplexMatrix& h = h_chi.entries();
  // The nonzero spectra of H H^H and H^H H coincide; decompose the smaller.
  const ComplexMatrix gram = h.rows() <= h.cols()
                                 ? ComplexMatrix(h * h.adjoint())
                                 : ComplexMatrix(h.adjoint() * h);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DecompositionError("eigen_channels: eigensolver did not converge");
  }
  std::vector<double> gains(static_cast<size_t>(gram.rows()));
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    const double g = solver.eigenvalues()(i);
    gains[static_cast<size_t>(i)] = g < kGainClamp ? 0.0 : g;
  }
  return EigenChannels(std::move(gains));
}

std::vector<double> frobenius_row_norms(const ChannelMatrix& h) {
  std::vector<double> norms(static_cast<size_t>(h.n_rx()));
  for (int r = 0; r < h.n_rx(); ++r) {
    norms[static_cast<size_t>(r)] = h.entries().row(r).squaredNorm();
  }
  return norms;
}

void write_channel(std::ostream& out, const ChannelMatrix& h) {
  out << h.n_rx() << ' ' << h.n_tx() << '\n';
  std::ostringstream line;
  line << std::setprecision(17);
  for (int r = 0; r < h.n_rx(); ++r) {
    line.str({});
    for (int c = 0; c < h.n_tx(); ++c) {
      if (c > 0) line << ' ';
      line << h(r, c).real() << ' ' << h(r, c).imag();
    }
    out << line.str() << '\n';
  }
}

ChannelMatrix read_channel(std::istream& in) {
  long rows = 0;
  long cols = 0;
  if (!(in >> rows >> cols) || rows < 1 || cols < 1) {
    throw InvalidArgument("read_channel: bad header, expected \"n_rx n_tx\"");
  }
  ComplexMatrix h(rows, cols);
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      double re = 0.0;
      double im = 0.0;
      if (!(in >> re >> im)) {
        throw InvalidArgument("read_channel: truncated data at entry (" +
                              std::to_string(r) + ", " + std::to_string(c) + ")");
      }
      h(r, c) = {re, im};
    }
  }
  return ChannelMatrix(std::move(h));
}

void save_channel(const std::string& path, const ChannelMatrix& h) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open " + path + " for writing");
  write_channel(out, h);
}

ChannelMatrix load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return read_channel(in);
}

}  // namespace swipt
