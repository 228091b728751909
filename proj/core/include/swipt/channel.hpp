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

#ifndef SWIPT_CHANNEL_HPP_
#define SWIPT_CHANNEL_HPP_

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace swipt {

using ComplexMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

// Flat-fading MIMO channel H with one row per receive antenna and one column
// per transmit antenna. Entries are dimensionless complex gains.
class ChannelMatrix {
 public:
  // Throws InvalidArgument on an empty or non-finite matrix.
  explicit ChannelMatrix(ComplexMatrix entries);

  int n_rx() const { return static_cast<int>(entries_.rows()); }
  int n_tx() const { return static_cast<int>(entries_.cols()); }
  const ComplexMatrix& entries() const { return entries_; }
  std::complex<double> operator()(int r, int c) const { return entries_(r, c); }

  double squared_frobenius_norm() const { return entries_.squaredNorm(); }

 private:
  ComplexMatrix entries_;
};

// Strictly increasing, non-empty list of receive-antenna indices.
class AntennaSet {
 public:
  // Throws InvalidArgument if `indices` is empty, unsorted, has duplicates
  // or a negative entry.
  explicit AntennaSet(std::vector<int> indices);

  // The single antenna {0}.
  AntennaSet() : indices_{0} {}

  // {0, 1, ..., n-1}.
  static AntennaSet all(int n);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }

  // Semicolon-joined indices, e.g. "0;2;3".
  std::string to_string() const;

  friend bool operator==(const AntennaSet&, const AntennaSet&) = default;
  friend auto operator<=>(const AntennaSet&, const AntennaSet&) = default;

 private:
  std::vector<int> indices_;
};

// Power gains of the L = min(rows, cols) parallel eigen-channels, sorted
// descending. A gain is an eigenvalue of H H^H (a squared singular value).
class EigenChannels {
 public:
  // Throws InvalidArgument on negative or non-finite gains; sorts descending.
  explicit EigenChannels(std::vector<double> gains);

  const std::vector<double>& gains() const { return gains_; }
  std::span<const double> span() const { return gains_; }
  int count() const { return static_cast<int>(gains_.size()); }
  double operator[](int i) const { return gains_[static_cast<size_t>(i)]; }
  double max() const { return gains_.empty() ? 0.0 : gains_.front(); }
  double sum() const;

 private:
  std::vector<double> gains_;
};

// i.i.d. CN(0, 1) entries. Deterministic in `seed` and portable across
// standard libraries (the normal deviates are produced in-house from a
// 64-bit Mersenne twister).
ChannelMatrix generate_rayleigh(int n_rx, int n_tx, std::uint64_t seed);

// Rows of `h` named by `chi`, in order. Throws InvalidArgument on an index
// outside [0, h.n_rx()).
ChannelMatrix select_rows(const ChannelMatrix& h, const AntennaSet& chi);

// Eigenvalues of H H^H truncated to min(rows, cols). Gains below 1e-12 are
// clamped to zero. Throws DecompositionError if the eigensolver fails.
EigenChannels eigen_channels(const ChannelMatrix& h_chi);

// Squared norm of every row of `h`.
std::vector<double> frobenius_row_norms(const ChannelMatrix& h);

// Plain-text dump: a header line "n_rx n_tx" followed by row-major "re im"
// pairs, whitespace separated. Values are written with 17 significant
// digits so a load reproduces the matrix exactly.
void write_channel(std::ostream& out, const ChannelMatrix& h);
ChannelMatrix read_channel(std::istream& in);
void save_channel(const std::string& path, const ChannelMatrix& h);
ChannelMatrix load_channel(const std::string& path);

}  // namespace swipt

#endif  // SWIPT_CHANNEL_HPP_
