// SPDX-License-Identifier: Apache-2.0
//
// mrnsim: power-bandwidth tradeoff simulator for dense multi-antenna relay networks
// Copyright (C) 2026 The mrnsim Authors
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

#include "mrn/channel.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mrn {

ChannelRealization::ChannelRealization(int K, int L, int M, int N)
    : K_(K), L_(L), M_(M), N_(N),
      H_(static_cast<std::size_t>(K) * L, CMatrix::Zero(N, M)),
      G_(static_cast<std::size_t>(K) * L, CMatrix::Zero(M, N)),
      E_(RMatrix::Ones(K, L)),
      F_(RMatrix::Ones(K, L)) {}

bool ChannelRealization::operator==(const ChannelRealization& o) const {
  if (K_ != o.K_ || L_ != o.L_ || M_ != o.M_ || N_ != o.N_) return false;
  for (std::size_t i = 0; i < H_.size(); ++i)
    if (H_[i] != o.H_[i] || G_[i] != o.G_[i]) return false;
  return E_ == o.E_ && F_ == o.F_;
}

ChannelRealization draw_realization(const NetworkConfig& cfg, RandomStream& stream) {
  ChannelRealization real(cfg.K, cfg.L, cfg.M, cfg.N);
  for (int k = 0; k < cfg.K; ++k)
    for (int l = 0; l < cfg.L; ++l) real.H(k, l) = sample_complex_gaussian(stream, cfg.N, cfg.M);
  for (int k = 0; k < cfg.K; ++k)
    for (int l = 0; l < cfg.L; ++l) real.G(k, l) = sample_complex_gaussian(stream, cfg.M, cfg.N);

  const PathLossModel& pl = cfg.pathloss;
  for (int k = 0; k < cfg.K; ++k) {
    for (int l = 0; l < cfg.L; ++l) {
      if (pl.kind == PathLossModel::Kind::Constant) {
        real.E(k, l) = db_to_linear(pl.e_db);
        real.F(k, l) = db_to_linear(pl.f_db);
      } else {
        real.E(k, l) = stream.uniform(pl.e_min, pl.e_max);
        real.F(k, l) = stream.uniform(pl.f_min, pl.f_max);
      }
    }
  }
  return real;
}

DirectChannelRealization draw_direct(const NetworkConfig& cfg, RandomStream& stream) {
  const int s = cfg.streams();
  return {sample_complex_gaussian(stream, s, s)};
}

CMatrix stack_first_hop(const ChannelRealization& real, int k) {
  if (k < 0 || k >= real.K()) throw std::out_of_range("stack_first_hop: relay index");
  const int M = real.M();
  CMatrix out(real.N(), real.L() * M);
  for (int l = 0; l < real.L(); ++l) out.middleCols(l * M, M) = std::sqrt(real.E(k, l)) * real.H(k, l);
  return out;
}

CMatrix stack_second_hop(const ChannelRealization& real, int k) {
  if (k < 0 || k >= real.K()) throw std::out_of_range("stack_second_hop: relay index");
  const int M = real.M();
  CMatrix out(real.L() * M, real.N());
  for (int l = 0; l < real.L(); ++l) out.middleRows(l * M, M) = std::sqrt(real.F(k, l)) * real.G(k, l);
  return out;
}

namespace {

constexpr char kMagic[8] = {'M', 'R', 'N', 'C', 'H', 'A', 'N', '1'};

void put_u64_le(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(b, 8);
}

std::uint64_t get_u64_le(std::istream& is) {
  unsigned char b[8];
  if (!is.read(reinterpret_cast<char*>(b), 8)) throw std::runtime_error("read_realization: truncated");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

void put_f64(std::ostream& os, double x, DumpFormat fmt) {
  if (fmt == DumpFormat::Binary) {
    put_u64_le(os, std::bit_cast<std::uint64_t>(x));
  } else {
    os << ' ' << std::setprecision(17) << x;
  }
}

double get_f64(std::istream& is, DumpFormat fmt) {
  if (fmt == DumpFormat::Binary) return std::bit_cast<double>(get_u64_le(is));
  std::string tok;
  if (!(is >> tok)) throw std::runtime_error("read_realization: truncated");
  return std::stod(tok);
}

template <typename Fn>
void for_each_block(int K, int L, Fn&& fn) {
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < L; ++l) fn(k, l);
}

}  // namespace

void write_realization(std::ostream& os, const ChannelRealization& real, DumpFormat fmt) {
  const int dims[4] = {real.K(), real.L(), real.M(), real.N()};
  if (fmt == DumpFormat::Binary) {
    os.write(kMagic, sizeof kMagic);
    for (int d : dims) put_u64_le(os, static_cast<std::uint64_t>(d));
  } else {
    os << "mrn-channel " << dims[0] << ' ' << dims[1] << ' ' << dims[2] << ' ' << dims[3];
  }
  auto put_matrix = [&](const CMatrix& m) {
    for (int r = 0; r < m.rows(); ++r) {
      if (fmt == DumpFormat::Text) os << '\n';
      for (int c = 0; c < m.cols(); ++c) {
        put_f64(os, m(r, c).real(), fmt);
        put_f64(os, m(r, c).imag(), fmt);
      }
    }
  };
  for_each_block(real.K(), real.L(), [&](int k, int l) { put_matrix(real.H(k, l)); });
  for_each_block(real.K(), real.L(), [&](int k, int l) { put_matrix(real.G(k, l)); });
  for (const bool e : {true, false}) {
    for (int k = 0; k < real.K(); ++k) {
      if (fmt == DumpFormat::Text) os << '\n';
      for (int l = 0; l < real.L(); ++l) put_f64(os, e ? real.E(k, l) : real.F(k, l), fmt);
    }
  }
  if (fmt == DumpFormat::Text) os << '\n';
}

ChannelRealization read_realization(std::istream& is, DumpFormat fmt) {
  int dims[4];
  if (fmt == DumpFormat::Binary) {
    char magic[sizeof kMagic];
    if (!is.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
      throw std::runtime_error("read_realization: bad magic");
    for (int& d : dims) d = static_cast<int>(get_u64_le(is));
  } else {
    std::string tag;
    if (!(is >> tag) || tag != "mrn-channel") throw std::runtime_error("read_realization: bad header");
    for (int& d : dims)
      if (!(is >> d)) throw std::runtime_error("read_realization: bad header");
  }
  if (dims[0] < 0 || dims[1] < 1 || dims[2] < 1 || dims[3] < 1)
    throw std::runtime_error("read_realization: bad dimensions");

  ChannelRealization real(dims[0], dims[1], dims[2], dims[3]);
  auto get_matrix = [&](CMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        const double re = get_f64(is, fmt);
        const double im = get_f64(is, fmt);
        m(r, c) = {re, im};
      }
  };
  for_each_block(real.K(), real.L(), [&](int k, int l) { get_matrix(real.H(k, l)); });
  for_each_block(real.K(), real.L(), [&](int k, int l) { get_matrix(real.G(k, l)); });
  for (int k = 0; k < real.K(); ++k)
    for (int l = 0; l < real.L(); ++l) real.E(k, l) = get_f64(is, fmt);
  for (int k = 0; k < real.K(); ++k)
    for (int l = 0; l < real.L(); ++l) real.F(k, l) = get_f64(is, fmt);
  return real;
}

}  // namespace mrn
