#include "tsforest/block_bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsforest {

std::string bootstrap_name(BootstrapKind kind) {
  switch (kind) {
    case BootstrapKind::IID:
      return "iid";
    case BootstrapKind::MBB:
      return "mbb";
    case BootstrapKind::NBB:
      return "nbb";
    case BootstrapKind::CBB:
      return "cbb";
    case BootstrapKind::SBB:
      return "sbb";
    case BootstrapKind::ARSB:
      return "arsb";
  }
  throw std::logic_error("bootstrap_name: unknown kind");
}

BootstrapKind parse_bootstrap(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "iid") return BootstrapKind::IID;
  if (lower == "mbb") return BootstrapKind::MBB;
  if (lower == "nbb") return BootstrapKind::NBB;
  if (lower == "cbb") return BootstrapKind::CBB;
  if (lower == "sbb") return BootstrapKind::SBB;
  if (lower == "arsb") return BootstrapKind::ARSB;
  throw std::invalid_argument("unknown bootstrap strategy: " + name);
}

std::size_t default_block_length(std::size_t T) {
  const auto l = static_cast<std::size_t>(
      std::ceil(std::cbrt(static_cast<double>(T))));
  return std::max<std::size_t>(1, l);
}

namespace {

void check_block_args(std::size_t n, std::size_t block_length) {
  if (n == 0) {
    throw std::invalid_argument("block bootstrap: n must be >= 1");
  }
  if (block_length == 0) {
    throw std::invalid_argument("block bootstrap: block length must be >= 1");
  }
  if (block_length > n) {
    throw std::invalid_argument("block bootstrap: block length must be <= n");
  }
}

}  // namespace

std::vector<std::size_t> iid_indices(std::size_t n, RngStream& rng) {
  if (n == 0) {
    throw std::invalid_argument("iid_indices: n must be >= 1");
  }
  std::vector<std::size_t> out(n);
  for (auto& index : out) {
    index = static_cast<std::size_t>(rng.uniform_below(n)) + 1;
  }
  return out;
}

std::vector<std::size_t> mbb_indices(std::size_t n, std::size_t block_length,
                                     RngStream& rng, bool pad_to_n) {
  check_block_args(n, block_length);
  const std::size_t candidates = mbb_candidate_count(n, block_length);
  const std::size_t k = block_draw_count(n, block_length);
  std::vector<std::size_t> out;
  out.reserve(pad_to_n ? n : k * block_length);
  for (std::size_t b = 0; b < k; ++b) {
    const auto start = static_cast<std::size_t>(rng.uniform_below(candidates)) + 1;
    for (std::size_t j = 0; j < block_length; ++j) {
      out.push_back(start + j);
    }
  }
  if (pad_to_n && out.size() < n) {
    const auto start = static_cast<std::size_t>(rng.uniform_below(candidates)) + 1;
    for (std::size_t j = 0; out.size() < n; ++j) {
      out.push_back(start + j);
    }
  }
  return out;
}

std::vector<std::size_t> nbb_indices(std::size_t n, std::size_t block_length,
                                     RngStream& rng) {
  check_block_args(n, block_length);
  // Complete blocks only: starts 1, l+1, ..., (B-1)l+1 with B = floor(n/l).
  const std::size_t candidates = n / block_length;
  const std::size_t k = block_draw_count(n, block_length);
  std::vector<std::size_t> out;
  out.reserve(k * block_length);
  for (std::size_t b = 0; b < k; ++b) {
    const auto start =
        static_cast<std::size_t>(rng.uniform_below(candidates)) * block_length + 1;
    for (std::size_t j = 0; j < block_length; ++j) {
      out.push_back(start + j);
    }
  }
  return out;
}

std::vector<std::size_t> cbb_indices(std::size_t n, std::size_t block_length,
                                     RngStream& rng) {
  check_block_args(n, block_length);
  const std::size_t k = (n + block_length - 1) / block_length;  // ceil(n/l)
  std::vector<std::size_t> out;
  out.reserve(k * block_length);
  for (std::size_t b = 0; b < k && out.size() < n; ++b) {
    const auto start = static_cast<std::size_t>(rng.uniform_below(n));  // 0-based
    for (std::size_t j = 0; j < block_length && out.size() < n; ++j) {
      out.push_back((start + j) % n + 1);
    }
  }
  return out;
}

std::vector<std::size_t> sbb_indices(std::size_t n,
                                     std::size_t mean_block_length,
                                     RngStream& rng) {
  if (n == 0) {
    throw std::invalid_argument("sbb_indices: n must be >= 1");
  }
  if (mean_block_length == 0) {
    throw std::invalid_argument("sbb_indices: mean block length must be >= 1");
  }
  const double p = 1.0 / static_cast<double>(mean_block_length);
  std::vector<std::size_t> out;
  out.reserve(n);
  while (out.size() < n) {
    const auto start = static_cast<std::size_t>(rng.uniform_below(n));  // 0-based
    const std::uint64_t length = rng.geometric(p);
    for (std::uint64_t j = 0; j < length && out.size() < n; ++j) {
      out.push_back((start + j) % n + 1);
    }
  }
  return out;
}

std::vector<std::size_t> draw_row_indices(const ResampleStrategy& strategy,
                                          std::size_t n, RngStream& rng) {
  const std::size_t l = strategy.block_length == 0
                            ? std::min(default_block_length(n), n)
                            : strategy.block_length;
  switch (strategy.kind) {
    case BootstrapKind::IID:
      return iid_indices(n, rng);
    case BootstrapKind::MBB:
      return mbb_indices(n, l, rng, strategy.pad_to_n);
    case BootstrapKind::NBB:
      return nbb_indices(n, l, rng);
    case BootstrapKind::CBB:
      return cbb_indices(n, l, rng);
    case BootstrapKind::SBB:
      return sbb_indices(n, l, rng);
    case BootstrapKind::ARSB:
      throw std::invalid_argument(
          "draw_row_indices: ARSB is not index-based; use arsb_resample");
  }
  throw std::logic_error("draw_row_indices: unknown kind");
}

}  // namespace tsforest
