#pragma once

#include <stdexcept>
#include <string>

#include "nlc/dynamics.hpp"

namespace nlc {

/// Malformed snapshot file: "bad magic", "version mismatch",
/// "truncated payload", ...
class SnapshotError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// NLC1 layout, all values little-endian:
///   "NLC1" | u32 version = 1 | u8 dim | u64 n (dim times) | f64 length |
///   f64 t | u8 model (0 lc, 1 lc-alpha) | f64 nu lambda gamma epsilon alpha dt |
///   f64 payload: u components then d components, each row-major physical.
/// Fields of SimParams not in the header keep their defaults on read.
struct Snapshot {
  SimState state;
  SimParams params;
};

constexpr std::uint32_t snapshot_version = 1;

void write_snapshot(const SimState& state, const SimParams& params, const std::string& path);
Snapshot read_snapshot(const std::string& path);

}  // namespace nlc
