#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "branchdim/elements.hpp"
#include "branchdim/permgrp.hpp"

namespace branchdim {

/// On-disk store of stabilizer chains for congruence quotients.
///
/// One file per (group definition, level), named by a 64-bit FNV-1a hash of
/// the definition's canonical text and the level. File layout, little endian:
///
///     "BDIM1"                      magic and format version
///     u64 key                      hash of (definition, level)
///     u32 degree, u32 base length, base points (u32 each)
///     u32 generator count, each generator as `degree` u32 images
///     u32 byte count, big-endian magnitude of the group order
///     u64 checksum                 FNV-1a of everything above
///
/// Any mismatch on load (magic, key, checksum, reconstructed order) is a cache miss.
class ChainCache {
 public:
  explicit ChainCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

  static std::uint64_t key(const GroupDef& def, std::size_t level);

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path file_for(std::uint64_t key) const;

  std::optional<StabChain> load(std::uint64_t key) const;
  /// Writes through a temporary file and an atomic rename. I/O failures are ignored.
  void store(std::uint64_t key, const StabChain& chain) const;

  struct Info {
    std::size_t files = 0;
    std::uintmax_t bytes = 0;
  };
  Info info() const;
  /// Removes every cache file; returns how many were removed.
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace branchdim
