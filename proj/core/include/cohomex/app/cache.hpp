#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "cohomex/cohomology/coefficients.hpp"
#include "cohomex/linalg/abelian_invariants.hpp"

namespace cohomex {

/// Bumped whenever differential conventions or Smith form canonicalization
/// change; entries written under another stamp are ignored.
inline constexpr const char* kAlgorithmVersion = "cohomex-alg-1";

struct CacheKey {
  std::string descriptor;
  CoefficientSpec coeffs = CoefficientSpec::integral();
  unsigned degree = 0;
  std::string version = kAlgorithmVersion;

  /// e.g. "cyclic:4|int|3|cohomex-alg-1".
  std::string canonical() const;
  /// Hex SHA-256 of canonical(); also the entry file name stem.
  std::string digest() const;
};

std::string sha256_hex(const std::string& data);

/// On-disk store of computed cohomology groups, one JSON file per key.
///
/// Writes go to a unique temporary file that is renamed into place, so
/// readers only ever see complete entries and concurrent writers of the same
/// key race harmlessly. Entries that fail to parse, fail their checksum or
/// carry another algorithm version read as absent.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// $COHOMEX_CACHE when set and non-empty.
  static std::optional<std::filesystem::path> directory_from_environment();

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path entry_path(const CacheKey& key) const;

  std::optional<std::string> load_payload(const CacheKey& key) const;
  void store_payload(const CacheKey& key, const std::string& payload) const;

  std::optional<AbelianGroupInvariants> load(const CacheKey& key) const;
  void store(const CacheKey& key, const AbelianGroupInvariants& value) const;

  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    /// Entries present on disk but rejected.
    std::uint64_t rejected = 0;
    std::uint64_t writes = 0;
  };
  Stats stats() const;

 private:
  std::filesystem::path dir_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
  mutable std::atomic<std::uint64_t> rejected_{0};
  mutable std::atomic<std::uint64_t> writes_{0};
};

std::string serialize_invariants(const AbelianGroupInvariants& inv);
/// Throws ParseError.
AbelianGroupInvariants deserialize_invariants(const std::string& text);

}  // namespace cohomex
