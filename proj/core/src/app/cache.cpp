#include "cohomex/app/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "cohomex/errors.hpp"
#include "json.hpp"

namespace cohomex {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string CacheKey::canonical() const {
  return descriptor + "|" + coeffs.to_string() + "|" + std::to_string(degree) + "|" + version;
}

std::string CacheKey::digest() const { return sha256_hex(canonical()); }

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) {
    throw PreconditionError("cannot create cache directory " + dir_.string());
  }
}

std::optional<fs::path> ResultCache::directory_from_environment() {
  const char* env = std::getenv("COHOMEX_CACHE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return fs::path(env);
}

fs::path ResultCache::entry_path(const CacheKey& key) const {
  const std::string d = key.digest();
  return dir_ / d.substr(0, 2) / (d + ".json");
}

std::optional<std::string> ResultCache::load_payload(const CacheKey& key) const {
  std::ifstream in(entry_path(key), std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    const json j = json::parse(ss.str());
    const auto payload = j.at("payload").get<std::string>();
    if (j.at("version").get<std::string>() != key.version ||
        j.at("key").get<std::string>() != key.canonical() ||
        j.at("checksum").get<std::string>() != sha256_hex(payload)) {
      ++rejected_;
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return payload;
  } catch (const json::exception&) {
    ++rejected_;
    ++misses_;
    return std::nullopt;
  }
}

void ResultCache::store_payload(const CacheKey& key, const std::string& payload) const {
  const fs::path target = entry_path(key);
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  static std::atomic<std::uint64_t> counter{0};
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << ::getpid() << "."
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  const fs::path tmp = target.parent_path() / tmp_name.str();
  const json j{{"version", key.version},
               {"key", key.canonical()},
               {"payload", payload},
               {"checksum", sha256_hex(payload)}};
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump() << '\n';
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw Error("cannot write cache entry " + tmp.string());
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot publish cache entry " + target.string());
  }
  ++writes_;
}

std::optional<AbelianGroupInvariants> ResultCache::load(const CacheKey& key) const {
  auto payload = load_payload(key);
  if (!payload) return std::nullopt;
  try {
    return deserialize_invariants(*payload);
  } catch (const ParseError&) {
    ++rejected_;
    return std::nullopt;
  }
}

void ResultCache::store(const CacheKey& key, const AbelianGroupInvariants& value) const {
  store_payload(key, serialize_invariants(value));
}

ResultCache::Stats ResultCache::stats() const {
  return {hits_.load(), misses_.load(), rejected_.load(), writes_.load()};
}

std::string serialize_invariants(const AbelianGroupInvariants& inv) {
  json t = json::array();
  for (const auto& x : inv.torsion()) t.push_back(to_string(x));
  return json{{"free_rank", inv.free_rank()}, {"torsion", t}}.dump();
}

AbelianGroupInvariants deserialize_invariants(const std::string& text) {
  try {
    const json j = json::parse(text);
    std::vector<BigInt> orders;
    for (const auto& x : j.at("torsion")) {
      BigInt v;
      if (v.set_str(x.get<std::string>(), 10) != 0 || v < 2) throw ParseError("bad torsion");
      orders.push_back(v);
    }
    auto inv = AbelianGroupInvariants::from_cyclic_orders(j.at("free_rank").get<std::size_t>(),
                                                          orders);
    if (inv.torsion() != orders) throw ParseError("torsion not canonical");
    return inv;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad invariants payload: ") + e.what());
  }
}

}  // namespace cohomex
