#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "autgraph/family.hpp"
#include "autgraph/io.hpp"
#include "autgraph/recursion.hpp"

namespace autgraph {

inline constexpr int cache_format_version = 1;

inline json to_json(const BetaKey& key) {
  return {{"family", std::string(family_name(key.family))}, {"j", key.j},
          {"n", key.n}, {"k", key.k}, {"s", key.s},
          {"min_block_n", key.limits.min_block_n}, {"min_block_k", key.limits.min_block_k}};
}

/// One JSON file per key:
/// {"format_version": 1, "key": {...}, "terms": [{graph..., "coefficient", "key"}, ...]}
class DirectoryCache final : public BetaStore {
 public:
  explicit DirectoryCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  std::filesystem::path path_for(const BetaKey& key) const { return dir_ / (key.describe() + ".json"); }

  std::optional<LinearCombination> load(const BetaKey& key) override {
    const auto path = path_for(key);
    if (!std::filesystem::exists(path)) return std::nullopt;
    std::ifstream in(path);
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw std::runtime_error("cache file " + path.string() + " is not valid JSON: " + e.what());
    }
    if (!doc.contains("format_version"))
      throw std::runtime_error("cache file " + path.string() + " has no format_version");
    if (doc.at("format_version").get<int>() != cache_format_version)
      throw std::runtime_error("cache file " + path.string() + " has unsupported format_version " +
                               doc.at("format_version").dump());
    if (doc.at("key") != to_json(key)) throw std::runtime_error("cache file " + path.string() + " holds another key");
    return linear_combination_from_json(doc.at("terms"));
  }

  void save(const BetaKey& key, const LinearCombination& value) override {
    const auto path = path_for(key);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      json doc = {{"format_version", cache_format_version}, {"key", to_json(key)}, {"terms", to_json(value)}};
      out << doc.dump(1) << "\n";
      if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    }
    std::filesystem::rename(tmp, path);
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace autgraph
