#include "curvecount/cache_io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace curvecount {

namespace {

bool canonical_degree_key(const std::string& s) {
  if (s.empty() || s[0] == '0') return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool canonical_decimal_integer(const std::string& s) {
  std::size_t i = s.size() > 1 && s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  if (s[i] == '0' && s.size() > i + 1) return false;  // no leading zeros
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return s != "-0";
}

}  // namespace

void save_cache(const CountCache& cache, std::ostream& out) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (CountFamily family : kCountFamilies) {
    const auto& entries = cache.entries(family);
    if (entries.empty()) continue;
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (const auto& [degree, value] : entries)
      table[std::to_string(degree)] = value.get_str();
    j[family_name(family)] = std::move(table);
  }
  out << j.dump(2) << '\n';
}

void save_cache(const CountCache& cache, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw CacheIoError("cannot open cache file for writing: " + path.string());
  save_cache(cache, out);
  if (!out.flush())
    throw CacheIoError("error writing cache file: " + path.string());
}

CountCache load_cache(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CacheIoError(std::string("cache file is not valid JSON: ") +
                       e.what());
  }
  if (!j.is_object())
    throw CacheIoError("cache file must hold a JSON object of families");

  CountCache cache;
  for (const auto& [key, table] : j.items()) {
    auto family = family_from_name(key);
    if (!family) throw CacheIoError("unknown cache family \"" + key + "\"");
    if (!table.is_object())
      throw CacheIoError("cache family \"" + key + "\" must be an object");

    std::map<int, Integer> parsed;
    for (const auto& [degree_key, value] : table.items()) {
      const std::string where = key + "." + degree_key;
      if (!canonical_degree_key(degree_key))
        throw CacheIoError("bad degree key \"" + where +
                           "\": expected a positive decimal integer");
      if (!value.is_string() ||
          !canonical_decimal_integer(value.get<std::string>()))
        throw CacheIoError("bad value at \"" + where +
                           "\": expected a decimal integer string");
      int degree = 0;
      try {
        degree = std::stoi(degree_key);
      } catch (const std::out_of_range&) {
        throw CacheIoError("degree key \"" + where + "\" is out of range");
      }
      parsed.emplace(degree, Integer(value.get<std::string>(), 10));
    }
    // Partial families are fine, but genus0 must still be gap-free from 1.
    if (*family == CountFamily::genus0) {
      int expected = 1;
      for (const auto& [degree, value] : parsed) {
        if (degree != expected)
          throw CacheIoError("genus0 cache has entry at degree " +
                             std::to_string(degree) + " but none at " +
                             std::to_string(expected));
        ++expected;
      }
    }
    for (auto& [degree, value] : parsed)
      cache.store(*family, degree, std::move(value));
  }
  return cache;
}

CountCache load_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw CacheIoError("cannot open cache file: " + path.string());
  return load_cache(in);
}

}  // namespace curvecount
