#include "curvecount/count_cache.hpp"

#include <stdexcept>
#include <string>

namespace curvecount {

namespace {

std::size_t index_of(CountFamily family) {
  return static_cast<std::size_t>(family);
}

}  // namespace

const char* family_name(CountFamily family) {
  switch (family) {
    case CountFamily::genus0:   return "genus0";
    case CountFamily::genus2:   return "genus2";
    case CountFamily::w11:      return "w11";
    case CountFamily::w13:      return "w13";
    case CountFamily::tacnodal: return "tacnodal";
  }
  throw std::logic_error("family_name: bad enum value");
}

std::optional<CountFamily> family_from_name(std::string_view name) {
  for (CountFamily family : kCountFamilies)
    if (name == family_name(family)) return family;
  return std::nullopt;
}

const Integer* CountCache::find(CountFamily family, int degree) const {
  const auto& table = tables_[index_of(family)];
  auto it = table.find(degree);
  return it == table.end() ? nullptr : &it->second;
}

void CountCache::store(CountFamily family, int degree, Integer value) {
  if (degree < 1)
    throw std::invalid_argument("CountCache::store: degree must be >= 1");
  auto& table = tables_[index_of(family)];
  auto it = table.find(degree);
  if (it != table.end()) {
    if (it->second != value)
      throw std::logic_error(
          std::string("CountCache::store: entry ") + family_name(family) +
          "/" + std::to_string(degree) + " is immutable (" +
          it->second.get_str() + " vs " + value.get_str() + ")");
    return;
  }
  if (family == CountFamily::genus0 && degree > 1 &&
      table.find(degree - 1) == table.end())
    throw std::logic_error(
        "CountCache::store: genus0 entries fill bottom-up; degree " +
        std::to_string(degree) + " stored before " +
        std::to_string(degree - 1));
  table.emplace(degree, std::move(value));
}

const std::map<int, Integer>& CountCache::entries(CountFamily family) const {
  return tables_[index_of(family)];
}

bool CountCache::empty() const {
  for (const auto& table : tables_)
    if (!table.empty()) return false;
  return true;
}

}  // namespace curvecount
