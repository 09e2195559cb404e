#ifndef CURVECOUNT_COUNT_CACHE_HPP
#define CURVECOUNT_COUNT_CACHE_HPP

#include <array>
#include <map>
#include <optional>
#include <string_view>

#include "curvecount/rational.hpp"

namespace curvecount {

enum class CountFamily { genus0, genus2, w11, w13, tacnodal };

inline constexpr std::array<CountFamily, 5> kCountFamilies = {
    CountFamily::genus0, CountFamily::genus2, CountFamily::w11,
    CountFamily::w13, CountFamily::tacnodal};

const char* family_name(CountFamily family);
std::optional<CountFamily> family_from_name(std::string_view name);

// Per-family memo of computed counts. Entries are immutable once written;
// the genus0 family additionally keeps a bottom-up fill discipline: degree d
// may be stored only when degrees 1..d-1 are already present.
class CountCache {
 public:
  const Integer* find(CountFamily family, int degree) const;
  bool contains(CountFamily family, int degree) const {
    return find(family, degree) != nullptr;
  }

  // Rejects degree < 1, genus0 gaps, and rewrites with a different value.
  // Re-storing an identical value is a no-op.
  void store(CountFamily family, int degree, Integer value);

  const std::map<int, Integer>& entries(CountFamily family) const;
  bool empty() const;

 private:
  std::array<std::map<int, Integer>, kCountFamilies.size()> tables_;
};

}  // namespace curvecount

#endif  // CURVECOUNT_COUNT_CACHE_HPP
