#ifndef CURVECOUNT_CACHE_IO_HPP
#define CURVECOUNT_CACHE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "curvecount/count_cache.hpp"

namespace curvecount {

class CacheIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON cache file: one object per family, degrees as keys, values as
// exact decimal strings, e.g. {"genus0": {"1": "1", "2": "1", "3": "12"}}.
// Saving then loading reproduces the cache exactly.
void save_cache(const CountCache& cache, std::ostream& out);
void save_cache(const CountCache& cache, const std::filesystem::path& path);

// Strict load: unknown families, non-canonical degree keys, non-decimal
// values, and genus0 gaps are all rejected with the offending key named.
CountCache load_cache(std::istream& in);
CountCache load_cache(const std::filesystem::path& path);

}  // namespace curvecount

#endif  // CURVECOUNT_CACHE_IO_HPP
