#include "hlpoly/stirling.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace hlpoly {

namespace {

const BigInt& zero() {
  static const BigInt z(0);
  return z;
}

struct Cache {
  std::mutex mutex;
  std::shared_ptr<const StirlingTable> table;
};

Cache& cache_for(StirlingKind kind) {
  static Cache first;
  static Cache second;
  return kind == StirlingKind::first_unsigned ? first : second;
}

}  // namespace

StirlingTable::StirlingTable(StirlingKind kind, int max_n) : kind_(kind) {
  if (max_n < 0) throw std::invalid_argument("negative Stirling table size");
  rows_.push_back({BigInt(1)});
  extend_to(max_n);
}

void StirlingTable::extend_to(int max_n) {
  rows_.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = static_cast<int>(rows_.size()) - 1; n < max_n; ++n) {
    const auto& prev = rows_[static_cast<std::size_t>(n)];
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 2);
    for (int m = 1; m <= n + 1; ++m) {
      BigInt same_m = m <= n ? prev[static_cast<std::size_t>(m)] : BigInt(0);
      unsigned long factor = kind_ == StirlingKind::first_unsigned ? static_cast<unsigned long>(n)
                                                                   : static_cast<unsigned long>(m);
      next[static_cast<std::size_t>(m)] = prev[static_cast<std::size_t>(m - 1)] + factor * same_m;
    }
    rows_.push_back(std::move(next));
  }
}

const BigInt& StirlingTable::entry(int n, int m) const {
  if (n < 0 || m < 0 || m > n) return zero();
  if (n > max_n()) {
    throw std::out_of_range("Stirling row " + std::to_string(n) + " beyond table size " +
                            std::to_string(max_n()));
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

StirlingTable StirlingTable::grown(int new_max_n) const {
  StirlingTable copy(kind_, rows_);
  copy.extend_to(new_max_n);
  return copy;
}

std::shared_ptr<const StirlingTable> stirling_table(StirlingKind kind, int min_n) {
  Cache& cache = cache_for(kind);
  std::lock_guard lock(cache.mutex);
  if (!cache.table) {
    cache.table = std::make_shared<const StirlingTable>(kind, std::max(min_n, 32));
  } else if (cache.table->max_n() < min_n) {
    int target = std::max(min_n, 2 * cache.table->max_n());
    cache.table = std::make_shared<const StirlingTable>(cache.table->grown(target));
  }
  return cache.table;
}

BigInt stirling1_unsigned(int n, int m) {
  if (n < 0 || m < 0 || m > n) return 0;
  return stirling_table(StirlingKind::first_unsigned, n)->entry(n, m);
}

BigInt stirling2(int n, int m) {
  if (n < 0 || m < 0 || m > n) return 0;
  return stirling_table(StirlingKind::second, n)->entry(n, m);
}

}  // namespace hlpoly
