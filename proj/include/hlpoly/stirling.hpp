#pragma once

#include <memory>
#include <vector>

#include "hlpoly/exact.hpp"

namespace hlpoly {

enum class StirlingKind { first_unsigned, second };

/// Dense lower triangle of unsigned Stirling numbers, rows 0..max_n.
///
/// first_unsigned: [n+1, m] = [n, m-1] + n * [n, m]
/// second:         {n+1, m} = {n, m-1} + m * {n, m}
///
/// A table never changes after construction; grown() returns a new one.
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, int max_n);

  StirlingKind kind() const { return kind_; }
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  /// Zero outside 0 <= m <= n. Throws std::out_of_range for n > max_n().
  const BigInt& entry(int n, int m) const;

  StirlingTable grown(int new_max_n) const;

 private:
  StirlingTable(StirlingKind kind, std::vector<std::vector<BigInt>> rows)
      : kind_(kind), rows_(std::move(rows)) {}
  void extend_to(int max_n);

  StirlingKind kind_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Process-wide memoized table covering at least rows 0..min_n.
/// Capacity grows geometrically; returned snapshots stay valid after growth.
std::shared_ptr<const StirlingTable> stirling_table(StirlingKind kind, int min_n);

/// Unsigned Stirling number of the first kind [n m]; 0 when out of range.
BigInt stirling1_unsigned(int n, int m);

/// Stirling number of the second kind {n m}; 0 when out of range.
BigInt stirling2(int n, int m);

}  // namespace hlpoly
