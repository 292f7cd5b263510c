#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace congen {

// Number of cells in a table of the given arity over a universe of
// `size` elements, i.e. size^arity. Throws if the result would not fit
// in a signed 64-bit count.
long long table_cells(int size, int arity);

// A finitary function on the universe {0,...,size-1} stored as a flat
// value table. Cells are indexed row-major: for arity k, the tuple
// (x1,...,xk) lives at ((x1*size + x2)*size + ...)*size + xk, so for a
// binary table values[i*size + j] = f(i,j). A nullary function is a
// single cell.
struct FnTable {
  int arity = 0;
  int size = 0;
  std::vector<int> values;

  FnTable() = default;
  FnTable(int arity, int size, std::vector<int> values);

  int eval(std::span<const int> args) const;
  int eval(std::initializer_list<int> args) const;

  static FnTable identity(int size);
  static FnTable projection(int size, int arity, int pos);
  static FnTable constant(int size, int arity, int value);

  bool operator==(const FnTable& other) const = default;
};

// Row-major index of a tuple; inverse of tuple_of_index.
long long index_of_tuple(std::span<const int> tuple, int size);
std::vector<int> tuple_of_index(long long index, int size, int arity);

// Advances a tuple over {0..size-1}^k in row-major order; returns false
// after the last tuple.
bool next_tuple(std::vector<int>& tuple, int size);

struct FnTableHash {
  std::size_t operator()(const FnTable& t) const;
};

std::string to_string(const FnTable& t);

}  // namespace congen
