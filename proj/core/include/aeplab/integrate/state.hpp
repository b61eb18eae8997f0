#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aeplab/fields/field.hpp"

namespace aeplab::integrate {

struct BlockSpec {
  std::string name;
  int ncomp = 1;
};

/// Dynamical state: a fixed set of named grid fields sharing one grid.
/// Supports the vector-space operations the time steppers need; block
/// meaning is owned by the system that declared the layout.
class State {
public:
  State() = default;
  State(const fields::Grid& g, const std::vector<BlockSpec>& blocks);

  const fields::Grid& grid() const { return *grid_; }
  int nblocks() const { return static_cast<int>(fields_.size()); }
  const std::string& name(int b) const {
    return names_[static_cast<std::size_t>(b)];
  }

  fields::Field& block(int b) { return fields_[static_cast<std::size_t>(b)]; }
  const fields::Field& block(int b) const {
    return fields_[static_cast<std::size_t>(b)];
  }

  /// Index of the named block, -1 when absent.
  int find(std::string_view name) const;
  bool has(std::string_view name) const { return find(name) >= 0; }
  fields::Field& block(std::string_view name);
  const fields::Field& block(std::string_view name) const;

  void set_zero();
  /// this += a * o, blockwise.
  void add_scaled(const State& o, double a);
  State& operator+=(const State& o);
  State& operator*=(double a);

  /// Name of the first block holding a NaN or infinity, empty when clean.
  std::string first_nonfinite() const;

private:
  const fields::Grid* grid_ = nullptr;
  std::vector<std::string> names_;
  std::vector<fields::Field> fields_;
};

} // namespace aeplab::integrate
