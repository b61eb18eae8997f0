#include "aeplab/integrate/state.hpp"

#include <cmath>
#include <stdexcept>

namespace aeplab::integrate {

State::State(const fields::Grid& g, const std::vector<BlockSpec>& blocks)
    : grid_(&g) {
  names_.reserve(blocks.size());
  fields_.reserve(blocks.size());
  for (const BlockSpec& b : blocks) {
    names_.push_back(b.name);
    fields_.emplace_back(g, b.ncomp);
  }
}

int State::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

fields::Field& State::block(std::string_view name) {
  const int i = find(name);
  if (i < 0) throw std::out_of_range("no state block " + std::string(name));
  return fields_[static_cast<std::size_t>(i)];
}

const fields::Field& State::block(std::string_view name) const {
  const int i = find(name);
  if (i < 0) throw std::out_of_range("no state block " + std::string(name));
  return fields_[static_cast<std::size_t>(i)];
}

void State::set_zero() {
  for (fields::Field& f : fields_) f.set_zero();
}

void State::add_scaled(const State& o, double a) {
  for (std::size_t i = 0; i < fields_.size(); ++i)
    fields_[i].data() += a * o.fields_[i].data();
}

State& State::operator+=(const State& o) {
  add_scaled(o, 1.0);
  return *this;
}

State& State::operator*=(double a) {
  for (fields::Field& f : fields_) f *= a;
  return *this;
}

std::string State::first_nonfinite() const {
  for (std::size_t i = 0; i < fields_.size(); ++i)
    if (!fields_[i].data().isFinite().all()) return names_[i];
  return {};
}

} // namespace aeplab::integrate
