#pragma once

#include "ginv/inverse.hpp"
#include "ginv/json_io.hpp"
#include "ginv/ring.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ginv::test {

// Unwrap a Result or throw; a stray GinvError fails the enclosing test case
// with its message, which is exactly what we want in tests.
template <class T>
T take(Result<T> r) {
  if (!r.ok()) throw GinvError(r.failure());
  return std::move(r).take();
}

inline RingPtr ring(const std::string& descriptor) { return take(Ring::make(descriptor)); }

inline Element el(const RingPtr& r, std::int64_t v) { return take(r->from_integer(v)); }

inline Element mat(const RingPtr& r, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<Rational>> entries;
  for (const auto& row : rows) {
    entries.emplace_back();
    for (std::int64_t v : row) entries.back().emplace_back(v);
  }
  return take(r->from_entries(entries));
}

inline Element matq(const RingPtr& r, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> entries;
  for (const auto& row : rows) {
    entries.emplace_back();
    for (const char* v : row) entries.back().emplace_back(rational_from_string(v).value());
  }
  return take(r->from_entries(entries));
}

inline std::vector<Element> all_elements(const RingPtr& r) {
  std::vector<Element> out;
  const std::uint64_t n = r->size().value();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(r->element_at(i));
  return out;
}

inline Err code_of(const Failure& f) { return f.code; }

}  // namespace ginv::test
