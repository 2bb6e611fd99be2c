#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gssa {

/// Set of vertex ids (0-based), packed into one machine word.
/// Graphs are capped at 64 vertices so every set fits in a uint64_t and
/// the GF(2) algebra below stays single-word.
///
/// Brace-init lists enumerate vertex ids; raw masks go through from_bits()
/// so the two constructions can never be confused.
struct VertexSet {
  std::uint64_t bits = 0;

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) bits |= std::uint64_t{1} << v;
  }

  static VertexSet from_bits(std::uint64_t b) {
    VertexSet s;
    s.bits = b;
    return s;
  }
  static VertexSet single(int v) { return from_bits(std::uint64_t{1} << v); }
  static VertexSet full(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet from_vector(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  bool contains(int v) const { return (bits >> v) & 1; }
  void add(int v) { bits |= std::uint64_t{1} << v; }
  void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
  void toggle(int v) { bits ^= std::uint64_t{1} << v; }

  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  int lowest() const { return std::countr_zero(bits); }

  bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }
  bool intersects(VertexSet other) const { return (bits & other.bits) != 0; }

  /// |this ∩ other| mod 2 — the workhorse of every GF(2) criterion here.
  bool odd_overlap(VertexSet other) const {
    return std::popcount(bits & other.bits) & 1;
  }

  VertexSet operator|(VertexSet o) const { return from_bits(bits | o.bits); }
  VertexSet operator&(VertexSet o) const { return from_bits(bits & o.bits); }
  VertexSet operator^(VertexSet o) const { return from_bits(bits ^ o.bits); }
  VertexSet minus(VertexSet o) const { return from_bits(bits & ~o.bits); }
  VertexSet complement_in(int n) const { return from_bits(~bits & full(n).bits); }

  bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    std::uint64_t b = bits;
    while (b) {
      out.push_back(std::countr_zero(b));
      b &= b - 1;
    }
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int v : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }
};

}  // namespace gssa
