#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "topo/util.hpp"

namespace topo {

// Permutation of the vertex labels {0,1,2,3} of a tetrahedron.
struct Perm4 {
  std::array<uint8_t, 4> img{0, 1, 2, 3};

  static Perm4 identity() { return Perm4{}; }

  int operator()(int v) const { return img[v]; }

  bool is_valid() const {
    int seen = 0;
    for (int v : img) {
      if (v < 0 || v > 3) return false;
      seen |= 1 << v;
    }
    return seen == 0xF;
  }

  Perm4 inverse() const {
    Perm4 p;
    for (int v = 0; v < 4; ++v) p.img[img[v]] = static_cast<uint8_t>(v);
    return p;
  }

  // (a * b)(v) = a(b(v))
  friend Perm4 operator*(const Perm4& a, const Perm4& b) {
    Perm4 p;
    for (int v = 0; v < 4; ++v) p.img[v] = a.img[b.img[v]];
    return p;
  }

  friend bool operator==(const Perm4&, const Perm4&) = default;

  bool is_identity() const { return *this == Perm4{}; }

  // Four digits, images of labels 0,1,2,3.
  std::string str() const {
    std::string s(4, '0');
    for (int v = 0; v < 4; ++v) s[v] = static_cast<char>('0' + img[v]);
    return s;
  }

  static Perm4 parse(const std::string& s) {
    if (s.size() != 4) throw Error("permutation must be 4 digits: '" + s + "'");
    Perm4 p;
    for (int v = 0; v < 4; ++v) {
      if (s[v] < '0' || s[v] > '3')
        throw Error("permutation digit out of range: '" + s + "'");
      p.img[v] = static_cast<uint8_t>(s[v] - '0');
    }
    if (!p.is_valid()) throw Error("permutation is not a bijection: '" + s + "'");
    return p;
  }
};

}  // namespace topo
