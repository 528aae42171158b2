#pragma once

// Named groups with canonical element orderings.
//
//   cyclic n     residues 0..n-1
//   dihedral n   order 2n; r^k s^e has index k + n*e
//   symmetric n  permutations of {0..n-1} in lexicographic rank, composed
//                as (p+q)(i) = p(q(i)); the identity has rank 0
//   klein4       Z2 x Z2, index 2a + b

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "catgrp/group.hpp"

namespace catgrp {

inline FiniteGroup cyclic(std::size_t n) {
  if (n == 0) {
    throw PreconditionError("cyclic group of order 0");
  }
  std::vector<elem_t> t(n * n);
  for (elem_t i = 0; i < n; ++i) {
    for (elem_t j = 0; j < n; ++j) {
      t[i * n + j] = elem_t((i + j) % n);
    }
  }
  return FiniteGroup::from_table("Z" + std::to_string(n), n, std::move(t));
}

inline FiniteGroup trivial_group() { return cyclic(1).renamed("1"); }

inline FiniteGroup dihedral(std::size_t n) {
  if (n == 0) {
    throw PreconditionError("dihedral group D0");
  }
  std::size_t k = 2 * n;
  std::vector<elem_t> t(k * k);
  for (elem_t a = 0; a < k; ++a) {
    for (elem_t b = 0; b < k; ++b) {
      std::size_t ra = a % n, ea = a / n, rb = b % n, eb = b / n;
      std::size_t r = ea ? (ra + n - rb) % n : (ra + rb) % n;
      t[a * k + b] = elem_t(r + n * ((ea + eb) % 2));
    }
  }
  return FiniteGroup::from_table("D" + std::to_string(n), k, std::move(t));
}

inline FiniteGroup symmetric(std::size_t n) {
  if (n == 0 || n > 6) {
    throw PreconditionError("symmetric group degree must be in 1..6");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return detail::group_from_elements(
      "S" + std::to_string(n), perms,
      [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          c[i] = a[b[i]];
        }
        return c;
      });
}

inline FiniteGroup klein4() {
  return direct_product(cyclic(2), cyclic(2), "K4");
}

namespace detail {

inline std::size_t parse_size(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return std::isdigit(c); })) {
    throw PreconditionError("bad group spec '" + std::string(whole) + "'");
  }
  return std::stoul(std::string(s));
}

inline FiniteGroup parse_single_group(std::string_view s) {
  std::string low(s);
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  auto arg = [&](std::string_view prefix) {
    return parse_size(std::string_view(low).substr(prefix.size()), s);
  };
  auto starts = [&](std::string_view prefix) {
    return low.rfind(prefix, 0) == 0;
  };
  if (low == "trivial" || low == "1") return trivial_group();
  if (low == "klein4" || low == "k4") return klein4();
  if (starts("cyclic:")) return cyclic(arg("cyclic:"));
  if (starts("dihedral:")) return dihedral(arg("dihedral:"));
  if (starts("symmetric:")) return symmetric(arg("symmetric:"));
  if (starts("z")) return cyclic(arg("z"));
  if (starts("c")) return cyclic(arg("c"));
  if (starts("d")) return dihedral(arg("d"));
  if (starts("s")) return symmetric(arg("s"));
  throw PreconditionError("unknown group spec '" + std::string(s) + "'");
}

}  // namespace detail

// "cyclic:4", "z4", "dihedral:3", "s3", "klein4", "trivial", and direct
// products joined by '*' ("z2*z4").
inline FiniteGroup parse_group_spec(std::string_view spec) {
  std::size_t pos = spec.find('*');
  if (pos == std::string_view::npos) {
    return detail::parse_single_group(spec);
  }
  FiniteGroup acc = detail::parse_single_group(spec.substr(0, pos));
  while (pos != std::string_view::npos) {
    std::size_t next = spec.find('*', pos + 1);
    acc = direct_product(acc, detail::parse_single_group(
                                  spec.substr(pos + 1, next - pos - 1)));
    pos = next;
  }
  return acc;
}

}  // namespace catgrp
