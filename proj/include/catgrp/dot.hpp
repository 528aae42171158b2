#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "catgrp/gpgd.hpp"

namespace catgrp {

// One node per object and one edge per arrow, labelled by arrow index.
// Identity arrows are left out unless `include_identities` is set.
inline void write_dot(std::ostream& os, const GroupGroupoid& g,
                      bool include_identities = false) {
  os << "digraph \"" << g.name() << "\" {\n";
  for (elem_t x = 0; x < g.objects().order(); ++x) {
    os << "  " << x << ";\n";
  }
  for (elem_t a = 0; a < g.arrows().order(); ++a) {
    if (!include_identities && g.is_identity_arrow(a)) {
      continue;
    }
    os << "  " << g.source(a) << " -> " << g.target(a) << " [label=\"" << a << "\"];\n";
  }
  os << "}\n";
}

inline std::string dot_string(const GroupGroupoid& g, bool include_identities = false) {
  std::ostringstream os;
  write_dot(os, g, include_identities);
  return os.str();
}

inline void export_dot(const GroupGroupoid& g, const std::string& path,
                       bool include_identities = false) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw PreconditionError("cannot write '" + path + "'");
  }
  write_dot(out, g, include_identities);
  if (!out) {
    throw PreconditionError("write to '" + path + "' failed");
  }
}

}  // namespace catgrp
