#pragma once

// Line-based object files. Blocks:
//
//   begin group <name>        begin hom <name> : <src> -> <dst>
//   order <n>                 map i->j i->j ...
//   table                     end
//   <n rows of n indices>
//   end
//
//   begin xmod <name>         begin gpgd <name>       begin subgpgd <name> : <gpgd>
//   top <group>               arrows <group>          arrows i j ...
//   base <group>              objects <group>         objects i j ...
//   alpha <hom>               d0 <hom>                end
//   action                    d1 <hom>
//   <|B| rows of |A| indices> eps <hom>
//   end                       end
//
// '#' starts a comment line. A group reference is a name defined earlier or
// a builtin spec such as z3 or s3*z2; xmod and gpgd references may also be
// builtin object specs (see resolve_gpgd, resolve_xmod).

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catgrp/bridge.hpp"

namespace catgrp {

class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& msg)
      : Error(file + ":" + std::to_string(line) + ": " + msg) {}
};

struct Workspace {
  Config cfg;
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, GroupHom> homs;
  std::map<std::string, CrossedModule> xmods;
  std::map<std::string, GroupGroupoid> gpgds;
  std::map<std::string, SubGroupGroupoid> subgpgds;

  bool has_name(const std::string& n) const {
    return groups.count(n) || homs.count(n) || xmods.count(n) || gpgds.count(n) ||
           subgpgds.count(n);
  }
};

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string w;
  while (is >> w) {
    out.push_back(w);
  }
  return out;
}

inline std::string lower(std::string s) {
  for (auto& c : s) {
    c = char(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

inline bool strip_prefix(std::string& s, std::string_view prefix) {
  if (lower(s).rfind(prefix, 0) == 0) {
    s = s.substr(prefix.size());
    return true;
  }
  return false;
}

inline std::vector<elem_t> parse_index_list(const std::string& s) {
  std::vector<elem_t> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty() || !std::all_of(cur.begin(), cur.end(),
                                      [](char d) { return std::isdigit(d); })) {
        throw PreconditionError("bad index list '" + s + "'");
      }
      out.push_back(elem_t(std::stoul(cur)));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

}  // namespace detail

inline FiniteGroup resolve_group(const Workspace& ws, const std::string& ref) {
  if (auto it = ws.groups.find(ref); it != ws.groups.end()) {
    return it->second;
  }
  try {
    return parse_group_spec(ref);
  } catch (const PreconditionError&) {
    throw PreconditionError("undefined group '" + ref + "'");
  }
}

// Names from the workspace, or:
//   incl:<group>:<i,j,...>  inclusion of the normal subgroup generated by i,j,...
//   inner:<group>           G -> Aut(G)
//   identity:<group>        G -> G with conjugation
//   trivial:<group>         1 -> G
//   phi:<gpgd>              the crossed module of a group-groupoid
inline CrossedModule resolve_xmod(const Workspace& ws, const std::string& ref);

// Names from the workspace, or pair:<group>, discrete:<group>, zero,
// psi:<xmod>, actor:<gpgd>.
inline GroupGroupoid resolve_gpgd(const Workspace& ws, const std::string& ref) {
  if (auto it = ws.gpgds.find(ref); it != ws.gpgds.end()) {
    return it->second;
  }
  std::string s = ref;
  if (detail::lower(s) == "zero" || s == "0") return zero_gpgd();
  if (detail::strip_prefix(s, "pair-gpgd:") || detail::strip_prefix(s, "pair:")) {
    return pair_gpgd(resolve_group(ws, s));
  }
  if (detail::strip_prefix(s, "discrete-gpgd:") || detail::strip_prefix(s, "discrete:")) {
    return discrete_gpgd(resolve_group(ws, s));
  }
  if (detail::strip_prefix(s, "psi:")) return psi_to_gpgd(resolve_xmod(ws, s), ws.cfg);
  if (detail::strip_prefix(s, "actor:")) return actor_gpgd(resolve_gpgd(ws, s), ws.cfg).gpgd;
  throw PreconditionError("undefined group-groupoid '" + ref + "'");
}

inline CrossedModule resolve_xmod(const Workspace& ws, const std::string& ref) {
  if (auto it = ws.xmods.find(ref); it != ws.xmods.end()) {
    return it->second;
  }
  std::string s = ref;
  if (detail::strip_prefix(s, "incl:")) {
    auto colon = s.rfind(':');
    if (colon == std::string::npos) {
      throw PreconditionError("incl spec needs incl:<group>:<generators>");
    }
    FiniteGroup g = resolve_group(ws, s.substr(0, colon));
    auto gens = detail::parse_index_list(s.substr(colon + 1));
    for (elem_t x : gens) {
      if (x >= g.order()) {
        throw PreconditionError("generator " + std::to_string(x) + " out of range");
      }
    }
    return xmod_from_normal_inclusion(g, Subgroup::generated(g, gens));
  }
  if (detail::strip_prefix(s, "inner:")) {
    return inner_automorphism_xmod(resolve_group(ws, s), ws.cfg);
  }
  if (detail::strip_prefix(s, "identity:")) return identity_xmod(resolve_group(ws, s));
  if (detail::strip_prefix(s, "trivial:")) return trivial_top_xmod(resolve_group(ws, s));
  if (detail::strip_prefix(s, "phi:")) return phi_to_xmod(resolve_gpgd(ws, s));
  throw PreconditionError("undefined crossed module '" + ref + "'");
}

inline GroupHom resolve_hom(const Workspace& ws, const std::string& ref) {
  if (auto it = ws.homs.find(ref); it != ws.homs.end()) {
    return it->second;
  }
  throw PreconditionError("undefined hom '" + ref + "'");
}

// Parses `text` (named `file` in messages) into `ws`. Every object is
// validated as soon as its block closes.
inline void parse_into(Workspace& ws, std::istream& in, const std::string& file) {
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) { throw ParseError(file, lineno, msg); };

  auto next_line = [&](std::vector<std::string>& words) {
    while (std::getline(in, raw)) {
      ++lineno;
      auto w = detail::split_words(raw);
      if (w.empty() || w[0][0] == '#') {
        continue;
      }
      words = std::move(w);
      return true;
    }
    return false;
  };
  auto expect_n = [&](const std::vector<std::string>& w, std::size_t n) {
    if (w.size() != n) {
      fail("expected " + std::to_string(n) + " fields, got " + std::to_string(w.size()));
    }
  };
  auto to_index = [&](const std::string& s) -> elem_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](char c) { return std::isdigit(c); })) {
      fail("expected a non-negative integer, got '" + s + "'");
    }
    return elem_t(std::stoul(s));
  };
  auto claim = [&](const std::string& name) {
    if (ws.has_name(name)) {
      fail("duplicate name '" + name + "'");
    }
  };
  // Runs f, turning library errors into located parse errors.
  auto located = [&](auto&& f) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const CapExceeded&) {
      throw;
    } catch (const InternalError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(file, lineno, e.what());
    }
  };

  std::vector<std::string> w;
  while (next_line(w)) {
    if (w[0] != "begin" || w.size() < 3) {
      fail("expected 'begin <kind> <name>'");
    }
    const std::string kind = w[1];
    const std::string name = w[2];
    claim(name);

    if (kind == "group") {
      expect_n(w, 3);
      std::size_t n = 0;
      std::vector<elem_t> table;
      bool have_order = false;
      while (true) {
        if (!next_line(w)) fail("unterminated group block");
        if (w[0] == "end") break;
        if (w[0] == "order") {
          expect_n(w, 2);
          n = to_index(w[1]);
          have_order = true;
        } else if (w[0] == "table") {
          if (!have_order) fail("'table' before 'order'");
          for (std::size_t r = 0; r < n; ++r) {
            if (!next_line(w)) fail("table ends early");
            expect_n(w, n);
            for (const auto& x : w) table.push_back(to_index(x));
          }
        } else {
          fail("unknown group field '" + w[0] + "'");
        }
      }
      ws.groups.emplace(name, located([&] {
                          return FiniteGroup::from_table(name, n, std::move(table));
                        }));
    } else if (kind == "hom") {
      if (w.size() != 7 || w[3] != ":" || w[5] != "->") {
        fail("expected 'begin hom <name> : <src> -> <dst>'");
      }
      FiniteGroup src = located([&] { return resolve_group(ws, w[4]); });
      FiniteGroup dst = located([&] { return resolve_group(ws, w[6]); });
      std::vector<elem_t> map(src.order(), detail::unset);
      while (true) {
        if (!next_line(w)) fail("unterminated hom block");
        if (w[0] == "end") break;
        if (w[0] != "map") fail("unknown hom field '" + w[0] + "'");
        for (std::size_t k = 1; k < w.size(); ++k) {
          auto arrow = w[k].find("->");
          if (arrow == std::string::npos) fail("expected i->j, got '" + w[k] + "'");
          elem_t i = to_index(w[k].substr(0, arrow));
          elem_t j = to_index(w[k].substr(arrow + 2));
          if (i >= map.size()) fail("source index " + std::to_string(i) + " out of range");
          if (map[i] != detail::unset) fail("index " + std::to_string(i) + " mapped twice");
          map[i] = j;
        }
      }
      for (elem_t i = 0; i < map.size(); ++i) {
        if (map[i] == detail::unset) fail("index " + std::to_string(i) + " is not mapped");
      }
      ws.homs.emplace(name, located([&] { return validate_hom(src, dst, map); }));
    } else if (kind == "xmod") {
      expect_n(w, 3);
      std::optional<FiniteGroup> top, base;
      std::optional<GroupHom> alpha;
      std::vector<elem_t> action;
      while (true) {
        if (!next_line(w)) fail("unterminated xmod block");
        if (w[0] == "end") break;
        if (w[0] == "top" || w[0] == "base") {
          expect_n(w, 2);
          auto g = located([&] { return resolve_group(ws, w[1]); });
          (w[0] == "top" ? top : base) = g;
        } else if (w[0] == "alpha") {
          expect_n(w, 2);
          alpha = located([&] { return resolve_hom(ws, w[1]); });
        } else if (w[0] == "action") {
          if (!top || !base) fail("'action' before 'top' and 'base'");
          for (std::size_t r = 0; r < base->order(); ++r) {
            if (!next_line(w)) fail("action table ends early");
            expect_n(w, top->order());
            for (const auto& x : w) action.push_back(to_index(x));
          }
        } else {
          fail("unknown xmod field '" + w[0] + "'");
        }
      }
      if (!top || !base || !alpha) fail("xmod block needs top, base and alpha");
      if (action.empty()) action = trivial_action(*top, *base);
      ws.xmods.emplace(name, located([&] {
                         return validate_xmod(*top, *base, *alpha, action, name);
                       }));
    } else if (kind == "gpgd") {
      expect_n(w, 3);
      std::optional<FiniteGroup> arrows, objects;
      std::map<std::string, GroupHom> maps;
      while (true) {
        if (!next_line(w)) fail("unterminated gpgd block");
        if (w[0] == "end") break;
        expect_n(w, 2);
        if (w[0] == "arrows") {
          arrows = located([&] { return resolve_group(ws, w[1]); });
        } else if (w[0] == "objects") {
          objects = located([&] { return resolve_group(ws, w[1]); });
        } else if (w[0] == "d0" || w[0] == "d1" || w[0] == "eps") {
          maps.insert_or_assign(w[0], located([&] { return resolve_hom(ws, w[1]); }));
        } else {
          fail("unknown gpgd field '" + w[0] + "'");
        }
      }
      if (!arrows || !objects || maps.size() != 3) {
        fail("gpgd block needs arrows, objects, d0, d1 and eps");
      }
      ws.gpgds.emplace(name, located([&] {
                         return validate_gpgd(*arrows, *objects, maps.at("d0"),
                                              maps.at("d1"), maps.at("eps"), name,
                                              ws.cfg);
                       }));
    } else if (kind == "subgpgd") {
      if (w.size() != 5 || w[3] != ":") fail("expected 'begin subgpgd <name> : <gpgd>'");
      GroupGroupoid parent = located([&] { return resolve_gpgd(ws, w[4]); });
      std::vector<elem_t> arrows{0}, objects{0};
      while (true) {
        if (!next_line(w)) fail("unterminated subgpgd block");
        if (w[0] == "end") break;
        if (w[0] != "arrows" && w[0] != "objects") {
          fail("unknown subgpgd field '" + w[0] + "'");
        }
        auto& dst = w[0] == "arrows" ? arrows : objects;
        for (std::size_t k = 1; k < w.size(); ++k) dst.push_back(to_index(w[k]));
      }
      ws.subgpgds.emplace(name, located([&] {
                            return make_subgpgd(
                                parent, Subgroup::make(parent.arrows(), arrows),
                                Subgroup::make(parent.objects(), objects));
                          }));
    } else {
      fail("unknown block kind '" + kind + "'");
    }
  }
}

inline Workspace parse_workspace(const std::vector<std::string>& files,
                                 const Config& cfg = {}) {
  Workspace ws;
  ws.cfg = cfg;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) {
      throw ParseError(f, 0, "cannot open file");
    }
    parse_into(ws, in, f);
  }
  return ws;
}

inline Workspace parse_workspace_text(const std::string& text,
                                      const std::string& file = "<text>",
                                      const Config& cfg = {}) {
  Workspace ws;
  ws.cfg = cfg;
  std::istringstream in(text);
  parse_into(ws, in, file);
  return ws;
}

inline void write_group(std::ostream& os, const std::string& name, const FiniteGroup& g) {
  std::size_t n = g.order();
  os << "begin group " << name << "\norder " << n << "\ntable\n";
  for (elem_t a = 0; a < n; ++a) {
    for (elem_t b = 0; b < n; ++b) {
      os << (b ? " " : "") << g.op(a, b);
    }
    os << "\n";
  }
  os << "end\n";
}

inline void write_hom(std::ostream& os, const std::string& name, const std::string& src,
                      const std::string& dst, const GroupHom& h) {
  os << "begin hom " << name << " : " << src << " -> " << dst << "\nmap";
  for (elem_t x = 0; x < h.src().order(); ++x) {
    os << " " << x << "->" << h(x);
  }
  os << "\nend\n";
}

// Self-contained: the arrow and object groups and the structural maps are
// written as their own blocks named <name>.G1, <name>.G0, <name>.d0, ...
inline void write_gpgd(std::ostream& os, const std::string& name, const GroupGroupoid& g) {
  std::string g1 = name + ".G1", g0 = name + ".G0";
  write_group(os, g1, g.arrows());
  write_group(os, g0, g.objects());
  write_hom(os, name + ".d0", g1, g0, g.d0());
  write_hom(os, name + ".d1", g1, g0, g.d1());
  write_hom(os, name + ".eps", g0, g1, g.eps());
  os << "begin gpgd " << name << "\narrows " << g1 << "\nobjects " << g0 << "\nd0 "
     << name << ".d0\nd1 " << name << ".d1\neps " << name << ".eps\nend\n";
}

inline void write_xmod(std::ostream& os, const std::string& name, const CrossedModule& x) {
  std::string a = name + ".A", b = name + ".B";
  write_group(os, a, x.top());
  write_group(os, b, x.base());
  write_hom(os, name + ".alpha", a, b, x.alpha());
  os << "begin xmod " << name << "\ntop " << a << "\nbase " << b << "\nalpha " << name
     << ".alpha\naction\n";
  for (elem_t y = 0; y < x.base().order(); ++y) {
    for (elem_t i = 0; i < x.top().order(); ++i) {
      os << (i ? " " : "") << x.act(y, i);
    }
    os << "\n";
  }
  os << "end\n";
}

}  // namespace catgrp
