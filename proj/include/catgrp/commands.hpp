#pragma once

// The batch commands behind the command-line tool. Each command produces an
// ordered list of key/value records ending in a verdict; the same records
// render either as "key: value" lines or as one JSON object per line.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catgrp/actions.hpp"
#include "catgrp/dot.hpp"
#include "catgrp/text_format.hpp"

namespace catgrp {

using json = nlohmann::ordered_json;

struct Record {
  std::string key;
  json value;
};

struct CommandOptions {
  std::size_t max_steps = 3;
  bool include_identities = false;
  std::string out;  // optional text-format output for constructions
};

struct CommandResult {
  std::string command;
  std::vector<Record> records;
  bool pass = true;

  void add(std::string key, json value) {
    records.push_back({std::move(key), std::move(value)});
  }
};

namespace detail {

inline std::string render_value(const json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& e = v[i];
      s += (i ? " " : "") + (e.is_array() ? "[" + render_value(e) + "]" : render_value(e));
    }
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (auto it = v.begin(); it != v.end(); ++it) {
      const auto& e = it.value();
      s += (s.empty() ? "" : " ") + it.key() + "=" +
           (e.is_array() ? "[" + render_value(e) + "]" : render_value(e));
    }
    return s;
  }
  return v.dump();
}

inline json map_of(const GroupHom& h) { return h.map(); }

inline void add_gpgd_summary(CommandResult& r, const std::string& prefix,
                             const GroupGroupoid& g) {
  r.add(prefix + "arrows order", g.arrows().order());
  r.add(prefix + "objects order", g.objects().order());
}

inline void write_out(const CommandOptions& opt, const auto& writer) {
  if (opt.out.empty()) {
    return;
  }
  std::ofstream os(opt.out, std::ios::binary);
  if (!os) {
    throw PreconditionError("cannot write '" + opt.out + "'");
  }
  writer(os);
}

inline void add_report(CommandResult& r, const BridgeReport& rep) {
  r.add("check", to_string(rep.kind));
  for (const auto& d : rep.diagnostics) {
    r.add("diagnostic", d);
  }
  if (rep.gpgd_witness) {
    r.add("witness f1", map_of(rep.gpgd_witness->f1));
    r.add("witness f0", map_of(rep.gpgd_witness->f0));
  }
  if (rep.xmod_witness) {
    r.add("witness fA", map_of(rep.xmod_witness->fA));
    r.add("witness fB", map_of(rep.xmod_witness->fB));
  }
  r.pass = r.pass && rep.pass;
}

inline bool names_xmod(const Workspace& ws, const std::string& ref) {
  if (ws.xmods.count(ref)) return true;
  if (ws.gpgds.count(ref)) return false;
  try {
    resolve_xmod(ws, ref);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

inline SubGroupGroupoid resolve_sub(const Workspace& ws, const GroupGroupoid& g,
                                    const std::string& ref) {
  if (auto it = ws.subgpgds.find(ref); it != ws.subgpgds.end()) {
    if (!(it->second.parent == g)) {
      throw PreconditionError("'" + ref + "' is not a subgroup-groupoid of " + g.name());
    }
    return it->second;
  }
  if (ref == "derived") return derived_subgpgd(g);
  if (ref == "center") return center_gpgd(g);
  if (ref == "zero") return zero_subgpgd(g);
  if (ref == "whole") return whole_subgpgd(g);
  throw PreconditionError("undefined subgroup-groupoid '" + ref + "'");
}

inline void need_args(const std::vector<std::string>& args, std::size_t n,
                      const char* usage) {
  if (args.size() != n) {
    throw PreconditionError(std::string("usage: ") + usage);
  }
}

}  // namespace detail

inline CommandResult run_command(const Workspace& ws, const std::vector<std::string>& args,
                                 const CommandOptions& opt = {}) {
  if (args.empty()) {
    throw PreconditionError("no command given");
  }
  const Config& cfg = ws.cfg;
  CommandResult r;
  r.command = args[0];
  const std::string& cmd = args[0];

  if (cmd == "verify") {
    detail::need_args(args, 2, "verify <name>");
    const auto& n = args[1];
    if (auto it = ws.groups.find(n); it != ws.groups.end()) {
      r.add("kind", "group");
      r.add("order", it->second.order());
    } else if (auto h = ws.homs.find(n); h != ws.homs.end()) {
      r.add("kind", "hom");
      validate_hom(h->second.src(), h->second.dst(), h->second.map());
      r.add("map", detail::map_of(h->second));
    } else if (auto s = ws.subgpgds.find(n); s != ws.subgpgds.end()) {
      const auto& sub = s->second;
      make_subgpgd(sub.parent, sub.arrows, sub.objects);
      r.add("kind", "subgpgd");
      r.add("arrows", sub.arrows.members());
      r.add("objects", sub.objects.members());
      r.add("normal", sub.normal);
    } else if (detail::names_xmod(ws, n)) {
      auto x = resolve_xmod(ws, n);
      validate_xmod(x.top(), x.base(), x.alpha(), x.action(), x.name());
      r.add("kind", "xmod");
      r.add("top order", x.top().order());
      r.add("base order", x.base().order());
    } else if (ws.gpgds.count(n) || !ws.has_name(n)) {
      GroupGroupoid g;
      try {
        g = resolve_gpgd(ws, n);
      } catch (const PreconditionError&) {
        auto grp = resolve_group(ws, n);
        r.add("kind", "group");
        r.add("order", grp.order());
        r.add("valid", true);
        r.add("verdict", "pass");
        return r;
      }
      validate_gpgd(g.arrows(), g.objects(), g.d0(), g.d1(), g.eps(), g.name(), cfg);
      r.add("kind", "gpgd");
      detail::add_gpgd_summary(r, "", g);
    }
    r.add("valid", true);
  } else if (cmd == "derivations") {
    detail::need_args(args, 2, "derivations <xmod>");
    auto x = resolve_xmod(ws, args[1]);
    auto ders = derivations(x, cfg);
    auto rd = regular_derivations(x, cfg);
    r.add("derivations", ders.size());
    for (std::size_t i = 0; i < ders.size(); ++i) {
      bool reg = rd.index.count(ders[i].map) > 0;
      r.add("d" + std::to_string(i), json{{"map", ders[i].map}, {"regular", reg}});
    }
    r.add("RD order", rd.elements.size());
  } else if (cmd == "actor") {
    detail::need_args(args, 2, "actor <xmod|gpgd>");
    if (detail::names_xmod(ws, args[1])) {
      auto a = actor_xmod(resolve_xmod(ws, args[1]), cfg);
      r.add("RD order", a.rd.elements.size());
      r.add("Aut order", a.aut.elements.size());
      r.add("Delta injective", a.delta_injective());
    } else {
      auto a = actor_gpgd(resolve_gpgd(ws, args[1]), cfg);
      r.add("W order", a.w.elements.size());
      r.add("Aut order", a.aut().elements.size());
      r.add("actor valid", true);
    }
  } else if (cmd == "center") {
    detail::need_args(args, 2, "center <gpgd>");
    auto g = resolve_gpgd(ws, args[1]);
    auto z = center_gpgd(g);
    auto c = center_conditions(g);
    r.add("center arrows", z.arrows.members());
    r.add("center objects", z.objects.members());
    r.add("abelian", is_abelian(g));
    r.add("element conditions agree", c.arrows_agree && c.objects_agree);
    if (!c.arrows_agree) {
      r.add("arrows commuting with all identities", c.arrows);
    }
  } else if (cmd == "abelianization") {
    detail::need_args(args, 2, "abelianization <gpgd>");
    auto g = resolve_gpgd(ws, args[1]);
    auto q = abelianization(g, cfg);
    detail::add_gpgd_summary(r, "", q.gpgd);
    r.add("abelian", is_abelian(q.gpgd));
    detail::write_out(opt, [&](std::ostream& os) { write_gpgd(os, "ab", q.gpgd); });
  } else if (cmd == "bs") {
    if (args.size() != 3) {
      throw PreconditionError("usage: bs to-xmod <gpgd> | to-gpgd <xmod> | roundtrip <name>");
    }
    const auto& sub = args[1];
    if (sub == "to-xmod") {
      auto x = phi_to_xmod(resolve_gpgd(ws, args[2]));
      r.add("top order", x.top().order());
      r.add("base order", x.base().order());
      r.add("alpha", detail::map_of(x.alpha()));
      detail::write_out(opt, [&](std::ostream& os) { write_xmod(os, "phi", x); });
    } else if (sub == "to-gpgd") {
      auto g = psi_to_gpgd(resolve_xmod(ws, args[2]), cfg);
      detail::add_gpgd_summary(r, "", g);
      detail::write_out(opt, [&](std::ostream& os) { write_gpgd(os, "psi", g); });
    } else if (sub == "roundtrip") {
      if (detail::names_xmod(ws, args[2])) {
        detail::add_report(r, roundtrip_check(resolve_xmod(ws, args[2]), cfg));
      } else {
        detail::add_report(r, roundtrip_check(resolve_gpgd(ws, args[2]), cfg));
      }
    } else {
      throw PreconditionError("unknown bs subcommand '" + sub + "'");
    }
  } else if (cmd == "isoact") {
    detail::need_args(args, 2, "isoact <gpgd>");
    auto g = resolve_gpgd(ws, args[1]);
    detail::add_report(r, verify_isoact(g, cfg));
    detail::add_report(r, verify_actor_corollary(g, cfg));
  } else if (cmd == "holomorph") {
    detail::need_args(args, 2, "holomorph <gpgd>");
    auto h = holomorph(resolve_gpgd(ws, args[1]), cfg);
    detail::add_gpgd_summary(r, "", h.gpgd());
    detail::write_out(opt, [&](std::ostream& os) { write_gpgd(os, "hol", h.gpgd()); });
  } else if (cmd == "tower") {
    detail::need_args(args, 2, "tower <gpgd> --max <k>");
    auto t = actor_tower(resolve_gpgd(ws, args[1]), opt.max_steps, cfg);
    for (std::size_t k = 0; k < t.stages.size(); ++k) {
      r.add("stage " + std::to_string(k),
            json::array({t.stages[k].arrows().order(), t.stages[k].objects().order()}));
    }
    if (t.complete_at) {
      r.add("result", "complete at stage " + std::to_string(*t.complete_at));
    } else {
      r.add("result", "no complete stage within " + std::to_string(opt.max_steps) +
                          " steps");
      r.pass = false;
    }
  } else if (cmd == "characteristic") {
    detail::need_args(args, 3, "characteristic <gpgd> <sub>");
    auto g = resolve_gpgd(ws, args[1]);
    auto h = detail::resolve_sub(ws, g, args[2]);
    detail::add_report(r, characteristic_iff_hol_normal(g, h, cfg));
  } else if (cmd == "semidirect") {
    if (args.size() < 3) {
      throw PreconditionError("usage: semidirect actor <gpgd> | inner <gpgd> | trivial <H> <G> | internal <gpgd> <N> <M>");
    }
    if (args[1] == "internal" && args.size() == 5) {
      auto g = resolve_gpgd(ws, args[2]);
      detail::add_report(r, internal_semidirect(g, detail::resolve_sub(ws, g, args[3]),
                                                detail::resolve_sub(ws, g, args[4]), cfg));
      r.add("verdict", r.pass ? "pass" : "fail");
      return r;
    }
    std::optional<Semidirect> sd;
    if (args[1] == "actor" && args.size() == 3) {
      sd = holomorph(resolve_gpgd(ws, args[2]), cfg).sd;
    } else if (args[1] == "inner" && args.size() == 3) {
      auto g = resolve_gpgd(ws, args[2]);
      auto w = whole_subgpgd(g);
      sd = semidirect_gpgd(conjugation_action(w, w, cfg).action, "", cfg);
    } else if (args[1] == "trivial" && args.size() == 4) {
      auto h = resolve_gpgd(ws, args[2]);
      auto g = resolve_gpgd(ws, args[3]);
      sd = semidirect_gpgd(trivial_action(h, actor_gpgd(g, cfg)), "", cfg);
    } else {
      throw PreconditionError("usage: semidirect actor <gpgd> | inner <gpgd> | trivial <H> <G> | internal <gpgd> <N> <M>");
    }
    detail::add_gpgd_summary(r, "", sd->gpgd);
    detail::add_report(r, verify_extension(sd->i, sd->p, sd->s, nullptr, cfg));
    detail::write_out(opt, [&](std::ostream& os) { write_gpgd(os, "semidirect", sd->gpgd); });
  } else if (cmd == "export-dot") {
    detail::need_args(args, 3, "export-dot <gpgd> <path>");
    auto g = resolve_gpgd(ws, args[1]);
    export_dot(g, args[2], opt.include_identities);
    std::size_t edges = 0;
    for (elem_t a = 0; a < g.arrows().order(); ++a) {
      edges += opt.include_identities || !g.is_identity_arrow(a);
    }
    r.add("nodes", g.objects().order());
    r.add("edges", edges);
    r.add("path", args[2]);
  } else if (cmd == "builtin") {
    detail::need_args(args, 2, "builtin <spec>");
    const auto& spec = args[1];
    try {
      auto g = parse_group_spec(spec);
      r.add("kind", "group");
      r.add("name", g.name());
      r.add("order", g.order());
      r.add("abelian", g.is_abelian());
      r.add("generators", g.generators());
      detail::write_out(opt, [&](std::ostream& os) { write_group(os, g.name(), g); });
    } catch (const PreconditionError&) {
      if (detail::names_xmod(ws, spec)) {
        auto x = resolve_xmod(ws, spec);
        r.add("kind", "xmod");
        r.add("top order", x.top().order());
        r.add("base order", x.base().order());
        detail::write_out(opt, [&](std::ostream& os) { write_xmod(os, "x", x); });
      } else {
        auto g = resolve_gpgd(ws, spec);
        r.add("kind", "gpgd");
        detail::add_gpgd_summary(r, "", g);
        detail::write_out(opt, [&](std::ostream& os) { write_gpgd(os, "g", g); });
      }
    }
  } else {
    throw PreconditionError("unknown command '" + cmd + "'");
  }
  r.add("verdict", r.pass ? "pass" : "fail");
  return r;
}

inline std::string render(const CommandResult& r, bool as_json) {
  std::ostringstream os;
  for (const auto& rec : r.records) {
    if (as_json) {
      json line{{"command", r.command}, {"key", rec.key}, {"value", rec.value}};
      os << line.dump() << "\n";
    } else {
      os << rec.key << ": " << detail::render_value(rec.value) << "\n";
    }
  }
  return os.str();
}

}  // namespace catgrp
