#include "lsqc/pipe_diagram.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

namespace lsqc::surgery {

using nlohmann::json;

const char* cube_kind_name(CubeKind k) {
  switch (k) {
    case CubeKind::Memory: return "memory";
    case CubeKind::InitZ: return "init_z";
    case CubeKind::InitX: return "init_x";
    case CubeKind::MeasureZ: return "measure_z";
    case CubeKind::MeasureX: return "measure_x";
    case CubeKind::InjectionTarget: return "injection_target";
    case CubeKind::CultivationSlot: return "cultivation_slot";
  }
  return "?";
}

namespace {
CubeKind kind_from_name(const std::string& s) {
  for (int k = 0; k <= int(CubeKind::CultivationSlot); ++k)
    if (s == cube_kind_name(CubeKind(k))) return CubeKind(k);
  throw std::invalid_argument("unknown cube kind " + s);
}
}  // namespace

int PipeDiagram::num_layers() const {
  int m = 0;
  for (const auto& c : cubes) m = std::max(m, c.at.t + 1);
  return m;
}

const Cube* PipeDiagram::cube_at(const CubeCoord& c) const {
  for (const auto& cu : cubes)
    if (cu.at == c) return &cu;
  return nullptr;
}

Cube* PipeDiagram::cube_at(const CubeCoord& c) {
  for (auto& cu : cubes)
    if (cu.at == c) return &cu;
  return nullptr;
}

void PipeDiagram::validate() const {
  std::map<CubeCoord, const Cube*> by_coord;
  for (const auto& c : cubes) {
    if (c.at.x < 0 || c.at.x >= grid_w || c.at.y < 0 || c.at.y >= grid_h || c.at.t < 0)
      throw std::logic_error("cube out of grid");
    if (!by_coord.emplace(c.at, &c).second) throw std::logic_error("duplicate cube");
  }
  for (const auto& p : pipes) {
    auto ia = by_coord.find(p.a), ib = by_coord.find(p.b);
    if (ia == by_coord.end() || ib == by_coord.end())
      throw std::logic_error("pipe endpoint has no cube");
    if (p.temporal) {
      if (!(p.a.cell() == p.b.cell() && p.b.t == p.a.t + 1))
        throw std::logic_error("temporal pipe must connect consecutive layers");
    } else {
      int dx = std::abs(p.a.x - p.b.x), dy = std::abs(p.a.y - p.b.y);
      if (p.a.t != p.b.t || dx + dy != 1)
        throw std::logic_error("spatial pipe must connect adjacent cells in one layer");
      if (p.geo_basis != 'X' && p.geo_basis != 'Z')
        throw std::logic_error("merge pipe needs a geometric basis");
      if (ia->second->flipped != ib->second->flipped)
        throw std::logic_error("merge between mismatched orientations");
    }
  }
  // Every cube either starts a worldline (init kinds or t==0 port boundary)
  // or has a temporal predecessor.
  for (const auto& c : cubes) {
    if (c.kind == CubeKind::InitZ || c.kind == CubeKind::InitX ||
        c.kind == CubeKind::CultivationSlot)
      continue;
    if (c.at.t == 0) continue;
    bool has_pred = false;
    for (const auto& p : pipes)
      if (p.temporal && p.b == c.at) has_pred = true;
    if (!has_pred) throw std::logic_error("cube lacks temporal predecessor/init");
  }
}

std::string PipeDiagram::to_json() const {
  json j;
  j["format"] = "lsqc-pipe-diagram";
  j["version"] = 1;
  j["grid"] = {grid_w, grid_h};
  j["d"] = code_distance;
  j["n_cycles"] = n_cycles;
  j["proxy_substitutions"] = proxy_substitutions;
  auto cs = json::array();
  std::vector<Cube> sorted_cubes = cubes;
  std::sort(sorted_cubes.begin(), sorted_cubes.end(),
            [](const Cube& a, const Cube& b) { return a.at < b.at; });
  for (const auto& c : sorted_cubes) {
    json jc = {{"x", c.at.x},    {"y", c.at.y},           {"t", c.at.t},
               {"kind", cube_kind_name(c.kind)}, {"flipped", c.flipped}};
    if (c.basis) {
      jc["basis"] = std::string(1, c.basis);
      jc["sign"] = int(c.sign);
    }
    cs.push_back(jc);
  }
  j["cubes"] = cs;
  auto ps = json::array();
  std::vector<Pipe> sorted_pipes = pipes;
  std::sort(sorted_pipes.begin(), sorted_pipes.end(), [](const Pipe& a, const Pipe& b) {
    return std::tie(a.a, a.b) < std::tie(b.a, b.b);
  });
  for (const auto& p : sorted_pipes) {
    json jp = {{"a", {p.a.x, p.a.y, p.a.t}},
               {"b", {p.b.x, p.b.y, p.b.t}},
               {"temporal", p.temporal}};
    if (p.temporal) {
      jp["hadamard"] = p.hadamard;
    } else {
      jp["basis_a"] = std::string(1, p.basis_a);
      jp["basis_b"] = std::string(1, p.basis_b);
      jp["sign"] = int(p.sign);
      jp["geo_basis"] = std::string(1, p.geo_basis);
      jp["merge_index"] = p.merge_index;
    }
    ps.push_back(jp);
  }
  j["pipes"] = ps;
  auto qs = json::array();
  for (const auto& port : ports) {
    qs.push_back({{"qubit", port.qubit},
                  {"in", {port.in.x, port.in.y, port.in.t}},
                  {"out", {port.out.x, port.out.y, port.out.t}},
                  {"out_frame", port.out_frame},
                  {"out_flipped", port.out_flipped}});
  }
  j["ports"] = qs;
  auto sch = json::array();
  for (const auto& s : injection_schedule) {
    sch.push_back({{"ancilla", {s.ancilla.x, s.ancilla.y}},
                   {"prep_start", s.prep_start},
                   {"inject_start", s.inject_start},
                   {"measure_start", s.measure_start}});
  }
  j["injection_schedule"] = sch;
  return j.dump(1);
}

PipeDiagram PipeDiagram::from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("format", "") != "lsqc-pipe-diagram")
    throw std::invalid_argument("not a pipe diagram file");
  PipeDiagram d;
  d.grid_w = j["grid"][0];
  d.grid_h = j["grid"][1];
  d.code_distance = j["d"];
  d.n_cycles = j["n_cycles"];
  d.proxy_substitutions = j.value("proxy_substitutions", 0);
  for (const auto& jc : j["cubes"]) {
    Cube c;
    c.at = {jc["x"], jc["y"], jc["t"]};
    c.kind = kind_from_name(jc["kind"]);
    c.flipped = jc["flipped"];
    if (jc.contains("basis")) {
      c.basis = jc["basis"].get<std::string>()[0];
      c.sign = static_cast<int8_t>(jc["sign"].get<int>());
    }
    d.cubes.push_back(c);
  }
  for (const auto& jp : j["pipes"]) {
    Pipe p;
    p.a = {jp["a"][0], jp["a"][1], jp["a"][2]};
    p.b = {jp["b"][0], jp["b"][1], jp["b"][2]};
    p.temporal = jp["temporal"];
    if (p.temporal) {
      p.hadamard = jp.value("hadamard", false);
    } else {
      p.basis_a = jp["basis_a"].get<std::string>()[0];
      p.basis_b = jp["basis_b"].get<std::string>()[0];
      p.sign = static_cast<int8_t>(jp["sign"].get<int>());
      p.geo_basis = jp["geo_basis"].get<std::string>()[0];
      p.merge_index = jp["merge_index"];
    }
    d.pipes.push_back(p);
  }
  for (const auto& jq : j["ports"]) {
    Port port;
    port.qubit = jq["qubit"];
    port.in = {jq["in"][0], jq["in"][1], jq["in"][2]};
    port.out = {jq["out"][0], jq["out"][1], jq["out"][2]};
    port.out_frame = jq["out_frame"];
    port.out_flipped = jq["out_flipped"];
    d.ports.push_back(port);
  }
  for (const auto& js : j["injection_schedule"]) {
    TokenSchedule s;
    s.ancilla = {js["ancilla"][0], js["ancilla"][1]};
    s.prep_start = js["prep_start"];
    s.inject_start = js["inject_start"];
    s.measure_start = js["measure_start"];
    d.injection_schedule.push_back(s);
  }
  return d;
}

PipeDiagram assemble(const std::vector<PipeDiagram>& fragments) {
  if (fragments.empty()) throw std::invalid_argument("assemble: no fragments");
  PipeDiagram out = fragments[0];
  for (size_t i = 1; i < fragments.size(); ++i) {
    const auto& frag = fragments[i];
    if (frag.grid_w != out.grid_w || frag.grid_h != out.grid_h ||
        frag.code_distance != out.code_distance)
      throw std::invalid_argument("assemble: fragment geometry mismatch");
    int t_off = out.num_layers();
    // Port type-matching: each fragment input must continue an output.
    std::map<uint32_t, Port> prev_out;
    for (const auto& p : out.ports) prev_out[p.qubit] = p;
    for (const auto& p : frag.ports) {
      if (p.in.t == 0) {
        auto it = prev_out.find(p.qubit);
        if (it == prev_out.end()) continue;  // fresh qubit in this fragment
        if (!(it->second.out.cell() == p.in.cell()))
          throw std::invalid_argument("assemble: port position mismatch for qubit " +
                                      std::to_string(p.qubit));
      }
    }
    for (auto c : frag.cubes) {
      c.at.t += t_off;
      out.cubes.push_back(c);
    }
    for (auto p : frag.pipes) {
      p.a.t += t_off;
      p.b.t += t_off;
      if (p.merge_index >= 0) {
        int max_idx = -1;
        for (const auto& q : out.pipes) max_idx = std::max(max_idx, q.merge_index);
        p.merge_index += max_idx >= 0 ? 0 : 0;  // merge indices re-derived in replay
      }
      out.pipes.push_back(p);
    }
    // Stitch worldlines: temporal pipes between matched out/in cubes.
    for (const auto& p : frag.ports) {
      auto it = prev_out.find(p.qubit);
      if (it != prev_out.end() && p.in.t == 0 && it->second.out.cell() == p.in.cell()) {
        Pipe t;
        t.a = it->second.out;
        t.b = {p.in.x, p.in.y, t_off};
        t.temporal = true;
        out.pipes.push_back(t);
      }
    }
    // Updated ports: keep earliest in, latest out.
    std::map<uint32_t, Port> merged;
    for (const auto& p : out.ports) merged[p.qubit] = p;
    for (auto p : frag.ports) {
      p.in.t += t_off;
      p.out.t += t_off;
      auto it = merged.find(p.qubit);
      if (it == merged.end()) {
        merged[p.qubit] = p;
      } else {
        it->second.out = p.out;
        it->second.out_frame = p.out_frame;
        it->second.out_flipped = p.out_flipped;
      }
    }
    out.ports.clear();
    for (auto& [q, p] : merged) out.ports.push_back(p);
    for (auto s : frag.injection_schedule) {
      long cyc = long(t_off) * out.code_distance;
      s.prep_start += cyc;
      s.inject_start += cyc;
      s.measure_start += cyc;
      out.injection_schedule.push_back(s);
    }
    out.n_cycles += frag.n_cycles;
    out.proxy_substitutions += frag.proxy_substitutions;
  }
  return out;
}

}  // namespace lsqc::surgery
