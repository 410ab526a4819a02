#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsqc/pauli.hpp"

namespace lsqc::surgery {

enum class CubeKind : uint8_t {
  Memory,
  InitZ,
  InitX,
  MeasureZ,
  MeasureX,
  InjectionTarget,
  CultivationSlot,
};

const char* cube_kind_name(CubeKind k);

struct CellCoord {
  int x = 0, y = 0;
  auto operator<=>(const CellCoord&) const = default;
};

struct CubeCoord {
  int x = 0, y = 0, t = 0;
  CellCoord cell() const { return {x, y}; }
  auto operator<=>(const CubeCoord&) const = default;
};

struct Cube {
  CubeCoord at;
  CubeKind kind = CubeKind::Memory;
  // Orientation flag: false = rough boundaries north/south (logical Z along
  // the column), true = transversal-H-flipped pattern.
  bool flipped = false;
  // For measure cubes: the tracked logical basis ('X','Y','Z') and sign;
  // 'Y' marks a frame residual that the physical proxy demotes to the
  // geometric basis.
  char basis = 0;
  int8_t sign = +1;
};

// Spatial pipes are merges during one layer; temporal pipes are patch
// persistence (optionally through a transversal-H wall).
struct Pipe {
  CubeCoord a, b;  // ordered: a < b
  bool temporal = false;
  bool hadamard = false;  // temporal only
  // Merge data (spatial only): tracked logical basis per side with an overall
  // sign, and the geometric basis the lattice actually measures.
  char basis_a = 0, basis_b = 0;
  int8_t sign = +1;
  char geo_basis = 0;  // 'X' or 'Z'
  int merge_index = -1;  // order of merge outcomes in the logical replay
};

struct Port {
  uint32_t qubit = 0;
  CubeCoord in;   // first cube of the qubit's worldline
  CubeCoord out;  // last cube (often a measure cube)
  int out_frame = 0;       // residual single-qubit Clifford (group index)
  bool out_flipped = false;
};

// Per-token injection schedule, in code cycles.
struct TokenSchedule {
  CellCoord ancilla;
  long prep_start = 0;
  long inject_start = 0;
  long measure_start = 0;
};

struct PipeDiagram {
  int grid_w = 3, grid_h = 3;
  int code_distance = 3;
  std::vector<Cube> cubes;
  std::vector<Pipe> pipes;
  std::vector<Port> ports;
  std::vector<TokenSchedule> injection_schedule;
  long n_cycles = 0;  // cycle-accounting total (see docs)
  int proxy_substitutions = 0;  // Y-basis ops demoted in the physical proxy

  int num_layers() const;
  const Cube* cube_at(const CubeCoord& c) const;
  Cube* cube_at(const CubeCoord& c);
  size_t volume() const { return cubes.size(); }

  // Validity invariants: pipes connect existing adjacent cubes, temporal
  // pipes point forward, every non-initial cube has a predecessor or init
  // kind, merge bases consistent with geometry.
  void validate() const;

  std::string to_json() const;
  static PipeDiagram from_json(const std::string& text);
};

// Time-concatenates fragments: each fragment's input ports must sit at the
// cells (and orientations) where the previous fragment's outputs ended.
PipeDiagram assemble(const std::vector<PipeDiagram>& fragments);

}  // namespace lsqc::surgery
