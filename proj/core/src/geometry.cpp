#include "icl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "icl/errors.hpp"

namespace icl {

void validate(const Coil& coil) {
  if (coil.turns < 1)
    throw InvalidGeometryError("coil turns must be >= 1");
  if (!(coil.trace_width > 0.0))
    throw InvalidGeometryError("trace width must be > 0");
  if (coil.trace_spacing < 0.0)
    throw InvalidGeometryError("trace spacing must be >= 0");
  const double pitch = coil.trace_width + coil.trace_spacing;
  if (!(coil.outer_side > 2.0 * coil.turns * pitch))
    throw InvalidGeometryError(
        "innermost turn has non-positive side length: outer_side " +
        std::to_string(coil.outer_side) + " <= 2 * " +
        std::to_string(coil.turns) + " * " + std::to_string(pitch));
}

double path_length(const Path& path) {
  double total = 0.0;
  for (const Segment& s : path) total += s.length();
  return total;
}

Path spiral_path(const Coil& coil) {
  validate(coil);
  const double side = coil.outer_side;
  const double step = coil.trace_width + coil.trace_spacing;

  // Built clockwise from the top-left corner in local coordinates; segment m
  // (0-based) has length side - floor(m/2) * step, so each full turn steps
  // inward by 2 * step on opposite sides.
  static const double kDir[4][2] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  double x = -side / 2.0;
  double y = +side / 2.0;
  std::vector<std::pair<Vec3, Vec3>> local;
  local.reserve(static_cast<std::size_t>(4 * coil.turns));
  for (int m = 0; m < 4 * coil.turns; ++m) {
    const double len = side - (m / 2) * step;
    const double nx = x + kDir[m % 4][0] * len;
    const double ny = y + kDir[m % 4][1] * len;
    local.push_back({{x, y, 0.0}, {nx, ny, 0.0}});
    x = nx;
    y = ny;
  }

  const double flip = coil.winding == Winding::kClockwise ? 1.0 : -1.0;
  Path path;
  path.reserve(local.size());
  for (const auto& [a, b] : local) {
    path.push_back(Segment{
        Vec3{a.x, flip * a.y, 0.0} + coil.center,
        Vec3{b.x, flip * b.y, 0.0} + coil.center,
    });
  }
  return path;
}

Path subdivide(const Path& path, double max_len) {
  if (!(max_len > 0.0))
    throw std::invalid_argument("subdivide: max_len must be > 0");
  Path out;
  for (const Segment& s : path) {
    const double len = s.length();
    const int n = std::max(1, static_cast<int>(std::ceil(len / max_len)));
    const Vec3 d = s.delta();
    for (int k = 0; k < n; ++k) {
      const Vec3 a = s.start + d * (static_cast<double>(k) / n);
      const Vec3 b = k + 1 == n
                         ? s.end  // keep the original endpoint exactly
                         : s.start + d * (static_cast<double>(k + 1) / n);
      out.push_back(Segment{a, b});
    }
  }
  return out;
}

int CoilArray::pair_count() const {
  int max_id = -1;
  for (const PlacedCoil& pc : coils) max_id = std::max(max_id, pc.pair_id);
  return max_id + 1;
}

const PlacedCoil& CoilArray::tx(int pair_id) const {
  for (const PlacedCoil& pc : coils)
    if (pc.pair_id == pair_id && pc.role == CoilRole::kTx) return pc;
  throw InvalidGeometryError("no TX coil for pair " + std::to_string(pair_id));
}

const PlacedCoil& CoilArray::rx(int pair_id) const {
  for (const PlacedCoil& pc : coils)
    if (pc.pair_id == pair_id && pc.role == CoilRole::kRx) return pc;
  throw InvalidGeometryError("no RX coil for pair " + std::to_string(pair_id));
}

void CoilArray::validate() const {
  if (coils.empty()) throw InvalidGeometryError("empty coil array");
  std::map<int, int> tx_seen, rx_seen;
  for (const PlacedCoil& pc : coils) {
    icl::validate(pc.coil);
    (pc.role == CoilRole::kTx ? tx_seen : rx_seen)[pc.pair_id]++;
  }
  const int pairs = pair_count();
  for (int p = 0; p < pairs; ++p) {
    if (tx_seen[p] != 1 || rx_seen[p] != 1)
      throw InvalidGeometryError("pair " + std::to_string(p) +
                                 " must appear exactly once as TX and RX");
    const PlacedCoil& t = tx(p);
    const PlacedCoil& r = rx(p);
    if (t.die == r.die)
      throw InvalidGeometryError("pair " + std::to_string(p) +
                                 ": TX and RX must sit on different dies");
    if (t.coil.center.x != r.coil.center.x ||
        t.coil.center.y != r.coil.center.y)
      throw InvalidGeometryError("pair " + std::to_string(p) +
                                 ": TX and RX must be vertically aligned");
  }
}

CoilArray place_array(const Coil& template_coil, int rows, int cols,
                      double pitch, double vertical_gap, bool allow_overlap) {
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("place_array: rows and cols must be positive");
  if (!(pitch > 0.0))
    throw std::invalid_argument("place_array: pitch must be positive");
  if (!(vertical_gap > 0.0))
    throw std::invalid_argument("place_array: vertical gap must be positive");
  if (pitch < template_coil.outer_side && !allow_overlap)
    throw std::invalid_argument(
        "place_array: pitch < outer_side makes neighbouring coils overlap "
        "(pass allow_overlap to force)");
  validate(template_coil);

  CoilArray array;
  int pair_id = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c, ++pair_id) {
      Coil tx = template_coil;
      tx.center = Vec3{c * pitch, r * pitch, 0.0} + template_coil.center;
      Coil rx = tx;
      rx.center.z += vertical_gap;
      array.coils.push_back({tx, CoilRole::kTx, Die::kLower, pair_id});
      array.coils.push_back({rx, CoilRole::kRx, Die::kUpper, pair_id});
    }
  }
  array.validate();
  return array;
}

CoilArray flip_pair(const CoilArray& array, int pair_id) {
  CoilArray out = array;
  bool found = false;
  for (PlacedCoil& pc : out.coils) {
    if (pc.pair_id != pair_id) continue;
    pc.role = pc.role == CoilRole::kTx ? CoilRole::kRx : CoilRole::kTx;
    found = true;
  }
  if (!found)
    throw std::invalid_argument("flip_pair: no such pair " +
                                std::to_string(pair_id));
  out.validate();
  return out;
}

}  // namespace icl
