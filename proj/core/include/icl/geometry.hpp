#ifndef ICL_GEOMETRY_HPP
#define ICL_GEOMETRY_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace icl {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }

  bool operator==(const Vec3& o) const = default;
};

enum class Winding : std::uint8_t { kClockwise, kCounterClockwise };

// Square planar spiral coil. All lengths are in um.
//
// outer_side is the side of the outermost turn; the filament path starts on
// that boundary and each turn steps inward by trace_width + trace_spacing.
// The trace cross section is collapsed onto its centerline; trace_width only
// enters the self-inductance term through the effective wire radius.
struct Coil {
  double outer_side = 250.0;    // um
  int turns = 5;
  double trace_width = 9.0;     // um
  double trace_spacing = 1.0;   // um
  Vec3 center;                  // um
  Winding winding = Winding::kClockwise;
};

// Throws InvalidGeometryError unless
//   outer_side > 2 * turns * (trace_width + trace_spacing),
//   trace_width > 0, trace_spacing >= 0, turns >= 1.
void validate(const Coil& coil);

// Straight filament segment, endpoints in um.
struct Segment {
  Vec3 start;
  Vec3 end;

  Vec3 delta() const { return end - start; }
  Vec3 midpoint() const { return (start + end) * 0.5; }
  double length() const { return delta().norm(); }
};

using Path = std::vector<Segment>;

double path_length(const Path& path);

// Rectangular spiral polyline: 4 segments per turn, connected, lying in the
// coil's z plane. Throws InvalidGeometryError for invalid coils.
Path spiral_path(const Coil& coil);

// Splits every segment into ceil(length / max_len) equal parts, so every
// output segment is at most max_len long and the concatenation reproduces
// the input path exactly. max_len must be > 0.
Path subdivide(const Path& path, double max_len);

enum class CoilRole : std::uint8_t { kTx, kRx };
enum class Die : std::uint8_t { kLower, kUpper };

struct PlacedCoil {
  Coil coil;
  CoilRole role = CoilRole::kTx;
  Die die = Die::kLower;
  int pair_id = 0;
};

// A set of TX/RX coil pairs across two stacked dies. Every pair_id appears
// exactly once as TX and once as RX; the two coils of a pair share an (x, y)
// center and sit on different dies.
struct CoilArray {
  std::vector<PlacedCoil> coils;

  int pair_count() const;
  const PlacedCoil& tx(int pair_id) const;
  const PlacedCoil& rx(int pair_id) const;
  void validate() const;  // throws InvalidGeometryError on violation
};

// rows x cols TX coils on the lower die and aligned RX coils vertical_gap
// above. pitch is center to center, in um; pair ids are assigned row-major.
// pitch < outer_side is rejected unless allow_overlap is set.
CoilArray place_array(const Coil& template_coil, int rows, int cols,
                      double pitch, double vertical_gap,
                      bool allow_overlap = false);

// Swaps the TX/RX roles within one pair, modelling a link driven in the
// opposite direction (its transmitter then shares a die with the neighbours'
// receivers, which is what creates same-die interference paths).
CoilArray flip_pair(const CoilArray& array, int pair_id);

}  // namespace icl

#endif  // ICL_GEOMETRY_HPP
