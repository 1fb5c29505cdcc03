#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyguard/arrangement.hpp"
#include "polyguard/plane.hpp"

namespace polyguard {

struct FaceLoops {
  std::vector<int> outer;                // CCW viewed from outside
  std::vector<std::vector<int>> holes;   // wound oppositely
};

struct MeshData {
  std::vector<Point3> vertices;
  std::vector<FaceLoops> faces;
};

struct Violation {
  std::string kind;  // e.g. "non-planar-face", "non-manifold-edge"
  std::string detail;
  bool warning = false;
};

std::vector<Violation> validate(const MeshData& mesh);

enum class Dihedral { Convex, Reflex, FlatForbidden };

struct EdgeRecord {
  int v0, v1;           // vertex indices, v0 < v1
  int face_a, face_b;   // face_a traverses v0->v1, face_b traverses v1->v0
  Dihedral dihedral;
  Vec3 direction;       // vertices[v1] - vertices[v0]
};

// Per-face derived geometry: supporting plane, outward normal, a 2D chart.
struct FaceGeometry {
  Plane plane;
  Vec3 outward_normal;       // exact, unnormalized (Newell)
  int drop_axis;             // coordinate dropped by the 2D chart
  RegionPolygon region;      // loops in chart coordinates
  Vec2 bbox2_lo, bbox2_hi;
  Point3 bbox_lo, bbox_hi;   // 3D bounding box of the face
  Vec2 sample2;              // point strictly inside the region
  Point3 sample3;
};

class Polyhedron {
 public:
  // Computes all derived data. Throws PolyhedronError if the mesh is not a
  // valid oriented manifold with planar maximal faces.
  static Polyhedron build(MeshData mesh);

  const std::vector<Point3>& vertices() const { return mesh_.vertices; }
  const std::vector<FaceLoops>& faces() const { return mesh_.faces; }
  const MeshData& mesh() const { return mesh_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const FaceGeometry& face_geometry(int f) const { return geom_[f]; }
  int face_count() const { return static_cast<int>(mesh_.faces.size()); }

  Vec2 chart(int f, const Point3& p) const;        // project p (on the face plane) to 2D
  Point3 unchart(int f, const Vec2& q) const;      // inverse, solving the plane equation
  RegionSide face_side(int f, const Point3& p) const;  // p assumed on the plane

  const Point3& bbox_lo() const { return bbox_lo_; }
  const Point3& bbox_hi() const { return bbox_hi_; }

 private:
  MeshData mesh_;
  std::vector<EdgeRecord> edges_;
  std::vector<FaceGeometry> geom_;
  Point3 bbox_lo_, bbox_hi_;
};

struct PolyhedronError : std::runtime_error {
  explicit PolyhedronError(const std::string& msg) : std::runtime_error(msg) {}
};

std::vector<Violation> validate(const Polyhedron& p);

// Derived edge list of a valid mesh; errors name the offending segment.
std::vector<EdgeRecord> derive_edges(const MeshData& mesh);

struct OrientationClass {
  Vec3 direction;  // sign-normalized, scaled so first nonzero coordinate is 1
  int face_count;
};

struct OrientationProfile {
  std::vector<OrientationClass> classes;  // sorted: count desc, then direction lex
  int c() const { return static_cast<int>(classes.size()); }
  bool is_orthogonal() const;
};

OrientationProfile orientation_profile(const Polyhedron& p);

struct ReflexInfo {
  std::vector<Vec3> directions;  // up to sign, deduplicated
  bool is_2_reflex;              // all reflex edges horizontal
};

// Pre: p orthogonal (throws otherwise).
ReflexInfo reflex_directions(const Polyhedron& p);

struct ComponentTopology {
  int vertices, edges, faces;
  long long euler;  // V - E + F
  long long genus;  // (2 - euler) / 2
};

std::vector<ComponentTopology> euler_characteristic(const Polyhedron& p);

// Unions adjacent coplanar same-facing faces into maximal faces (holes appear
// where a merged region surrounds excluded area) and drops vertices that are
// corners of no face. Errors if a merged region is disconnected.
Polyhedron merge_coplanar_faces(const MeshData& mesh);

// JSON interchange, formats fixed by the CLI contract.
std::string polyhedron_to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const std::string& text);

// Lossy OBJ export for viewing; holes are triangulated by ear clipping.
std::string polyhedron_to_obj(const Polyhedron& p, int significant_digits = 12);

}  // namespace polyguard
