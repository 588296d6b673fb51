// Webs: layered drawings (slice words) over a planar combinatorial map.
//
// Strand sign convention: + is a strand oriented upward. Reading a drawing as
// a map from its bottom boundary to its top boundary, a + strand is a V+
// factor. On the top boundary + therefore means the edge points at the
// boundary vertex.

#pragma once

#include "spider/laurent.hpp"
#include "spider/quantum.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spider {

enum class GenKind : std::uint8_t { Identity, Cup, Cap, Split, Join, H };

// Upper/lower strand signs, with s the generator's sign parameter:
//   Identity(s)  [s]      / [s]
//   Cup(s)       [s,-s]   / []          b^{s,-s}
//   Cap(s)       []       / [s,-s]      sigma_{s,-s}
//   Split(s)     [s,s]    / [-s]        t^{ss}_{-s}
//   Join(s)      [-s]     / [s,s]       t^{-s}_{ss}
//   H(s)         [s,-s]   / [-s,s]      Join(s) over the right pair, Split(s) below on the left
struct SliceGenerator {
  GenKind kind;
  Sign sign;

  SignString upper() const;
  SignString lower() const;
  std::size_t upper_width() const;
  std::size_t lower_width() const;

  friend bool operator==(const SliceGenerator &, const SliceGenerator &) = default;
};

// Mnemonic tokens: I+ U+- N+- Y++ L-- H+- (N and L name their lower signs).
std::string token(const SliceGenerator &g);

// One row of a generator's coefficient table: lower states -> upper states.
struct TableEntry {
  StateString lower;
  StateString upper;
  int exponent; // weight v^exponent
};
const std::vector<TableEntry> &generator_table(const SliceGenerator &g);

using Layer = std::vector<SliceGenerator>;

// Layers are stored top to bottom.
struct SliceWord {
  SignString top;
  std::vector<Layer> layers;

  // Throws MismatchError if adjacent layers disagree.
  void validate() const;
  SignString bottom() const;
  std::size_t max_width() const;
};

// Text format:
//   top +-+
//   Y++ I-          (one layer per line, generators left to right)
//   U-+
//   bottom
// '#' starts a comment. Parse errors carry line and column.
std::string to_text(const SliceWord &w);
SliceWord parse_slice_word(std::string_view text);

// ---------------------------------------------------------------------------

enum class VertexKind : std::uint8_t { Boundary, Trivalent, Bend };

struct HalfEdge {
  int vertex = -1;
  int twin = -1;
  bool out = false; // edge oriented away from `vertex`
};

struct Vertex {
  VertexKind kind = VertexKind::Trivalent;
  std::vector<int> rot; // half-edges in counterclockwise order
};

// Planar map of a web in a disk. Boundary vertices are listed left to right
// along the top and along the bottom. Vertex-free closed loops are counted
// in `loops`. After normalize() there are no Bend vertices.
struct PlanarMap {
  std::vector<Vertex> vertices;
  std::vector<HalfEdge> half_edges;
  std::vector<int> top;
  std::vector<int> bottom;
  int loops = 0;

  int add_vertex(VertexKind kind, std::size_t degree);
  void link(int a, int b);
  int ccw_next(int h) const;
  int cw_next(int h) const;
  int trivalent_count() const;

  SignString top_signs() const;
  SignString bottom_signs() const;

  // Splices out Bend vertices, then drops dead vertices and half-edges.
  void normalize();
  // Structural sanity; throws std::logic_error.
  void check() const;
  // Vertices not connected to any boundary vertex, grouped by component.
  std::vector<std::vector<int>> closed_components() const;
};

PlanarMap build_map(const SliceWord &w);

// Peels the map top-down into a slice word realizing it.
SliceWord synthesize_drawing(const PlanarMap &m);

struct Face {
  std::vector<int> half_edges; // web half-edges, each with the face on its left
  int sides = 0;
  bool internal = false;
};

// All faces of the disk (the outside of the disk excluded). Faces of closed
// components are those of the component drawn on its own sphere.
std::vector<Face> all_faces(const PlanarMap &m);

std::string canonical_encoding(const PlanarMap &m);

// ---------------------------------------------------------------------------

class Web {
public:
  Web(); // the empty web
  explicit Web(SliceWord drawing);
  explicit Web(PlanarMap map); // synthesizes a drawing

  const SliceWord &drawing() const { return drawing_; }
  const PlanarMap &map() const { return map_; }
  const SignString &top() const { return drawing_.top; }
  SignString bottom() const { return drawing_.bottom(); }
  bool is_invariant_web() const { return bottom().empty(); }
  const std::string &encoding() const { return encoding_; }

  static Web identity(const SignString &s);
  static Web generator(const SliceGenerator &g);

private:
  SliceWord drawing_;
  PlanarMap map_;
  std::string encoding_;
};

// top above bottom; requires bottom(top) == top(bottom).
Web compose(const Web &top, const Web &bottom);
Web tensor(const Web &left, const Web &right);

std::vector<Face> faces(const Web &w);
std::vector<Face> internal_faces(const Web &w);
bool is_non_elliptic(const Web &w);

// State sum of an invariant web (throws InvalidInput if w has a bottom boundary).
TensorVector evaluate(const Web &w);
// Matrix of a web with bottom boundary: bottom state -> expansion over the top.
std::map<StateString, TensorVector> evaluate_hom(const Web &w);

// A full state of a drawing, recorded as the strand states on every cut.
// Cuts run bottom-up: cut 0 is the bottom boundary, cut k lies above the k-th
// generator application (layers bottom-up, right to left within a layer), and
// the last cut is the top boundary.
struct StateRecord {
  std::vector<StateString> cuts;
  int exponent = 0;

  const StateString &top() const { return cuts.back(); }
  const StateString &bottom() const { return cuts.front(); }
};

// Every nonzero state, by exhaustive search without merging.
std::vector<StateRecord> enumerate_states(const Web &w);

// One nonzero state with the given boundary, if any.
std::optional<StateRecord> find_state(const Web &w, const StateString &top,
                                      const StateString &bottom = {});

// Gadgets used by tests and the CLI.
namespace gadgets {
Web y(Sign s);                    // a single Split
Web double_h(Sign t);             // top (t,-t,t), bottom (-t,-t)
Web hexagon(Sign t);              // top (t,-t,t), bottom (t,-t,t)
Web loop();                       // closed circle
Web bigon_cup(Sign s);            // cup b^{s,-s} with a bigon on it
Web square(Sign s);               // square face, top (-s,s,-s,s)
Web zigzag(int which);            // the four zig-zag composites, which in 0..3
} // namespace gadgets

// enumerate_states, sorted by (bottom, top, exponent).
std::vector<StateRecord> gadget_states(const Web &g);

} // namespace spider
