#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hsg {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A path in traversal order: first arrow leaves `source`.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
};

enum class GraphType { dynkin, euclidean, other };

struct GraphClass {
  GraphType type = GraphType::other;
  /// Positive generator of the radical of the Tits form; set for Euclidean graphs only.
  std::vector<std::int64_t> null_root;
};

/// Finite acyclic quiver with vertices 0..n-1 (named 1..n in files).
class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  /// Line format: `vertices N` then `arrow <name> <source> <target>`; '#' starts a comment.
  static std::shared_ptr<const Quiver> parse(std::string_view text);
  static std::shared_ptr<const Quiver> load(const std::string& path);
  static std::shared_ptr<const Quiver> make(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  int arrow_index(std::string_view name) const;  // -1 if absent
  std::string vertex_name(int v) const { return std::to_string(v + 1); }
  /// Accepts "1".."n"; throws unknown_vertex otherwise.
  int vertex_from_name(std::string_view name) const;

  const std::vector<Path>& paths() const noexcept { return paths_; }
  const Path& path(int id) const { return paths_.at(id); }
  /// Path ids from v to w in a fixed canonical order (trivial path first when v == w).
  const std::vector<int>& paths_between(int v, int w) const { return between_[v * n_ + w]; }
  /// Position of path `id` inside paths_between(source, target).
  int position(int id) const { return position_[id]; }
  /// Id of `first` followed by `second`, or -1 when they do not compose.
  int concat(int first, int second) const;
  int trivial_path(int v) const { return trivial_[v]; }
  int arrow_path(int a) const { return arrow_path_[a]; }

  /// Number of paths v -> w; the dimension vector of P(v) is row v.
  std::vector<std::vector<std::int64_t>> path_counts() const;

  std::shared_ptr<const Quiver> opposite() const;
  bool is_connected() const;
  GraphClass classify_graph() const;

  friend bool operator==(const Quiver& a, const Quiver& b) { return a.n_ == b.n_ && a.arrows_ == b.arrows_; }

  std::string to_text() const;

 private:
  void enumerate_paths();

  int n_;
  std::vector<Arrow> arrows_;
  std::vector<Path> paths_;
  std::vector<std::vector<int>> between_;
  std::vector<int> position_;
  std::vector<int> trivial_;
  std::vector<int> arrow_path_;
  std::map<std::pair<int, std::vector<int>>, int> lookup_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

bool same_quiver(const Quiver& a, const Quiver& b);

/// Euler form sum_v d_v e_v - sum_{a: s->t} d_s e_t.
std::int64_t euler_form(const Quiver& q, const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& e);

/// Symmetrised Tits form matrix: 2 on the diagonal, minus the edge count off it.
std::vector<std::vector<std::int64_t>> tits_matrix(const Quiver& q);

}  // namespace hsg
