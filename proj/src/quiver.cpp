#include "quiver.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "error.hpp"

namespace hsg {

namespace {

constexpr std::size_t max_paths = 200000;

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int parse_positive(const std::string& tok, int line_no) {
  int v = 0;
  if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": expected a positive integer, got '" + tok + "'");
  v = std::stoi(tok);
  if (v <= 0) fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": expected a positive integer");
  return v;
}

// Exact rationals for the small integer systems of graph classification.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  void normalize() {
    if (den < 0) num = -num, den = -den;
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
};

Fraction operator-(Fraction a, Fraction b) {
  std::int64_t g = std::gcd(a.den, b.den);
  Fraction r{a.num * (b.den / g) - b.num * (a.den / g), a.den / g * b.den};
  r.normalize();
  return r;
}
Fraction operator*(Fraction a, Fraction b) {
  Fraction r{a.num * b.num, a.den * b.den};
  r.normalize();
  return r;
}
Fraction operator/(Fraction a, Fraction b) {
  Fraction r{a.num * b.den, a.den * b.num};
  r.normalize();
  return r;
}

// Rational kernel basis scaled to primitive integer vectors.
std::vector<std::vector<std::int64_t>> integer_kernel(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::vector<Fraction>> a(rows, std::vector<Fraction>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = Fraction{m[r][c], 1};
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && a[sel][c].num == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[pr]);
    Fraction pv = a[pr][c];
    for (auto& x : a[pr]) x = x / pv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || a[r][c].num == 0) continue;
      Fraction f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = a[r][k] - f * a[pr][k];
    }
    pivots.push_back(c);
    ++pr;
  }
  std::vector<std::vector<std::int64_t>> out;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fraction> v(cols, Fraction{0, 1});
    v[free] = Fraction{1, 1};
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = Fraction{0, 1} - a[i][free];
    std::int64_t l = 1;
    for (auto& x : v) l = std::lcm(l, x.den);
    std::vector<std::int64_t> iv(cols);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < cols; ++i) {
      iv[i] = v[i].num * (l / v[i].den);
      g = std::gcd(g, iv[i] < 0 ? -iv[i] : iv[i]);
    }
    if (g > 1)
      for (auto& x : iv) x /= g;
    out.push_back(std::move(iv));
  }
  return out;
}

// Leading principal minors positive, via fraction-free elimination without pivoting.
bool positive_definite(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  std::int64_t prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

}  // namespace

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows) : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ < 0) fail(ErrorCode::invalid_argument, "negative vertex count");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
      fail(ErrorCode::unknown_vertex, "arrow '" + a.name + "' references an unknown vertex");
    if (!names.insert(a.name).second) fail(ErrorCode::duplicate_name, "duplicate arrow name '" + a.name + "'");
  }
  // Kahn's algorithm; leftover vertices lie on a cycle.
  std::vector<int> indeg(n_, 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<int> stack;
  for (int v = 0; v < n_; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  if (seen != n_) fail(ErrorCode::cyclic_quiver, "quiver has an oriented cycle");
  enumerate_paths();
}

std::shared_ptr<const Quiver> Quiver::make(int vertex_count, std::vector<Arrow> arrows) {
  return std::make_shared<const Quiver>(vertex_count, std::move(arrows));
}

std::shared_ptr<const Quiver> Quiver::parse(std::string_view text) {
  int n = -1;
  std::vector<Arrow> arrows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 2 || toks[0] != "vertices")
        fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": expected 'vertices N'");
      n = parse_positive(toks[1], line_no);
      continue;
    }
    if (toks[0] != "arrow" || toks.size() != 4)
      fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": expected 'arrow <name> <source> <target>'");
    int s = parse_positive(toks[2], line_no), t = parse_positive(toks[3], line_no);
    if (s > n || t > n) fail(ErrorCode::unknown_vertex, "line " + std::to_string(line_no) + ": vertex out of range");
    arrows.push_back(Arrow{toks[1], s - 1, t - 1});
  }
  if (n < 0) fail(ErrorCode::parse, "missing 'vertices N' line");
  return make(n, std::move(arrows));
}

std::shared_ptr<const Quiver> Quiver::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse, "cannot open quiver file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void Quiver::enumerate_paths() {
  between_.assign(static_cast<std::size_t>(n_) * n_, {});
  trivial_.assign(n_, -1);
  arrow_path_.assign(arrows_.size(), -1);
  for (int v = 0; v < n_; ++v) {
    std::vector<Path> frontier{Path{v, v, {}}};
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (auto& p : frontier) {
        for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
          if (arrows_[a].source != p.target) continue;
          Path q = p;
          q.arrows.push_back(a);
          q.target = arrows_[a].target;
          next.push_back(std::move(q));
        }
        int id = static_cast<int>(paths_.size());
        lookup_.emplace(std::make_pair(p.source, p.arrows), id);
        if (p.arrows.empty()) trivial_[v] = id;
        if (p.arrows.size() == 1) arrow_path_[p.arrows[0]] = id;
        between_[p.source * n_ + p.target].push_back(id);
        paths_.push_back(std::move(p));
        if (paths_.size() > max_paths) fail(ErrorCode::invalid_argument, "quiver has too many paths");
      }
      frontier = std::move(next);
    }
  }
  position_.assign(paths_.size(), 0);
  for (const auto& ids : between_)
    for (std::size_t i = 0; i < ids.size(); ++i) position_[ids[i]] = static_cast<int>(i);
}

int Quiver::arrow_index(std::string_view name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return static_cast<int>(a);
  return -1;
}

int Quiver::vertex_from_name(std::string_view name) const {
  std::string s(name);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 9)
    fail(ErrorCode::unknown_vertex, "unknown vertex '" + s + "'");
  int v = std::stoi(s);
  if (v < 1 || v > n_) fail(ErrorCode::unknown_vertex, "unknown vertex '" + s + "'");
  return v - 1;
}

int Quiver::concat(int first, int second) const {
  const Path& a = paths_.at(first);
  const Path& b = paths_.at(second);
  if (a.target != b.source) return -1;
  std::vector<int> arrows = a.arrows;
  arrows.insert(arrows.end(), b.arrows.begin(), b.arrows.end());
  auto it = lookup_.find({a.source, arrows});
  return it == lookup_.end() ? -1 : it->second;
}

std::vector<std::vector<std::int64_t>> Quiver::path_counts() const {
  std::vector<std::vector<std::int64_t>> c(n_, std::vector<std::int64_t>(n_, 0));
  for (int v = 0; v < n_; ++v)
    for (int w = 0; w < n_; ++w) c[v][w] = static_cast<std::int64_t>(paths_between(v, w).size());
  return c;
}

std::shared_ptr<const Quiver> Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto& a : arrows_) rev.push_back(Arrow{a.name, a.target, a.source});
  return make(n_, std::move(rev));
}

bool Quiver::is_connected() const {
  if (n_ == 0) return true;
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
  int root = find(0);
  for (int v = 1; v < n_; ++v)
    if (find(v) != root) return false;
  return true;
}

GraphClass Quiver::classify_graph() const {
  auto s = tits_matrix(*this);
  if (positive_definite(s)) return GraphClass{GraphType::dynkin, {}};
  if (!is_connected()) return GraphClass{GraphType::other, {}};
  // A connected graph carrying a sincere positive radical vector is Euclidean.
  auto ker = integer_kernel(s);
  if (ker.size() != 1) return GraphClass{GraphType::other, {}};
  auto delta = ker.front();
  if (delta[0] < 0)
    for (auto& x : delta) x = -x;
  if (!std::all_of(delta.begin(), delta.end(), [](std::int64_t x) { return x > 0; }))
    return GraphClass{GraphType::other, {}};
  return GraphClass{GraphType::euclidean, delta};
}

std::string Quiver::to_text() const {
  std::ostringstream os;
  os << "vertices " << n_ << "\n";
  for (const auto& a : arrows_) os << "arrow " << a.name << " " << a.source + 1 << " " << a.target + 1 << "\n";
  return os.str();
}

bool same_quiver(const Quiver& a, const Quiver& b) { return &a == &b || a == b; }

std::int64_t euler_form(const Quiver& q, const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& e) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  if (d.size() != n || e.size() != n) fail(ErrorCode::dimension_mismatch, "dimension vector length mismatch");
  std::int64_t s = 0;
  for (std::size_t v = 0; v < n; ++v) s += d[v] * e[v];
  for (const auto& a : q.arrows()) s -= d[a.source] * e[a.target];
  return s;
}

std::vector<std::vector<std::int64_t>> tits_matrix(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<std::vector<std::int64_t>> s(n, std::vector<std::int64_t>(n, 0));
  for (int v = 0; v < n; ++v) s[v][v] = 2;
  for (const auto& a : q.arrows()) {
    s[a.source][a.target] -= 1;
    s[a.target][a.source] -= 1;
  }
  return s;
}

}  // namespace hsg
