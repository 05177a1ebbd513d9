#include "digifix/lasso.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "digifix/error.hpp"
#include "digifix/parallel.hpp"

namespace digifix {

namespace {

std::string name_of(Vertex v) { return std::to_string(v); }

// Chordless, repetition-free walk; for loops the closing edge is checked too.
std::optional<std::string> simple_violation(const DigitalImage& x, const std::vector<Vertex>& vs, bool closed,
                                            const char* what) {
  const auto m = vs.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (vs[i] == vs[j]) return std::string(what) + " repeats vertex " + name_of(vs[i]);
      const bool consecutive = j == i + 1 || (closed && i == 0 && j == m - 1);
      if (consecutive != x.adjacent(vs[i], vs[j]))
        return std::string(what) + (consecutive ? " has non-adjacent consecutive vertices " : " has chord ") +
               name_of(vs[i]) + "-" + name_of(vs[j]);
    }
  return std::nullopt;
}

class LassoSearch {
 public:
  LassoSearch(const DigitalImage& x, std::size_t max_loop, std::uint64_t budget)
      : x_(x), max_loop_(max_loop), budget_(budget), on_path_(x.size(), false), on_loop_(x.size(), false) {}

  std::optional<Lasso> run(Vertex x0, Vertex x1) {
    if (max_loop_ < 5) return std::nullopt;
    for (std::size_t k = 1; k < x_.size(); ++k) {
      path_ = {x0, x1};
      on_path_.assign(x_.size(), false);
      on_path_[x0] = on_path_[x1] = true;
      reached_depth_ = false;
      if (extend_path(k)) return result_;
      if (!reached_depth_) break;  // no simple path of this length exists
    }
    return std::nullopt;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw ResourceExceeded("lasso search budget of " + std::to_string(budget_) + " exceeded");
  }

  bool extend_path(std::size_t k) {
    tick();
    if (path_.size() == k + 1) {
      reached_depth_ = true;
      return try_loops();
    }
    const Vertex last = path_.back();
    const Vertex before = path_[path_.size() - 2];
    for (Vertex w : x_.row(last).to_vector()) {
      if (on_path_[w]) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path_.size() && !chord; ++i) chord = x_.adjacent(path_[i], w);
      if (chord || right_angle(x_, before, last, w)) continue;
      path_.push_back(w);
      on_path_[w] = true;
      if (extend_path(k)) return true;
      on_path_[w] = false;
      path_.pop_back();
    }
    return false;
  }

  bool try_loops() {
    const Vertex end = path_.back();
    const Vertex prev = path_[path_.size() - 2];
    loop_ = {end};
    on_loop_.assign(x_.size(), false);
    on_loop_[end] = true;
    for (Vertex w : x_.row(end).to_vector()) {
      if (x_.adjacent_or_equal(prev, w) || right_angle(x_, prev, end, w)) continue;
      loop_.push_back(w);
      on_loop_[w] = true;
      if (extend_loop()) return true;
      on_loop_[w] = false;
      loop_.pop_back();
    }
    return false;
  }

  bool extend_loop() {
    tick();
    const Vertex start = loop_.front();
    const Vertex last = loop_.back();
    const Vertex before = loop_[loop_.size() - 2];
    const Vertex prev = path_[path_.size() - 2];
    for (Vertex w : x_.row(last).to_vector()) {
      if (on_loop_[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < loop_.size() && !chord; ++i) chord = x_.adjacent(loop_[i], w);
      if (chord || right_angle(x_, before, last, w)) continue;
      const std::size_t m = loop_.size() + 1;
      if (x_.adjacent(start, w)) {
        // w must be the last loop vertex, otherwise w-start is a chord.
        if (m < 5 || m > max_loop_ || x_.adjacent_or_equal(prev, w)) continue;
        if (right_angle(x_, last, w, start) || right_angle(x_, w, start, loop_[1]) ||
            right_angle(x_, prev, start, w))
          continue;
        loop_.push_back(w);
        result_ = Lasso{loop_, path_};
        return true;
      }
      if (m >= max_loop_) continue;
      loop_.push_back(w);
      on_loop_[w] = true;
      if (extend_loop()) return true;
      on_loop_[w] = false;
      loop_.pop_back();
    }
    return false;
  }

  const DigitalImage& x_;
  std::size_t max_loop_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> path_;
  std::vector<Vertex> loop_;
  std::vector<bool> on_path_;
  std::vector<bool> on_loop_;
  bool reached_depth_ = false;
  Lasso result_;
};

}  // namespace

bool right_angle(const DigitalImage& x, Vertex a, Vertex b, Vertex c) {
  const auto n = x.size();
  if (a >= n || b >= n || c >= n || a == c || !x.adjacent(a, b) || !x.adjacent(b, c))
    throw InvalidInput("right_angle needs a path a-b-c of three distinct vertices");
  for (Vertex d = 0; d < n; ++d)
    if (d != a && d != b && d != c && x.adjacent(a, d) && x.adjacent(c, d)) return true;
  return false;
}

std::optional<std::string> lasso_violation(const DigitalImage& x, const Lasso& lasso) {
  const auto& p = lasso.loop;
  const auto& r = lasso.path;
  for (Vertex v : p)
    if (v >= x.size()) return "loop vertex " + name_of(v) + " out of range";
  for (Vertex v : r)
    if (v >= x.size()) return "path vertex " + name_of(v) + " out of range";
  const auto m = p.size();
  if (m < 5) return "loop has length " + std::to_string(m) + ", need at least 5";
  if (r.size() < 2) return std::string("path needs at least one edge");
  if (auto bad = simple_violation(x, p, true, "loop")) return bad;
  if (auto bad = simple_violation(x, r, false, "path")) return bad;
  if (r.back() != p.front()) return std::string("path does not end at loop[0]");
  const Vertex prev = r[r.size() - 2];
  if (x.adjacent_or_equal(prev, p[1]) || x.adjacent_or_equal(prev, p[m - 1]))
    return "path vertex " + name_of(prev) + " is adjacent or equal to a loop neighbor of the junction";
  for (std::size_t i = 0; i < m; ++i)
    if (right_angle(x, p[i], p[(i + 1) % m], p[(i + 2) % m]))
      return "right angle in loop at " + name_of(p[(i + 1) % m]);
  for (std::size_t i = 0; i + 2 < r.size(); ++i)
    if (right_angle(x, r[i], r[i + 1], r[i + 2])) return "right angle in path at " + name_of(r[i + 1]);
  if (right_angle(x, prev, p[0], p[1]) || right_angle(x, prev, p[0], p[m - 1]))
    return std::string("right angle at the junction");
  return std::nullopt;
}

std::optional<Lasso> find_lasso(const DigitalImage& x, Vertex x0, Vertex x_prime, const LassoOptions& options) {
  if (x0 >= x.size() || x_prime >= x.size() || !x.adjacent(x0, x_prime))
    throw InvalidInput("find_lasso needs two adjacent vertices");
  LassoSearch search(x, options.max_loop.value_or(x.size()), options.node_budget);
  return search.run(x0, x_prime);
}

LassoCertificate lasso_rigidity_certificate(const DigitalImage& x, const LassoOptions& options) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < x.size(); ++a)
    for (Vertex b : x.row(a).to_vector()) pairs.emplace_back(a, b);
  std::vector<std::optional<Lasso>> found(pairs.size());
  parallel_for(pairs.size(), options.threads,
               [&](std::size_t i) { found[i] = find_lasso(x, pairs[i].first, pairs[i].second, options); });
  LassoCertificate out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (found[i])
      out.lassos.emplace_back(pairs[i], std::move(*found[i]));
    else
      out.missing.push_back(pairs[i]);
  }
  out.certified = out.missing.empty();
  return out;
}

}  // namespace digifix
