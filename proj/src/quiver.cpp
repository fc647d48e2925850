#include "sclab/quiver.hpp"

#include <sstream>

#include "sclab/common.hpp"

namespace sclab {

void GQuiver::check_vertex(int v) const {
  if (v < 0 || v >= size())
    fail(ErrKind::IndexOutOfRange,
         "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(size()) + ")");
}

int GQuiver::add_vertex(const std::string& label, bool frozen, int d) {
  if (d < 1) fail(ErrKind::ShapeViolation, "vertex multiplicity must be >= 1");
  if (frozen && d != 1)
    fail(ErrKind::ShapeViolation, "frozen vertex cannot carry a multiplicity");
  frozen_.push_back(frozen);
  mult_.push_back(d);
  labels_.push_back(label);
  return size() - 1;
}

bool GQuiver::is_frozen(int v) const {
  check_vertex(v);
  return frozen_[static_cast<std::size_t>(v)];
}

int GQuiver::multiplicity(int v) const {
  check_vertex(v);
  return mult_[static_cast<std::size_t>(v)];
}

const std::string& GQuiver::label(int v) const {
  check_vertex(v);
  return labels_[static_cast<std::size_t>(v)];
}

int GQuiver::vertex_by_label(const std::string& label) const {
  int found = -1;
  for (int v = 0; v < size(); ++v) {
    if (labels_[static_cast<std::size_t>(v)] != label) continue;
    if (found >= 0) fail(ErrKind::IndexInvalid, "label '" + label + "' is not unique");
    found = v;
  }
  if (found < 0) fail(ErrKind::IndexInvalid, "no vertex labeled '" + label + "'");
  return found;
}

long long GQuiver::b(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  auto it = edges_.find({from, to});
  return it == edges_.end() ? 0 : it->second;
}

void GQuiver::add_edges(int from, int to, long long count) {
  check_vertex(from);
  check_vertex(to);
  if (from == to) fail(ErrKind::ShapeViolation, "self-loops are not allowed");
  if (count < 0) fail(ErrKind::IndexInvalid, "negative edge count");
  if (count == 0) return;
  edges_[{from, to}] += count;
}

void GQuiver::remove_edges(int from, int to, long long count) {
  if (count == 0) return;
  auto it = edges_.find({from, to});
  if (it == edges_.end() || it->second < count)
    fail(ErrKind::IndexInvalid, "removing more edges than present on (" +
                                    std::to_string(from) + ", " + std::to_string(to) + ")");
  it->second -= count;
  if (it->second == 0) edges_.erase(it);
}

bool GQuiver::has_neighbors(int v) const {
  check_vertex(v);
  for (const auto& [pair, cnt] : edges_) {
    (void)cnt;
    if (pair.first == v || pair.second == v) return true;
  }
  return false;
}

void GQuiver::validate() const {
  for (const auto& [pair, cnt] : edges_) {
    check_vertex(pair.first);
    check_vertex(pair.second);
    if (pair.first == pair.second) fail(ErrKind::ShapeViolation, "self-loop found");
    if (cnt <= 0) fail(ErrKind::ShapeViolation, "nonpositive edge count stored");
    if (is_mutable(pair.first) && is_mutable(pair.second) && b(pair.second, pair.first) > 0)
      fail(ErrKind::ShapeViolation,
           "2-cycle between mutable vertices " + std::to_string(pair.first) + " and " +
               std::to_string(pair.second));
  }
}

bool GQuiver::operator==(const GQuiver& o) const {
  return frozen_ == o.frozen_ && mult_ == o.mult_ && labels_ == o.labels_ && edges_ == o.edges_;
}

std::string GQuiver::dot() const {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (int v = 0; v < size(); ++v) {
    out << "  v" << v << " [label=\"" << label(v);
    if (is_special(v)) out << " (d=" << multiplicity(v) << ")";
    out << "\"";
    if (is_frozen(v)) out << ", shape=box";
    else if (is_special(v)) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [pair, cnt] : edges_) {
    out << "  v" << pair.first << " -> v" << pair.second;
    if (cnt > 1) out << " [label=\"" << cnt << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

GQuiver quiver_mutate(const GQuiver& q, int k) {
  if (q.is_frozen(k)) fail(ErrKind::NotMutable, "cannot mutate frozen vertex " + std::to_string(k));
  GQuiver out = q;
  const long long dk = q.multiplicity(k);

  // Path completion: every in-edge i -> k combined with every out-edge k -> j.
  for (const auto& [in_pair, in_cnt] : q.edges()) {
    if (in_pair.second != k) continue;
    const int i = in_pair.first;
    for (const auto& [out_pair, out_cnt] : q.edges()) {
      if (out_pair.first != k) continue;
      const int j = out_pair.second;
      if (q.is_frozen(i) && q.is_frozen(j)) continue;
      long long weight = dk;
      if (q.is_frozen(i)) weight = q.multiplicity(j);
      else if (q.is_frozen(j)) weight = q.multiplicity(i);
      out.add_edges(i, j, in_cnt * out_cnt * weight);
    }
  }

  // Reverse every edge incident to k.
  for (const auto& [pair, cnt] : q.edges()) {
    if (pair.first != k && pair.second != k) continue;
    out.remove_edges(pair.first, pair.second, cnt);
    out.add_edges(pair.second, pair.first, cnt);
  }

  // Cancel opposite pairs wherever at least one endpoint is mutable; pairs of
  // frozen vertices keep whatever they had (mutation never adds edges there).
  std::vector<std::pair<int, int>> seen;
  for (const auto& [pair, cnt] : out.edges()) {
    (void)cnt;
    if (pair.first < pair.second) seen.push_back(pair);
  }
  for (const auto& [i, j] : seen) {
    if (out.is_frozen(i) && out.is_frozen(j)) continue;
    const long long both = std::min(out.b(i, j), out.b(j, i));
    if (both > 0) {
      out.remove_edges(i, j, both);
      out.remove_edges(j, i, both);
    }
  }
  return out;
}

}  // namespace sclab
