#include "tsol/dense_frame.hpp"

#include <string>

#include "tsol/errors.hpp"

namespace tsol {

DenseFrame::DenseFrame(const Pattern& cells) : cells_(cells.begin(), cells.end()) {
  if (cells_.size() > kMaxCells)
    throw TooLarge("dense frame holds at most 64 cells, got " + std::to_string(cells_.size()));
  for (std::size_t i = 0; i < cells_.size(); ++i) index_.emplace(cells_[i], static_cast<int>(i));

  std::vector<Point> anchors;
  for (Point c : cells_)
    for (Point off : kTriangleShape) anchors.push_back(c - off);
  Pattern unique_anchors(std::move(anchors));
  for (Point v : unique_anchors) {
    Triangle t{v, {}, 0};
    bool whole = true;
    auto tri = triangle_at(v);
    for (std::size_t s = 0; s < 3; ++s) {
      int i = index_of(tri[s]);
      if (i < 0) {
        whole = false;
        break;
      }
      t.bits[s] = i;
      t.mask |= CellMask{1} << i;
    }
    if (whole) triangles_.push_back(t);
  }
}

DenseFrame DenseFrame::triangle(int n, Point v) { return DenseFrame(size_n_triangle(n, v)); }

int DenseFrame::index_of(Point p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

CellMask DenseFrame::full() const {
  return cells_.size() == 64 ? ~CellMask{0} : (CellMask{1} << cells_.size()) - 1;
}

CellMask DenseFrame::encode(const Pattern& p) const {
  CellMask m = 0;
  for (Point c : p) {
    int i = index_of(c);
    if (i < 0) throw BadParams("pattern leaves the dense frame");
    m |= CellMask{1} << i;
  }
  return m;
}

Pattern DenseFrame::decode(CellMask m) const {
  std::vector<Point> out;
  for (; m; m &= m - 1) out.push_back(cells_[std::countr_zero(m)]);
  return Pattern(std::move(out));
}

CellMask DenseFrame::fill(CellMask m) const {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& t : triangles_) {
      CellMask occ = m & t.mask;
      if (occ != t.mask && std::popcount(occ) == 2) {
        m |= t.mask;
        changed = true;
      }
    }
  }
  return m;
}

}  // namespace tsol
